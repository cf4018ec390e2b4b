//! Image-caption retrieval: random, similarity-based and entity-based
//! selection over a precomputed embedding store.
//!
//! Embeddings are opaque inputs; whatever encoder produced them, the store
//! format is an ndjson record file plus a little-endian f32 sidecar (see
//! `docs/formats.md`).

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

/// Fixed-length embedding vector with positive norm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Embedding(pub Vec<f32>);

impl Embedding {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|&v| v as f64 * v as f64).sum::<f64>().sqrt()
    }

    pub fn validate(&self) -> Result<(), StoreError> {
        if self.0.iter().any(|v| !v.is_finite()) {
            return Err(StoreError::NonFiniteEmbedding);
        }
        if self.norm() == 0.0 {
            return Err(StoreError::ZeroNormEmbedding);
        }
        Ok(())
    }
}

/// One image-caption pair with its two embeddings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StoreRecord {
    pub id: u32,
    pub caption_text: String,
    pub image_ref: String,
    pub img_embedding: Embedding,
    pub txt_embedding: Embedding,
    pub entities: Vec<String>,
    /// width / height of the referenced image.
    pub aspect_ratio: f64,
}

/// Read-only collection of store records; safe to share across workers.
#[derive(Debug, Clone, Default)]
pub struct Store {
    records: Vec<StoreRecord>,
}

#[derive(Debug, thiserror::Error)]
pub enum StoreError {
    #[error("embedding dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("embedding contains a non-finite value")]
    NonFiniteEmbedding,
    #[error("embedding has zero norm")]
    ZeroNormEmbedding,
    #[error("record {0} not found in store")]
    UnknownRecord(u32),
    #[error("aspect filter left no candidates")]
    EmptyCandidates,
    #[error("store has only {have} records, {want} requested")]
    NotEnoughRecords { have: usize, want: usize },
    #[error("record {id}: aspect ratio {aspect} is not positive")]
    BadAspect { id: u32, aspect: f64 },
    #[error("sidecar read failed: {0}")]
    Sidecar(String),
    #[error("store io: {0}")]
    Io(#[from] std::io::Error),
    #[error("store record parse: {0}")]
    Parse(#[from] serde_json::Error),
}

impl Store {
    pub fn new(records: Vec<StoreRecord>) -> Result<Store, StoreError> {
        let mut dim = None;
        for rec in &records {
            if rec.aspect_ratio <= 0.0 || !rec.aspect_ratio.is_finite() {
                return Err(StoreError::BadAspect { id: rec.id, aspect: rec.aspect_ratio });
            }
            rec.img_embedding.validate()?;
            rec.txt_embedding.validate()?;
            for emb in [&rec.img_embedding, &rec.txt_embedding] {
                match dim {
                    None => dim = Some(emb.dim()),
                    Some(d) if d != emb.dim() => {
                        return Err(StoreError::DimensionMismatch(d, emb.dim()))
                    }
                    _ => {}
                }
            }
        }
        Ok(Store { records })
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> &[StoreRecord] {
        &self.records
    }

    pub fn by_id(&self, id: u32) -> Option<&StoreRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    /// Load the ndjson record file and its embeddings sidecar
    /// (`<path>.emb`): u32 record count, u32 dim, then per record the image
    /// vector followed by the text vector, all little-endian f32.
    pub fn load(records_path: &Path) -> Result<Store, StoreError> {
        let text = std::fs::read_to_string(records_path)?;
        #[derive(Deserialize)]
        struct Row {
            id: u32,
            caption_text: String,
            image_ref: String,
            #[serde(default)]
            entities: Vec<String>,
            aspect_ratio: f64,
        }
        let mut rows = Vec::new();
        for line in text.lines() {
            if line.trim().is_empty() {
                continue;
            }
            rows.push(serde_json::from_str::<Row>(line)?);
        }

        let sidecar = records_path.with_extension("emb");
        let mut file = std::fs::File::open(&sidecar)?;
        let mut header = [0u8; 8];
        file.read_exact(&mut header)
            .map_err(|e| StoreError::Sidecar(format!("header: {e}")))?;
        let count = u32::from_le_bytes(header[0..4].try_into().unwrap()) as usize;
        let dim = u32::from_le_bytes(header[4..8].try_into().unwrap()) as usize;
        if count != rows.len() {
            return Err(StoreError::Sidecar(format!(
                "sidecar holds {count} records, ndjson has {}",
                rows.len()
            )));
        }
        let mut payload = Vec::new();
        file.read_to_end(&mut payload)?;
        let want = count * dim * 2 * 4;
        if payload.len() != want {
            return Err(StoreError::Sidecar(format!(
                "payload is {} bytes, expected {want}",
                payload.len()
            )));
        }
        let mut floats = payload
            .chunks_exact(4)
            .map(|b| f32::from_le_bytes(b.try_into().unwrap()));
        let mut records = Vec::with_capacity(count);
        for row in rows {
            let img: Vec<f32> = floats.by_ref().take(dim).collect();
            let txt: Vec<f32> = floats.by_ref().take(dim).collect();
            records.push(StoreRecord {
                id: row.id,
                caption_text: row.caption_text,
                image_ref: row.image_ref,
                img_embedding: Embedding(img),
                txt_embedding: Embedding(txt),
                entities: row.entities,
                aspect_ratio: row.aspect_ratio,
            });
        }
        Store::new(records)
    }

    /// Write the ndjson + sidecar pair.
    pub fn save(&self, records_path: &Path) -> Result<(), StoreError> {
        use std::io::Write;
        let mut text = String::new();
        for rec in &self.records {
            let row = serde_json::json!({
                "id": rec.id,
                "caption_text": rec.caption_text,
                "image_ref": rec.image_ref,
                "entities": rec.entities,
                "aspect_ratio": rec.aspect_ratio,
            });
            text.push_str(&row.to_string());
            text.push('\n');
        }
        std::fs::write(records_path, text)?;
        let dim = self.records.first().map(|r| r.img_embedding.dim()).unwrap_or(0);
        let mut out = Vec::new();
        out.extend_from_slice(&(self.records.len() as u32).to_le_bytes());
        out.extend_from_slice(&(dim as u32).to_le_bytes());
        for rec in &self.records {
            for v in rec.img_embedding.0.iter().chain(rec.txt_embedding.0.iter()) {
                out.extend_from_slice(&v.to_le_bytes());
            }
        }
        let mut f = std::fs::File::create(records_path.with_extension("emb"))?;
        f.write_all(&out)?;
        Ok(())
    }
}

fn cosine(a: &Embedding, b: &Embedding) -> Result<f64, StoreError> {
    if a.dim() != b.dim() {
        return Err(StoreError::DimensionMismatch(a.dim(), b.dim()));
    }
    let dot: f64 = a.0.iter().zip(b.0.iter()).map(|(&x, &y)| x as f64 * y as f64).sum();
    Ok(dot / (a.norm() * b.norm()))
}

/// Pair similarity: cosine of the image embeddings plus cosine of the text
/// embeddings. Symmetric, in [-2, 2].
pub fn similarity(a: &StoreRecord, b: &StoreRecord) -> Result<f64, StoreError> {
    Ok(cosine(&a.img_embedding, &b.img_embedding)? + cosine(&a.txt_embedding, &b.txt_embedding)?)
}

/// Aspect-ratio filter applied before ranking.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AspectFilter {
    pub target: f64,
    /// Relative tolerance: |aspect - target| / target <= tolerance.
    pub tolerance: f64,
}

impl AspectFilter {
    pub fn admits(&self, aspect: f64) -> bool {
        (aspect - self.target).abs() / self.target <= self.tolerance
    }
}

/// Default candidate pool size before sub-sampling.
pub const DEFAULT_TOP_K: usize = 20;

/// Top-k records most similar to `anchor`, descending, anchor excluded,
/// ties broken by ascending id. Exact O(N) scan.
pub fn retrieve_similar<'s>(
    store: &'s Store,
    anchor: &StoreRecord,
    k: usize,
    constraint: Option<AspectFilter>,
) -> Result<Vec<&'s StoreRecord>, StoreError> {
    if store.by_id(anchor.id).is_none() {
        return Err(StoreError::UnknownRecord(anchor.id));
    }
    let mut scored: Vec<(f64, &StoreRecord)> = Vec::new();
    for rec in store.records() {
        if rec.id == anchor.id {
            continue;
        }
        if let Some(f) = constraint {
            if !f.admits(rec.aspect_ratio) {
                continue;
            }
        }
        scored.push((similarity(anchor, rec)?, rec));
    }
    if scored.is_empty() && k > 0 {
        return Err(StoreError::EmptyCandidates);
    }
    scored.sort_by(|a, b| {
        b.0.partial_cmp(&a.0)
            .unwrap()
            .then(a.1.id.cmp(&b.1.id))
    });
    Ok(scored.into_iter().take(k).map(|(_, r)| r).collect())
}

/// Entity -> matching record ids. Only entities with more than two
/// matching records are indexed.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct EntityIndex {
    map: BTreeMap<String, Vec<u32>>,
}

impl EntityIndex {
    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn entities(&self) -> impl Iterator<Item = &String> {
        self.map.keys()
    }

    pub fn records_for(&self, entity: &str) -> Option<&[u32]> {
        self.map.get(entity).map(|v| v.as_slice())
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }
}

/// Case-insensitive whole-word match of `needle` inside `haystack`.
pub fn caption_mentions(haystack: &str, needle: &str) -> bool {
    if needle.is_empty() {
        return false;
    }
    let hay = haystack.to_lowercase();
    let pat = needle.to_lowercase();
    let mut start = 0;
    while let Some(pos) = hay[start..].find(&pat) {
        let begin = start + pos;
        let end = begin + pat.len();
        let pre_ok = begin == 0
            || !hay[..begin].chars().next_back().map(|c| c.is_alphanumeric()).unwrap_or(false);
        let post_ok = end == hay.len()
            || !hay[end..].chars().next().map(|c| c.is_alphanumeric()).unwrap_or(false);
        if pre_ok && post_ok {
            return true;
        }
        start = begin + 1;
    }
    false
}

/// Index entities that appear (whole-word, case-insensitive) in at least
/// three captions.
pub fn build_entity_index(store: &Store, entity_list: &[String]) -> EntityIndex {
    let mut map = BTreeMap::new();
    for entity in entity_list {
        let matches: Vec<u32> = store
            .records()
            .iter()
            .filter(|r| caption_mentions(&r.caption_text, entity))
            .map(|r| r.id)
            .collect();
        if matches.len() >= 3 {
            map.insert(entity.clone(), matches);
        }
    }
    EntityIndex { map }
}

/// Pick a uniform entity and sample `want` of its records (fewer if the
/// entity has fewer).
pub fn retrieve_by_entity<'s>(
    index: &EntityIndex,
    store: &'s Store,
    want: usize,
    rng: &mut impl Rng,
) -> Result<(String, Vec<&'s StoreRecord>), StoreError> {
    if index.is_empty() {
        return Err(StoreError::EmptyCandidates);
    }
    let keys: Vec<&String> = index.entities().collect();
    let entity = keys[rng.gen_range(0..keys.len())].clone();
    let ids = index.records_for(&entity).unwrap();
    let mut pool: Vec<u32> = ids.to_vec();
    pool.shuffle(rng);
    let picked: Vec<&StoreRecord> = pool
        .into_iter()
        .take(want)
        .map(|id| store.by_id(id).ok_or(StoreError::UnknownRecord(id)))
        .collect::<Result<_, _>>()?;
    Ok((entity, picked))
}

/// `n` distinct records, uniform without replacement.
pub fn retrieve_random<'s>(
    store: &'s Store,
    n: usize,
    rng: &mut impl Rng,
) -> Result<Vec<&'s StoreRecord>, StoreError> {
    if store.len() < n {
        return Err(StoreError::NotEnoughRecords { have: store.len(), want: n });
    }
    let mut indices: Vec<usize> = (0..store.len()).collect();
    indices.shuffle(rng);
    Ok(indices.into_iter().take(n).map(|i| &store.records()[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rec(id: u32, img: Vec<f32>, txt: Vec<f32>, caption: &str, aspect: f64) -> StoreRecord {
        StoreRecord {
            id,
            caption_text: caption.to_string(),
            image_ref: format!("proc:photo:{id}"),
            img_embedding: Embedding(img),
            txt_embedding: Embedding(txt),
            entities: vec![],
            aspect_ratio: aspect,
        }
    }

    fn random_store(n: usize, dim: usize, seed: u64) -> Store {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let records = (0..n)
            .map(|i| {
                let img: Vec<f32> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let txt: Vec<f32> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
                rec(i as u32, img, txt, &format!("caption {i}"), rng.gen_range(0.5..2.0))
            })
            .collect();
        Store::new(records).unwrap()
    }

    #[test]
    fn self_similarity_is_two() {
        let a = rec(0, vec![0.3, -0.7, 0.1], vec![1.0, 2.0, 3.0], "x", 1.0);
        assert!((similarity(&a, &a).unwrap() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn orthogonal_pairs_score_zero() {
        let a = rec(0, vec![1.0, 0.0], vec![0.0, 2.0], "a", 1.0);
        let b = rec(1, vec![0.0, 3.0], vec![5.0, 0.0], "b", 1.0);
        assert!(similarity(&a, &b).unwrap().abs() < 1e-9);
    }

    #[test]
    fn similarity_matches_brute_force_cosine_sum() {
        // Independent dot-product oracle over random 8-dim vectors.
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let v = |rng: &mut ChaCha8Rng| -> Vec<f32> {
                (0..8).map(|_| rng.gen_range(-1.0f32..1.0)).collect()
            };
            let a = rec(0, v(&mut rng), v(&mut rng), "a", 1.0);
            let b = rec(1, v(&mut rng), v(&mut rng), "b", 1.0);
            let oracle = {
                let cos = |x: &[f32], y: &[f32]| -> f64 {
                    let dot: f64 = x.iter().zip(y).map(|(&p, &q)| p as f64 * q as f64).sum();
                    let nx: f64 = x.iter().map(|&p| (p as f64).powi(2)).sum::<f64>().sqrt();
                    let ny: f64 = y.iter().map(|&p| (p as f64).powi(2)).sum::<f64>().sqrt();
                    dot / (nx * ny)
                };
                cos(&a.img_embedding.0, &b.img_embedding.0)
                    + cos(&a.txt_embedding.0, &b.txt_embedding.0)
            };
            let got = similarity(&a, &b).unwrap();
            assert!((got - oracle).abs() < 1e-12);
            assert!((-2.0..=2.0).contains(&got));
            assert_eq!(
                similarity(&a, &b).unwrap(),
                similarity(&b, &a).unwrap(),
                "symmetry"
            );
        }
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = rec(0, vec![1.0, 0.0], vec![1.0, 0.0], "a", 1.0);
        let b = rec(1, vec![1.0, 0.0, 0.0], vec![1.0, 0.0, 0.0], "b", 1.0);
        assert!(matches!(
            similarity(&a, &b),
            Err(StoreError::DimensionMismatch(2, 3))
        ));
    }

    /// Brute-force ranking oracle: full sort of all eligible records.
    fn brute_force_ranking(
        store: &Store,
        anchor: &StoreRecord,
        constraint: Option<AspectFilter>,
    ) -> Vec<u32> {
        let mut all: Vec<(f64, u32)> = store
            .records()
            .iter()
            .filter(|r| r.id != anchor.id)
            .filter(|r| constraint.map(|c| c.admits(r.aspect_ratio)).unwrap_or(true))
            .map(|r| (similarity(anchor, r).unwrap(), r.id))
            .collect();
        all.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then(a.1.cmp(&b.1)));
        all.into_iter().map(|(_, id)| id).collect()
    }

    #[test]
    fn tiny_store_returns_all_in_brute_force_order() {
        let store = random_store(3, 8, 5);
        let anchor = store.records()[0].clone();
        let got = retrieve_similar(&store, &anchor, 20, None).unwrap();
        let want = brute_force_ranking(&store, &anchor, None);
        assert_eq!(got.iter().map(|r| r.id).collect::<Vec<_>>(), want);
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn k_zero_returns_empty() {
        let store = random_store(5, 4, 6);
        let anchor = store.records()[2].clone();
        assert!(retrieve_similar(&store, &anchor, 0, None).unwrap().is_empty());
    }

    #[test]
    fn default_k_produces_twenty_candidates() {
        let store = random_store(100, 8, 7);
        let anchor = store.records()[0].clone();
        let got = retrieve_similar(&store, &anchor, DEFAULT_TOP_K, None).unwrap();
        assert_eq!(got.len(), 20);
    }

    #[test]
    fn ranking_matches_oracle_on_synthetic_stores() {
        for seed in 0..5u64 {
            let store = random_store(500, 8, seed);
            let anchor = store.records()[(seed as usize * 37) % 500].clone();
            for constraint in [
                None,
                Some(AspectFilter { target: 1.0, tolerance: 0.4 }),
            ] {
                let want = brute_force_ranking(&store, &anchor, constraint);
                let got = retrieve_similar(&store, &anchor, want.len(), constraint).unwrap();
                assert_eq!(got.iter().map(|r| r.id).collect::<Vec<_>>(), want);
            }
        }
    }

    #[test]
    fn impossible_constraint_errors() {
        let store = random_store(10, 4, 9);
        let anchor = store.records()[0].clone();
        let err = retrieve_similar(
            &store,
            &anchor,
            5,
            Some(AspectFilter { target: 100.0, tolerance: 0.01 }),
        )
        .unwrap_err();
        assert!(matches!(err, StoreError::EmptyCandidates));
    }

    fn entity_store() -> Store {
        let mk = |id: u32, caption: &str| {
            rec(id, vec![1.0, 0.0], vec![0.0, 1.0], caption, 1.0)
        };
        Store::new(vec![
            mk(0, "The Eiffel Tower at dawn"),
            mk(1, "eiffel tower seen from the river"),
            mk(2, "Crowds near the Eiffel Tower."),
            mk(3, "A bridge in Paris"),
            mk(4, "Paris rooftops in winter"),
            mk(5, "an eiffelesque sculpture"),
        ])
        .unwrap()
    }

    #[test]
    fn entity_with_three_matches_is_indexed() {
        let store = entity_store();
        let idx = build_entity_index(&store, &["Eiffel Tower".to_string()]);
        assert_eq!(idx.records_for("Eiffel Tower"), Some(&[0u32, 1, 2][..]));
    }

    #[test]
    fn entity_with_two_matches_is_absent() {
        let store = entity_store();
        let idx = build_entity_index(&store, &["Paris".to_string()]);
        assert!(idx.records_for("Paris").is_none());
    }

    #[test]
    fn empty_entity_list_gives_empty_index() {
        let store = entity_store();
        assert!(build_entity_index(&store, &[]).is_empty());
    }

    #[test]
    fn whole_word_matching_ignores_substrings() {
        assert!(!caption_mentions("an eiffelesque sculpture", "eiffel"));
        assert!(caption_mentions("the EIFFEL tower", "eiffel"));
        assert!(caption_mentions("eiffel", "eiffel"));
        assert!(!caption_mentions("x", ""));
    }

    #[test]
    fn index_entries_recount_to_at_least_three() {
        let store = random_store(200, 4, 12);
        // Synthesize captions sharing words.
        let mut records = store.records().to_vec();
        for (i, r) in records.iter_mut().enumerate() {
            r.caption_text = format!("photo of {} number {i}", ["cat", "dog", "car"][i % 3]);
        }
        let store = Store::new(records).unwrap();
        let entities = vec!["cat".to_string(), "dog".to_string(), "unicorn".to_string()];
        let idx = build_entity_index(&store, &entities);
        for e in idx.entities() {
            let count = store
                .records()
                .iter()
                .filter(|r| caption_mentions(&r.caption_text, e))
                .count();
            assert!(count >= 3);
        }
        assert!(idx.records_for("unicorn").is_none());
    }

    #[test]
    fn entity_retrieval_returns_matching_records() {
        let store = entity_store();
        let idx = build_entity_index(&store, &["Eiffel Tower".to_string()]);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let (entity, records) = retrieve_by_entity(&idx, &store, 2, &mut rng).unwrap();
        assert_eq!(entity, "Eiffel Tower");
        assert_eq!(records.len(), 2);
        for r in records {
            assert!(caption_mentions(&r.caption_text, &entity));
        }
    }

    #[test]
    fn random_retrieval_is_distinct_and_roughly_uniform() {
        let store = random_store(50, 4, 20);
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let mut counts = vec![0u32; 50];
        let trials = 4000;
        for _ in 0..trials {
            let picked = retrieve_random(&store, 5, &mut rng).unwrap();
            let mut ids: Vec<u32> = picked.iter().map(|r| r.id).collect();
            ids.sort();
            ids.dedup();
            assert_eq!(ids.len(), 5, "records must be distinct");
            for r in picked {
                counts[r.id as usize] += 1;
            }
        }
        // Each record is a Bernoulli(5/50) per trial: mean 400, sigma ~19.
        let p = 5.0 / 50.0;
        let mean = trials as f64 * p;
        let sigma = (trials as f64 * p * (1.0 - p)).sqrt();
        for (id, &c) in counts.iter().enumerate() {
            assert!(
                (c as f64 - mean).abs() < 3.0 * sigma,
                "record {id} picked {c} times (mean {mean}, sigma {sigma})"
            );
        }
    }

    #[test]
    fn store_round_trips_through_files() {
        let store = random_store(20, 6, 30);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("store.jsonl");
        store.save(&path).unwrap();
        let loaded = Store::load(&path).unwrap();
        assert_eq!(loaded.len(), store.len());
        for (a, b) in loaded.records().iter().zip(store.records()) {
            assert_eq!(a.id, b.id);
            assert_eq!(a.caption_text, b.caption_text);
            assert_eq!(a.img_embedding, b.img_embedding);
            assert_eq!(a.txt_embedding, b.txt_embedding);
        }
    }
}
