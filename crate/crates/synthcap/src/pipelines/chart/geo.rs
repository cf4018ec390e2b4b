//! Packaged region sets for choropleth maps.
//!
//! Four sets ship with the engine: European countries, world countries,
//! US states and Chinese provinces. Boundaries are simplified synthetic
//! blobs (<= 24 vertices) grown around real centroids and sized so that
//! no two regions overlap; every region carries compass / coastal / area
//! annotations for caption digests. `assets/geo/*.jsonl` are generated
//! from the seed tables by the `regenerate_geo_assets` test.

use super::geo_data::{RegionSeed, CHINA, EUROPE, US, WORLD};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionSet {
    Europe,
    World,
    Us,
    China,
}

impl RegionSet {
    pub const ALL: [RegionSet; 4] = [
        RegionSet::Europe,
        RegionSet::World,
        RegionSet::Us,
        RegionSet::China,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RegionSet::Europe => "europe",
            RegionSet::World => "world",
            RegionSet::Us => "us",
            RegionSet::China => "china",
        }
    }

    fn seeds(self) -> &'static [RegionSeed] {
        match self {
            RegionSet::Europe => EUROPE,
            RegionSet::World => WORLD,
            RegionSet::Us => US,
            RegionSet::China => CHINA,
        }
    }
}

impl fmt::Display for RegionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum GeoError {
    #[error("unknown region set `{0}` (expected europe, world, us or china)")]
    UnknownSet(String),
    #[error("geo file parse: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("region {0}: ring is not closed")]
    OpenRing(String),
    #[error("duplicate region id {0}")]
    DuplicateId(String),
}

impl FromStr for RegionSet {
    type Err = GeoError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "europe" => Ok(RegionSet::Europe),
            "world" => Ok(RegionSet::World),
            "us" => Ok(RegionSet::Us),
            "china" => Ok(RegionSet::China),
            other => Err(GeoError::UnknownSet(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AreaClass {
    Small,
    Medium,
    Large,
}

impl AreaClass {
    pub fn name(self) -> &'static str {
        match self {
            AreaClass::Small => "small",
            AreaClass::Medium => "medium",
            AreaClass::Large => "large",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeoRegionMeta {
    pub id: String,
    pub name: String,
    pub acronym: String,
    /// Compass direction within the region set (e.g. "northwest").
    pub direction: String,
    pub coastal: bool,
    pub area_class: AreaClass,
    /// Closed lon/lat rings (first point repeated at the end).
    pub rings: Vec<Vec<(f64, f64)>>,
}

impl GeoRegionMeta {
    pub fn centroid(&self) -> (f64, f64) {
        let ring = &self.rings[0];
        let n = (ring.len() - 1).max(1);
        let (mut sx, mut sy) = (0.0, 0.0);
        for &(x, y) in ring.iter().take(n) {
            sx += x;
            sy += y;
        }
        (sx / n as f64, sy / n as f64)
    }
}

fn slug(name: &str) -> String {
    name.to_lowercase()
        .chars()
        .map(|c| if c.is_alphanumeric() { c } else { '_' })
        .collect()
}

fn hash_str(s: &str) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    h
}

fn splitmix(state: &mut u64) -> f64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    (z ^ (z >> 31)) as f64 / u64::MAX as f64
}

/// Pairwise distance in roughly physical degrees.
fn physical_dist(a: &RegionSeed, b: &RegionSeed) -> f64 {
    let mean_lat = ((a.lat + b.lat) / 2.0).to_radians();
    let dx = (a.lon - b.lon) * mean_lat.cos();
    let dy = a.lat - b.lat;
    (dx * dx + dy * dy).sqrt()
}

fn round4(v: f64) -> f64 {
    (v * 10_000.0).round() / 10_000.0
}

/// Synthesize the packaged region set from its seed table. Deterministic;
/// polygons are pairwise disjoint by construction.
pub fn build_region_set(set: RegionSet) -> Vec<GeoRegionMeta> {
    let seeds = set.seeds();
    let mean_weight = seeds.iter().map(|s| s.weight).sum::<f64>() / seeds.len() as f64;
    let nominal: Vec<f64> = seeds
        .iter()
        .map(|s| (s.weight / mean_weight).sqrt())
        .collect();
    // Mean nearest-neighbour distance sets the base scale.
    let mean_nn = seeds
        .iter()
        .enumerate()
        .map(|(i, a)| {
            seeds
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, b)| physical_dist(a, b))
                .fold(f64::INFINITY, f64::min)
        })
        .sum::<f64>()
        / seeds.len() as f64;
    let base = 0.6 * mean_nn;

    // Cap each radius so every pair keeps clear of each other.
    let radii: Vec<f64> = seeds
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let mut r = base * nominal[i];
            for (j, b) in seeds.iter().enumerate() {
                if i == j {
                    continue;
                }
                let share = nominal[i] / (nominal[i] + nominal[j]);
                r = r.min(0.92 * physical_dist(a, b) * share);
            }
            r.max(0.05)
        })
        .collect();

    // Direction buckets from the centroid bounding box.
    let (min_lon, max_lon) = seeds
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| {
            (lo.min(s.lon), hi.max(s.lon))
        });
    let (min_lat, max_lat) = seeds
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| {
            (lo.min(s.lat), hi.max(s.lat))
        });

    let mut regions: Vec<GeoRegionMeta> = Vec::with_capacity(seeds.len());
    let mut areas: Vec<f64> = Vec::with_capacity(seeds.len());
    for (i, s) in seeds.iter().enumerate() {
        let mut state = hash_str(s.name) ^ hash_str(set.name());
        let n = 12 + (hash_str(s.acronym) % 9) as usize;
        let f1 = 2.0 + (splitmix(&mut state) * 2.0).floor();
        let f2 = 4.0 + (splitmix(&mut state) * 2.0).floor();
        let p1 = splitmix(&mut state) * std::f64::consts::TAU;
        let p2 = splitmix(&mut state) * std::f64::consts::TAU;
        let lon_stretch = 1.0 / s.lat.to_radians().cos().max(0.2);
        let mut ring: Vec<(f64, f64)> = (0..n)
            .map(|k| {
                let theta = std::f64::consts::TAU * k as f64 / n as f64;
                let noise =
                    0.5 + 0.25 * (theta * f1 + p1).sin() + 0.25 * (theta * f2 + p2).sin();
                let r = radii[i] * (0.70 + 0.30 * noise);
                (
                    round4(s.lon + r * theta.cos() * lon_stretch),
                    round4(s.lat + r * theta.sin()),
                )
            })
            .collect();
        ring.push(ring[0]);

        // Shoelace area in physical units for the size classes.
        let phys: Vec<(f64, f64)> = ring
            .iter()
            .map(|&(lon, lat)| (lon * s.lat.to_radians().cos(), lat))
            .collect();
        let mut area = 0.0;
        for w in phys.windows(2) {
            area += w[0].0 * w[1].1 - w[1].0 * w[0].1;
        }
        areas.push(area.abs() / 2.0);

        let fx = if max_lon > min_lon {
            (s.lon - min_lon) / (max_lon - min_lon)
        } else {
            0.5
        };
        let fy = if max_lat > min_lat {
            (s.lat - min_lat) / (max_lat - min_lat)
        } else {
            0.5
        };
        let ew = if fx < 1.0 / 3.0 {
            "west"
        } else if fx > 2.0 / 3.0 {
            "east"
        } else {
            ""
        };
        let ns = if fy < 1.0 / 3.0 {
            "south"
        } else if fy > 2.0 / 3.0 {
            "north"
        } else {
            ""
        };
        let direction = match (ns, ew) {
            ("", "") => "central".to_string(),
            (ns, "") => ns.to_string(),
            ("", ew) => ew.to_string(),
            (ns, ew) => format!("{ns}{ew}"),
        };

        regions.push(GeoRegionMeta {
            id: slug(s.name),
            name: s.name.to_string(),
            acronym: s.acronym.to_string(),
            direction,
            coastal: s.coastal,
            area_class: AreaClass::Medium,
            rings: vec![ring],
        });
    }

    // Area terciles within the set.
    let mut sorted = areas.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let t1 = sorted[sorted.len() / 3];
    let t2 = sorted[2 * sorted.len() / 3];
    for (region, area) in regions.iter_mut().zip(areas.iter()) {
        region.area_class = if *area < t1 {
            AreaClass::Small
        } else if *area < t2 {
            AreaClass::Medium
        } else {
            AreaClass::Large
        };
    }
    regions
}

static EUROPE_JSONL: &str = include_str!("../../../assets/geo/europe.jsonl");
static WORLD_JSONL: &str = include_str!("../../../assets/geo/world.jsonl");
static US_JSONL: &str = include_str!("../../../assets/geo/us.jsonl");
static CHINA_JSONL: &str = include_str!("../../../assets/geo/china.jsonl");

/// Parse a packaged (or external) geo file: one region JSON per line.
pub fn parse_geo_file(text: &str) -> Result<Vec<GeoRegionMeta>, GeoError> {
    let mut out = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        let region: GeoRegionMeta = serde_json::from_str(line)?;
        for ring in &region.rings {
            if ring.first() != ring.last() || ring.len() < 4 {
                return Err(GeoError::OpenRing(region.id.clone()));
            }
        }
        if !seen.insert(region.id.clone()) {
            return Err(GeoError::DuplicateId(region.id));
        }
        out.push(region);
    }
    Ok(out)
}

/// Load one of the packaged region sets.
pub fn load_geo_regions(set: RegionSet) -> Result<Vec<GeoRegionMeta>, GeoError> {
    let text = match set {
        RegionSet::Europe => EUROPE_JSONL,
        RegionSet::World => WORLD_JSONL,
        RegionSet::Us => US_JSONL,
        RegionSet::China => CHINA_JSONL,
    };
    parse_geo_file(text)
}

pub fn serialize_geo_file(regions: &[GeoRegionMeta]) -> String {
    let mut out = String::new();
    for r in regions {
        out.push_str(&serde_json::to_string(r).unwrap());
        out.push('\n');
    }
    out
}
