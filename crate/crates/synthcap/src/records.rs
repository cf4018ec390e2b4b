//! Raw-metadata records and the newline-delimited JSON store loader.

use serde::{Deserialize, Serialize};
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

/// Ingestible raw metadata. The `kind` field discriminates on the wire.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RawRecord {
    ImageCaption {
        image_ref: String,
        caption_text: String,
        #[serde(default)]
        entities: Vec<String>,
    },
    Tabular {
        headers: Vec<String>,
        rows: Vec<Vec<String>>,
    },
    TimeSeries {
        label: String,
        points: Vec<(f64, f64)>,
    },
    GeoTable {
        region_set: String,
        values: Vec<(String, GeoValue)>,
    },
    DiagramSource {
        mermaid_text: String,
        origin: DiagramOrigin,
    },
    CodeSnippet {
        language_id: String,
        source_text: String,
        #[serde(default)]
        explanation_text: String,
    },
    TextPassage {
        text: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeoValue {
    Number(f64),
    Label(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagramOrigin {
    Crawled,
    Generated,
}

/// Store kinds accepted by `load_records`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordKind {
    ImageCaption,
    Tabular,
    TimeSeries,
    GeoTable,
    DiagramSource,
    CodeSnippet,
    TextPassage,
}

pub const SUPPORTED_LANGUAGES: [&str; 9] = [
    "c",
    "cpp",
    "ruby",
    "r",
    "python",
    "java",
    "javascript",
    "css",
    "sql",
];

impl RawRecord {
    pub fn kind(&self) -> RecordKind {
        match self {
            RawRecord::ImageCaption { .. } => RecordKind::ImageCaption,
            RawRecord::Tabular { .. } => RecordKind::Tabular,
            RawRecord::TimeSeries { .. } => RecordKind::TimeSeries,
            RawRecord::GeoTable { .. } => RecordKind::GeoTable,
            RawRecord::DiagramSource { .. } => RecordKind::DiagramSource,
            RawRecord::CodeSnippet { .. } => RecordKind::CodeSnippet,
            RawRecord::TextPassage { .. } => RecordKind::TextPassage,
        }
    }

    /// Check the per-variant invariants.
    pub fn validate(&self) -> Result<(), String> {
        match self {
            RawRecord::ImageCaption { caption_text, .. } => {
                if caption_text.trim().is_empty() {
                    return Err("image-caption record with empty caption".into());
                }
            }
            RawRecord::Tabular { headers, rows } => {
                if headers.is_empty() {
                    return Err("tabular record with no headers".into());
                }
                for (i, row) in rows.iter().enumerate() {
                    if row.len() != headers.len() {
                        return Err(format!(
                            "tabular row {i} has {} cells, expected {}",
                            row.len(),
                            headers.len()
                        ));
                    }
                }
            }
            RawRecord::TimeSeries { points, .. } => {
                if points.is_empty() {
                    return Err("time-series record with no points".into());
                }
                if points.iter().any(|p| !p.0.is_finite() || !p.1.is_finite()) {
                    return Err("time-series record with non-finite point".into());
                }
            }
            RawRecord::GeoTable { values, .. } => {
                if values.is_empty() {
                    return Err("geo-table record with no values".into());
                }
            }
            RawRecord::DiagramSource { mermaid_text, .. } => {
                if mermaid_text.trim().is_empty() {
                    return Err("diagram record with empty source".into());
                }
            }
            RawRecord::CodeSnippet {
                language_id,
                source_text,
                ..
            } => {
                if !SUPPORTED_LANGUAGES.contains(&language_id.as_str()) {
                    return Err(format!("unsupported language id `{language_id}`"));
                }
                if source_text.is_empty() {
                    return Err("code record with empty source".into());
                }
            }
            RawRecord::TextPassage { text } => {
                if text.trim().is_empty() {
                    return Err("text passage record with empty text".into());
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum StoreIoError {
    #[error("cannot read store {path}: {source}")]
    Unreadable {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("store {path}: {malformed} of {total} records malformed (more than half); first error: {first_error}")]
    MostlyMalformed {
        path: String,
        malformed: usize,
        total: usize,
        first_error: String,
    },
    #[error("store {path} contains no usable records")]
    Empty { path: String },
}

/// Result of loading a store: the good records plus a skip report.
#[derive(Debug)]
pub struct LoadReport {
    pub records: Vec<RawRecord>,
    pub skipped: usize,
    pub first_error: Option<String>,
}

/// Load newline-delimited JSON records of `kind` from `path`.
///
/// Malformed or wrong-kind lines are counted and skipped. If more than
/// half of the non-empty lines are bad the whole load fails: that almost
/// always means the wrong file was configured.
pub fn load_records(path: &Path, kind: RecordKind) -> Result<LoadReport, StoreIoError> {
    let file = File::open(path).map_err(|source| StoreIoError::Unreadable {
        path: path.display().to_string(),
        source,
    })?;
    let reader = BufReader::new(file);
    let mut records = Vec::new();
    let mut skipped = 0usize;
    let mut total = 0usize;
    let mut first_error = None;
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|source| StoreIoError::Unreadable {
            path: path.display().to_string(),
            source,
        })?;
        if line.trim().is_empty() {
            continue;
        }
        total += 1;
        let parsed: Result<RawRecord, _> = serde_json::from_str(&line);
        match parsed {
            Ok(rec) if rec.kind() == kind => match rec.validate() {
                Ok(()) => records.push(rec),
                Err(why) => {
                    skipped += 1;
                    first_error
                        .get_or_insert_with(|| format!("line {}: {why}", lineno + 1));
                }
            },
            Ok(_) => {
                skipped += 1;
                first_error.get_or_insert_with(|| format!("line {}: wrong record kind", lineno + 1));
            }
            Err(err) => {
                skipped += 1;
                first_error.get_or_insert_with(|| format!("line {}: {err}", lineno + 1));
            }
        }
    }
    if total == 0 || records.is_empty() {
        return Err(StoreIoError::Empty {
            path: path.display().to_string(),
        });
    }
    if skipped * 2 > total {
        return Err(StoreIoError::MostlyMalformed {
            path: path.display().to_string(),
            malformed: skipped,
            total,
            first_error: first_error.unwrap_or_default(),
        });
    }
    Ok(LoadReport {
        records,
        skipped,
        first_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_lines(lines: &[&str]) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        for l in lines {
            writeln!(f, "{l}").unwrap();
        }
        f
    }

    #[test]
    fn loads_good_records_and_counts_skips() {
        let f = write_lines(&[
            r#"{"kind":"text_passage","text":"alpha"}"#,
            r#"{"kind":"text_passage","text":"   "}"#,
            r#"not json at all"#,
            r#"{"kind":"text_passage","text":"beta"}"#,
            r#"{"kind":"text_passage","text":"gamma"}"#,
        ]);
        let report = load_records(f.path(), RecordKind::TextPassage).unwrap();
        assert_eq!(report.records.len(), 3);
        assert_eq!(report.skipped, 2);
        assert!(report.first_error.is_some());
    }

    #[test]
    fn mostly_malformed_is_a_hard_error() {
        let f = write_lines(&[
            r#"{"kind":"text_passage","text":"alpha"}"#,
            "junk",
            "more junk",
        ]);
        let err = load_records(f.path(), RecordKind::TextPassage).unwrap_err();
        assert!(matches!(err, StoreIoError::MostlyMalformed { .. }));
    }

    #[test]
    fn missing_file_is_io_error() {
        let err = load_records(Path::new("/nonexistent/store.jsonl"), RecordKind::Tabular)
            .unwrap_err();
        assert!(matches!(err, StoreIoError::Unreadable { .. }));
    }

    #[test]
    fn ragged_tabular_rows_are_rejected() {
        let rec = RawRecord::Tabular {
            headers: vec!["a".into(), "b".into()],
            rows: vec![vec!["1".into(), "2".into()], vec!["3".into()]],
        };
        assert!(rec.validate().is_err());
    }

    #[test]
    fn unknown_language_is_rejected() {
        let rec = RawRecord::CodeSnippet {
            language_id: "cobol".into(),
            source_text: "x".into(),
            explanation_text: String::new(),
        };
        assert!(rec.validate().is_err());
    }

    #[test]
    fn loaded_records_always_satisfy_invariants() {
        // Fuzzed mix of valid records, invalid records and garbage.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut lines = Vec::new();
        for i in 0..300 {
            match rng.gen_range(0..4) {
                0 => lines.push(format!(r#"{{"kind":"text_passage","text":"passage {i}"}}"#)),
                1 => lines.push(format!(
                    r#"{{"kind":"code_snippet","language_id":"python","source_text":"x={i}"}}"#
                )),
                2 => lines.push(format!(r#"{{"kind":"text_passage","text":""}}"#)),
                _ => lines.push(format!("garbage line {i}")),
            }
        }
        let refs: Vec<&str> = lines.iter().map(|s| s.as_str()).collect();
        let f = write_lines(&refs);
        if let Ok(report) = load_records(f.path(), RecordKind::TextPassage) {
            for rec in &report.records {
                assert_eq!(rec.kind(), RecordKind::TextPassage);
                rec.validate().unwrap();
            }
        }
    }
}
