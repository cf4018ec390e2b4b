//! Run configuration, loaded from a TOML document.
//!
//! The schema is documented in `docs/config.md`.

use crate::mix::{CategoryMix, MixError};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

/// Paths to the raw-metadata stores consumed by the pipelines.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct StorePaths {
    /// Image-caption store (ndjson) with an embeddings sidecar next to it.
    pub image_captions: PathBuf,
    /// Entity list, one entity per line.
    pub entities: PathBuf,
    /// Tabular records (ndjson) for bar/pie charts and tables.
    pub tabular: PathBuf,
    /// Time-series records (ndjson) for line charts.
    pub time_series: PathBuf,
    /// Geo-table records (ndjson) for choropleth maps.
    pub geo_tables: PathBuf,
    /// Diagram source records (ndjson).
    pub diagrams: PathBuf,
    /// Code snippet records (ndjson).
    pub code_snippets: PathBuf,
    /// Text passages, one per line.
    pub passages: PathBuf,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct GlobalConfig {
    pub global_seed: u64,
    pub total_samples: u64,
    pub category_mix: CategoryMix,
    pub store_paths: StorePaths,
    /// HTTP endpoint of the caption model, or the literal marker `stub`.
    pub llm_endpoint: String,
    pub output_dir: PathBuf,
    pub workers: u64,
    /// Share of collages per retrieval mode (random, similarity, entity).
    pub collage_mode_weights: [f64; 3],
    /// Optional external renderer: reads diagram text on stdin, writes PNG
    /// to stdout. Empty means the built-in renderer only.
    pub diagram_adapter: Option<PathBuf>,
    pub diagram_adapter_timeout_secs: u64,
}

impl Default for GlobalConfig {
    fn default() -> Self {
        GlobalConfig {
            global_seed: 0,
            total_samples: 100,
            category_mix: CategoryMix::default(),
            store_paths: StorePaths::default(),
            llm_endpoint: "stub".to_string(),
            output_dir: PathBuf::from("out"),
            workers: 1,
            collage_mode_weights: [1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0],
            diagram_adapter: None,
            diagram_adapter_timeout_secs: 30,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Unreadable {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("config parse error: {0}")]
    Parse(#[from] toml::de::Error),
    #[error(transparent)]
    Mix(#[from] MixError),
    #[error("total_samples must be >= 1")]
    ZeroSamples,
    #[error("workers must be >= 1")]
    ZeroWorkers,
    #[error("collage_mode_weights must be non-negative and sum to a positive value")]
    BadModeWeights,
}

impl GlobalConfig {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Unreadable {
            path: path.display().to_string(),
            source,
        })?;
        let config: GlobalConfig = toml::from_str(&text)?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.total_samples == 0 {
            return Err(ConfigError::ZeroSamples);
        }
        if self.workers == 0 {
            return Err(ConfigError::ZeroWorkers);
        }
        self.category_mix.validate()?;
        let w = &self.collage_mode_weights;
        if w.iter().any(|&x| x < 0.0 || !x.is_finite()) || w.iter().sum::<f64>() <= 0.0 {
            return Err(ConfigError::BadModeWeights);
        }
        Ok(())
    }

    pub fn stub_llm(&self) -> bool {
        self.llm_endpoint == "stub"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn minimal_config_parses_with_defaults() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(
            f,
            r#"
global_seed = 42
total_samples = 10

[store_paths]
image_captions = "demo/store.jsonl"
"#
        )
        .unwrap();
        let cfg = GlobalConfig::load(f.path()).unwrap();
        assert_eq!(cfg.global_seed, 42);
        assert_eq!(cfg.total_samples, 10);
        assert_eq!(cfg.workers, 1);
        assert!(cfg.stub_llm());
    }

    #[test]
    fn bad_mix_fails_validation() {
        let mut cfg = GlobalConfig::default();
        cfg.category_mix.chart = 0.5;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn zero_totals_rejected() {
        let mut cfg = GlobalConfig::default();
        cfg.total_samples = 0;
        assert!(matches!(cfg.validate(), Err(ConfigError::ZeroSamples)));
        cfg.total_samples = 5;
        cfg.workers = 0;
        assert!(matches!(cfg.validate(), Err(ConfigError::ZeroWorkers)));
    }
}
