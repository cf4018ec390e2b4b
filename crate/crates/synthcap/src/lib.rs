//! Synthesis engine for composite-image / caption training pairs.
//!
//! The engine ingests raw metadata (image-caption stores, tabular rows,
//! time series, geo tables, diagram sources, code snippets, text passages),
//! renders raster composite images across six categories (collage,
//! image-text, chart, diagram, code, table), builds category-specific LLM
//! prompts, and emits a newline-delimited manifest binding each image to
//! its caption, seed, and provenance.
//!
//! Everything is deterministic: a sample is a pure function of
//! `(global_seed, category, index, attempt)`. Runs with one worker and
//! eight workers produce byte-identical manifests.

pub mod canvas;
pub mod captioner;
pub mod category;
pub mod config;
pub mod demo;
pub mod emitter;
pub mod layout;
pub mod mix;
pub mod pipelines;
pub mod records;
pub mod retrieval;
pub mod seed;

pub use category::Category;
pub use config::GlobalConfig;
pub use mix::CategoryMix;
pub use seed::{derive_seed, SampleSeed};
