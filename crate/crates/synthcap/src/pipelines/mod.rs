//! Per-category sample construction pipelines.

pub mod chart;
pub mod collage;
