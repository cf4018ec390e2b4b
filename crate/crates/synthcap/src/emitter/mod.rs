//! Orchestration, manifest emission, statistics.
