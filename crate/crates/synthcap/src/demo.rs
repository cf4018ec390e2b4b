//! Deterministic demo corpus builder.
