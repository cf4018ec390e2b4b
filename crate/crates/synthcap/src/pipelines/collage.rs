//! Collage pipeline.
