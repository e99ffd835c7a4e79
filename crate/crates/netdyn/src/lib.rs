//! Quantifies the evolution of a dynamic network.
//!
//! The pipeline: slice a timestamped event log into fixed-length
//! [windows](window), build one weighted directed [snapshot](graph::GraphSnapshot)
//! per window, [diff](graph::diff) consecutive snapshots into a
//! [differential tuple](graph::GraphDifferentialTuple), and score each tuple
//! with a family of [distance measures](measures). A [synthetic log
//! generator](synth) produces bursty traffic for experiments.

pub mod graph;
pub mod measures;
pub mod synth;
pub mod window;
