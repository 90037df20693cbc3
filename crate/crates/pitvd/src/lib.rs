//! Kernelization for deleting at most `k` vertices so that every component of the
//! remaining multigraph is a tree or a proper interval graph.

pub mod clique_partition;
pub mod combinatorics;
pub mod exact;
pub mod format;
pub mod generate;
pub mod graph;
pub mod kernel;
mod local;
pub mod recognition;
pub mod separator;
pub mod verify;

pub use graph::{MultiGraph, VertexId, VertexSet};
