//! Polymatroids: rank tables, axiom checks, constructors, and minors.

pub mod document;
pub mod graph;
pub mod polymatroid;
pub mod vectors;

pub use document::{parse_polymatroid, parse_polymatroid_str, to_document};
pub use graph::{from_graph, Graph};
pub use polymatroid::{
    elements, fmt_subset, full, mask_of, size, Limits, Polymatroid, Subset, Violation,
    DEFAULT_MAX_CHAINS, DEFAULT_MAX_N,
};
pub use vectors::{from_vectors, VectorConfig};
