//! Surplus laboratory: spectral analysis of graph cuts at desk scale.
//!
//! The crate revolves around the *surplus* of a graph, `mc(G) - m/2`, the
//! amount by which the maximum cut exceeds the random-cut baseline. It
//! provides:
//!
//! * exact and heuristic MaxCut with machine-checkable lower-bound
//!   certificates (eigenvalue test matrices, low-rank semidefinite factors,
//!   explicit and biased cuts),
//! * a density-increment engine that extracts denser induced subgraphs from
//!   dense graphs via a triple Hadamard product of spectral components,
//! * balanced-subgraph peeling and clique pulling,
//! * a stability pipeline that certifies closeness of a graph to a disjoint
//!   union of cliques and reports the exact edit distance,
//! * seed-deterministic generators for every graph family the tests need.
//!
//! Everything is deterministic: same inputs and seeds give identical output,
//! byte for byte, regardless of platform or worker count.

// index loops are the clearer idiom in the dense matrix kernels
#![allow(clippy::needless_range_loop)]

pub mod extraction;
pub mod generators;
pub mod graph;
pub mod rng;
pub mod spectral;
pub mod stability;
pub mod surplus;

pub use graph::{Cut, CutStats, Densities, Graph, GraphError, VertexSet};
pub use spectral::{SpectralDecomposition, SymMatrix};
