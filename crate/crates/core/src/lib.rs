//! Path-restricted ordered bipartite graphs (PRBGs) and the proximity
//! graphs on convex point sets they abstract: unit distance graphs, Gabriel
//! graphs, and locally Gabriel graphs.
//!
//! The crate is organized around the pipeline
//! geometry -> decomposition -> ordered bipartite structure -> edge bounds:
//!
//! - [`convex_geometry`]: planar predicates, strictly convex point sets,
//!   antipodal pairs by rotating calipers, instance generators.
//! - [`proximity`]: unit distance, Gabriel, and locally Gabriel graph
//!   construction and validation.
//! - [`decomposition`]: splitting a geometric graph on a convex point set
//!   into two path-restricted ordered bipartite graphs.
//! - [`ordered_bipartite`]: the combinatorial core; forward paths, back
//!   edges, and the brute-force path-restriction verifier.
//! - [`prbg_structure`]: structural facts about PRBGs as executable checks,
//!   plus the certifying divide-and-conquer edge bound.
//! - [`extremal`]: the 0-1 matrix lower-bound construction and
//!   staircase-pattern detection.
//! - [`sampling`]: seeded random PRBG generators for property sweeps.
//! - [`render`]: SVG and plain-text renderers for the above.

pub mod convex_geometry;
pub mod decomposition;
pub mod extremal;
pub mod ordered_bipartite;
pub mod prbg_structure;
pub mod proximity;
pub mod render;
pub mod sampling;

pub use ordered_bipartite::{
    back_edges, enumerate_forward_paths, is_forward_path, mirrored_back_edges, path_range,
    verify_path_restricted, verify_path_restricted_opts, BackEdgeSide, ExtremeSide, ForwardPath,
    GraphError, OrderedBipartiteGraph, PathRange, VerifyOptions, Vertex, Violation,
};
