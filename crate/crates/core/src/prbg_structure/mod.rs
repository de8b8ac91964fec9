//! Structural facts about path-restricted ordered bipartite graphs as
//! executable checks: path trees and their merge detector, uniqueness and
//! disjointness properties, the four length-3 path types and the acyclicity
//! theorem, bounded-path peeling, the crossing lemma, and the certifying
//! divide-and-conquer edge bound.

mod certify;
mod paths;
mod tree;

pub use certify::{
    bound_sweep_csv, certify_edge_bound, crossing_edge_bound, partition_s1_s2, BoundCertificate,
    BoundSweepRow, CertNode, CertificateError, ClauseOutcome, CrossingBound, Partition, Split,
    EDGE_BOUND_CONSTANT,
};
pub use paths::{
    assert_acyclic_if_type_missing, check_bounded_path_bound, classify_p3,
    longest_forward_path_length, peel_leftmost, AcyclicityCheck, CycleWitness, P3Census, P3Type,
};
pub use tree::{
    build_path_tree, check_disjoint_tl_ranges, check_unique_incidence, find_spbg_violation,
    is_strictly_path_restricted, tl_spans_induce_tree_only, tree_span_edge_count, Direction,
    MergeEvent, PathTree, SpbgWitness, TreeOutcome,
};

use thiserror::Error;

use crate::ordered_bipartite::{GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("two forward paths from {root} merge at {vertex}")]
    Merged { root: Vertex, vertex: Vertex },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed split: {0}")]
    MalformedSplit(String),
}
