//! Degree-constrained graph partitioning and coloring with independently
//! checkable certificates.
//!
//! The pipeline: partition a graph under per-part degree budgets by
//! potential-function local search with f-preserving move chains; either an
//! obstruction-free partition comes out (and Brooks coloring per part turns
//! it into a proper coloring) or the wrap of a chain assembles a rigid
//! clique structure. On top sit degeneracy splits (Borodin-type), critical
//! structure extraction, and a classifier that recognizes the only two
//! extremal graphs: the complete graph and `O_5`. Every engine outcome is a
//! certificate re-validated by an independent checker, with exact
//! brute-force oracles (chromatic number, criticality, enumeration) as
//! ground truth at desk scale.

pub mod bitset;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod partition;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{
    build_complete, build_cycle, build_edgeless, build_o_n, build_path, isomorphic, join, Graph,
    OnGraph, Subgraph,
};
