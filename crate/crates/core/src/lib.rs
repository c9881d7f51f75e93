//! A combinatorial toolkit around chorded cycles in simple undirected graphs:
//! detection, vertex-disjoint packing, extremal constructions, and brute-force
//! verification harnesses for neighborhood-union degree conditions.
//!
//! The crate is organized by subsystem:
//!
//! * [`graph`] — immutable bit-row graphs, graph6 interchange, and the
//!   neighborhood/degree functionals (`delta_m`, `sigma_m`, restricted degrees).
//! * [`structure`] — connectivity, block decomposition, longest paths, ears.
//! * [`chorded`] — chorded-cycle search and the constructive two-path,
//!   triangle, and good-ear routes.
//! * [`packing`] — minimal/optimal r-systems, exchange moves, and the packer.
//! * [`generators`] — extremal families and seeded random instances.
//! * [`harness`] — the independent brute-force oracle, theorem sweeps, and
//!   lemma property suites.

pub mod error;
pub mod graph;
pub mod graph6;

pub(crate) mod bitgraph;

pub mod chorded;
pub mod generators;
pub mod harness;
pub mod packing;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{DegreeValue, Graph, VertexSet};
