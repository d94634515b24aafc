//! Exact tree-depth toolkit for small graphs.
//!
//! * [`graph`]: bit-set graphs on at most 64 vertices, minor moves and the
//!   star-clique transform; [`generators`] for the graph families;
//!   [`iso`] for small isomorphism checks; [`format`] for edge-list and
//!   graph6 text.
//! * [`ranking`]: rankings and their verification; [`witness`] builds
//!   explicit rankings for the families and their one-step minors.
//! * [`solver`]: exact tree-depth with an optimal ranking as certificate,
//!   and an independent brute-force oracle.
//! * [`critical`]: minor-criticality and 1-uniqueness reports;
//!   [`reproduce`] runs the full check of the `h_n` family.
//! * [`sweep`]: exhaustive and randomized cross-validation suites.

pub mod critical;
pub mod format;
pub mod generators;
pub mod graph;
pub mod iso;
pub mod ranking;
pub mod reproduce;
pub mod solver;
pub mod sweep;
pub mod witness;

pub use graph::{Graph, GraphError, MinorStep, VertexSet};
pub use ranking::{verify_ranking, Ranking, Verification, Violation};
pub use solver::{
    treedepth, treedepth_le, Bounds, Solver, SolverConfig, SolverError, TdCertificate,
};
