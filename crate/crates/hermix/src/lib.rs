//! Exact spectral toolkit for mixed graphs under the Hermitian adjacency
//! matrix with entries in the sixth roots of unity.
//!
//! A mixed graph is a simple graph in which some edges are oriented. Its
//! adjacency matrix here assigns ω = (1 + i√3)/2 to an arc u→v (and ω̄ to the
//! mirror entry), 1 to an undirected edge and 0 otherwise. Everything that
//! matters about that matrix — characteristic polynomials, ranks, switching
//! equivalence, the catalogs of graphs with small spectral radius — is decided
//! in exact arithmetic over ℚ(ω); floating point appears only in the
//! cross-checking Jacobi eigensolver.
//!
//! Module map:
//! - [`core`]: the mixed-graph data model, 𝕋₆ and ℚ(ω) arithmetic, text I/O.
//! - [`nmatrix`]: matrix construction, two independent characteristic
//!   polynomial routes, numeric eigenvalues, Sturm-exact interval decisions.
//! - [`cycles`]: cycle enumeration and the four-way cycle weight classes.
//! - [`switching`]: two-/three-way switching, equivalence decision with
//!   witness, twin reduction.
//! - [`classify`]: rank and spectral-radius classifiers with the named graph
//!   families and sporadic catalog.
//! - [`harness`]: orientation sweeps, cospectral search, verification suites.

pub mod classify;
pub mod core;
pub mod cycles;
pub mod harness;
pub mod nmatrix;
pub mod switching;

use thiserror::Error;

pub use crate::core::{Eisenstein, MixedGraph, SimpleGraph, T6};
pub use crate::nmatrix::{CharPoly, NMatrix, QuadraticSurd, Spectrum};

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("exact arithmetic failure: {0}")]
    Arithmetic(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("switching is not mixed-graph-valued: edge ({u},{v}) acquires gain {gain}")]
    NotMixedValued { u: usize, v: usize, gain: T6 },
    #[error("two-way switching precondition violated by arc {tail}->{head}")]
    TwoWayPrecondition { tail: usize, head: usize },
    #[error("partition not admissible: edge ({u},{v}) has type ({ju},{jv})")]
    Inadmissible { u: usize, v: usize, ju: T6, jv: T6 },
}

pub type Result<T> = std::result::Result<T, Error>;
