//! Core vertices, core distance partitions and entropy indices for universal
//! adjacency matrices of connected simple graphs.
//!
//! A universal adjacency matrix is `U = γ_A·A + γ_D·D + γ_I·I + γ_J·J` with
//! `γ_A ≠ 0`. For an eigenvalue λ of `U`, a vertex is λ-core when some
//! λ-eigenvector is nonzero there. Grouping every vertex by its graph distance
//! to the nearest λ-core vertex gives the λ-core distance partition (λ-CDP).
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: graphs, parsing, BFS distances, coalescence, fixtures.
//! * [`spectral`]: universal matrices, Jacobi eigensolver, eigenvalue
//!   clusters, core vertex detection.
//! * [`cdp`]: core distance partitions, equitability, divisor matrices and
//!   reconstruction of one CDP from another.
//! * [`symmetry`]: automorphism orbits and orbit/partition consistency checks.
//! * [`entropy`]: partition entropy, weighted means, bounds, refinement
//!   inequality.
//! * [`singular`]: nullity-based structure (slim graphs, minimal
//!   configurations, coalescence reports).
//! * [`report`]: end-to-end analyses behind the `lambda-cdp` binary.
//! * [`enumerate`]: small-graph enumeration and random connected graphs.
//!
//! Vertex labels are 1-indexed everywhere. Positional sequences (distance
//! vectors, matrix rows, projector diagonals) are indexed from 0, so entry
//! `i` belongs to vertex `i + 1`.

pub mod cdp;
pub mod entropy;
pub mod enumerate;
mod error;
pub mod graph;
pub mod report;
pub mod singular;
pub mod spectral;
pub mod symmetry;

pub use error::{CoalesceFailure, Error, GraphError, ParseError, Position, Result};
pub use graph::{Graph, VertexSet};
pub use spectral::{Tolerances, UniversalParams};
