use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Structural problems with a vertex count or edge list.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count must be at least {min}, got {n}")]
    InvalidSize { n: usize, min: usize },
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
}

/// Where in the input a parse error was detected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    /// 1-based line of an edge-list document.
    Line(usize),
    /// 1-based index into the `edges` array of a JSON document.
    JsonEdge(usize),
    /// Syntax error location reported by the JSON reader.
    JsonSyntax { line: usize, column: usize },
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Position::Line(l) => write!(f, "line {l}"),
            Position::JsonEdge(i) => write!(f, "edge {i}"),
            Position::JsonSyntax { line, column } => write!(f, "line {line}, column {column}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{at}: malformed input: {message}")]
    Malformed { at: Position, message: String },
    #[error("{at}: missing header line `n <count>`")]
    MissingHeader { at: Position },
    #[error("{at}: {source}")]
    Graph {
        at: Position,
        #[source]
        source: GraphError,
    },
}

impl ParseError {
    pub fn position(&self) -> Position {
        match self {
            ParseError::Malformed { at, .. }
            | ParseError::MissingHeader { at }
            | ParseError::Graph { at, .. } => *at,
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("source vertex set is empty")]
    EmptySources,
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("eigendecomposition residual {residual:e} exceeds tolerance {tolerance:e}")]
    Residual { residual: f64, tolerance: f64 },
    #[error("eigenvalue cluster does not belong to this eigensystem")]
    ClusterMismatch,
    #[error("no eigenvalue near {requested} (nearest {nearest}, tolerance {tolerance:e})")]
    NoSuchEigenvalue {
        requested: f64,
        nearest: f64,
        tolerance: f64,
    },
    #[error("blocks do not partition the vertex set: {0}")]
    NotAPartition(String),
    #[error("finer partition does not refine the given partition: {0}")]
    NotARefinement(String),
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("divisor matrix violates size-weighted symmetry at ({row}, {col}) by {deviation:e}")]
    AsymmetricDivisor {
        row: usize,
        col: usize,
        deviation: f64,
    },
    #[error("{mu} is not an eigenvalue of the divisor matrix (nearest {nearest})")]
    NotDivisorEigenvalue { mu: f64, nearest: f64 },
    #[error("divisor eigenvalue {value} has no matching eigenvalue of U")]
    DivisibilityViolated { value: f64 },
    #[error("multiplicity of {mu} in B ({m_b}) exceeds multiplicity in U ({m_u}); check tolerances")]
    MultiplicityExceeds { mu: f64, m_b: usize, m_u: usize },
    #[error("partition not equitable")]
    NotEquitable,
    #[error("graph has {n} vertices, above the automorphism search cap of {cap}")]
    VertexCap { n: usize, cap: usize },
    #[error("graph is not singular (nullity 0)")]
    NotSingular,
    #[error("core size {k} out of range 1..={n}")]
    CoreSizeOutOfRange { k: usize, n: usize },
    #[error("gamma_a must be nonzero")]
    ZeroGammaA,
    #[error("coalescence precondition failed for graph {graph}: {failure}")]
    Coalescence {
        graph: u8,
        failure: CoalesceFailure,
    },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// The coalescence precondition that did not hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoalesceFailure {
    Disconnected,
    NotSingular,
    NotSlim,
    VertexOutOfRange(usize),
    NotCoreVertex(usize),
    CutVertex(usize),
}

impl fmt::Display for CoalesceFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoalesceFailure::Disconnected => write!(f, "graph is disconnected"),
            CoalesceFailure::NotSingular => write!(f, "graph is not singular"),
            CoalesceFailure::NotSlim => write!(f, "graph is not slim"),
            CoalesceFailure::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            CoalesceFailure::NotCoreVertex(v) => write!(f, "vertex {v} is not a 0-core vertex"),
            CoalesceFailure::CutVertex(v) => write!(f, "vertex {v} is a cut vertex"),
        }
    }
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Graph(_) | Error::Io { .. } | Error::ZeroGammaA => 1,
            Error::Disconnected => 2,
            Error::NotEquitable => 4,
            Error::NotDivisorEigenvalue { .. } => 5,
            Error::Coalescence { .. } => 6,
            _ => 3,
        }
    }
}
