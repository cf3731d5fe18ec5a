use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("edge {{{u}, {v}}} has an endpoint outside 0..{n}")]
    BadEndpoint { u: usize, v: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge {{{u}, {v}}} (copy {occurrence}) not found")]
    EdgeNotFound { u: usize, v: usize, occurrence: usize },
    #[error("cannot contract the self-loop at vertex {v}")]
    SelfLoopContraction { v: usize },
    #[error("cannot subdivide the self-loop at vertex {v}")]
    SelfLoopSubdivision { v: usize },
    #[error("deleting edge {{{u}, {v}}} would disconnect the graph")]
    WouldDisconnect { u: usize, v: usize },
    #[error("{edges} edges but {counts} subdivision counts")]
    ArityMismatch { edges: usize, counts: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("{what} has {size} vertices, above the enumeration cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("invalid contraction morphism: {0}")]
    InvalidMorphism(String),
}

pub type GraphResult<T> = Result<T, GraphError>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("boundary maps do not compose to zero ({rows}x{cols} product has {nonzero} nonzero entries)")]
    NotAComplex {
        rows: usize,
        cols: usize,
        nonzero: usize,
    },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{what} of size {size} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
}

pub type LinalgResult<T> = Result<T, LinalgError>;

/// Errors from the homology-level computations built on top of graphs and
/// exact linear algebra.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("delta-prime image of a cycle representative in bidegree ({k}, {l}) is not a cycle")]
    NotACycleAfterDeltaPrime { k: usize, l: usize },
    #[error("degree {k} exceeds the configured cap {cap}")]
    CapExceeded { k: usize, cap: usize },
    #[error("grid too small: {0}")]
    GridTooSmall(String),
    #[error("{what} has size {size}, above the cap {cap}")]
    SizeCap { what: String, size: usize, cap: usize },
    #[error("{0} coefficients are not supported here")]
    UnsupportedCoefficients(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
