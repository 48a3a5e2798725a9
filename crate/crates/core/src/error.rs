use thiserror::Error;

/// Errors from group construction and combinatorial operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    /// Family/rank combination outside the supported finite irreducible list.
    #[error("unsupported type: {0}")]
    UnsupportedType(String),

    /// Enumeration would exceed the element or wall-clock budget.
    #[error("budget overflow: {0}")]
    OverflowBudget(String),

    /// A D-family window must have an even number of negative entries.
    #[error("window {0} has an odd number of negative entries; not an element of D_n")]
    OddSigns(String),

    /// The embedding check is exhaustive over all element pairs and capped.
    #[error("budget exceeded: order comparison is quadratic in group size; rank {0} is over the cap")]
    BudgetExceeded(u8),

    /// Malformed window string or entries not a signed permutation.
    #[error("invalid window: {0}")]
    InvalidWindow(String),
}

/// Errors from the curvature layer.
#[derive(Debug, Error, PartialEq)]
pub enum CurvatureError {
    /// An operator needed f(v) for a vertex the function map does not cover.
    #[error("missing value: f has no entry for vertex {0}")]
    MissingValue(u32),

    /// The four-term expansion requires f(center) = 0.
    #[error("not normalized: f(center) = {0}, expected 0")]
    NotNormalized(f64),

    /// Curvature of an isolated vertex is undefined (no ring-1 block).
    #[error("empty ball: vertex {0} has no neighbors")]
    EmptyBall(u32),

    /// Jacobi sweeps did not reach the off-diagonal tolerance.
    #[error("eigensolver did not converge: off-diagonal norm {norm:.3e} after {sweeps} sweeps")]
    NoConvergence { sweeps: usize, norm: f64 },

    /// Global curvature over a graph with a degree-0 vertex is undefined.
    #[error("isolated vertex {0} in graph")]
    IsolatedVertex(u32),

    /// The triangle-free lower bound was asked for on a graph with triangles.
    #[error("graph has triangles (e.g. at edge {0}-{1}); triangle-free bound does not apply")]
    HasTriangles(u32, u32),
}

/// Errors from the cache file format and exports.
#[derive(Debug, Error)]
pub enum CacheError {
    #[error("checksum mismatch: file says {stated}, body hashes to {actual}")]
    ChecksumMismatch { stated: String, actual: String },

    #[error("version mismatch: expected BRURIC-CACHE v1, got {0:?}")]
    VersionMismatch(String),

    #[error("parse error at line {line}: {what}")]
    ParseError { line: usize, what: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
