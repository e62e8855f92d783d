use thiserror::Error;

/// Errors raised by the solvers and the graph I/O layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: endpoint {vertex} out of range for {n} vertices")]
    Range { line: usize, vertex: usize, n: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("unsupported parameters (r={r}, l={l}): the problem is para-NP-complete when max(r, l) >= 3")]
    Unsupported { r: usize, l: usize },

    #[error("instance too large for exhaustive search: n={n} exceeds {max}")]
    SizeGuard { n: usize, max: usize },

    #[error("tree decomposition width {width} exceeds cap {cap}; use the brute backend")]
    WidthExceeded { width: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
