//! Crate-wide error type.

/// Errors produced by graph construction, measure computation, and analysis.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An edge-list line that is neither a comment nor a two-token edge.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The input contained no nodes after comment stripping and normalization.
    #[error("graph is empty after normalization (no valid edge lines)")]
    EmptyGraph,

    /// An operation's structural precondition does not hold.
    #[error("{context}: {requirement}")]
    Precondition {
        context: &'static str,
        requirement: String,
    },

    /// A correlation whose value is mathematically undefined (e.g. constant input).
    #[error("undefined correlation: {0}")]
    UndefinedCorrelation(String),

    /// A parameter outside its documented domain.
    #[error("invalid parameter `{name}`: {message}")]
    Parameter { name: &'static str, message: String },

    /// An iterative method exhausted its iteration budget.
    #[error("{what} did not converge within {iterations} iterations")]
    NonConvergence { what: &'static str, iterations: u64 },

    /// A dense solve or factorization failed.
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
