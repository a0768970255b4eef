use thiserror::Error;

/// Errors reported by operators and solvers.
#[derive(Debug, Error)]
pub enum Error {
    /// A vector had the wrong length for the operation.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A parameter was outside its admissible range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A solver needed a capability (gradient, prox, ...) the function
    /// object does not provide.
    #[error("{what} requires a {capability}, but none was provided")]
    MissingCapability {
        what: &'static str,
        capability: &'static str,
    },

    /// An operation only valid for tight frames was called with an operator
    /// that is not flagged tight (or has no frame constant).
    #[error("operator is not a tight frame: {0}")]
    NotTight(String),

    /// A group partition did not cover the index range exactly once.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
