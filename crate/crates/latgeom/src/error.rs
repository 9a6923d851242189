use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum LatgeomError {
    /// Malformed input text (matroid files, subset syntax, cache files).
    #[error("parse error: {0}")]
    Parse(String),

    /// Structurally invalid matroid data or family parameters.
    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    /// A precondition of an operation was violated.
    #[error("{0}")]
    Precondition(String),

    /// The request exceeds a hard size limit of the implementation.
    #[error("out of supported range: {0}")]
    OutOfRange(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, LatgeomError>;
