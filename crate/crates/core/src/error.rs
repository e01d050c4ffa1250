use thiserror::Error;

/// Crate-wide error type.
///
/// `Structural` means malformed input data (bad table shapes, unparsable
/// scalars); it is distinct from axiom failures, which are reported through
/// [`crate::report::CheckReport`] instead of an `Err`.
#[derive(Debug, Error)]
pub enum FtftError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("size bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, FtftError>;
