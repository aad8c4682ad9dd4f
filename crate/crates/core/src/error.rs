use thiserror::Error;

/// Errors raised by constructors and by operations whose preconditions fail.
///
/// Law failures of a well-formed structure are never errors; they are
/// reported as data in the various report and certificate types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("postcondition violated: {0}")]
    Postcondition(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("unknown preset: {0}")]
    UnknownPreset(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by malformed input rather than mathematical preconditions.
    pub fn is_malformed_input(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch(_) | Error::Parse(_) | Error::UnknownPreset(_) | Error::InvalidGroup(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
