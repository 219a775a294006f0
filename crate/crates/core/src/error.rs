use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("extension error: {0}")]
    Extension(String),

    #[error("incomplete characteristic: {0}")]
    IncompleteCharacteristic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
