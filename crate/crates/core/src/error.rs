use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid cone: {0}")]
    InvalidCone(String),

    #[error("direction not in -int(C): {0}")]
    InvalidDirection(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("unknown id `{0}`")]
    UnknownId(String),

    #[error("parse error at {at}: {message}")]
    Parse { at: String, message: String },
}

impl Error {
    pub(crate) fn parse(at: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            at: at.into(),
            message: message.into(),
        }
    }

    /// True for failures of solver preconditions (as opposed to malformed input).
    pub fn is_precondition(&self) -> bool {
        matches!(self, Error::EmptyInput(_))
    }
}
