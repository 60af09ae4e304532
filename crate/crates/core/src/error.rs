use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("level must be positive (got {0}); membership is only characterised for positive levels")]
    NonPositiveLevel(String),
    #[error("element is not a minimal coset representative: {0}")]
    NotMinimal(String),
    #[error("length condition violated: {0}")]
    LengthCondition(String),
    #[error("table too small: need max_len >= {need}, have {have}")]
    TableTooSmall { need: usize, have: usize },
    #[error("internal consistency fault: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Internal(_) => 4,
            _ => 2,
        }
    }
}
