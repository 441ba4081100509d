use cdpoly::CdError;
use thiserror::Error;

/// Failures mapped onto the exit-code contract: 2 parse, 3 semantic, 4 I/O.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Semantic(#[from] CdError),
    #[error("{0}")]
    Invalid(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("{failed} of {total} checks failed")]
    Verification { failed: usize, total: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Semantic(_) | CliError::Invalid(_) => 3,
            CliError::Io(_) => 4,
            CliError::Verification { .. } => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
