use std::io;

use ratpark::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io(_) | CliError::Json(_) => EXIT_IO,
            CliError::Core(e) => match e {
                CoreError::CapExceeded { .. } | CoreError::NotPeriodic => EXIT_CAP,
                CoreError::VerificationFailed(_)
                | CoreError::NoPreimage
                | CoreError::NonIntegralEvaluation
                | CoreError::NonIntegralPosition
                | CoreError::NotStandard => EXIT_VERIFY,
                _ => EXIT_USAGE,
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
