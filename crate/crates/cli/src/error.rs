use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] tribic::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("{0}")]
    Csv(String),

    #[error("{0}")]
    Usage(String),

    #[error("cannot serialise output: {0}")]
    Output(String),
}

impl CliError {
    /// 0 success, 1 input error, 2 internal invariant violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(tribic::Error::Invariant(_)) | CliError::Output(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
