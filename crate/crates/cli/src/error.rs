use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid arguments: {0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] numrange_core::Error),
    #[error("cannot write {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("CSV output failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("malformed report: {0}")]
    Report(String),
}

impl CliError {
    /// Process exit code: 2 usage, 3 domain, 4 I/O.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Report(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Io { .. } | CliError::Csv(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
