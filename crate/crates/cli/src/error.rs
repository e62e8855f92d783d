use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Everything that can stop a subcommand, grouped by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },

    #[error("{path}: {source}")]
    Input { path: PathBuf, source: rlvd::Error },

    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Solver(rlvd::Error),

    #[error("malformed record {path}: {source}")]
    Record { path: PathBuf, source: serde_json::Error },

    #[error("cannot write csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>) -> impl FnOnce(io::Error) -> CliError {
        let path = path.into();
        move |source| CliError::Io { path, source }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Input { .. } | CliError::Usage(_) => 2,
            CliError::Solver(rlvd::Error::Unsupported { .. } | rlvd::Error::SizeGuard { .. }) => 2,
            CliError::Solver(rlvd::Error::WidthExceeded { .. }) => 2,
            CliError::Record { .. } => 1,
            CliError::Solver(_) | CliError::Csv(_) => 3,
        }
    }
}

impl From<rlvd::Error> for CliError {
    fn from(e: rlvd::Error) -> Self {
        CliError::Solver(e)
    }
}
