//! File formats, parallel catalog builds, and the command-line front end for
//! [`bridgeguts`].

pub mod build;
pub mod cli;
pub mod export;
pub mod record;

pub use build::build_catalog_parallel;
pub use export::{read_csv, write_csv};
pub use record::{format_record, parse_record, parse_records, write_records};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] bridgeguts::Error),
    #[error("line {line}: {reason}")]
    Record { line: usize, reason: String },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Process exit status: 2 for bad invocations, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(e) if e.is_usage() => 2,
            _ => 1,
        }
    }
}

impl From<bridgeguts::KnotError> for CliError {
    fn from(e: bridgeguts::KnotError) -> Self {
        CliError::Domain(e.into())
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
