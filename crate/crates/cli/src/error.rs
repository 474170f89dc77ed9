use std::path::PathBuf;

use densityseek_bench::BenchError;
use densityseek_core::DensityError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments: malformed ratio, incompatible algorithm, and so on.
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    /// The input was read but is not a valid stream in the chosen format.
    #[error("{}: {message}", path.display())]
    Input { path: PathBuf, message: String },
    #[error(transparent)]
    Bench(BenchError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } | CliError::Input { .. } => 3,
            CliError::Bench(BenchError::Config(_)) => 2,
            CliError::Bench(BenchError::Io(_)) | CliError::Bench(BenchError::Csv(_)) => 3,
            CliError::Bench(_) => 1,
        }
    }
}

impl From<DensityError> for CliError {
    fn from(e: DensityError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<BenchError> for CliError {
    fn from(e: BenchError) -> Self {
        match e {
            BenchError::Solver(inner) => inner.into(),
            other => CliError::Bench(other),
        }
    }
}
