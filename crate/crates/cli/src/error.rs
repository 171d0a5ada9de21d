use std::path::PathBuf;

/// Everything `run` can fail with, mapped onto process exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(casimir_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("spectrum line {line}: {message}")]
    SpectrumFile { line: u64, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("writing report: {0}")]
    Output(String),
}

impl From<casimir_core::Error> for CliError {
    fn from(e: casimir_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    /// 1 for numerical failures, 2 for bad input of any kind.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_numerical() => 1,
            CliError::Output(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
