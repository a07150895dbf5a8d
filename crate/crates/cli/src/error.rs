use std::path::PathBuf;

/// Failures that make a command exit with status 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Parse(String),
    #[error("{field}: {source}")]
    Field { field: String, source: muarr_core::Error },
    #[error(transparent)]
    Core(#[from] muarr_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }
}
