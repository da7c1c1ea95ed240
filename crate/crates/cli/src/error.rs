use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

/// Anything that maps to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid structure file: {0}")]
    Format(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] rota_baxter::Error),
}
