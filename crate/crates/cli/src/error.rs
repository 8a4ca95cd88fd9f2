use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("fixture {file}: {message}")]
    Fixture { file: String, message: String },
    #[error("config: {0}")]
    Config(String),
    #[error("anchor registry: {0}")]
    Registry(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn fixture(file: &str, message: impl std::fmt::Display) -> Self {
        CliError::Fixture { file: file.to_string(), message: message.to_string() }
    }

    /// Process exit status for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Fixture { .. } => 2,
            CliError::Config(_) | CliError::Registry(_) | CliError::Io(_) => 3,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
