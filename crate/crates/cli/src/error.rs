use biphoton::ErrorCategory;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] biphoton::Error),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const IO: u8 = 1;
    pub const CONFIG: u8 = 2;
    pub const REGIME: u8 = 3;
    pub const RESOLUTION: u8 = 4;
    pub const INFEASIBLE: u8 = 5;
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e.category() {
                ErrorCategory::Config => exit::CONFIG,
                ErrorCategory::Regime => exit::REGIME,
                ErrorCategory::Resolution => exit::RESOLUTION,
                ErrorCategory::Infeasible => exit::INFEASIBLE,
                ErrorCategory::Io => exit::IO,
            },
            CliError::Config(_) => exit::CONFIG,
            CliError::Io(_) | CliError::Json(_) => exit::IO,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Config(m) => m.clone(),
            other => other.to_string(),
        }
    }
}
