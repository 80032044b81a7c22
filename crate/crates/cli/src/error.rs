use homalg::CategoryError;
use thiserror::Error;

/// Failures split by the exit-code contract: bad input exits 2, a failed
/// mathematical check exits 1.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("check failed: {0}")]
    Math(String),
}

impl CliError {
    /// Prefix the message, keeping the kind.
    pub fn context(self, what: &str) -> Self {
        match self {
            CliError::Input(m) => CliError::Input(format!("{what}: {m}")),
            CliError::Math(m) => CliError::Math(format!("{what}: {m}")),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Math(_) => 1,
        }
    }
}

impl From<CategoryError> for CliError {
    fn from(e: CategoryError) -> Self {
        CliError::Math(e.to_string())
    }
}
