use std::fmt;

use fibcube_core::Error;

/// A failed command, carrying the process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Invalid arguments or a parameter outside a formula's domain (exit 2).
    Usage(String),
    /// A verification mismatch or internal error (exit 1).
    Failure(String),
    /// Enumeration budget exceeded (exit 3).
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failure(m) | CliError::Budget(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        match e.root() {
            Error::Domain { .. } => CliError::Usage(message),
            Error::BudgetExceeded { .. } => CliError::Budget(message),
            _ => CliError::Failure(message),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failure(format!("i/o error: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;
