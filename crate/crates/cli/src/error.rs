use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{path}:{line}: {msg}")]
    Parse { path: String, line: usize, msg: String },
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Core(breakdiv::Error),
    #[error("output error: {0}")]
    Output(String),
}

impl CliError {
    /// Process exit code: 2 usage/parse, 3 budget, 1 anything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } | CliError::Io { .. } => 2,
            CliError::Budget(_) => 3,
            CliError::Core(breakdiv::Error::Precondition(_)) => 2,
            CliError::Core(_) | CliError::Output(_) => 1,
        }
    }
}

impl From<breakdiv::Error> for CliError {
    fn from(e: breakdiv::Error) -> Self {
        match e {
            breakdiv::Error::Budget { .. } => CliError::Budget(e.to_string()),
            other => CliError::Core(other),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
