use thiserror::Error;

/// A malformed graph file.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("edges[{index}]: {message}")]
    Edge { index: usize, message: String },
}

/// Failures of a CLI command, each with a fixed exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format {
        path: String,
        #[source]
        source: FormatError,
    },
    #[error(transparent)]
    Core(#[from] srnt_core::Error),
    #[error("output: {0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Overflow(_) => 3,
            CliError::Io { .. } | CliError::Format { .. } | CliError::Output(_) => 4,
            CliError::Core(srnt_core::Error::Overflow) => 3,
            CliError::Core(srnt_core::Error::InvalidParameters(_))
            | CliError::Core(srnt_core::Error::UnknownGraph(_)) => 2,
            CliError::Core(_) => 1,
        }
    }
}
