use std::path::PathBuf;

use thiserror::Error;

/// Failures surfaced by the command-line front end.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("{key} = {value} is out of range: expected {range}")]
    Range { key: String, value: String, range: String },
    #[error("{0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Input(lgdot_core::Error),
    #[error("computation failed: {0}")]
    Compute(lgdot_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("plot: {0}")]
    Plot(String),
    #[error("{0}")]
    Validation(String),
}

impl CliError {
    /// 2 for bad input, 1 for everything that went wrong afterwards.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config { .. } | CliError::Range { .. } | CliError::Usage(_) | CliError::Input(_) => 2,
            CliError::Compute(_) | CliError::Io { .. } | CliError::Plot(_) | CliError::Validation(_) => 1,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<lgdot_core::Error> for CliError {
    fn from(e: lgdot_core::Error) -> Self {
        if is_input_error(&e) {
            CliError::Input(e)
        } else {
            CliError::Compute(e)
        }
    }
}

fn is_input_error(e: &lgdot_core::Error) -> bool {
    match e {
        lgdot_core::Error::InvalidInput(_) | lgdot_core::Error::Dimension(_) => true,
        lgdot_core::Error::Context { source, .. } => is_input_error(source),
        _ => false,
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
