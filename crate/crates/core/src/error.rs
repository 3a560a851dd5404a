use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimensions: {0}")]
    Dimension(String),

    #[error("invalid kernel: {0}")]
    InvalidKernel(String),

    #[error("invalid kernel pair: {0}")]
    InvalidPair(String),

    #[error("invalid weight matrix: {0}")]
    InvalidWeights(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("unknown operator '{name}' (valid operators: {valid})")]
    UnknownOperator { name: String, valid: String },

    #[error("operator '{name}' has no {size}x{size} kernel (valid sizes: 3, 5)")]
    UnsupportedSize { name: String, size: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("singular plane fit: {0}")]
    SingularFit(String),

    #[error("no contrast: image has a single intensity value")]
    NoContrast,

    #[error("failed to read {path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("failed to decode {path}: {reason}")]
    Decode { path: PathBuf, reason: String },

    #[error("failed to encode image: {0}")]
    Encode(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by the caller's input (bad path, bad file,
    /// bad name) rather than by processing a valid input.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Read { .. }
                | Error::Decode { .. }
                | Error::UnknownOperator { .. }
                | Error::UnsupportedSize { .. }
                | Error::Parameter(_)
        )
    }
}
