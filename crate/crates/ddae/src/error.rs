//! Crate-wide error type.
//!
//! Every fallible public operation returns [`Result`]. The CLI maps error
//! categories onto stable process exit codes (see `cli::exit_code`).

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    /// Incompatible dimensions; the message names both shapes.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A scalar argument is outside its valid range.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A combination of options that the implementation does not support.
    #[error("unsupported configuration: {0}")]
    UnsupportedConfig(String),

    /// Bad caller-supplied data (empty dataset, label out of range, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// Training produced a non-finite parameter or objective.
    #[error("training diverged at epoch {epoch}: {detail}")]
    Divergence { epoch: usize, detail: String },

    /// A file does not conform to its format.
    #[error("format error: {0}")]
    Format(String),

    /// Two inputs that must agree do not (e.g. image/label counts).
    #[error("consistency error: {0}")]
    Consistency(String),

    /// Operation requires model state that is not present.
    #[error("state error: {0}")]
    State(String),

    /// Bad run configuration (unknown key, unparsable value, ...).
    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
