//! Command interpreter and serialization for the `smt` binary.

pub mod json;
pub mod report;
pub mod session;

pub use session::{Config, Session, Status};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] smt_core::Error),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid JSON value: {0}")]
    Json(String),
    #[error("{0}")]
    Usage(String),
    #[error("script failed at line {line}: {message}")]
    Script { line: usize, message: String },
}

impl From<smt_core::ParseError> for CliError {
    fn from(e: smt_core::ParseError) -> Self {
        CliError::Core(e.into())
    }
}

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// A check came out false or an axiom failed.
    pub const FALSE: i32 = 1;
    pub const ERROR: i32 = 2;
}
