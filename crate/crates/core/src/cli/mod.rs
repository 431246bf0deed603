//! Command-line front end.

pub mod commands;
pub mod expr;
pub mod report;
pub mod verify;

use thiserror::Error;

use crate::field::FieldError;
use crate::ncalg::RewriteError;
use crate::qalgebra::checks::CheckError;
use crate::rep::RepError;
use crate::states::StateError;

pub use commands::run;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    State(#[from] StateError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    /// 2 for malformed input, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}
