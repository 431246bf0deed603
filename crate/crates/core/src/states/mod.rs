//! States over rest multiplets, eigenchecks and spectra.

pub mod analysis;
pub mod module;
pub mod procedures;
pub mod spectral;

use thiserror::Error;

use crate::field::FieldError;
use crate::ncalg::RewriteError;
use crate::rep::RepError;

pub use module::{eigenvalue_of, EigenReport, Module, ModuleState};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StateError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Rewrite(RewriteError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("state has spin {state}/2 but the module has spin {module}/2")]
    SpinMismatch { state: u32, module: u32 },
    #[error("state {0} is zero")]
    ZeroState(String),
    #[error("procedure {procedure} needs 2s >= {min_twice}")]
    SpinTooLow { procedure: u8, min_twice: u32 },
    #[error("state requires the hermitian gauge")]
    Gauge,
    #[error("{0}")]
    BadArgument(String),
    #[error("{state} is not an eigenstate of {observable}")]
    NotEigenstate { observable: String, state: String },
    #[error("image of basis state {column} leaves the span: {component}")]
    SpanEscaped { column: usize, component: String },
}
