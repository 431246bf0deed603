//! The deformed Poincare algebra: R-matrix, exchange relations, operator
//! matrices and observables.

pub mod checks;
pub mod observables;
pub mod opmatrix;
pub mod rmatrix;
pub mod rtt;
pub mod standard;
pub mod tables;

pub use observables::{BetaPoly, Observable};
pub use opmatrix::OpMatrix;
pub use rtt::Tag;
pub use standard::{base, BuiltSystem};
