//! Exact normal ordering, representations and eigenstate checks for a
//! two-parameter deformed Poincare algebra.

pub mod cli;
pub mod field;
pub mod ncalg;
pub mod qalgebra;
pub mod rep;
pub mod states;
