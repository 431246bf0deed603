//! Exact coefficient arithmetic and numeric evaluation.

pub mod elem;
pub mod gauss;
pub mod laurent;
pub mod linalg;
pub mod parse;
pub mod scalar;

pub use elem::Elem;
pub use gauss::Gauss;
pub use laurent::Laurent;
pub use scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator {denominator} vanishes at q = {q}")]
    Pole { denominator: String, q: f64 },
    #[error("{numerator} is not divisible by {denominator} as a polynomial in M and a")]
    NotPolynomial {
        numerator: String,
        denominator: String,
    },
}

/// A numeric specialization of `q`, `a` and `M`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericPoint {
    pub q: f64,
    pub a: f64,
    pub mass: f64,
}

impl NumericPoint {
    pub fn new(q: f64, a: f64, mass: f64) -> Self {
        assert!(q > 0.0, "q must be positive");
        NumericPoint { q, a, mass }
    }

    /// `q = exp(hbar * lambda)`, `a = 1 / (2 lambda)`.
    pub fn from_deformation(hbar: f64, lambda: f64, mass: f64) -> Self {
        NumericPoint::new((hbar * lambda).exp(), 1.0 / (2.0 * lambda), mass)
    }
}

/// `k_j = q (q^(2j+1) + q^-(2j+1))` for `twice_j = 2j`.
pub fn k(twice_j: i32) -> Elem {
    Elem::from_laurent(Laurent::from_terms([
        (twice_j + 2, Gauss::one()),
        (-twice_j, Gauss::one()),
    ]))
}

/// `q^n - q^-n`.
pub fn qdiff(n: i32) -> Elem {
    Elem::from_laurent(Laurent::from_terms([
        (n, Gauss::one()),
        (-n, Gauss::from_int(-1)),
    ]))
}
