//! Words, noncommutative polynomials and quadratic rewrite systems.

pub mod confluence;
pub mod generator;
pub mod orient;
pub mod poly;
pub mod star;
pub mod system;
pub mod word;

pub use generator::{Gen, Mat};
pub use poly::NCPoly;
pub use system::{RewriteError, RewriteSystem, Rule};
pub use word::Word;

use crate::field::parse::{parse_with, scalar_symbol, ParseError};

/// Parses an expression over generator letters and scalar symbols; no
/// reduction is applied.
pub fn parse_poly(src: &str) -> Result<NCPoly, ParseError> {
    parse_with(src, &|name: &str| {
        Gen::parse(name)
            .map(NCPoly::letter)
            .or_else(|| scalar_symbol(name).map(NCPoly::constant))
    })
}
