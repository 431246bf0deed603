//! The conjugation anti-involution.

use super::generator::{Gen, Mat};
use super::poly::NCPoly;
use super::system::{RewriteError, RewriteSystem};
use crate::field::Scalar;

fn l(m: Mat, i: u8, j: u8) -> NCPoly {
    NCPoly::letter(Gen::new(m, i, j))
}

/// Entry `(i, j)` of the inverse of Γ̄.
pub fn gamma_bar_inverse(i: u8, j: u8) -> NCPoly {
    let qm2 = Scalar::q_pow(-2);
    match (i, j) {
        (1, 1) => l(Mat::B, 2, 2),
        (1, 2) => l(Mat::B, 1, 2).scale(&qm2.neg_ref()),
        (2, 1) => l(Mat::B, 2, 1).scale(&qm2.neg_ref()),
        (2, 2) => l(Mat::B, 1, 1)
            .add(&l(Mat::B, 2, 2).scale(&Scalar::laurent(0, &[-1, 0, 1])))
            .scale(&qm2),
        _ => panic!("index out of range"),
    }
}

/// Entry `(i, j)` of the inverse of Γ.
pub fn gamma_inverse(i: u8, j: u8) -> NCPoly {
    let q2 = Scalar::q_pow(2);
    match (i, j) {
        (1, 1) => l(Mat::G, 2, 2)
            .scale(&q2)
            .sub(&l(Mat::G, 1, 1).scale(&Scalar::laurent(0, &[-1, 0, 1]))),
        (1, 2) => l(Mat::G, 1, 2).scale(&q2.neg_ref()),
        (2, 1) => l(Mat::G, 2, 1).scale(&q2.neg_ref()),
        (2, 2) => l(Mat::G, 1, 1),
        _ => panic!("index out of range"),
    }
}

/// Image of a single letter.
pub fn star_letter(g: Gen) -> NCPoly {
    let (i, j) = g.ij();
    match g.mat() {
        Mat::P => l(Mat::P, j, i),
        Mat::O => l(Mat::O, j, i),
        Mat::G => gamma_bar_inverse(j, i),
        Mat::B => gamma_inverse(j, i),
    }
}

/// Reverses words, conjugates coefficients and maps letters; the result is
/// normal-formed.
pub fn star(p: &NCPoly, sys: &RewriteSystem) -> Result<NCPoly, RewriteError> {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let mut acc = NCPoly::constant(c.conj());
        for &g in w.letters() {
            acc = star_letter(g).mul_free(&acc);
        }
        out.add_scaled(&acc, &Scalar::one());
    }
    sys.nf(&out)
}
