//! The 4x4 R-matrix on the basis `11, 12, 21, 22`, without its scalar
//! prefactor.

use crate::field::linalg::Matrix;
use crate::field::{NumericPoint, Scalar};

/// The swap operator on two copies of the 2-dimensional space.
pub fn swap() -> Matrix {
    let mut s = Matrix::zeros(4, 4);
    for i in 0..2 {
        for k in 0..2 {
            s.set(2 * i + k, 2 * k + i, Scalar::one());
        }
    }
    s
}

/// `R12`.
pub fn r12() -> Matrix {
    let q = Scalar::q();
    let z = Scalar::zero;
    let o = Scalar::one;
    Matrix::from_rows(vec![
        vec![q.clone(), z(), z(), z()],
        vec![z(), o(), z(), z()],
        vec![z(), Scalar::laurent(-1, &[-1, 0, 1]), o(), z()],
        vec![z(), z(), z(), q],
    ])
}

/// `R21 = S R12 S` with `S` the swap.
pub fn r21() -> Matrix {
    let s = swap();
    s.mul(&r12()).mul(&s)
}

pub fn r12_inv() -> Matrix {
    r12().inverse().unwrap().expect("R is invertible")
}

pub fn r21_inv() -> Matrix {
    r21().inverse().unwrap().expect("R is invertible")
}

/// Both sides of the Yang-Baxter equation `R12 R13 R23 = R23 R13 R12` for
/// the given 4x4 matrix, as 8x8 matrices.
pub fn ybe_sides(r: &Matrix) -> (Matrix, Matrix) {
    let id2 = Matrix::identity(2);
    let a12 = r.kron(&id2);
    let a23 = id2.kron(r);
    let p23 = id2.kron(&swap());
    let a13 = p23.mul(&a12).mul(&p23);
    let lhs = a12.mul(&a13).mul(&a23);
    let rhs = a23.mul(&a13).mul(&a12);
    (lhs, rhs)
}

/// Exact check of the Yang-Baxter equation for `R12`.
pub fn ybe_check() -> bool {
    let (l, r) = ybe_sides(&r12());
    l == r
}

/// Largest entry deviation of `m` from the identity at `p`.
pub fn distance_from_identity(m: &Matrix, p: &NumericPoint) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..m.rows {
        for j in 0..m.cols {
            let v = m
                .get(i, j)
                .eval(p)
                .expect("entries are Laurent polynomials");
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((v.re - target).abs().max(v.im.abs()));
        }
    }
    worst
}
