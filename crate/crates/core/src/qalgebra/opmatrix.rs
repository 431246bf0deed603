//! 2x2 matrices with operator entries.

use crate::field::Scalar;
use crate::ncalg::star::{gamma_bar_inverse, gamma_inverse};
use crate::ncalg::{Gen, Mat, NCPoly, RewriteError, RewriteSystem};

use super::standard::omega_inverse;

#[derive(Clone, Debug, PartialEq)]
pub struct OpMatrix(pub [[NCPoly; 2]; 2]);

/// Which printed adjugate formula to apply.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum AdjKind {
    P,
    /// The P formula with the correction `-a(q^2-1)P̃`.
    W,
}

impl OpMatrix {
    /// Entries from a function of 1-based indices.
    pub fn from_fn(f: impl Fn(u8, u8) -> NCPoly) -> OpMatrix {
        OpMatrix([[f(1, 1), f(1, 2)], [f(2, 1), f(2, 2)]])
    }

    /// The matrix of generator letters of `m`.
    pub fn of(m: Mat) -> OpMatrix {
        Self::from_fn(|i, j| NCPoly::letter(Gen::new(m, i, j)))
    }

    pub fn identity() -> OpMatrix {
        Self::from_fn(|i, j| {
            if i == j {
                NCPoly::one()
            } else {
                NCPoly::zero()
            }
        })
    }

    pub fn gamma_inverse() -> OpMatrix {
        Self::from_fn(gamma_inverse)
    }

    pub fn gamma_bar_inverse() -> OpMatrix {
        Self::from_fn(gamma_bar_inverse)
    }

    pub fn omega_inverse() -> OpMatrix {
        Self::from_fn(omega_inverse)
    }

    /// Entry at 1-based `(i, j)`.
    pub fn at(&self, i: u8, j: u8) -> &NCPoly {
        &self.0[i as usize - 1][j as usize - 1]
    }

    pub fn map(&self, f: impl Fn(&NCPoly) -> NCPoly) -> OpMatrix {
        Self::from_fn(|i, j| f(self.at(i, j)))
    }

    pub fn add(&self, o: &OpMatrix) -> OpMatrix {
        Self::from_fn(|i, j| self.at(i, j).add(o.at(i, j)))
    }

    pub fn sub(&self, o: &OpMatrix) -> OpMatrix {
        Self::from_fn(|i, j| self.at(i, j).sub(o.at(i, j)))
    }

    pub fn scale(&self, c: &Scalar) -> OpMatrix {
        self.map(|p| p.scale(c))
    }

    /// Product keeping letter order, without reduction.
    pub fn mul_free(&self, o: &OpMatrix) -> OpMatrix {
        Self::from_fn(|i, j| {
            self.at(i, 1)
                .mul_free(o.at(1, j))
                .add(&self.at(i, 2).mul_free(o.at(2, j)))
        })
    }

    pub fn nf(&self, sys: &RewriteSystem) -> Result<OpMatrix, RewriteError> {
        let mut out = self.clone();
        for row in out.0.iter_mut() {
            for e in row.iter_mut() {
                *e = sys.nf(e)?;
            }
        }
        Ok(out)
    }

    pub fn mul(&self, o: &OpMatrix, sys: &RewriteSystem) -> Result<OpMatrix, RewriteError> {
        self.mul_free(o).nf(sys)
    }

    /// `A11 + q^2 A22`.
    pub fn trq(&self) -> NCPoly {
        self.at(1, 1).add(&self.at(2, 2).scale(&Scalar::q_pow(2)))
    }

    pub fn adjugate(&self, kind: AdjKind) -> OpMatrix {
        let qm2 = Scalar::q_pow(-2);
        let base = OpMatrix([
            [self.at(2, 2).clone(), self.at(1, 2).scale(&qm2.neg_ref())],
            [
                self.at(2, 1).scale(&qm2.neg_ref()),
                self.at(1, 1)
                    .add(&self.at(2, 2).scale(&Scalar::laurent(0, &[-1, 0, 1])))
                    .scale(&qm2),
            ],
        ]);
        match kind {
            AdjKind::P => base,
            AdjKind::W => {
                let c = Scalar::a().mul_ref(&Scalar::laurent(0, &[-1, 0, 1]));
                base.sub(&OpMatrix::of(Mat::P).adjugate(AdjKind::P).scale(&c))
            }
        }
    }

    /// Components `(P0, P1, P2, P3)` of `-P0 + Pk σk`.
    pub fn pauli_decompose(&self) -> [NCPoly; 4] {
        let half = Scalar::from_ratio(1, 2);
        let (m11, m12, m21, m22) = (self.at(1, 1), self.at(1, 2), self.at(2, 1), self.at(2, 2));
        [
            m11.add(m22).scale(&half.neg_ref()),
            m12.add(m21).scale(&half),
            m21.sub(m12).scale(&Scalar::i().neg_ref().mul_ref(&half)),
            m11.sub(m22).scale(&half),
        ]
    }

    /// Inverse of [`OpMatrix::pauli_decompose`].
    pub fn pauli_compose(c: &[NCPoly; 4]) -> OpMatrix {
        let i = Scalar::i();
        OpMatrix([
            [c[3].sub(&c[0]), c[1].sub(&c[2].scale(&i))],
            [c[1].add(&c[2].scale(&i)), c[0].add(&c[3]).neg()],
        ])
    }
}

/// `(A, B)_q = -Tr_q(A B̃) / (q^2 + 1)` for an already adjugated `B̃`.
pub fn qdot(a: &OpMatrix, b_adj: &OpMatrix, sys: &RewriteSystem) -> Result<NCPoly, RewriteError> {
    let c = Scalar::laurent(0, &[1, 0, 1])
        .inv()
        .expect("nonzero")
        .neg_ref();
    Ok(a.mul(b_adj, sys)?.trq().scale(&c))
}
