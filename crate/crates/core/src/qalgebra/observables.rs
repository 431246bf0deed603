//! The Pauli-Lubanski matrix, Casimirs and the commuting set.

use std::fmt;
use std::str::FromStr;

use crate::field::Scalar;
use crate::ncalg::{Gen, Mat, NCPoly, RewriteError, RewriteSystem};

use super::opmatrix::{qdot, AdjKind, OpMatrix};

/// A polynomial in the symbol β with operator coefficients; entry `k`
/// multiplies `β^k`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct BetaPoly(pub Vec<NCPoly>);

impl BetaPoly {
    pub fn constant(p: NCPoly) -> BetaPoly {
        BetaPoly(vec![p]).trimmed()
    }

    /// `c0 + c1 β`.
    pub fn linear(c0: NCPoly, c1: NCPoly) -> BetaPoly {
        BetaPoly(vec![c0, c1]).trimmed()
    }

    fn trimmed(mut self) -> BetaPoly {
        while self.0.last().is_some_and(NCPoly::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Coefficient of `β^k`.
    pub fn coeff(&self, k: usize) -> NCPoly {
        self.0.get(k).cloned().unwrap_or_else(NCPoly::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, o: &BetaPoly) -> BetaPoly {
        let n = self.0.len().max(o.0.len());
        BetaPoly((0..n).map(|k| self.coeff(k).add(&o.coeff(k))).collect()).trimmed()
    }

    pub fn sub(&self, o: &BetaPoly) -> BetaPoly {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> BetaPoly {
        BetaPoly(self.0.iter().map(|p| p.scale(c)).collect()).trimmed()
    }

    pub fn map(&self, f: impl Fn(&NCPoly) -> NCPoly) -> BetaPoly {
        BetaPoly(self.0.iter().map(f).collect()).trimmed()
    }

    pub fn try_map(
        &self,
        f: impl Fn(&NCPoly) -> Result<NCPoly, RewriteError>,
    ) -> Result<BetaPoly, RewriteError> {
        Ok(BetaPoly(self.0.iter().map(f).collect::<Result<_, _>>()?).trimmed())
    }

    pub fn mul_free(&self, o: &BetaPoly) -> BetaPoly {
        if self.is_zero() || o.is_zero() {
            return BetaPoly::default();
        }
        let mut out = vec![NCPoly::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul_free(b));
            }
        }
        BetaPoly(out).trimmed()
    }

    pub fn nf(&self, sys: &RewriteSystem) -> Result<BetaPoly, RewriteError> {
        self.try_map(|p| sys.nf(p))
    }

    /// Specializes β.
    pub fn at(&self, beta: &Scalar) -> NCPoly {
        let mut acc = NCPoly::zero();
        for c in self.0.iter().rev() {
            acc = acc.scale(beta).add(c);
        }
        acc
    }
}

impl fmt::Display for BetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "beta*({c})")?,
                _ => write!(f, "beta^{k}*({c})")?,
            }
        }
        Ok(())
    }
}

/// A 2x2 matrix with β-polynomial entries.
#[derive(Clone, Debug, PartialEq)]
pub struct BetaMatrix(pub [[BetaPoly; 2]; 2]);

impl BetaMatrix {
    pub fn at(&self, i: u8, j: u8) -> &BetaPoly {
        &self.0[i as usize - 1][j as usize - 1]
    }

    pub fn at_beta(&self, beta: &Scalar) -> OpMatrix {
        OpMatrix::from_fn(|i, j| self.at(i, j).at(beta))
    }
}

/// `X = Γ̄⁻¹ P Γ` with entries normal-ordered.
pub fn x_matrix(sys: &RewriteSystem) -> Result<OpMatrix, RewriteError> {
    OpMatrix::gamma_bar_inverse()
        .mul_free(&OpMatrix::of(Mat::P))
        .mul_free(&OpMatrix::of(Mat::G))
        .nf(sys)
}

/// `W = a(β X - P)`.
pub fn w_matrix(sys: &RewriteSystem) -> Result<BetaMatrix, RewriteError> {
    let x = x_matrix(sys)?;
    let p = OpMatrix::of(Mat::P);
    let a = Scalar::a();
    let e = |i: u8, j: u8| BetaPoly::linear(p.at(i, j).scale(&a.neg_ref()), x.at(i, j).scale(&a));
    Ok(BetaMatrix([[e(1, 1), e(1, 2)], [e(2, 1), e(2, 2)]]))
}

/// `W̃`, the adjugate of `W` including the `-a(q^2-1)P̃` correction.
pub fn w_adjugate(w: &BetaMatrix) -> BetaMatrix {
    let qm2 = Scalar::q_pow(-2);
    let pt = OpMatrix::of(Mat::P).adjugate(AdjKind::P);
    let c = Scalar::a().mul_ref(&Scalar::laurent(0, &[-1, 0, 1]));
    let corr = |i: u8, j: u8| BetaPoly::constant(pt.at(i, j).scale(&c));
    BetaMatrix([
        [
            w.at(2, 2).sub(&corr(1, 1)),
            w.at(1, 2).scale(&qm2.neg_ref()).sub(&corr(1, 2)),
        ],
        [
            w.at(2, 1).scale(&qm2.neg_ref()).sub(&corr(2, 1)),
            w.at(1, 1)
                .add(&w.at(2, 2).scale(&Scalar::laurent(0, &[-1, 0, 1])))
                .scale(&qm2)
                .sub(&corr(2, 2)),
        ],
    ])
}

/// `Tr_q(W)` as a polynomial in β.
pub fn trq_w(sys: &RewriteSystem) -> Result<BetaPoly, RewriteError> {
    let w = w_matrix(sys)?;
    Ok(w.at(1, 1).add(&w.at(2, 2).scale(&Scalar::q_pow(2))))
}

/// The summands `Σ_ik c_i W_ik W̃_ki` of `(W, W)_q` before reduction, with
/// `c_1 = -1/(q^2+1)`, `c_2 = -q^2/(q^2+1)`.
pub fn casimir_w_factors(
    sys: &RewriteSystem,
) -> Result<Vec<(Scalar, BetaPoly, BetaPoly)>, RewriteError> {
    let w = w_matrix(sys)?;
    let wt = w_adjugate(&w);
    let d = Scalar::laurent(0, &[1, 0, 1])
        .inv()
        .expect("nonzero")
        .neg_ref();
    let mut out = Vec::new();
    for i in 1..=2u8 {
        let ci = if i == 1 {
            d.clone()
        } else {
            d.mul_ref(&Scalar::q_pow(2))
        };
        for k in 1..=2u8 {
            out.push((ci.clone(), w.at(i, k).clone(), wt.at(k, i).clone()));
        }
    }
    Ok(out)
}

/// `(W, W)_q` as a normal-ordered polynomial in β.
pub fn casimir_w(sys: &RewriteSystem) -> Result<BetaPoly, RewriteError> {
    let mut acc = BetaPoly::default();
    for (c, a, b) in casimir_w_factors(sys)? {
        acc = acc.add(&a.mul_free(&b).nf(sys)?.scale(&c));
    }
    Ok(acc)
}

/// The observables with names.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Observable {
    /// `(P, P)_q`
    C1,
    /// `(W, W)_q`
    C2,
    /// `Tr_q(P)`
    K1,
    /// `Tr_q(W)`
    K2,
    /// `Tr_q(Ω)`
    K3,
    /// `Ω11`
    K4,
    /// `P11 - P22`
    P3,
    /// `Tr_q(Γ + Γ̄)`
    TrqGammaPlus,
    /// `Tr_q(Γ - Γ̄)`
    TrqGammaMinus,
    /// `Tr_q(P Ω)`
    TrqPOmega,
}

impl Observable {
    pub const ALL: [Observable; 10] = [
        Observable::C1,
        Observable::C2,
        Observable::K1,
        Observable::K2,
        Observable::K3,
        Observable::K4,
        Observable::P3,
        Observable::TrqGammaPlus,
        Observable::TrqGammaMinus,
        Observable::TrqPOmega,
    ];

    /// The commuting set.
    pub const COMMUTING: [Observable; 6] = [
        Observable::C1,
        Observable::C2,
        Observable::K1,
        Observable::K2,
        Observable::K3,
        Observable::K4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Observable::C1 => "C1",
            Observable::C2 => "C2",
            Observable::K1 => "TrqP",
            Observable::K2 => "TrqW",
            Observable::K3 => "TrqOmega",
            Observable::K4 => "O11",
            Observable::P3 => "P3",
            Observable::TrqGammaPlus => "TrqGpGb",
            Observable::TrqGammaMinus => "TrqGmGb",
            Observable::TrqPOmega => "TrqPOmega",
        }
    }

    /// Whether the operator depends on β.
    pub fn uses_beta(self) -> bool {
        matches!(self, Observable::C2 | Observable::K2)
    }

    /// The operator as a polynomial in β.
    pub fn beta_poly(self, sys: &RewriteSystem) -> Result<BetaPoly, RewriteError> {
        let l = |m, i, j| NCPoly::letter(Gen::new(m, i, j));
        let p = OpMatrix::of(Mat::P);
        let c = |x: NCPoly| Ok(BetaPoly::constant(x));
        match self {
            Observable::C1 => c(qdot(&p, &p.adjugate(AdjKind::P), sys)?),
            Observable::C2 => casimir_w(sys),
            Observable::K1 => c(p.trq()),
            Observable::K2 => trq_w(sys),
            Observable::K3 => c(OpMatrix::of(Mat::O).trq()),
            Observable::K4 => c(l(Mat::O, 1, 1)),
            Observable::P3 => c(l(Mat::P, 1, 1).sub(&l(Mat::P, 2, 2))),
            Observable::TrqGammaPlus => c(OpMatrix::of(Mat::G).add(&OpMatrix::of(Mat::B)).trq()),
            Observable::TrqGammaMinus => c(OpMatrix::of(Mat::G).sub(&OpMatrix::of(Mat::B)).trq()),
            Observable::TrqPOmega => c(sys.nf(&p.mul_free(&OpMatrix::of(Mat::O)).trq())?),
        }
    }

    /// The operator at `β = q^3`.
    pub fn poly(self, sys: &RewriteSystem) -> Result<NCPoly, RewriteError> {
        Ok(self.beta_poly(sys)?.at(&beta_value()))
    }
}

/// The value of β fixed by the spin-0 rest state.
pub fn beta_value() -> Scalar {
    Scalar::q_pow(3)
}

impl fmt::Display for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Observable {
    type Err = String;

    fn from_str(s: &str) -> Result<Observable, String> {
        Ok(match s {
            "C1" => Observable::C1,
            "C2" => Observable::C2,
            "K1" | "TrqP" => Observable::K1,
            "K2" | "TrqW" => Observable::K2,
            "K3" | "TrqOmega" => Observable::K3,
            "K4" | "O11" => Observable::K4,
            "P3" => Observable::P3,
            "TrqGpGb" => Observable::TrqGammaPlus,
            "TrqGmGb" => Observable::TrqGammaMinus,
            "TrqPOmega" => Observable::TrqPOmega,
            _ => return Err(format!("unknown observable {s}")),
        })
    }
}

/// `Tr_q(W)` in the form `a(β/q^3 Tr_q(PΩ) - Tr_q(P))`.
pub fn trq_w_via_omega(sys: &RewriteSystem) -> Result<BetaPoly, RewriteError> {
    let a = Scalar::a();
    let tpo = Observable::TrqPOmega.beta_poly(sys)?.coeff(0);
    let tp = OpMatrix::of(Mat::P).trq();
    Ok(BetaPoly::linear(
        tp.scale(&a.neg_ref()),
        tpo.scale(&a.mul_ref(&Scalar::q_pow(-3))),
    ))
}

/// `Tr_q(W)/a` at `β = q^3` in the product form
/// `(P11-P22)(Ω11 - t) + P12 Ω21 + q^2 P21 Ω12 + Tr_q(P)(t - 1)` with
/// `t = Tr_q(Ω)/(q^2+1)`.
pub fn trq_w_product_form(sys: &RewriteSystem) -> Result<NCPoly, RewriteError> {
    let l = |m, i, j| NCPoly::letter(Gen::new(m, i, j));
    let t = OpMatrix::of(Mat::O)
        .trq()
        .scale(&Scalar::laurent(0, &[1, 0, 1]).inv().expect("nonzero"));
    let p3 = l(Mat::P, 1, 1).sub(&l(Mat::P, 2, 2));
    let tp = OpMatrix::of(Mat::P).trq();
    let sum = p3
        .mul_free(&l(Mat::O, 1, 1).sub(&t))
        .add(&l(Mat::P, 1, 2).mul_free(&l(Mat::O, 2, 1)))
        .add(
            &l(Mat::P, 2, 1)
                .mul_free(&l(Mat::O, 1, 2))
                .scale(&Scalar::q_pow(2)),
        )
        .add(&tp.mul_free(&t.sub(&NCPoly::one())));
    sys.nf(&sum)
}
