//! Finite-dimensional representations of the Ω subalgebra.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use thiserror::Error;

use crate::field::linalg::Matrix;
use crate::field::{self, Elem, FieldError, Laurent, NumericPoint, Scalar};
use crate::ncalg::{Gen, Mat};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RepError {
    #[error("no exact square root for B at spin {0}/2; build the hermitian gauge numerically with a value of q")]
    NoRadical(u32),
    #[error("m = {twice_m}/2 is outside spin {twice_j}/2")]
    OutOfRange { twice_j: u32, twice_m: i32 },
    #[error("representation check failed: {0}")]
    Check(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gauge {
    /// `A = 1`; all entries lie in the coefficient field.
    Rational,
    /// `A_m = conj(B_(m-1))` with `B` real and positive for `q > 1`.
    Hermitian,
}

impl fmt::Display for Gauge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gauge::Rational => "rational",
            Gauge::Hermitian => "hermitian",
        })
    }
}

impl FromStr for Gauge {
    type Err = String;
    fn from_str(s: &str) -> Result<Gauge, String> {
        match s {
            "rational" => Ok(Gauge::Rational),
            "hermitian" => Ok(Gauge::Hermitian),
            _ => Err(format!("unknown gauge {s}")),
        }
    }
}

/// `k_j` with `j = twice_j / 2`.
pub fn k(twice_j: i32) -> Scalar {
    Scalar::from_elem(field::k(twice_j))
}

/// `(u, v)` with `k_j - k_m = q u v`, `u = q^(j+m+1) - q^-(j+m+1)`,
/// `v = q^(j-m) - q^-(j-m)`.
pub fn factor_gap(twice_j: u32, twice_m: i32) -> (Scalar, Scalar) {
    let j = twice_j as i32;
    let u = field::qdiff((j + twice_m) / 2 + 1);
    let v = field::qdiff((j - twice_m) / 2);
    (Scalar::from_elem(u), Scalar::from_elem(v))
}

/// `|B_(j,m)|^2 = q^(2(m-1)) (k_j - k_m)`.
pub fn b_squared(twice_j: u32, twice_m: i32) -> Elem {
    field::k(twice_j as i32)
        .sub(&field::k(twice_m))
        .shift(twice_m - 2)
}

fn laurent_sqrt(x: &Elem) -> Option<Elem> {
    let l = x.as_laurent()?;
    if let Some(s) = l.sqrt() {
        return Some(Elem::from_laurent(s));
    }
    let (low, p) = l.strip();
    let (quo, rem) = p.div_rem(&Laurent::from_ints(0, &[1, 0, 1]));
    if !rem.is_zero() {
        return None;
    }
    let s = quo.shift(low).sqrt()?;
    Some(Elem::from_laurent(s).mul(&Elem::r()))
}

/// The four Ω matrices at one spin, basis `m = j, j-1, ..., -j`.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaRep {
    pub twice_j: u32,
    pub gauge: Gauge,
    pub o11: Matrix,
    pub o12: Matrix,
    pub o21: Matrix,
    pub o22: Matrix,
}

impl OmegaRep {
    pub fn dim(&self) -> usize {
        self.twice_j as usize + 1
    }

    /// `2m` for each basis vector, in basis order.
    pub fn twice_ms(&self) -> Vec<i32> {
        twice_ms(self.twice_j)
    }

    pub fn index(&self, twice_m: i32) -> Option<usize> {
        index(self.twice_j, twice_m)
    }

    pub fn matrix(&self, g: Gen) -> &Matrix {
        assert_eq!(g.mat(), Mat::O, "not an Ω letter");
        match g.ij() {
            (1, 1) => &self.o11,
            (1, 2) => &self.o12,
            (2, 1) => &self.o21,
            _ => &self.o22,
        }
    }

    /// `Ω12 |m> = A_m |m-1>`.
    pub fn a_coeff(&self, twice_m: i32) -> Scalar {
        match (self.index(twice_m), self.index(twice_m - 2)) {
            (Some(c), Some(r)) => self.o12.get(r, c).clone(),
            _ => Scalar::zero(),
        }
    }

    /// `Ω21 |m> = B_m |m+1>`.
    pub fn b_coeff(&self, twice_m: i32) -> Scalar {
        match (self.index(twice_m), self.index(twice_m + 2)) {
            (Some(c), Some(r)) => self.o21.get(r, c).clone(),
            _ => Scalar::zero(),
        }
    }
}

fn twice_ms(twice_j: u32) -> Vec<i32> {
    let j = twice_j as i32;
    (0..=j).map(|n| j - 2 * n).collect()
}

fn index(twice_j: u32, twice_m: i32) -> Option<usize> {
    let j = twice_j as i32;
    if twice_m.abs() > j || (j - twice_m) % 2 != 0 {
        None
    } else {
        Some(((j - twice_m) / 2) as usize)
    }
}

/// Builds the representation and verifies it before returning.
pub fn build_rep(twice_j: u32, gauge: Gauge) -> Result<OmegaRep, RepError> {
    let n = twice_j as usize + 1;
    let ms = twice_ms(twice_j);
    let kj = field::k(twice_j as i32);
    let mut o11 = Matrix::zeros(n, n);
    let mut o22 = Matrix::zeros(n, n);
    let mut o12 = Matrix::zeros(n, n);
    let mut o21 = Matrix::zeros(n, n);
    let mut b = Vec::with_capacity(n);
    for &m in &ms {
        let bm = if m == twice_j as i32 {
            Elem::zero()
        } else {
            match gauge {
                Gauge::Rational => b_squared(twice_j, m),
                Gauge::Hermitian => {
                    laurent_sqrt(&b_squared(twice_j, m)).ok_or(RepError::NoRadical(twice_j))?
                }
            }
        };
        b.push(bm);
    }
    for (c, &m) in ms.iter().enumerate() {
        let d = Elem::q_pow(m);
        o22.set(c, c, Scalar::from_elem(kj.sub(&d).shift(-2)));
        o11.set(c, c, Scalar::from_elem(d));
        if c > 0 {
            o21.set(c - 1, c, Scalar::from_elem(b[c].clone()));
        }
        if c + 1 < n {
            let a = match gauge {
                Gauge::Rational => Elem::one(),
                Gauge::Hermitian => b[c + 1].conj(),
            };
            o12.set(c + 1, c, Scalar::from_elem(a));
        }
    }
    let rep = OmegaRep {
        twice_j,
        gauge,
        o11,
        o12,
        o21,
        o22,
    };
    let failed: Vec<String> = check_rep(&rep)?
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(name, _)| name)
        .collect();
    if failed.is_empty() {
        Ok(rep)
    } else {
        Err(RepError::Check(failed.join(", ")))
    }
}

/// The Ω relations, the determinant and the q-trace, each as a named exact
/// matrix identity.
pub fn check_rep(rep: &OmegaRep) -> Result<Vec<(String, bool)>, FieldError> {
    let (o11, o12, o21, o22) = (&rep.o11, &rep.o12, &rep.o21, &rep.o22);
    let q2 = Scalar::q_pow(2);
    let c = Scalar::laurent(-4, &[-1, 0, 1]);
    let c2 = Scalar::laurent(-2, &[-1, 0, 1]);
    let id = Matrix::identity(rep.dim());
    let checks = vec![
        (
            "O12*O11 = q^2*O11*O12",
            o12.mul(o11),
            o11.mul(o12).scale(&q2),
        ),
        (
            "O21*O11 = q^-2*O11*O21",
            o21.mul(o11),
            o11.mul(o21).scale(&Scalar::q_pow(-2)),
        ),
        ("O22*O11 = O11*O22", o22.mul(o11), o11.mul(o22)),
        (
            "O22*O12 = O12*O22 + (q^2-1)/q^4*O12*O11",
            o22.mul(o12),
            o12.mul(o22).add(&o12.mul(o11).scale(&c)),
        ),
        (
            "O21*O12 = O12*O21 - (q^2-1)/q^2*(O22-O11)*O11",
            o21.mul(o12),
            o12.mul(o21).sub(&o22.sub(o11).mul(o11).scale(&c2)),
        ),
        (
            "O22*O21 = O21*O22 - (q^2-1)/q^2*O21*O11",
            o22.mul(o21),
            o21.mul(o22).sub(&o21.mul(o11).scale(&c2)),
        ),
        (
            "O11*O22 - q^2*O21*O12 = 1",
            o11.mul(o22).sub(&o21.mul(o12).scale(&q2)),
            id.clone(),
        ),
        (
            "O11 + q^2*O22 = k_j",
            o11.add(&o22.scale(&q2)),
            id.scale(&k(rep.twice_j as i32)),
        ),
    ];
    Ok(checks
        .into_iter()
        .map(|(name, l, r)| (name.to_string(), l == r))
        .collect())
}

/// A representation evaluated at a numeric `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericRep {
    pub twice_j: u32,
    pub q: f64,
    /// `O11, O12, O21, O22`.
    pub mats: [Vec<Vec<Complex64>>; 4],
}

fn eval_matrix(m: &Matrix, p: &NumericPoint) -> Result<Vec<Vec<Complex64>>, FieldError> {
    (0..m.rows)
        .map(|i| (0..m.cols).map(|j| m.get(i, j).eval(p)).collect())
        .collect()
}

/// Evaluates an exact representation at `q0`.
pub fn evaluate(rep: &OmegaRep, q0: f64) -> Result<NumericRep, FieldError> {
    let p = NumericPoint::new(q0, 0.0, 0.0);
    Ok(NumericRep {
        twice_j: rep.twice_j,
        q: q0,
        mats: [
            eval_matrix(&rep.o11, &p)?,
            eval_matrix(&rep.o12, &p)?,
            eval_matrix(&rep.o21, &p)?,
            eval_matrix(&rep.o22, &p)?,
        ],
    })
}

/// The hermitian gauge at any spin, with square roots taken numerically.
pub fn numeric_hermitian(twice_j: u32, q0: f64) -> Result<NumericRep, FieldError> {
    let rational = build_rep(twice_j, Gauge::Rational).expect("rational gauge always exists");
    let mut n = evaluate(&rational, q0)?;
    let dim = twice_j as usize + 1;
    for c in 1..dim {
        let b2 = n.mats[2][c - 1][c];
        let b = Complex64::new(b2.re.max(0.0).sqrt(), 0.0);
        n.mats[2][c - 1][c] = b;
        n.mats[1][c][c - 1] = b.conj();
    }
    Ok(n)
}

/// Largest deviation from `Ω12 = Ω21^†` and from real diagonal `Ω11`, `Ω22`.
pub fn hermiticity_defect(n: &NumericRep) -> f64 {
    let dim = n.mats[0].len();
    let mut worst = 0.0f64;
    for i in 0..dim {
        for j in 0..dim {
            let d = n.mats[1][i][j] - n.mats[2][j][i].conj();
            worst = worst.max(d.norm());
            for m in [&n.mats[0], &n.mats[3]] {
                let x = m[i][j];
                worst = worst.max(if i == j { x.im.abs() } else { x.norm() });
            }
        }
    }
    worst
}
