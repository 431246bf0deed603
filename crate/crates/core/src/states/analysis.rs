//! Fixing β, the energy spectrum and the undeformed limits.

use crate::field::{k, NumericPoint, Scalar};
use crate::ncalg::{Gen, Mat, RewriteSystem};
use crate::qalgebra::{BetaPoly, Observable};
use crate::rep::Gauge;

use super::module::{Module, ModuleState};
use super::procedures::{pi_states, procedure1};
use super::StateError;

/// Eigenvalue of `op` on `v`, or an error naming the state.
fn eigen(
    module: &Module,
    name: &str,
    op: &crate::ncalg::NCPoly,
    label: &str,
    v: &ModuleState,
) -> Result<Scalar, StateError> {
    module
        .eigencheck(name, op, label, v)?
        .eigenvalue
        .ok_or_else(|| StateError::NotEigenstate {
            observable: name.to_string(),
            state: label.to_string(),
        })
}

/// Eigenvalues on `v` of the β-coefficients of `p`.
fn beta_coefficients(
    module: &Module,
    name: &str,
    p: &BetaPoly,
    v: &ModuleState,
) -> Result<Vec<Scalar>, StateError> {
    (0..=p.degree().unwrap_or(0))
        .map(|i| eigen(module, &format!("{name}[beta^{i}]"), &p.coeff(i), "rest", v))
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct BetaSolution {
    pub beta: Scalar,
    /// Rest eigenvalue of `Tr_q(W)` as a polynomial in β, lowest first.
    pub trq_w: Vec<Scalar>,
    /// Rest eigenvalue of `(W,W)_q` as a polynomial in β, lowest first.
    pub casimir: Vec<Scalar>,
    /// The second root of the `(W,W)_q` condition, if it is quadratic.
    pub other_casimir_root: Option<Scalar>,
}

/// Solves `Tr_q(W)|M,0,0,0> = 0` and `(W,W)_q|M,0,0,0> = 0` for β.
pub fn solve_beta(sys: &RewriteSystem) -> Result<BetaSolution, StateError> {
    let module = Module::new(sys, 0, Gauge::Rational)?;
    let rest = module.highest();
    let w = Observable::K2.beta_poly(sys)?;
    let c2 = Observable::C2.beta_poly(sys)?;
    let tw = beta_coefficients(&module, "TrqW", &w, &rest)?;
    let cc = beta_coefficients(&module, "C2", &c2, &rest)?;
    if tw.len() != 2 || tw[1].is_zero() {
        return Err(StateError::BadArgument(
            "Tr_q(W) rest condition is not linear in beta".into(),
        ));
    }
    let beta = tw[0].neg_ref().div_ref(&tw[1])?;
    let c_at = cc
        .iter()
        .rev()
        .fold(Scalar::zero(), |acc, c| acc.mul_ref(&beta).add_ref(c));
    if !c_at.is_zero() {
        return Err(StateError::BadArgument(format!(
            "(W,W)_q rest eigenvalue does not vanish at beta = {beta}: {c_at}"
        )));
    }
    let other_casimir_root = if cc.len() == 3 && !cc[2].is_zero() {
        Some(cc[0].div_ref(&cc[2].mul_ref(&beta))?)
    } else {
        None
    };
    Ok(BetaSolution {
        beta,
        trq_w: tw,
        casimir: cc,
        other_casimir_root,
    })
}

/// `E_l = M k(l/2) / k(0)`.
pub fn energy(l: u32) -> Scalar {
    let ratio = k(l as i32).div(&k(0)).expect("k(0) is nonzero");
    Scalar::mass().mul_ref(&Scalar::from_elem(ratio))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumRow {
    pub l: u32,
    pub energy: Scalar,
    /// `-Tr_q(P)/k(0)` on `Γ21^l |M,0,0,0>`.
    pub procedure1: Scalar,
    /// `-Tr_q(P)/k(0)` on `π_l`.
    pub procedure2: Scalar,
}

impl SpectrumRow {
    pub fn agrees(&self) -> bool {
        self.energy == self.procedure1 && self.energy == self.procedure2
    }

    pub fn eval(&self, p: &NumericPoint) -> Option<f64> {
        self.energy.eval(p).ok().map(|z| z.re)
    }
}

/// Energies for `l = 0..=l_max` from the closed form and from the
/// eigenvalues of procedure-1 and π states on the spin-0 rest state.
pub fn spectrum(sys: &RewriteSystem, l_max: u32) -> Result<Vec<SpectrumRow>, StateError> {
    let module = Module::new(sys, 0, Gauge::Rational)?;
    let trq_p = Observable::K1.poly(sys)?;
    let k0 = Scalar::from_elem(k(0));
    let to_energy = |x: Scalar| x.neg_ref().div_ref(&k0);
    let pis = pi_states(&module, l_max as usize, Mat::G)?;
    let g21 = Gen::new(Mat::G, 2, 1);
    let mut rows = Vec::new();
    for l in 0..=l_max {
        let v = procedure1(&module, &vec![g21; l as usize])?;
        let p1 = eigen(&module, "TrqP", &trq_p, &format!("G21^{l}"), &v)?;
        let p2 = eigen(&module, "TrqP", &trq_p, &format!("pi{l}"), &pis[l as usize])?;
        rows.push(SpectrumRow {
            l,
            energy: energy(l),
            procedure1: to_energy(p1)?,
            procedure2: to_energy(p2)?,
        });
    }
    Ok(rows)
}

/// A limit expression tabulated over a λ grid.
#[derive(Clone, Debug, PartialEq)]
pub struct LimitRow {
    pub quantity: &'static str,
    /// `2j`, `2s` or `l`, depending on the quantity.
    pub index: u32,
    pub lambda: f64,
    pub value: f64,
    pub target: f64,
    pub error: f64,
    /// `log(e_prev/e) / log(λ_prev/λ)` against the previous grid point.
    pub order: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitSpec {
    pub lambdas: Vec<f64>,
    pub hbar: f64,
    pub l_max: u32,
    pub twice_j_max: u32,
    pub twice_s: Vec<u32>,
}

impl Default for LimitSpec {
    fn default() -> Self {
        LimitSpec {
            lambdas: vec![1e-2, 1e-3, 1e-4],
            hbar: 1.0,
            l_max: 3,
            twice_j_max: 4,
            twice_s: vec![1, 2],
        }
    }
}

fn k_num(twice_j: u32, q: f64) -> f64 {
    let j = twice_j as f64 / 2.0;
    q.powf(2.0 * j + 2.0) + q.powf(-2.0 * j)
}

/// Tabulates the `λ -> 0` limits with `M = 1`:
/// - `E_l/M -> 1`,
/// - `a²(k_j - k_0) -> ħ² j(j+1)`,
/// - `Tr_q(W)` rest eigenvalue over `-2Mħ²s(s+1)λ` `-> 1`,
/// - `(W,W)_q` rest eigenvalue, computed as `M²a²(k_s - k_0)`, over `M²ħ²s(s+1)` `-> 1`.
pub fn limit_report(spec: &LimitSpec) -> Vec<LimitRow> {
    let mut rows: Vec<LimitRow> = Vec::new();
    let mut push = |quantity: &'static str, index: u32, f: &dyn Fn(f64, f64, f64) -> (f64, f64)| {
        let mut prev: Option<(f64, f64)> = None;
        for &lambda in &spec.lambdas {
            let p = NumericPoint::from_deformation(spec.hbar, lambda, 1.0);
            let (value, target) = f(p.q, p.a, lambda);
            let error = (value - target).abs();
            let order = prev.and_then(|(l0, e0)| {
                (e0 > 0.0 && error > 0.0).then(|| (e0 / error).ln() / (l0 / lambda).ln())
            });
            rows.push(LimitRow {
                quantity,
                index,
                lambda,
                value,
                target,
                error,
                order,
            });
            prev = Some((lambda, error));
        }
    };
    let h = spec.hbar;
    for l in 0..=spec.l_max {
        push("energy", l, &|q, _, _| (k_num(l, q) / k_num(0, q), 1.0));
    }
    for tj in 1..=spec.twice_j_max {
        let j = tj as f64 / 2.0;
        push("casimir_su2", tj, &|q, a, _| {
            (a * a * (k_num(tj, q) - k_num(0, q)), h * h * j * (j + 1.0))
        });
    }
    for &ts in &spec.twice_s {
        let s = ts as f64 / 2.0;
        push("trq_w_rest", ts, &|q, a, lambda| {
            let w = -a * (k_num(ts, q) - k_num(0, q));
            (w / (-2.0 * h * h * s * (s + 1.0) * lambda), 1.0)
        });
        push("casimir_w_rest", ts, &|q, a, _| {
            let c = a * a * (k_num(ts, q) - k_num(0, q));
            (c / (h * h * s * (s + 1.0)), 1.0)
        });
    }
    rows
}

/// Exact Tr_q(W) and (W,W)_q eigenvalues on `|M,s,s,s>` at β = q³.
pub fn rest_invariants(sys: &RewriteSystem, twice_s: u32) -> Result<(Scalar, Scalar), StateError> {
    let module = Module::new(sys, twice_s, Gauge::Rational)?;
    let v = module.highest();
    let w = eigen(&module, "TrqW", &Observable::K2.poly(sys)?, "rest", &v)?;
    let c = eigen(&module, "C2", &Observable::C2.poly(sys)?, "rest", &v)?;
    Ok((w, c))
}

/// `-Ma(k_s - k_0)`.
pub fn trq_w_rest_formula(twice_s: u32) -> Scalar {
    let d = Scalar::from_elem(k(twice_s as i32).sub(&k(0)));
    Scalar::mass().mul_ref(&Scalar::a()).neg_ref().mul_ref(&d)
}

/// The computed `(W,W)_q` rest value `M²a²(k_s - k_0)`.
pub fn casimir_w_rest_formula(twice_s: u32) -> Scalar {
    let d = Scalar::from_elem(k(twice_s as i32).sub(&k(0)));
    let ma = Scalar::mass().mul_ref(&Scalar::a());
    ma.mul_ref(&ma).mul_ref(&d)
}

/// The printed `(W,W)_q` rest value `-M²a²k_0(k_s - k_0)`.
pub fn casimir_w_rest_printed(twice_s: u32) -> Scalar {
    casimir_w_rest_formula(twice_s)
        .mul_ref(&Scalar::from_elem(k(0)))
        .neg_ref()
}
