//! Eigenstate constructions over the rest multiplet.

use crate::field::Scalar;
use crate::ncalg::{Gen, Mat, NCPoly};
use crate::qalgebra::OpMatrix;
use crate::rep::{k, Gauge};

use super::module::{Module, ModuleState};
use super::StateError;

fn letter(m: Mat, i: u8, j: u8) -> NCPoly {
    NCPoly::letter(Gen::new(m, i, j))
}

fn check_z(z: Mat) -> Result<(), StateError> {
    match z {
        Mat::G | Mat::B => Ok(()),
        _ => Err(StateError::BadArgument(format!(
            "Z must be G or Gb, got {}",
            z.prefix()
        ))),
    }
}

/// A monomial in `Γ21`, `Γ̄21` applied to `|M, s, s>`; the pattern is read
/// left to right as an operator product.
pub fn procedure1(module: &Module, pattern: &[Gen]) -> Result<ModuleState, StateError> {
    for g in pattern {
        if g.ij() != (2, 1) || !matches!(g.mat(), Mat::G | Mat::B) {
            return Err(StateError::BadArgument(format!(
                "pattern letters must be G21 or Gb21, got {}",
                g.name()
            )));
        }
    }
    let mut v = module.highest();
    for &g in pattern.iter().rev() {
        v = module.apply(&NCPoly::letter(g), &v)?;
    }
    Ok(v)
}

/// Printed eigenvalues of a procedure-1 state: `Ω11`, `Tr_q(Ω)`,
/// `Tr_q(P)`, `Tr_q(W)` and `P11 - P22`.
pub fn procedure1_expected(twice_s: u32, l: u32) -> Vec<(&'static str, Scalar)> {
    let (s, l) = (twice_s as i32, l as i32);
    let m = Scalar::mass();
    let am = Scalar::a().mul_ref(&m);
    vec![
        ("O11", Scalar::q_pow(2 * l + s)),
        ("TrqOmega", k(2 * l + s)),
        ("TrqP", m.neg_ref().mul_ref(&k(l))),
        ("TrqW", am.neg_ref().mul_ref(&k(s + l).sub_ref(&k(l)))),
        (
            "P3",
            m.mul_ref(&Scalar::q_pow(l).sub_ref(&Scalar::q_pow(-l))),
        ),
    ]
}

/// `Tr_q(Z) |M, s, s>`.
pub fn procedure2(module: &Module, z: Mat) -> Result<ModuleState, StateError> {
    check_z(z)?;
    module.apply(&OpMatrix::of(z).trq(), &module.highest())
}

/// `(Z11 - Z22)|j,j> + q^2(q^2+1) A_(j,j) / (q^(2j) - q^(-2j)) Z21 |j,j-1>`.
pub fn procedure3(module: &Module, z: Mat) -> Result<ModuleState, StateError> {
    check_z(z)?;
    let j = module.twice_s() as i32;
    if j < 1 {
        return Err(StateError::SpinTooLow {
            procedure: 3,
            min_twice: 1,
        });
    }
    let a = module.rep.a_coeff(j);
    let c = Scalar::laurent(2, &[1, 0, 1])
        .mul_ref(&a)
        .div_ref(&Scalar::q_pow(j).sub_ref(&Scalar::q_pow(-j)))?;
    let first = module.apply(&letter(z, 1, 1).sub(&letter(z, 2, 2)), &module.highest())?;
    let second = module.apply(&letter(z, 2, 1), &module.rest(j - 2)?)?;
    Ok(first.add(&second.scale(&c)))
}

/// `(Z11 - Z22)|j,j-1> + q^3 A_(j,j-1) / (q^(2j-1) - q^-(2j-1)) Z21 |j,j-2>
/// - q^2 B_(j,j-1) / ((q^2-1) q^(2j)) Z12 |j,j>`.
pub fn procedure4(module: &Module, z: Mat) -> Result<ModuleState, StateError> {
    check_z(z)?;
    let j = module.twice_s() as i32;
    if j < 2 {
        return Err(StateError::SpinTooLow {
            procedure: 4,
            min_twice: 2,
        });
    }
    let c1 = Scalar::q_pow(3)
        .mul_ref(&module.rep.a_coeff(j - 2))
        .div_ref(&Scalar::q_pow(j - 1).sub_ref(&Scalar::q_pow(1 - j)))?;
    let c2 = Scalar::q_pow(2)
        .mul_ref(&module.rep.b_coeff(j - 2))
        .div_ref(&Scalar::laurent(0, &[-1, 0, 1]).mul_ref(&Scalar::q_pow(j)))?;
    let t1 = module.apply(&letter(z, 1, 1).sub(&letter(z, 2, 2)), &module.rest(j - 2)?)?;
    let t2 = module.apply(&letter(z, 2, 1), &module.rest(j - 4)?)?;
    let t3 = module.apply(&letter(z, 1, 2), &module.highest())?;
    Ok(t1.add(&t2.scale(&c1)).sub(&t3.scale(&c2)))
}

/// Coefficients of `π_n` as a polynomial in `T = Tr_q(Z)`, lowest power
/// first, from `π_n = T π_(n-1) - q^2 π_(n-2)`.
pub fn pi_polynomial(n: usize) -> Vec<Scalar> {
    let mut prev: Vec<Scalar> = vec![Scalar::one()];
    if n == 0 {
        return prev;
    }
    let mut cur: Vec<Scalar> = vec![Scalar::zero(), Scalar::one()];
    let q2 = Scalar::q_pow(2);
    for _ in 1..n {
        let mut next = vec![Scalar::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] = next[i + 1].add_ref(c);
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] = next[i].sub_ref(&c.mul_ref(&q2));
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// `π_0 .. π_n` for `Z = Γ` or `Γ̄` on a spin-0 module, by the recursion.
pub fn pi_states(module: &Module, n: usize, z: Mat) -> Result<Vec<ModuleState>, StateError> {
    check_z(z)?;
    if module.twice_s() != 0 {
        return Err(StateError::BadArgument("π states live on spin 0".into()));
    }
    let t = OpMatrix::of(z).trq();
    let q2 = Scalar::q_pow(2);
    let mut out = vec![module.highest()];
    if n >= 1 {
        out.push(module.apply(&t, &out[0])?);
    }
    for i in 2..=n {
        let next = module.apply(&t, &out[i - 1])?.sub(&out[i - 2].scale(&q2));
        out.push(next);
    }
    Ok(out)
}

fn require_hermitian(module: &Module, twice_s: u32) -> Result<(), StateError> {
    if module.rep.gauge != Gauge::Hermitian {
        return Err(StateError::Gauge);
    }
    if module.twice_s() != twice_s {
        return Err(StateError::SpinMismatch {
            state: twice_s,
            module: module.twice_s(),
        });
    }
    Ok(())
}

/// Mixing coefficient of the `|1/2,-1/2>` part of `S_i`.
pub fn spin_half_mixing(i: u8) -> Scalar {
    match i {
        1 => Scalar::q_pow(3),
        2 => Scalar::q_pow(5).neg_ref(),
        3 => Scalar::q(),
        _ => Scalar::q_pow(-1).neg_ref(),
    }
}

/// Where the `Z22` term of a spin-1/2 state acts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinHalfReading {
    /// `Z22` on `|1/2,1/2>`; these are joint eigenstates.
    Corrected,
    /// `Z22` on `|1/2,-1/2>` as typeset; not an eigenstate of `Ω11`.
    Printed,
}

/// The spin-1/2 states `S_1 .. S_4`; `S_1`, `S_2` use Γ and `S_3`, `S_4` use Γ̄.
pub fn spin_half_s(module: &Module, i: u8) -> Result<ModuleState, StateError> {
    spin_half_s_with(module, i, SpinHalfReading::Corrected)
}

pub fn spin_half_s_with(
    module: &Module,
    i: u8,
    reading: SpinHalfReading,
) -> Result<ModuleState, StateError> {
    if !(1..=4).contains(&i) {
        return Err(StateError::BadArgument(format!(
            "S{i} is not a spin-1/2 state"
        )));
    }
    require_hermitian(module, 1)?;
    let z = if i <= 2 { Mat::G } else { Mat::B };
    spin_half_combination(module, z, &spin_half_mixing(i), reading)
}

/// `Tr_q(Z)|1/2,1/2> + c (Z21|1/2,-1/2> - Z22|1/2,±1/2>/q)`.
pub fn spin_half_combination(
    module: &Module,
    z: Mat,
    c: &Scalar,
    reading: SpinHalfReading,
) -> Result<ModuleState, StateError> {
    check_z(z)?;
    let up = module.rest(1)?;
    let down = module.rest(-1)?;
    let first = module.apply(&OpMatrix::of(z).trq(), &up)?;
    let z21 = module.apply(&letter(z, 2, 1), &down)?;
    let z22 = match reading {
        SpinHalfReading::Corrected => module.apply(&letter(z, 2, 2), &up)?,
        SpinHalfReading::Printed => module.apply(&letter(z, 2, 2), &down)?,
    };
    let mix = z21.sub(&z22.scale(&Scalar::q_pow(-1)));
    Ok(first.add(&mix.scale(c)))
}

/// `-(Z11 - Z22)|1,0> + r/q^2 (Z12|1,1> - q^3 Z21|1,-1>)`.
pub fn spin1_s5(module: &Module, z: Mat) -> Result<ModuleState, StateError> {
    check_z(z)?;
    require_hermitian(module, 2)?;
    let t1 = module.apply(&letter(z, 1, 1).sub(&letter(z, 2, 2)), &module.rest(0)?)?;
    let t2 = module.apply(&letter(z, 1, 2), &module.rest(2)?)?;
    let t3 = module.apply(&letter(z, 2, 1), &module.rest(-2)?)?;
    let c = Scalar::r().mul_ref(&Scalar::q_pow(-2));
    Ok(t1
        .neg_state()
        .add(&t2.sub(&t3.scale(&Scalar::q_pow(3))).scale(&c)))
}

impl ModuleState {
    fn neg_state(&self) -> ModuleState {
        self.scale(&Scalar::from_int(-1))
    }
}
