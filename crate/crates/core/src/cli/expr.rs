//! Operator expressions and the state mini-language.

use std::fmt;
use std::str::FromStr;

use crate::field::parse::{parse_with, scalar_symbol};
use crate::ncalg::{Gen, Mat, NCPoly, RewriteSystem};
use crate::qalgebra::Observable;
use crate::rep::Gauge;
use crate::states::module::half;
use crate::states::procedures::{
    pi_states, procedure1, procedure2, procedure3, procedure4, spin1_s5, spin_half_s,
};
use crate::states::{Module, ModuleState, StateError};

use super::CliError;

/// Parses an operator expression over letters, scalar symbols and named
/// observables (at β = q³).
pub fn parse_expr(src: &str, sys: &RewriteSystem) -> Result<NCPoly, CliError> {
    parse_with(src, &|name: &str| {
        if let Some(g) = Gen::parse(name) {
            return Some(NCPoly::letter(g));
        }
        if let Some(s) = scalar_symbol(name) {
            return Some(NCPoly::constant(s));
        }
        Observable::from_str(name).ok()?.poly(sys).ok()
    })
    .map_err(|e| CliError::Parse(e.to_string()))
}

/// Parses `0`, `1/2`, `1`, `3/2`, ... into twice the value.
pub fn parse_half(s: &str) -> Result<i32, CliError> {
    let s = s.trim();
    let bad = || CliError::Parse(format!("expected an integer or half-integer, got '{s}'"));
    if let Some(n) = s.strip_suffix("/2") {
        n.trim().parse::<i32>().map_err(|_| bad())
    } else {
        s.parse::<i32>().map(|n| 2 * n).map_err(|_| bad())
    }
}

fn parse_z(s: &str) -> Result<Mat, CliError> {
    match s.trim() {
        "G" => Ok(Mat::G),
        "Gb" | "B" => Ok(Mat::B),
        other => Err(CliError::Parse(format!("expected G or Gb, got '{other}'"))),
    }
}

fn z_name(z: Mat) -> &'static str {
    if z == Mat::B {
        "Gb"
    } else {
        "G"
    }
}

/// A state description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StateSpec {
    /// `rest(M,s)` or `rest(M,s,m)`.
    Rest { twice_s: u32, twice_m: i32 },
    /// `pi(n)` or `pi(n,Gb)`.
    Pi { n: usize, z: Mat },
    /// `S(1..4)`, `S(5)`, `S(5,Gb)`.
    S { i: u8, z: Mat },
    /// `proc1(s,"G21 Gb21")`.
    Proc1 { twice_s: u32, pattern: Vec<Gen> },
    /// `proc2(s,G)`, `proc3(s,Gb)`, `proc4(s,G)`.
    Proc { which: u8, twice_s: u32, z: Mat },
}

fn split_call(src: &str) -> Result<(&str, Vec<&str>), CliError> {
    let src = src.trim();
    let open = src
        .find('(')
        .ok_or_else(|| CliError::Parse(format!("expected name(args), got '{src}'")))?;
    let inner = src[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| CliError::Parse(format!("missing ')' in '{src}'")))?;
    let args = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner
            .split(',')
            .map(|a| a.trim().trim_matches('"'))
            .collect()
    };
    Ok((src[..open].trim(), args))
}

fn spin_arg(s: &str) -> Result<u32, CliError> {
    let t = parse_half(s)?;
    u32::try_from(t).map_err(|_| CliError::Parse(format!("spin must be nonnegative, got '{s}'")))
}

impl FromStr for StateSpec {
    type Err = CliError;

    fn from_str(src: &str) -> Result<StateSpec, CliError> {
        let (name, mut args) = split_call(src)?;
        let arity = |n: std::ops::RangeInclusive<usize>, args: &[&str]| {
            if n.contains(&args.len()) {
                Ok(())
            } else {
                Err(CliError::Parse(format!(
                    "wrong number of arguments in '{src}'"
                )))
            }
        };
        match name {
            "rest" => {
                if args.first() == Some(&"M") {
                    args.remove(0);
                }
                arity(1..=2, &args)?;
                let twice_s = spin_arg(args[0])?;
                let twice_m = match args.get(1) {
                    Some(m) => parse_half(m)?,
                    None => twice_s as i32,
                };
                Ok(StateSpec::Rest { twice_s, twice_m })
            }
            "pi" => {
                arity(1..=2, &args)?;
                let n = args[0]
                    .parse()
                    .map_err(|_| CliError::Parse(format!("bad index in '{src}'")))?;
                let z = args
                    .get(1)
                    .map(|s| parse_z(s))
                    .transpose()?
                    .unwrap_or(Mat::G);
                Ok(StateSpec::Pi { n, z })
            }
            "S" => {
                arity(1..=2, &args)?;
                let i: u8 = args[0]
                    .parse()
                    .ok()
                    .filter(|i| (1..=5).contains(i))
                    .ok_or_else(|| CliError::Parse(format!("S index must be 1..5 in '{src}'")))?;
                let z = match args.get(1) {
                    Some(s) if i == 5 => parse_z(s)?,
                    Some(_) => return Err(CliError::Parse("only S(5) takes G or Gb".into())),
                    None => Mat::G,
                };
                Ok(StateSpec::S { i, z })
            }
            "proc1" => {
                arity(1..=2, &args)?;
                let twice_s = spin_arg(args[0])?;
                let pattern = args
                    .get(1)
                    .map(|p| {
                        p.split_whitespace()
                            .map(|l| {
                                Gen::parse(l)
                                    .ok_or_else(|| CliError::Parse(format!("unknown letter '{l}'")))
                            })
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .transpose()?
                    .unwrap_or_default();
                Ok(StateSpec::Proc1 { twice_s, pattern })
            }
            "proc2" | "proc3" | "proc4" => {
                arity(2..=2, &args)?;
                Ok(StateSpec::Proc {
                    which: name.as_bytes()[4] - b'0',
                    twice_s: spin_arg(args[0])?,
                    z: parse_z(args[1])?,
                })
            }
            other => Err(CliError::Parse(format!(
                "unknown state constructor '{other}'"
            ))),
        }
    }
}

impl fmt::Display for StateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateSpec::Rest { twice_s, twice_m } => {
                write!(f, "rest(M,{},{})", half(*twice_s as i32), half(*twice_m))
            }
            StateSpec::Pi { n, z } => write!(f, "pi({n},{})", z_name(*z)),
            StateSpec::S { i: 5, z } => write!(f, "S(5,{})", z_name(*z)),
            StateSpec::S { i, .. } => write!(f, "S({i})"),
            StateSpec::Proc1 { twice_s, pattern } => {
                let p: Vec<String> = pattern.iter().map(|g| g.name()).collect();
                write!(f, "proc1({},\"{}\")", half(*twice_s as i32), p.join(" "))
            }
            StateSpec::Proc { which, twice_s, z } => {
                write!(f, "proc{which}({},{})", half(*twice_s as i32), z_name(*z))
            }
        }
    }
}

impl StateSpec {
    pub fn twice_s(&self) -> u32 {
        match self {
            StateSpec::Rest { twice_s, .. }
            | StateSpec::Proc1 { twice_s, .. }
            | StateSpec::Proc { twice_s, .. } => *twice_s,
            StateSpec::Pi { .. } => 0,
            StateSpec::S { i: 5, .. } => 2,
            StateSpec::S { .. } => 1,
        }
    }

    /// The S states need the hermitian gauge; everything else defaults to
    /// the rational one.
    pub fn default_gauge(&self) -> Gauge {
        match self {
            StateSpec::S { .. } => Gauge::Hermitian,
            _ => Gauge::Rational,
        }
    }

    pub fn build<'a>(
        &self,
        sys: &'a RewriteSystem,
        gauge: Option<Gauge>,
    ) -> Result<(Module<'a>, ModuleState), StateError> {
        let module = Module::new(sys, self.twice_s(), gauge.unwrap_or(self.default_gauge()))?;
        let v = match self {
            StateSpec::Rest { twice_m, .. } => module.rest(*twice_m)?,
            StateSpec::Pi { n, z } => pi_states(&module, *n, *z)?.pop().expect("n+1 states"),
            StateSpec::S { i: 5, z } => spin1_s5(&module, *z)?,
            StateSpec::S { i, .. } => spin_half_s(&module, *i)?,
            StateSpec::Proc1 { pattern, .. } => procedure1(&module, pattern)?,
            StateSpec::Proc { which: 2, z, .. } => procedure2(&module, *z)?,
            StateSpec::Proc { which: 3, z, .. } => procedure3(&module, *z)?,
            StateSpec::Proc { z, .. } => procedure4(&module, *z)?,
        };
        Ok((module, v))
    }
}
