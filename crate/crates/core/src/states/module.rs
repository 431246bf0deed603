//! The one-particle module induced from a rest multiplet.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::field::{FieldError, Scalar};
use crate::ncalg::poly::coeff_prefix;
use crate::ncalg::{Gen, Mat, NCPoly, RewriteError, RewriteSystem, Word};
use crate::qalgebra::standard::omega_inverse;
use crate::rep::{build_rep, Gauge, OmegaRep, RepError};

use super::StateError;

/// Formats `2m` as `m`.
pub fn half(twice: i32) -> String {
    if twice % 2 == 0 {
        (twice / 2).to_string()
    } else {
        format!("{twice}/2")
    }
}

/// A finite combination of basis vectors `w |M, s, m>` with `w` a normal
/// word in Γ letters.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct ModuleState {
    pub twice_s: u32,
    terms: BTreeMap<(Word, i32), Scalar>,
}

impl ModuleState {
    pub fn zero(twice_s: u32) -> Self {
        ModuleState {
            twice_s,
            terms: BTreeMap::new(),
        }
    }

    /// `|M, s, m>`.
    pub fn rest(twice_s: u32, twice_m: i32) -> Self {
        Self::basis(twice_s, Word::empty(), twice_m)
    }

    pub fn basis(twice_s: u32, w: Word, twice_m: i32) -> Self {
        let mut s = Self::zero(twice_s);
        s.add_term(w, twice_m, &Scalar::one());
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, i32), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word, twice_m: i32) -> Scalar {
        self.terms
            .get(&(w.clone(), twice_m))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, w: Word, twice_m: i32, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (w, twice_m);
        match self.terms.get_mut(&key) {
            Some(v) => {
                let s = v.add_ref(c);
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, o: &ModuleState, c: &Scalar) {
        for ((w, m), v) in &o.terms {
            self.add_term(w.clone(), *m, &v.mul_ref(c));
        }
    }

    pub fn add(&self, o: &ModuleState) -> ModuleState {
        let mut s = self.clone();
        s.add_scaled(o, &Scalar::one());
        s
    }

    pub fn sub(&self, o: &ModuleState) -> ModuleState {
        let mut s = self.clone();
        s.add_scaled(o, &Scalar::from_int(-1));
        s
    }

    pub fn scale(&self, c: &Scalar) -> ModuleState {
        let mut s = Self::zero(self.twice_s);
        s.add_scaled(self, c);
        s
    }

    /// Highest Γ-degree among the basis words.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|(w, _)| w.len()).max().unwrap_or(0)
    }
}

impl fmt::Display for ModuleState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, ((w, m), c)) in self.terms.iter().rev().enumerate() {
            let ket = format!("|{},{}>", half(self.twice_s as i32), half(*m));
            let t = if w.is_empty() {
                format!("{}{ket}", coeff_prefix(c).trim_end_matches('*'))
            } else {
                format!("{}{w}{ket}", coeff_prefix(c))
            };
            match (n, t.strip_prefix('-')) {
                (0, _) => f.write_str(&t)?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {t}")?,
            }
        }
        Ok(())
    }
}

type Action = Arc<Vec<(Word, i32, Scalar)>>;

/// Evaluates operators on states built over one rest multiplet.
pub struct Module<'a> {
    sys: &'a RewriteSystem,
    pub rep: OmegaRep,
    cache: RwLock<HashMap<(Gen, Word, i32), Action>>,
}

impl<'a> Module<'a> {
    pub fn new(sys: &'a RewriteSystem, twice_s: u32, gauge: Gauge) -> Result<Self, RepError> {
        Ok(Module {
            sys,
            rep: build_rep(twice_s, gauge)?,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn twice_s(&self) -> u32 {
        self.rep.twice_j
    }

    pub fn system(&self) -> &RewriteSystem {
        self.sys
    }

    /// `|M, s, s>`.
    pub fn highest(&self) -> ModuleState {
        ModuleState::rest(self.twice_s(), self.twice_s() as i32)
    }

    /// `|M, s, m>`, checking the range of `m`.
    pub fn rest(&self, twice_m: i32) -> Result<ModuleState, StateError> {
        self.rep
            .index(twice_m)
            .ok_or(StateError::Rep(RepError::OutOfRange {
                twice_j: self.twice_s(),
                twice_m,
            }))?;
        Ok(ModuleState::rest(self.twice_s(), twice_m))
    }

    /// Ω letters acting on `|m>`, rightmost first.
    fn omega_word(&self, letters: &[Gen], twice_m: i32) -> Vec<(i32, Scalar)> {
        let mut vec = vec![(twice_m, Scalar::one())];
        let ms = self.rep.twice_ms();
        for &g in letters.iter().rev() {
            let mat = self.rep.matrix(g);
            let mut next: BTreeMap<i32, Scalar> = BTreeMap::new();
            for (m, c) in &vec {
                let col = self.rep.index(*m).expect("index in range");
                for (row, &m2) in ms.iter().enumerate() {
                    let e = mat.get(row, col);
                    if e.is_zero() {
                        continue;
                    }
                    let v = next.entry(m2).or_insert_with(Scalar::zero);
                    *v = v.add_ref(&e.mul_ref(c));
                }
            }
            vec = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        vec
    }

    /// Value of a P-word on the rest multiplet.
    fn p_word(letters: &[Gen]) -> Option<Scalar> {
        let mut v = Scalar::one();
        for g in letters {
            match g.ij() {
                (1, 1) | (2, 2) => v = v.mul_ref(&Scalar::mass().neg_ref()),
                _ => return None,
            }
        }
        Some(v)
    }

    fn act_letter(&self, g: Gen, w: &Word, twice_m: i32) -> Result<Action, StateError> {
        let key = (g, w.clone(), twice_m);
        if let Some(hit) = self.cache.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let out: Vec<(Word, i32, Scalar)> = if g.mat() == Mat::B {
            let (i, j) = g.ij();
            let base = ModuleState::basis(self.twice_s(), w.clone(), twice_m);
            let mut acc = ModuleState::zero(self.twice_s());
            for k in 1..=2 {
                let gk = self.act_poly(&NCPoly::letter(Gen::new(Mat::G, k, j)), &base)?;
                acc = acc.add(&self.act_poly(&omega_inverse(i, k), &gk)?);
            }
            acc.terms.into_iter().map(|((w, m), c)| (w, m, c)).collect()
        } else {
            let p = self.sys.mul(&NCPoly::letter(g), &NCPoly::word(w.clone()))?;
            let mut acc = ModuleState::zero(self.twice_s());
            for (u, c) in p.terms() {
                let ls = u.letters();
                let a = ls.iter().take_while(|x| x.mat() == Mat::G).count();
                let b = a + ls[a..].iter().take_while(|x| x.mat() == Mat::O).count();
                debug_assert!(ls[b..].iter().all(|x| x.mat() == Mat::P));
                let Some(pv) = Self::p_word(&ls[b..]) else {
                    continue;
                };
                let cp = c.mul_ref(&pv);
                let prefix = Word::from_slice(&ls[..a]);
                for (m2, e) in self.omega_word(&ls[a..b], twice_m) {
                    acc.add_term(prefix.clone(), m2, &cp.mul_ref(&e));
                }
            }
            acc.terms.into_iter().map(|((w, m), c)| (w, m, c)).collect()
        };
        let out = Arc::new(out);
        self.cache.write().unwrap().insert(key, out.clone());
        Ok(out)
    }

    fn act_word(&self, u: &Word, v: &ModuleState) -> Result<ModuleState, StateError> {
        let mut cur = v.clone();
        for &g in u.letters().iter().rev() {
            let mut next = ModuleState::zero(v.twice_s);
            for ((w, m), c) in &cur.terms {
                for (w2, m2, e) in self.act_letter(g, w, *m)?.iter() {
                    next.add_term(w2.clone(), *m2, &e.mul_ref(c));
                }
            }
            cur = next;
            if cur.is_zero() {
                break;
            }
        }
        Ok(cur)
    }

    fn act_poly(&self, op: &NCPoly, v: &ModuleState) -> Result<ModuleState, StateError> {
        let mut out = ModuleState::zero(v.twice_s);
        for (u, c) in op.terms() {
            out.add_scaled(&self.act_word(u, v)?, c);
        }
        Ok(out)
    }

    /// `op v`.
    pub fn apply(&self, op: &NCPoly, v: &ModuleState) -> Result<ModuleState, StateError> {
        if v.twice_s != self.twice_s() {
            return Err(StateError::SpinMismatch {
                state: v.twice_s,
                module: self.twice_s(),
            });
        }
        self.act_poly(op, v)
    }

    /// `op v` for a product of factors, rightmost applied first.
    pub fn apply_product(
        &self,
        factors: &[&NCPoly],
        v: &ModuleState,
    ) -> Result<ModuleState, StateError> {
        let mut cur = v.clone();
        for f in factors.iter().rev() {
            cur = self.apply(f, &cur)?;
        }
        Ok(cur)
    }

    pub fn cache_size(&self) -> usize {
        self.cache.read().unwrap().len()
    }
}

/// The result of testing a state against an operator.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenReport {
    pub observable: String,
    pub state: String,
    /// `None` when the state is not an eigenstate.
    pub eigenvalue: Option<Scalar>,
    /// `op v - μ v` for the trial value `μ`; zero for eigenstates.
    pub residual: ModuleState,
}

impl EigenReport {
    pub fn is_eigenstate(&self) -> bool {
        self.eigenvalue.is_some()
    }
}

/// Solves `w = μ v` from the first component of `v` and verifies it on all
/// components.
pub fn eigenvalue_of(
    v: &ModuleState,
    w: &ModuleState,
) -> Result<(Option<Scalar>, ModuleState), FieldError> {
    let ((key_w, key_m), c) = v.terms().next().expect("nonzero state");
    let mu = match w.coeff(key_w, *key_m).div_ref(c) {
        Ok(mu) => mu,
        Err(FieldError::NotPolynomial { .. }) => return Ok((None, w.clone())),
        Err(e) => return Err(e),
    };
    let residual = w.sub(&v.scale(&mu));
    if residual.is_zero() {
        Ok((Some(mu), residual))
    } else {
        Ok((None, residual))
    }
}

impl Module<'_> {
    pub fn eigencheck(
        &self,
        name: &str,
        op: &NCPoly,
        label: &str,
        v: &ModuleState,
    ) -> Result<EigenReport, StateError> {
        if v.is_zero() {
            return Err(StateError::ZeroState(label.to_string()));
        }
        let w = self.apply(op, v)?;
        let (eigenvalue, residual) = eigenvalue_of(v, &w)?;
        Ok(EigenReport {
            observable: name.to_string(),
            state: label.to_string(),
            eigenvalue,
            residual,
        })
    }
}

impl From<RewriteError> for StateError {
    fn from(e: RewriteError) -> Self {
        StateError::Rewrite(e)
    }
}
