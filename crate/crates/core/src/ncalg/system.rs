use std::cell::Cell;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use thiserror::Error;

use super::generator::Gen;
use super::poly::NCPoly;
use super::word::Word;

/// Rewrite steps allowed per normal-form computation.
pub const STEP_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RewriteError {
    #[error("rewrite budget exhausted while reducing {word}")]
    Budget { word: String },
    #[error("rule {lhs} -> {rhs} is not decreasing")]
    NotDecreasing { lhs: String, rhs: String },
    #[error("duplicate rule for {0}")]
    Duplicate(String),
}

/// A two-letter rule `lhs -> rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub lhs: [Gen; 2],
    pub rhs: NCPoly,
}

impl Rule {
    pub fn lhs_word(&self) -> Word {
        Word::from_slice(&self.lhs)
    }

    /// `lhs - rhs`, the relation the rule encodes.
    pub fn relation(&self) -> NCPoly {
        NCPoly::word(self.lhs_word()).sub(&self.rhs)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs_word(), self.rhs)
    }
}

type Cache = RwLock<HashMap<(Gen, Word), Arc<NCPoly>>>;

/// Oriented quadratic rules with memoized normal forms.
pub struct RewriteSystem {
    table: Vec<Option<NCPoly>>,
    cache: Cache,
}

impl Clone for RewriteSystem {
    fn clone(&self) -> Self {
        RewriteSystem {
            table: self.table.clone(),
            cache: RwLock::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RewriteSystem")
            .field("rules", &self.len())
            .finish()
    }
}

fn slot(a: Gen, b: Gen) -> usize {
    a.index() * Gen::COUNT + b.index()
}

impl RewriteSystem {
    pub fn new() -> Self {
        RewriteSystem {
            table: vec![None; Gen::COUNT * Gen::COUNT],
            cache: RwLock::new(HashMap::new()),
        }
    }

    /// Builds a system, checking that every rule strictly decreases in the
    /// word order.
    pub fn from_rules<I: IntoIterator<Item = Rule>>(rules: I) -> Result<Self, RewriteError> {
        let mut s = Self::new();
        for r in rules {
            s.insert(r)?;
        }
        Ok(s)
    }

    pub fn insert(&mut self, r: Rule) -> Result<(), RewriteError> {
        let lhs = r.lhs_word();
        if let Some((w, _)) = r.rhs.leading() {
            if *w >= lhs {
                return Err(RewriteError::NotDecreasing {
                    lhs: lhs.to_string(),
                    rhs: r.rhs.to_string(),
                });
            }
        }
        let k = slot(r.lhs[0], r.lhs[1]);
        if self.table[k].is_some() {
            return Err(RewriteError::Duplicate(lhs.to_string()));
        }
        self.table[k] = Some(r.rhs);
        self.cache.write().unwrap().clear();
        Ok(())
    }

    pub fn rule(&self, a: Gen, b: Gen) -> Option<&NCPoly> {
        self.table[slot(a, b)].as_ref()
    }

    pub fn len(&self) -> usize {
        self.table.iter().filter(|r| r.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Rules in ascending order of their left-hand sides.
    pub fn rules(&self) -> Vec<Rule> {
        let mut v: Vec<Rule> = Gen::all()
            .flat_map(|a| Gen::all().map(move |b| (a, b)))
            .filter_map(|(a, b)| {
                self.rule(a, b).map(|rhs| Rule {
                    lhs: [a, b],
                    rhs: rhs.clone(),
                })
            })
            .collect();
        v.sort_by_key(|x| x.lhs_word());
        v
    }

    /// One rule per line, `LHS -> RHS`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for r in self.rules() {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        w.letters()
            .windows(2)
            .all(|p| self.rule(p[0], p[1]).is_none())
    }

    pub fn cache_size(&self) -> usize {
        self.cache.read().unwrap().len()
    }

    /// Normal form of `x * w` for a normal word `w`.
    fn left_mul(&self, x: Gen, w: &Word, steps: &Cell<u64>) -> Result<Arc<NCPoly>, RewriteError> {
        let first = match w.letters().first() {
            None => return Ok(Arc::new(NCPoly::word(Word::letter(x)))),
            Some(&f) => f,
        };
        let Some(rhs) = self.rule(x, first) else {
            return Ok(Arc::new(NCPoly::word(w.prepend(x))));
        };
        let key = (x, w.clone());
        if let Some(hit) = self.cache.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        steps.set(steps.get() + 1);
        if steps.get() > STEP_BUDGET {
            return Err(RewriteError::Budget {
                word: w.prepend(x).to_string(),
            });
        }
        let rest = w.tail();
        let mut out = NCPoly::zero();
        for (t, c) in rhs.terms() {
            let part = self.mul_word_normal(t, &rest, steps)?;
            out.add_scaled(&part, c);
        }
        let out = Arc::new(out);
        self.cache.write().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// Normal form of `u * w` for an arbitrary word `u` and a normal word `w`.
    fn mul_word_normal(
        &self,
        u: &Word,
        w: &Word,
        steps: &Cell<u64>,
    ) -> Result<NCPoly, RewriteError> {
        let mut acc = NCPoly::word(w.clone());
        for &g in u.letters().iter().rev() {
            let mut next = NCPoly::zero();
            for (v, c) in acc.terms() {
                let p = self.left_mul(g, v, steps)?;
                next.add_scaled(&p, c);
            }
            acc = next;
        }
        Ok(acc)
    }

    /// Normal form of a single word.
    pub fn nf_word(&self, w: &Word) -> Result<NCPoly, RewriteError> {
        let steps = Cell::new(0);
        self.mul_word_normal(w, &Word::empty(), &steps)
    }

    pub fn nf(&self, p: &NCPoly) -> Result<NCPoly, RewriteError> {
        let steps = Cell::new(0);
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let part = self.mul_word_normal(w, &Word::empty(), &steps)?;
            out.add_scaled(&part, c);
        }
        Ok(out)
    }

    /// Normal form of `p * r`; `r` must already be normal.
    pub fn mul(&self, p: &NCPoly, r: &NCPoly) -> Result<NCPoly, RewriteError> {
        let steps = Cell::new(0);
        let mut out = NCPoly::zero();
        for (w2, c2) in r.terms() {
            for (w1, c1) in p.terms() {
                let part = self.mul_word_normal(w1, w2, &steps)?;
                out.add_scaled(&part, &c1.mul_ref(c2));
            }
        }
        Ok(out)
    }

    /// Normal form of `p * r` for arbitrary inputs.
    pub fn mul_any(&self, p: &NCPoly, r: &NCPoly) -> Result<NCPoly, RewriteError> {
        let r = self.nf(r)?;
        self.mul(p, &r)
    }

    pub fn commutator(&self, p: &NCPoly, r: &NCPoly) -> Result<NCPoly, RewriteError> {
        let pr = self.mul_any(p, r)?;
        let rp = self.mul_any(r, p)?;
        Ok(pr.sub(&rp))
    }

    /// Normal form of a product of several factors, evaluated right to left.
    pub fn product(&self, factors: &[&NCPoly]) -> Result<NCPoly, RewriteError> {
        let mut acc = NCPoly::one();
        for f in factors.iter().rev() {
            acc = self.mul(f, &acc)?;
        }
        Ok(acc)
    }
}

impl Default for RewriteSystem {
    fn default() -> Self {
        Self::new()
    }
}
