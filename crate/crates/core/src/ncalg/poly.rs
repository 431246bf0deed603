use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::generator::Gen;
use super::word::Word;
use crate::field::parse::Operand;
use crate::field::Scalar;

/// A finite linear combination of words. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn letter(g: Gen) -> Self {
        Self::term(Word::letter(g), Scalar::one())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, Scalar::one())
    }

    pub fn term(w: Word, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(it: I) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in it {
            p.add_term(w, &c);
        }
        p
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates in ascending word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The scalar part when no word of positive length occurs.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x = x.add_ref(c);
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    /// `self += c * o`.
    pub fn add_scaled(&mut self, o: &NCPoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &o.terms {
            if c.is_one() {
                self.add_term(w.clone(), x);
            } else {
                self.add_term(w.clone(), &x.mul_ref(c));
            }
        }
    }

    pub fn add(&self, o: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(o, &Scalar::one());
        out
    }

    pub fn sub(&self, o: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(o, &Scalar::from_int(-1));
        out
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x.mul_ref(c)))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    /// Product in the free algebra (plain concatenation).
    pub fn mul_free(&self, o: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                out.add_term(w1.concat(w2), &c1.mul_ref(c2));
            }
        }
        out
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> NCPoly {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Algebra homomorphism of the free algebra sending each letter to
    /// `image(letter)`; no reduction is performed.
    pub fn substitute(&self, image: &dyn Fn(Gen) -> NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            let mut acc = NCPoly::constant(c.clone());
            for &g in w.letters() {
                acc = acc.mul_free(&image(g));
            }
            out.add_scaled(&acc, &Scalar::one());
        }
        out
    }

    /// Letters that occur anywhere.
    pub fn letters(&self) -> Vec<Gen> {
        let mut v: Vec<Gen> = self
            .terms
            .keys()
            .flat_map(|w| w.letters().iter().copied())
            .collect();
        v.sort();
        v.dedup();
        v
    }
}

pub(crate) fn coeff_prefix(c: &Scalar) -> String {
    let s = c.to_string();
    let inner = s.strip_prefix('-').unwrap_or(&s);
    let needs = inner.contains(['+', '-', '/']);
    if c.is_one() {
        String::new()
    } else if s == "-1" {
        "-".to_string()
    } else if needs {
        format!("({})*", s)
    } else {
        format!("{}*", s)
    }
}

impl fmt::Display for NCPoly {
    /// Terms in descending word order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (w, c) in self.terms.iter().rev() {
            let t = if w.is_empty() {
                let s = c.to_string();
                let inner = s.strip_prefix('-').unwrap_or(&s);
                if out.is_empty() || !inner.contains(['+', '-', '/']) {
                    s
                } else {
                    format!("({})", s)
                }
            } else {
                format!("{}{}", coeff_prefix(c), w)
            };
            if !out.is_empty() && !t.starts_with('-') {
                out.push('+');
            }
            out.push_str(&t);
        }
        f.write_str(&out)
    }
}

impl Operand for NCPoly {
    fn from_integer(n: BigInt) -> Self {
        NCPoly::constant(Scalar::from_integer(n))
    }
    fn add(self, o: Self) -> Self {
        NCPoly::add(&self, &o)
    }
    fn sub(self, o: Self) -> Self {
        NCPoly::sub(&self, &o)
    }
    fn mul(self, o: Self) -> Self {
        self.mul_free(&o)
    }
    fn neg(self) -> Self {
        NCPoly::neg(&self)
    }
    fn div(self, o: Self) -> Result<Self, String> {
        let s = o
            .as_scalar()
            .ok_or_else(|| "division by a non-scalar expression".to_string())?;
        let inv = s.inv().map_err(|e| e.to_string())?;
        Ok(self.scale(&inv))
    }
    fn pow(self, e: i64) -> Result<Self, String> {
        if e < 0 {
            let s = self
                .as_scalar()
                .ok_or_else(|| "negative power of a non-scalar expression".to_string())?;
            return Ok(NCPoly::constant(s.pow(e).map_err(|e| e.to_string())?));
        }
        let mut acc = NCPoly::one();
        for _ in 0..e {
            acc = acc.mul_free(&self);
        }
        Ok(acc)
    }
}

impl From<Gen> for NCPoly {
    fn from(g: Gen) -> Self {
        NCPoly::letter(g)
    }
}

impl From<Scalar> for NCPoly {
    fn from(s: Scalar) -> Self {
        NCPoly::constant(s)
    }
}
