//! Polynomials in the commuting symbols `M` and `a` with [`Elem`] coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::elem::Elem;
use super::gauss::Gauss;
use super::laurent::Laurent;
use super::{FieldError, NumericPoint};

/// Exponents of `(M, a)`.
pub type Mono = (u16, u16);

/// A value of the coefficient field. Terms are kept sorted by monomial with
/// no zero coefficients, which makes equality structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct Scalar {
    terms: Vec<(Mono, Elem)>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_elem(Elem::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_elem(Elem::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_elem(Elem::from_gauss(Gauss::from_ratio(n, d)))
    }

    pub fn from_elem(e: Elem) -> Self {
        Self::term((0, 0), e)
    }

    pub fn from_laurent(l: Laurent) -> Self {
        Self::from_elem(Elem::from_laurent(l))
    }

    pub fn term(m: Mono, e: Elem) -> Self {
        if e.is_zero() {
            Self::zero()
        } else {
            Scalar {
                terms: vec![(m, e)],
            }
        }
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(k: i32) -> Self {
        Self::from_elem(Elem::q_pow(k))
    }

    pub fn i() -> Self {
        Self::from_elem(Elem::i())
    }

    pub fn r() -> Self {
        Self::from_elem(Elem::r())
    }

    /// The mass symbol `M`.
    pub fn mass() -> Self {
        Self::term((1, 0), Elem::one())
    }

    /// The symbol `a`.
    pub fn a() -> Self {
        Self::term((0, 1), Elem::one())
    }

    /// Integer-coefficient Laurent polynomial in `q`, listed from `low` up.
    pub fn laurent(low: i32, coeffs: &[i64]) -> Self {
        Self::from_laurent(Laurent::from_ints(low, coeffs))
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// True when no `M` or `a` occurs.
    pub fn is_elem(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == (0, 0))
    }

    pub fn as_elem(&self) -> Option<Elem> {
        match self.terms.as_slice() {
            [] => Some(Elem::zero()),
            [((0, 0), e)] => Some(e.clone()),
            _ => None,
        }
    }

    pub fn terms(&self) -> &[(Mono, Elem)] {
        &self.terms
    }

    pub fn coeff(&self, m: Mono) -> Elem {
        match self.terms.binary_search_by(|t| t.0.cmp(&m)) {
            Ok(k) => self.terms[k].1.clone(),
            Err(_) => Elem::zero(),
        }
    }

    pub fn has_radical(&self) -> bool {
        self.terms.iter().any(|t| t.1.has_radical())
    }

    fn from_sorted(mut terms: Vec<(Mono, Elem)>) -> Self {
        terms.retain(|t| !t.1.is_zero());
        Scalar { terms }
    }

    /// Builds from unsorted terms; repeated monomials are added.
    pub fn from_terms<I: IntoIterator<Item = (Mono, Elem)>>(it: I) -> Self {
        let mut v: Vec<(Mono, Elem)> = it.into_iter().collect();
        v.sort_by_key(|x| x.0);
        let mut out: Vec<(Mono, Elem)> = Vec::with_capacity(v.len());
        for (m, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = last.1.add(&e),
                _ => out.push((m, e)),
            }
        }
        Self::from_sorted(out)
    }

    pub fn add_ref(&self, o: &Scalar) -> Scalar {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (ma, ea) = &self.terms[i];
            let (mb, eb) = &o.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Less => {
                    out.push((*ma, ea.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*mb, eb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = ea.add(eb);
                    if !s.is_zero() {
                        out.push((*ma, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(o.terms[j..].iter().cloned());
        Scalar { terms: out }
    }

    pub fn neg_ref(&self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(m, e)| (*m, e.neg())).collect(),
        }
    }

    pub fn sub_ref(&self, o: &Scalar) -> Scalar {
        self.add_ref(&o.neg_ref())
    }

    pub fn mul_ref(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.terms.len() == 1 && o.terms.len() == 1 {
            let (ma, ea) = &self.terms[0];
            let (mb, eb) = &o.terms[0];
            return Scalar::term((ma.0 + mb.0, ma.1 + mb.1), ea.mul(eb));
        }
        let mut v = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ea) in &self.terms {
            for (mb, eb) in &o.terms {
                v.push(((ma.0 + mb.0, ma.1 + mb.1), ea.mul(eb)));
            }
        }
        Scalar::from_terms(v)
    }

    pub fn scale_elem(&self, e: &Elem) -> Scalar {
        if e.is_zero() {
            return Scalar::zero();
        }
        if e.is_one() {
            return self.clone();
        }
        Self::from_sorted(self.terms.iter().map(|(m, x)| (*m, x.mul(e))).collect())
    }

    /// Exact division. Division by a value involving `M` or `a` succeeds
    /// only when the quotient is again polynomial in `M` and `a`.
    pub fn div_ref(&self, o: &Scalar) -> Result<Scalar, FieldError> {
        if o.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(e) = o.as_elem() {
            return Ok(self.scale_elem(&e.inv()?));
        }
        if o.terms.len() == 1 {
            let (mb, eb) = &o.terms[0];
            let inv = eb.inv()?;
            let mut v = Vec::with_capacity(self.terms.len());
            for (ma, ea) in &self.terms {
                if ma.0 < mb.0 || ma.1 < mb.1 {
                    return Err(FieldError::NotPolynomial {
                        numerator: self.to_string(),
                        denominator: o.to_string(),
                    });
                }
                v.push(((ma.0 - mb.0, ma.1 - mb.1), ea.mul(&inv)));
            }
            return Ok(Scalar::from_terms(v));
        }
        // multivariate long division, lex order on (M, a)
        let lead = o.terms.last().unwrap().clone();
        let lead_inv = lead.1.inv()?;
        let mut rem = self.clone();
        let mut quot = Scalar::zero();
        while let Some((mr, er)) = rem.terms.last().cloned() {
            if mr.0 < lead.0 .0 || mr.1 < lead.0 .1 {
                return Err(FieldError::NotPolynomial {
                    numerator: self.to_string(),
                    denominator: o.to_string(),
                });
            }
            let t = Scalar::term((mr.0 - lead.0 .0, mr.1 - lead.0 .1), er.mul(&lead_inv));
            rem = rem.sub_ref(&t.mul_ref(o));
            quot = quot.add_ref(&t);
        }
        Ok(quot)
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        Scalar::one().div_ref(self)
    }

    pub fn pow(&self, e: i64) -> Result<Scalar, FieldError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        if let Some(x) = self.as_elem() {
            return Ok(Scalar::from_elem(x.pow(e)?));
        }
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        Ok(acc)
    }

    pub fn conj(&self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(m, e)| (*m, e.conj())).collect(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|t| t.1.is_real())
    }

    /// Substitutes `M` and `a` by field elements.
    pub fn subst(&self, mass: &Elem, a: &Elem) -> Elem {
        let mut acc = Elem::zero();
        for ((mm, ma), e) in &self.terms {
            let mut t = e.clone();
            for _ in 0..*mm {
                t = t.mul(mass);
            }
            for _ in 0..*ma {
                t = t.mul(a);
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn eval(&self, p: &NumericPoint) -> Result<Complex64, FieldError> {
        let mut acc = Complex64::new(0.0, 0.0);
        for ((mm, ma), e) in &self.terms {
            let v = e.eval(p.q)?;
            acc += v * p.mass.powi(*mm as i32) * p.a.powi(*ma as i32);
        }
        Ok(acc)
    }
}

impl From<Elem> for Scalar {
    fn from(e: Elem) -> Self {
        Scalar::from_elem(e)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.add_ref(o)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.sub_ref(o)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.mul_ref(o)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        self.add_ref(&o)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        self.sub_ref(&o)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        self.mul_ref(&o)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

fn fmt_mono(m: Mono) -> String {
    let mut parts = Vec::new();
    match m.0 {
        0 => {}
        1 => parts.push("M".to_string()),
        k => parts.push(format!("M^{}", k)),
    }
    match m.1 {
        0 => {}
        1 => parts.push("a".to_string()),
        k => parts.push(format!("a^{}", k)),
    }
    parts.join("*")
}

fn fmt_signed_term(m: Mono, e: &Elem) -> (bool, String) {
    let neg = e.is_negative();
    let e = if neg { e.neg() } else { e.clone() };
    let mono = fmt_mono(m);
    let body = if mono.is_empty() {
        e.to_string()
    } else if e.is_one() {
        mono
    } else if e.is_compound() {
        format!("{}*({})", mono, e)
    } else {
        format!("{}*{}", mono, e)
    };
    (neg, body)
}

impl fmt::Display for Scalar {
    /// Canonical serialization; terms in descending `(M, a)` degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (m, e) in self.terms.iter().rev() {
            let (neg, body) = fmt_signed_term(*m, e);
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            // a bare sum after a minus sign needs grouping
            if neg && *m == (0, 0) && e.is_compound() && e.den().is_one() {
                out.push_str(&format!("({})", body));
            } else {
                out.push_str(&body);
            }
        }
        write!(f, "{}", out)
    }
}
