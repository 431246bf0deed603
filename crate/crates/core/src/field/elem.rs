//! Elements of `Q(i)(q)[r]/(r^2 - q^2 - 1)` in canonical form.

use std::fmt;

use num_complex::Complex64;
use num_traits::Zero;

use super::gauss::Gauss;
use super::laurent::Laurent;
use super::FieldError;

/// `(num + rad * r) / den`.
///
/// Canonical form: `den` is a monic polynomial with nonzero constant term,
/// and `num`, `rad`, `den` share no nontrivial polynomial factor. Powers of
/// `q` are units and live in `num`/`rad`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Elem {
    num: Laurent,
    rad: Laurent,
    den: Laurent,
}

fn r_squared() -> Laurent {
    Laurent::from_ints(0, &[1, 0, 1])
}

impl Elem {
    pub fn zero() -> Self {
        Elem {
            num: Laurent::zero(),
            rad: Laurent::zero(),
            den: Laurent::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(Laurent::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(Laurent::constant(Gauss::from_int(n)))
    }

    pub fn from_gauss(g: Gauss) -> Self {
        Self::from_laurent(Laurent::constant(g))
    }

    pub fn from_laurent(num: Laurent) -> Self {
        Elem {
            num,
            rad: Laurent::zero(),
            den: Laurent::one(),
        }
    }

    pub fn q_pow(k: i32) -> Self {
        Self::from_laurent(Laurent::q_pow(k))
    }

    /// The adjoined radical `r = sqrt(q^2 + 1)`.
    pub fn r() -> Self {
        Elem {
            num: Laurent::zero(),
            rad: Laurent::one(),
            den: Laurent::one(),
        }
    }

    pub fn i() -> Self {
        Self::from_gauss(Gauss::i())
    }

    /// Builds `(num + rad r) / den` and brings it to canonical form.
    pub fn from_parts(num: Laurent, rad: Laurent, den: Laurent) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::canon(num, rad, den))
    }

    fn canon(mut num: Laurent, mut rad: Laurent, den: Laurent) -> Self {
        if num.is_zero() && rad.is_zero() {
            return Self::zero();
        }
        let (k, den) = den.strip();
        if k != 0 {
            num = num.shift(-k);
            rad = rad.shift(-k);
        }
        let (lc, mut den) = den.monic();
        if !lc.is_one() {
            let inv = lc.inv().unwrap();
            num = num.scale(&inv);
            rad = rad.scale(&inv);
        }
        if !den.is_constant() {
            let mut g = Laurent::gcd(&num, &den);
            if !g.is_one() && !rad.is_zero() {
                g = Laurent::gcd(&g, &rad);
            }
            if !g.is_one() {
                num = num.exact_div(&g);
                rad = rad.exact_div(&g);
                den = den.exact_div(&g);
            }
        }
        Elem { num, rad, den }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.num.is_zero() && self.rad.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.rad.is_zero() && self.den.is_one()
    }

    /// True when the value lies in `Q(i)[q, 1/q]`.
    pub fn is_laurent(&self) -> bool {
        self.rad.is_zero() && self.den.is_one()
    }

    /// True for constants in `Q(i)`.
    pub fn is_constant(&self) -> bool {
        self.is_laurent() && self.num.is_constant()
    }

    pub fn has_radical(&self) -> bool {
        !self.rad.is_zero()
    }

    pub fn num(&self) -> &Laurent {
        &self.num
    }

    pub fn rad(&self) -> &Laurent {
        &self.rad
    }

    pub fn den(&self) -> &Laurent {
        &self.den
    }

    /// The value as a Laurent polynomial, if it is one.
    pub fn as_laurent(&self) -> Option<&Laurent> {
        if self.is_laurent() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_gauss(&self) -> Option<Gauss> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn add(&self, o: &Elem) -> Elem {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let num = &self.num + &o.num;
            let rad = &self.rad + &o.rad;
            if self.den.is_one() {
                return Elem {
                    num,
                    rad,
                    den: Laurent::one(),
                };
            }
            return Self::canon(num, rad, self.den.clone());
        }
        let g = Laurent::gcd(&self.den, &o.den);
        let m1 = o.den.exact_div(&g);
        let m2 = self.den.exact_div(&g);
        let num = &(&self.num * &m1) + &(&o.num * &m2);
        let rad = &(&self.rad * &m1) + &(&o.rad * &m2);
        let den = &self.den * &m1;
        Self::canon(num, rad, den)
    }

    pub fn neg(&self) -> Elem {
        Elem {
            num: -&self.num,
            rad: -&self.rad,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Elem) -> Elem {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Elem) -> Elem {
        if self.is_zero() || o.is_zero() {
            return Elem::zero();
        }
        if self.is_laurent() && o.is_laurent() {
            return Elem::from_laurent(&self.num * &o.num);
        }
        let (num, rad) = if self.rad.is_zero() && o.rad.is_zero() {
            (&self.num * &o.num, Laurent::zero())
        } else {
            let nn = &(&self.num * &o.num) + &(&(&self.rad * &o.rad) * &r_squared());
            let rr = &(&self.num * &o.rad) + &(&self.rad * &o.num);
            (nn, rr)
        };
        let den = &self.den * &o.den;
        if den.is_one() {
            return Elem { num, rad, den };
        }
        Self::canon(num, rad, den)
    }

    pub fn scale_gauss(&self, c: &Gauss) -> Elem {
        if c.is_zero() {
            return Elem::zero();
        }
        Elem {
            num: self.num.scale(c),
            rad: self.rad.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn shift(&self, k: i32) -> Elem {
        Elem {
            num: self.num.shift(k),
            rad: self.rad.shift(k),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Elem, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.rad.is_zero() {
            return Ok(Self::canon(
                self.den.clone(),
                Laurent::zero(),
                self.num.clone(),
            ));
        }
        // (A + B r)^-1 = (A - B r) / (A^2 - B^2 (q^2+1))
        let norm = &(&self.num * &self.num) - &(&(&self.rad * &self.rad) * &r_squared());
        let num = &self.num * &self.den;
        let rad = -&(&self.rad * &self.den);
        Ok(Self::canon(num, rad, norm))
    }

    pub fn div(&self, o: &Elem) -> Result<Elem, FieldError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Elem, FieldError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut base = self.clone();
        let mut acc = Elem::one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Complex conjugation: `i -> -i`, with `q` and `r` real.
    pub fn conj(&self) -> Elem {
        Elem {
            num: self.num.conj(),
            rad: self.rad.conj(),
            den: self.den.conj(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.num.is_real() && self.rad.is_real() && self.den.is_real()
    }

    /// Radical conjugate `r -> -r`.
    pub fn rconj(&self) -> Elem {
        Elem {
            num: self.num.clone(),
            rad: -&self.rad,
            den: self.den.clone(),
        }
    }

    pub fn eval(&self, q: f64) -> Result<Complex64, FieldError> {
        let qc = Complex64::new(q, 0.0);
        let d = self.den.eval(qc);
        let scale = self
            .den
            .terms()
            .map(|(e, c)| c.to_complex().norm() * q.powi(e))
            .fold(0.0, f64::max);
        if d.norm() <= 1e-13 * scale.max(f64::MIN_POSITIVE) {
            return Err(FieldError::Pole {
                denominator: fmt_laurent(&self.den),
                q,
            });
        }
        let r = (q * q + 1.0).sqrt();
        Ok((self.num.eval(qc) + self.rad.eval(qc) * r) / d)
    }

    /// Sign used when printing: the sign of the leading coefficient of the
    /// first nonzero numerator part.
    pub fn is_negative(&self) -> bool {
        if !self.num.is_zero() {
            self.num.leading().is_negative()
        } else if !self.rad.is_zero() {
            self.rad.leading().is_negative()
        } else {
            false
        }
    }

    /// True when the printed form has a top-level `+`, `-` between terms, or
    /// a division bar.
    pub fn is_compound(&self) -> bool {
        !self.den.is_one() || self.num.len() + self.rad.len() > 1
    }
}

/// Coefficient printing inside a monomial; complex values with both parts
/// need parentheses.
fn fmt_gauss_factor(c: &Gauss) -> String {
    let s = c.to_string();
    if !c.re.is_zero() && !c.im.is_zero() {
        format!("({})", s)
    } else {
        s
    }
}

fn fmt_term(c: &Gauss, e: i32) -> String {
    let pow = match e {
        0 => String::new(),
        1 => "q".to_string(),
        _ => format!("q^{}", e),
    };
    if e == 0 {
        return fmt_gauss_factor(c);
    }
    if c.is_one() {
        pow
    } else if (-c).is_one() {
        format!("-{}", pow)
    } else {
        format!("{}*{}", fmt_gauss_factor(c), pow)
    }
}

/// Laurent polynomial, descending exponents.
pub fn fmt_laurent(p: &Laurent) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (e, c) in p.terms().rev() {
        let t = fmt_term(c, e);
        if !out.is_empty() && !t.starts_with('-') {
            out.push('+');
        }
        out.push_str(&t);
    }
    out
}

fn paren_if(s: String, cond: bool) -> String {
    if cond {
        format!("({})", s)
    } else {
        s
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut numer = String::new();
        if !self.num.is_zero() {
            numer.push_str(&fmt_laurent(&self.num));
        }
        if !self.rad.is_zero() {
            let r = if self.rad.is_one() {
                "r".to_string()
            } else if (-&self.rad).is_one() {
                "-r".to_string()
            } else if self.rad.len() == 1 {
                format!("{}*r", fmt_laurent(&self.rad))
            } else {
                format!("({})*r", fmt_laurent(&self.rad))
            };
            if !numer.is_empty() && !r.starts_with('-') {
                numer.push('+');
            }
            numer.push_str(&r);
        }
        if numer.is_empty() {
            numer.push('0');
        }
        if self.den.is_one() {
            return write!(f, "{}", numer);
        }
        let nterms = self.num.len() + self.rad.len();
        let numer = paren_if(numer, nterms > 1);
        let den = paren_if(fmt_laurent(&self.den), self.den.len() > 1);
        write!(f, "{}/{}", numer, den)
    }
}
