//! Laurent polynomials in `q` over the Gaussian rationals.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::gauss::Gauss;

/// `sum c_k q^(low + k)`, trimmed so that the first and last coefficients
/// are nonzero. The zero polynomial has no coefficients and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Laurent {
    low: i32,
    coeffs: Vec<Gauss>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Gauss::one())
    }

    pub fn constant(c: Gauss) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Gauss, exp: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            low: exp,
            coeffs: vec![c],
        }
    }

    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(Gauss::one(), exp)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (i32, Gauss)>>(terms: I) -> Self {
        let terms: Vec<(i32, Gauss)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let low = terms.iter().map(|t| t.0).min().unwrap();
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![Gauss::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - low) as usize];
            *slot = &*slot + &c;
        }
        let mut p = Laurent { low, coeffs };
        p.trim();
        p
    }

    /// Integer coefficients listed from `low` upwards.
    pub fn from_ints(low: i32, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (low + k as i32, Gauss::from_int(c))),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest exponent; meaningless for zero.
    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn len(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn coeff(&self, exp: i32) -> Gauss {
        let k = exp - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            Gauss::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    pub fn leading(&self) -> &Gauss {
        self.coeffs.last().expect("leading coefficient of zero")
    }

    pub fn trailing(&self) -> &Gauss {
        self.coeffs.first().expect("trailing coefficient of zero")
    }

    /// Nonzero terms, ascending exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &Gauss)> {
        let low = self.low;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (low + k as i32, c))
    }

    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Laurent {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &Gauss) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        let mut p = Laurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        };
        p.trim();
        p
    }

    pub fn conj(&self) -> Self {
        Laurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(Gauss::conj).collect(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(Gauss::is_real)
    }

    /// Splits `q^low * p(q)` with `p(0) != 0`.
    pub fn strip(&self) -> (i32, Laurent) {
        if self.is_zero() {
            return (0, self.clone());
        }
        (self.low, self.shift(-self.low))
    }

    /// Makes the leading coefficient one; returns the removed coefficient.
    pub fn monic(&self) -> (Gauss, Laurent) {
        if self.is_zero() {
            return (Gauss::one(), self.clone());
        }
        let lc = self.leading().clone();
        let inv = lc.inv().unwrap();
        (lc, self.scale(&inv))
    }

    /// Polynomial division with remainder. Both operands must have
    /// nonnegative exponents.
    pub fn div_rem(&self, d: &Laurent) -> (Laurent, Laurent) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let (dl, dp) = d.strip();
        debug_assert!(dl >= 0 && self.low >= 0);
        // work with plain coefficient vectors starting at exponent 0
        let mut rem: Vec<Gauss> = vec![Gauss::zero(); self.low.max(0) as usize];
        rem.extend(self.coeffs.iter().cloned());
        let mut dv: Vec<Gauss> = vec![Gauss::zero(); dl as usize];
        dv.extend(dp.coeffs.iter().cloned());
        let dn = dv.len() - 1;
        let inv = dv[dn].inv().unwrap();
        if rem.len() <= dn {
            return (Laurent::zero(), self.clone());
        }
        let mut quot = vec![Gauss::zero(); rem.len() - dn];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dn] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in dv.iter().enumerate() {
                if dc.is_zero() {
                    continue;
                }
                let t = &c * dc;
                rem[k + j] = &rem[k + j] - &t;
            }
            quot[k] = c;
        }
        let mut q = Laurent {
            low: 0,
            coeffs: quot,
        };
        q.trim();
        let mut r = Laurent {
            low: 0,
            coeffs: rem,
        };
        r.trim();
        (q, r)
    }

    /// Exact quotient; panics in debug builds if the division leaves a remainder.
    pub fn exact_div(&self, d: &Laurent) -> Laurent {
        let (sl, sp) = self.strip();
        let (dl, dp) = d.strip();
        let (q, r) = sp.div_rem(&dp);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q.shift(sl - dl)
    }

    /// Monic greatest common divisor of the stripped polynomial parts.
    pub fn gcd(a: &Laurent, b: &Laurent) -> Laurent {
        let (_, mut x) = a.strip();
        let (_, mut y) = b.strip();
        if x.is_zero() {
            return y.monic().1;
        }
        if y.is_zero() {
            return x.monic().1;
        }
        if x.coeffs.len() < y.coeffs.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            if y.coeffs.len() == 1 {
                return Laurent::one();
            }
            let (_, r) = x.div_rem(&y);
            let r = r.strip().1;
            x = y;
            y = r.monic().1;
        }
        x.monic().1
    }

    pub fn eval(&self, q: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in self.terms() {
            acc += c.to_complex() * q.powi(e);
        }
        acc
    }

    /// Exact square root with positive leading coefficient, if one exists.
    pub fn sqrt(&self) -> Option<Laurent> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.low % 2 != 0 || !(self.coeffs.len() - 1).is_multiple_of(2) {
            return None;
        }
        let (_, p) = self.strip();
        let n = p.coeffs.len() - 1;
        let half = n / 2;
        let lead = p.coeffs[n].sqrt_rational()?;
        // top-down long extraction of the root coefficients
        let mut root = vec![Gauss::zero(); half + 1];
        root[half] = lead.clone();
        let two_lead_inv = (&lead * &Gauss::from_int(2)).inv()?;
        for k in (0..half).rev() {
            // coefficient of q^(half + k) in root^2 must match p
            let mut acc = p.coeffs[half + k].clone();
            for i in (k + 1)..=half {
                let j = half + k - i;
                if j > half || j <= k {
                    continue;
                }
                acc = &acc - &(&root[i] * &root[j]);
            }
            root[k] = &acc * &two_lead_inv;
        }
        let r = Laurent {
            low: 0,
            coeffs: root,
        };
        let mut r = r;
        r.trim();
        if (&r * &r) == p {
            Some(r.shift(self.low / 2))
        } else {
            None
        }
    }
}

impl<'a> Add<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn add(self, o: &Laurent) -> Laurent {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.high().max(o.high());
        let mut coeffs = Vec::with_capacity((high - low + 1) as usize);
        for e in low..=high {
            let a = self.coeff_ref(e);
            let b = o.coeff_ref(e);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => Gauss::zero(),
            });
        }
        let mut p = Laurent { low, coeffs };
        p.trim();
        p
    }
}

impl Laurent {
    fn coeff_ref(&self, exp: i32) -> Option<&Gauss> {
        let k = exp - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            None
        } else {
            Some(&self.coeffs[k as usize])
        }
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Sub<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn sub(self, o: &Laurent) -> Laurent {
        self + &(-o)
    }
}

impl<'a> Mul<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn mul(self, o: &Laurent) -> Laurent {
        if self.is_zero() || o.is_zero() {
            return Laurent::zero();
        }
        if o.coeffs.len() == 1 {
            let mut p = self.scale(&o.coeffs[0]);
            if !p.is_zero() {
                p.low += o.low;
            }
            return p;
        }
        if self.coeffs.len() == 1 {
            return o * self;
        }
        let mut coeffs = vec![Gauss::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a * b;
                coeffs[i + j] = &coeffs[i + j] + &t;
            }
        }
        let mut p = Laurent {
            low: self.low + o.low,
            coeffs,
        };
        p.trim();
        p
    }
}
