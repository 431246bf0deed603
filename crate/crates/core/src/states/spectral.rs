//! Matrices of operators on finite state spans and their eigenpairs.

use num_complex::Complex64;

use crate::field::linalg::Matrix;
use crate::field::scalar::Mono;
use crate::field::{k, qdiff, Elem, NumericPoint, Scalar};
use crate::ncalg::{NCPoly, Word};

use super::module::{Module, ModuleState};
use super::StateError;

fn coordinates(basis: &[ModuleState]) -> (Vec<(Word, i32)>, Matrix) {
    let mut keys: Vec<(Word, i32)> = basis
        .iter()
        .flat_map(|b| b.terms().map(|(k, _)| k.clone()))
        .collect();
    keys.sort();
    keys.dedup();
    let mut m = Matrix::zeros(keys.len(), basis.len());
    for (j, b) in basis.iter().enumerate() {
        for (i, (w, tm)) in keys.iter().enumerate() {
            m.set(i, j, b.coeff(w, *tm));
        }
    }
    (keys, m)
}

/// Matrix of `op` in `basis`: column `j` holds the coordinates of
/// `op basis[j]`.
pub fn matrix_of(
    module: &Module,
    op: &NCPoly,
    basis: &[ModuleState],
) -> Result<Matrix, StateError> {
    let (keys, coords) = coordinates(basis);
    if coords.rank()? != basis.len() {
        return Err(StateError::BadArgument(
            "basis states are linearly dependent".into(),
        ));
    }
    let n = basis.len();
    let mut out = Matrix::zeros(n, n);
    for (j, b) in basis.iter().enumerate() {
        let w = module.apply(op, b)?;
        if let Some(((word, tm), _)) = w.terms().find(|(key, _)| !keys.contains(key)) {
            return Err(StateError::SpanEscaped {
                column: j,
                component: ModuleState::basis(w.twice_s, word.clone(), *tm).to_string(),
            });
        }
        let rhs: Vec<Scalar> = keys.iter().map(|(word, tm)| w.coeff(word, *tm)).collect();
        let x = coords.solve(&rhs)?.ok_or_else(|| StateError::SpanEscaped {
            column: j,
            component: w.to_string(),
        })?;
        for (i, v) in x.into_iter().enumerate() {
            out.set(i, j, v);
        }
    }
    Ok(out)
}

/// An eigenvalue with a basis of its eigenspace.
#[derive(Clone, Debug)]
pub struct Eigenpair {
    pub eigenvalue: Scalar,
    pub multiplicity: usize,
    pub vectors: Vec<ModuleState>,
}

#[derive(Clone, Debug)]
pub struct Diagonalization {
    pub matrix: Matrix,
    /// Characteristic polynomial of the matrix divided by `scale`, lowest
    /// coefficient first.
    pub charpoly: Vec<Scalar>,
    /// Common monomial factor of the matrix entries.
    pub scale: Scalar,
    pub exact: Vec<Eigenpair>,
    /// Eigenvalues not found exactly, evaluated at the numeric point.
    pub numeric: Vec<Complex64>,
    pub warnings: Vec<String>,
}

impl Diagonalization {
    pub fn is_exact(&self) -> bool {
        self.numeric.is_empty()
    }

    pub fn eigenvalues(&self) -> Vec<Scalar> {
        self.exact.iter().map(|p| p.eigenvalue.clone()).collect()
    }
}

fn common_monomial(m: &Matrix, n: usize) -> Result<Option<Mono>, ()> {
    let mut mono = None;
    for i in 0..n {
        for j in 0..n {
            let e = m.get(i, j);
            if e.is_zero() {
                continue;
            }
            let [(mm, _)] = e.terms() else { return Err(()) };
            match mono {
                None => mono = Some(*mm),
                Some(x) if x == *mm => {}
                Some(_) => return Err(()),
            }
        }
    }
    Ok(mono)
}

/// Coefficients of `det(x I - m)`, lowest first, by Faddeev-LeVerrier.
pub fn charpoly(m: &Matrix, n: usize) -> Vec<Scalar> {
    let mut c = vec![Scalar::zero(); n + 1];
    c[n] = Scalar::one();
    let mut acc = Matrix::zeros(n, n);
    for step in 1..=n {
        let mut next = m.mul(&acc);
        for i in 0..n {
            next.set(i, i, next.get(i, i).add_ref(&c[n - step + 1]));
        }
        let am = m.mul(&next);
        let mut tr = Scalar::zero();
        for i in 0..n {
            tr = tr.add_ref(am.get(i, i));
        }
        c[n - step] = tr.mul_ref(&Scalar::from_ratio(-1, step as i64));
        acc = next;
    }
    c
}

fn eval_poly(c: &[Scalar], x: &Scalar) -> Scalar {
    c.iter()
        .rev()
        .fold(Scalar::zero(), |acc, ci| acc.mul_ref(x).add_ref(ci))
}

fn deflate(c: &[Scalar], x: &Scalar) -> Vec<Scalar> {
    let n = c.len() - 1;
    let mut out = vec![Scalar::zero(); n];
    let mut carry = Scalar::zero();
    for i in (1..=n).rev() {
        carry = c[i].add_ref(&carry.mul_ref(x));
        out[i - 1] = carry.clone();
    }
    out
}

/// Candidate eigenvalues: the energy family `-k(t)` and nearby values built
/// from `k`, powers of `q` and `q^n - q^-n`.
pub fn candidates(bound: i32) -> Vec<Scalar> {
    let mut out: Vec<Elem> = vec![Elem::zero()];
    for t in 0..=bound {
        out.push(k(t));
        out.push(qdiff(t));
        out.push(Elem::q_pow(t));
        out.push(Elem::q_pow(-t));
        for u in 0..t {
            out.push(k(t).sub(&k(u)));
        }
    }
    let mut all: Vec<Scalar> = Vec::new();
    for e in out {
        let neg = e.neg();
        for x in [neg, e] {
            let s = Scalar::from_elem(x);
            if !all.contains(&s) {
                all.push(s);
            }
        }
    }
    all
}

fn numeric_roots(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lead = c[n];
    let monic: Vec<Complex64> = c.iter().map(|x| x / lead).collect();
    let radius = 1.0 + monic[..n].iter().map(|x| x.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|i| {
            Complex64::from_polar(
                radius,
                0.4 + 2.0 * std::f64::consts::PI * i as f64 / n as f64,
            )
        })
        .collect();
    let eval = |x: Complex64| {
        monic
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |a, ci| a * x + ci)
    };
    for _ in 0..500 {
        let mut delta: f64 = 0.0;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    z
}

fn combine(basis: &[ModuleState], v: &[Scalar]) -> ModuleState {
    let mut out = ModuleState::zero(basis[0].twice_s);
    for (b, c) in basis.iter().zip(v) {
        out.add_scaled(b, c);
    }
    out
}

/// Exact eigenpairs of `op` on the span of `basis`. Roots of the
/// characteristic polynomial not found among [`candidates`] or by solving a
/// linear remainder are reported numerically at `point`.
pub fn diagonalize(
    module: &Module,
    op: &NCPoly,
    basis: &[ModuleState],
    point: &NumericPoint,
) -> Result<Diagonalization, StateError> {
    if basis.is_empty() {
        return Err(StateError::BadArgument("empty basis".into()));
    }
    let n = basis.len();
    let matrix = matrix_of(module, op, basis)?;
    let mono = match common_monomial(&matrix, n) {
        Ok(m) => m.unwrap_or((0, 0)),
        Err(()) => {
            return Err(StateError::BadArgument(
                "matrix entries do not share a monomial in M and a".into(),
            ))
        }
    };
    let scale = Scalar::term(mono, Elem::one());
    let mut reduced = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let e = matrix.get(i, j);
            reduced.set(i, j, Scalar::from_elem(e.coeff(mono)));
        }
    }
    let cp = charpoly(&reduced, n);
    let mut rest = cp.clone();
    let mut roots: Vec<Scalar> = Vec::new();
    for c in candidates(2 * n as i32 + 6) {
        while rest.len() > 1 && eval_poly(&rest, &c).is_zero() {
            rest = deflate(&rest, &c);
            roots.push(c.clone());
        }
    }
    if rest.len() == 2 {
        let r = rest[0].neg_ref().div_ref(&rest[1])?;
        roots.push(r);
        rest = vec![Scalar::one()];
    }
    let mut warnings = Vec::new();
    let mut numeric = Vec::new();
    if rest.len() > 1 {
        let c: Vec<Complex64> = rest
            .iter()
            .map(|x| x.eval(point))
            .collect::<Result<_, _>>()?;
        let s = scale.eval(point)?;
        numeric = numeric_roots(&c).into_iter().map(|z| z * s).collect();
        warnings.push(format!(
            "{} eigenvalue(s) not found exactly; numeric values at q = {}",
            rest.len() - 1,
            point.q
        ));
    }
    let mut exact: Vec<Eigenpair> = Vec::new();
    for r in roots {
        if let Some(p) = exact.iter_mut().find(|p| p.eigenvalue == r.mul_ref(&scale)) {
            p.multiplicity += 1;
            continue;
        }
        let mut shifted = reduced.clone();
        for i in 0..n {
            shifted.set(i, i, shifted.get(i, i).sub_ref(&r));
        }
        let vectors = shifted
            .kernel()?
            .iter()
            .map(|v| combine(basis, v))
            .collect();
        exact.push(Eigenpair {
            eigenvalue: r.mul_ref(&scale),
            multiplicity: 1,
            vectors,
        });
    }
    Ok(Diagonalization {
        matrix,
        charpoly: cp,
        scale,
        exact,
        numeric,
        warnings,
    })
}

/// A common eigenspace of several commuting operators.
#[derive(Clone, Debug)]
pub struct JointEigenspace {
    /// One eigenvalue per operator, in input order.
    pub eigenvalues: Vec<Scalar>,
    pub vectors: Vec<ModuleState>,
}

/// Refines the span of `basis` into common eigenspaces of `ops`, which must
/// commute on it. Fails when an eigenvalue cannot be found exactly.
pub fn joint_diagonalize(
    module: &Module,
    ops: &[NCPoly],
    basis: &[ModuleState],
    point: &NumericPoint,
) -> Result<Vec<JointEigenspace>, StateError> {
    let mut spaces = vec![JointEigenspace {
        eigenvalues: Vec::new(),
        vectors: basis.to_vec(),
    }];
    for op in ops {
        let mut next = Vec::new();
        for sp in spaces {
            let d = diagonalize(module, op, &sp.vectors, point)?;
            if !d.is_exact() {
                return Err(StateError::BadArgument(format!(
                    "eigenvalues not found exactly: {:?}",
                    d.numeric
                )));
            }
            for p in d.exact {
                let mut eigenvalues = sp.eigenvalues.clone();
                eigenvalues.push(p.eigenvalue);
                next.push(JointEigenspace {
                    eigenvalues,
                    vectors: p.vectors,
                });
            }
        }
        spaces = next;
    }
    Ok(spaces)
}

/// True when `a` and `b` are nonzero multiples of each other.
pub fn proportional(a: &ModuleState, b: &ModuleState) -> bool {
    if a.is_zero() || b.is_zero() {
        return false;
    }
    matches!(super::eigenvalue_of(a, b), Ok((Some(c), _)) if !c.is_zero())
}
