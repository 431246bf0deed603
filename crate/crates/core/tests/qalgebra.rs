#![allow(clippy::needless_range_loop)]

use proptest::prelude::*;
use qpoincare::field::parse::parse_scalar;
use qpoincare::field::{NumericPoint, Scalar};
use qpoincare::ncalg::{parse_poly, Gen, Mat, NCPoly};
use qpoincare::qalgebra::checks::{
    commutators, commuting_set_pairs, compare_block, letter_pairs, omega_link,
};
use qpoincare::qalgebra::observables::{beta_value, trq_w, trq_w_product_form, trq_w_via_omega};
use qpoincare::qalgebra::rmatrix::{
    distance_from_identity, r12, r12_inv, r21, swap, ybe_check, ybe_sides,
};
use qpoincare::qalgebra::standard::eliminate_gamma_bar;
use qpoincare::qalgebra::{base, Observable, OpMatrix, Tag};

fn sys() -> &'static qpoincare::ncalg::RewriteSystem {
    &base().system
}

fn printed_r(q: f64) -> [[f64; 4]; 4] {
    [
        [q, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, q - 1.0 / q, 1.0, 0.0],
        [0.0, 0.0, 0.0, q],
    ]
}

type M8 = [[f64; 8]; 8];

fn embed(r: &[[f64; 4]; 4], a: usize, b: usize) -> M8 {
    let mut m = [[0.0; 8]; 8];
    let bit = |x: usize, k: usize| (x >> (2 - k)) & 1;
    for row in 0..8 {
        for col in 0..8 {
            let c = 3 - a - b;
            if bit(row, c) != bit(col, c) {
                continue;
            }
            let i = 2 * bit(row, a) + bit(row, b);
            let j = 2 * bit(col, a) + bit(col, b);
            m[row][col] = r[i][j];
        }
    }
    m
}

fn mul8(x: &M8, y: &M8) -> M8 {
    let mut m = [[0.0; 8]; 8];
    for i in 0..8 {
        for k in 0..8 {
            for j in 0..8 {
                m[i][j] += x[i][k] * y[k][j];
            }
        }
    }
    m
}

#[test]
fn r_matrix_entries() {
    let r = r12();
    let p = NumericPoint::new(1.7, 1.0, 1.0);
    let want = printed_r(1.7);
    for i in 0..4 {
        for j in 0..4 {
            let v = r.get(i, j).eval(&p).unwrap();
            assert!((v.re - want[i][j]).abs() < 1e-14);
        }
    }
    assert_eq!(*r.get(2, 1), parse_scalar("q-1/q").unwrap());
}

#[test]
fn yang_baxter_exact() {
    assert!(ybe_check());
    let (l, r) = ybe_sides(&r12());
    assert_eq!(l, r);
    let (l, r) = ybe_sides(&r21());
    assert_eq!(l, r);
}

#[test]
fn r_is_identity_at_q_one() {
    assert!(distance_from_identity(&r12(), &NumericPoint::new(1.0, 1.0, 1.0)) < 1e-15);
    assert!(distance_from_identity(&r12_inv(), &NumericPoint::new(1.0, 1.0, 1.0)) < 1e-15);
}

#[test]
fn r21_is_the_swapped_r12() {
    let s = swap();
    assert_eq!(s.mul(&s), qpoincare::field::linalg::Matrix::identity(4));
    assert_eq!(r21(), s.mul(&r12()).mul(&s));
    assert_eq!(
        r12().mul(&r12_inv()),
        qpoincare::field::linalg::Matrix::identity(4)
    );
}

proptest! {
    #[test]
    fn yang_baxter_numeric(q in 0.2f64..3.0) {
        let r = printed_r(q);
        let (r12, r13, r23) = (embed(&r, 0, 1), embed(&r, 0, 2), embed(&r, 1, 2));
        let lhs = mul8(&mul8(&r12, &r13), &r23);
        let rhs = mul8(&mul8(&r23, &r13), &r12);
        for i in 0..8 {
            for j in 0..8 {
                prop_assert!((lhs[i][j] - rhs[i][j]).abs() < 1e-9);
            }
        }
    }
}

#[test]
fn exchange_relations_match_the_printed_blocks() {
    let mut distinct = 0;
    let mut duplicates = 0;
    for tag in Tag::PRINTED {
        let c = compare_block(tag, sys()).unwrap();
        assert!(
            c.passed(),
            "{tag}: {:?} {:?}",
            c.printed_residuals,
            c.expanded_residuals
        );
        distinct += c.distinct;
        duplicates += c.duplicates.len();
    }
    assert_eq!(distinct, 66);
    assert_eq!(duplicates, 1);
    assert_eq!(compare_block(Tag::GB, sys()).unwrap().duplicates.len(), 1);
}

#[test]
fn omega_link_vanishes() {
    let res = omega_link(sys()).unwrap();
    assert_eq!(res.len(), 61);
    for (tag, i, p) in res {
        assert!(p.is_zero(), "{tag} #{i}: {p}");
    }
}

#[test]
fn commuting_set() {
    let pairs = commuting_set_pairs(sys()).unwrap();
    assert_eq!(pairs.len(), 15);
    for (a, b, c) in commutators(sys(), &pairs).unwrap() {
        assert!(c.is_zero(), "[{a}, {b}] = {c}");
    }
}

#[test]
fn casimirs_are_central() {
    let pairs = letter_pairs(
        sys(),
        &[Observable::C1, Observable::C2],
        &[Mat::G, Mat::B, Mat::P, Mat::O],
    )
    .unwrap();
    assert_eq!(pairs.len(), 32);
    for (a, b, c) in commutators(sys(), &pairs).unwrap() {
        assert!(c.is_zero(), "[{a}, {b}] = {c}");
    }
}

#[test]
fn subalgebra_invariants() {
    let mut pairs = letter_pairs(
        sys(),
        &[Observable::TrqGammaPlus, Observable::TrqGammaMinus],
        &[Mat::G, Mat::B],
    )
    .unwrap();
    pairs.extend(
        letter_pairs(
            sys(),
            &[Observable::K1, Observable::C1, Observable::TrqPOmega],
            &[Mat::P, Mat::O],
        )
        .unwrap(),
    );
    pairs.extend(letter_pairs(sys(), &[Observable::K3], &[Mat::O]).unwrap());
    for (a, b, c) in commutators(sys(), &pairs).unwrap() {
        assert!(c.is_zero(), "[{a}, {b}] = {c}");
    }
    let c = sys()
        .commutator(
            &Observable::K3.poly(sys()).unwrap(),
            &NCPoly::letter(Gen::new(Mat::P, 1, 1)),
        )
        .unwrap();
    assert!(!c.is_zero());
}

#[test]
fn q_trace_of_omega() {
    let t = Observable::K3.poly(sys()).unwrap();
    assert_eq!(t, parse_poly("O11 + q^2*O22").unwrap());
    assert_eq!(OpMatrix::of(Mat::O).trq(), t);
}

#[test]
fn omega_determinant() {
    let d = parse_poly("O11*O22 - q^2*O21*O12").unwrap();
    assert_eq!(sys().nf(&d).unwrap(), NCPoly::one());
}

#[test]
fn beta_is_q_cubed() {
    assert_eq!(beta_value(), Scalar::q_pow(3));
}

#[test]
fn trq_w_forms_agree() {
    let b = beta_value();
    let trace = trq_w(sys()).unwrap();
    let via = trq_w_via_omega(sys()).unwrap();
    for beta in [b.clone(), Scalar::q(), Scalar::from_int(2)] {
        let l = sys().nf(&eliminate_gamma_bar(&trace.at(&beta))).unwrap();
        let r = sys().nf(&eliminate_gamma_bar(&via.at(&beta))).unwrap();
        assert_eq!(l, r);
    }
    let prod = trq_w_product_form(sys()).unwrap().scale(&Scalar::a());
    let l = sys().nf(&eliminate_gamma_bar(&trace.at(&b))).unwrap();
    assert_eq!(l, sys().nf(&eliminate_gamma_bar(&prod)).unwrap());
}

#[test]
fn observables_are_hermitian_where_expected() {
    use qpoincare::ncalg::star::star;
    for o in [
        Observable::C1,
        Observable::K1,
        Observable::K3,
        Observable::K4,
        Observable::P3,
    ] {
        let p = o.poly(sys()).unwrap();
        assert_eq!(star(&p, sys()).unwrap(), p, "{o}");
    }
}
