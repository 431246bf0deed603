use proptest::prelude::*;
use qpoincare::field::linalg::Matrix;
use qpoincare::field::parse::parse_scalar;
use qpoincare::field::{Elem, Scalar};
use qpoincare::ncalg::{Gen, Mat, NCPoly, Word};
use qpoincare::qalgebra::base;
use qpoincare::rep::{
    b_squared, build_rep, check_rep, evaluate, factor_gap, hermiticity_defect, k,
    numeric_hermitian, Gauge, OmegaRep, RepError,
};

fn o(i: u8, j: u8) -> Gen {
    Gen::new(Mat::O, i, j)
}

fn word_matrix(rep: &OmegaRep, w: &Word) -> Matrix {
    let mut m = Matrix::identity(rep.dim());
    for &g in w.letters() {
        m = m.mul(rep.matrix(g));
    }
    m
}

fn poly_matrix(rep: &OmegaRep, p: &NCPoly) -> Matrix {
    let mut m = Matrix::zeros(rep.dim(), rep.dim());
    for (w, c) in p.terms() {
        m = m.add(&word_matrix(rep, w).scale(c));
    }
    m
}

#[test]
fn rational_gauge_passes_all_checks() {
    for tj in 1..=5 {
        let rep = build_rep(tj, Gauge::Rational).unwrap();
        assert_eq!(rep.dim(), tj as usize + 1);
        for (name, ok) in check_rep(&rep).unwrap() {
            assert!(ok, "j={tj}/2: {name}");
        }
    }
}

#[test]
fn q_trace_is_k_j() {
    for tj in 0..=5 {
        let rep = build_rep(tj, Gauge::Rational).unwrap();
        let t = rep.o11.add(&rep.o22.scale(&Scalar::q_pow(2)));
        assert_eq!(t, Matrix::identity(rep.dim()).scale(&k(tj as i32)));
    }
}

#[test]
fn spin_half_hermitian_matrices() {
    let rep = build_rep(1, Gauge::Hermitian).unwrap();
    let s = |x: &str| parse_scalar(x).unwrap();
    let z = Scalar::zero;
    let m =
        |rows: [[Scalar; 2]; 2]| Matrix::from_rows(rows.into_iter().map(|r| r.to_vec()).collect());
    assert_eq!(rep.o11, m([[s("q"), z()], [z(), s("1/q")]]));
    assert_eq!(rep.o12, m([[z(), z()], [s("(q^2-1)/q^2"), z()]]));
    assert_eq!(rep.o21, m([[z(), s("(q^2-1)/q^2")], [z(), z()]]));
    assert_eq!(rep.o22, m([[s("(q^2*(q^2-1)+1)/q^3"), z()], [z(), s("q")]]));
}

#[test]
fn spin_one_hermitian_uses_the_radical() {
    let rep = build_rep(2, Gauge::Hermitian).unwrap();
    assert!(rep.b_coeff(0).has_radical());
    assert_eq!(rep.b_coeff(0), parse_scalar("(q-1/q)*r/q").unwrap());
    for (name, ok) in check_rep(&rep).unwrap() {
        assert!(ok, "{name}");
    }
}

#[test]
fn spin_three_halves_hermitian_needs_numerics() {
    assert!(matches!(
        build_rep(3, Gauge::Hermitian),
        Err(RepError::NoRadical(3))
    ));
    let n = numeric_hermitian(3, 1.3).unwrap();
    assert!(hermiticity_defect(&n) < 1e-12);
}

#[test]
fn hermiticity_at_q0() {
    for tj in 1..=5 {
        let n = numeric_hermitian(tj, 1.3).unwrap();
        assert!(hermiticity_defect(&n) < 1e-12, "j={tj}/2");
    }
    let rational = evaluate(&build_rep(2, Gauge::Rational).unwrap(), 1.3).unwrap();
    assert!(hermiticity_defect(&rational) > 1e-3);
}

#[test]
fn b_squared_formula() {
    for tj in 1..=5u32 {
        let rep = build_rep(tj, Gauge::Rational).unwrap();
        for tm in rep.twice_ms() {
            let b2 = Scalar::from_elem(b_squared(tj, tm));
            let ab = rep.b_coeff(tm).mul_ref(&rep.a_coeff(tm + 2));
            assert_eq!(ab, b2, "j={tj}/2 m={tm}/2");
            let (u, v) = factor_gap(tj, tm);
            let gap = k(tj as i32).sub_ref(&k(tm));
            assert_eq!(gap, Scalar::q().mul_ref(&u).mul_ref(&v));
        }
    }
    assert_eq!(b_squared(1, 1), Elem::zero());
}

#[test]
fn highest_weight_is_annihilated() {
    for tj in 0..=5u32 {
        let rep = build_rep(tj, Gauge::Rational).unwrap();
        assert!(rep.b_coeff(tj as i32).is_zero());
        assert!(rep.a_coeff(-(tj as i32)).is_zero());
        assert_eq!(*rep.o11.get(0, 0), Scalar::q_pow(tj as i32));
    }
}

fn omega_word() -> impl Strategy<Value = Word> {
    prop::collection::vec((1u8..3, 1u8..3), 0..5)
        .prop_map(|v| Word::from_slice(&v.into_iter().map(|(i, j)| o(i, j)).collect::<Vec<_>>()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_preserves_matrix_values(w in omega_word(), tj in 1u32..4) {
        let rep = build_rep(tj, Gauge::Rational).unwrap();
        let nf = base().system.nf_word(&w).unwrap();
        prop_assert_eq!(poly_matrix(&rep, &nf), word_matrix(&rep, &w));
    }

    #[test]
    fn hermitian_gauge_is_hermitian(q in 1.01f64..2.5, tj in 1u32..6) {
        let n = numeric_hermitian(tj, q).unwrap();
        prop_assert!(hermiticity_defect(&n) < 1e-10);
    }
}
