use num_complex::Complex64;
use proptest::prelude::*;
use qpoincare::field::linalg::Matrix;
use qpoincare::field::parse::parse_scalar;
use qpoincare::field::{k, qdiff, Elem, Laurent, NumericPoint, Scalar};

#[test]
fn gcd_of_cyclotomic_products() {
    let a = Laurent::from_ints(0, &[-1, 0, 1]);
    let b = Laurent::from_ints(0, &[1, 0, 1]);
    let ab = &a * &b;
    assert_eq!(Laurent::gcd(&ab, &a), a);
    assert!(Laurent::gcd(&a, &b).is_one());
    assert_eq!(Laurent::gcd(&a.shift(3), &ab.shift(-2)), a);
}

#[test]
fn laurent_division_round_trip() {
    let a = Laurent::from_ints(0, &[3, -2, 0, 5, 1]);
    let d = Laurent::from_ints(0, &[1, 1]);
    let (q, r) = a.div_rem(&d);
    assert_eq!(&(&q * &d) + &r, a);
    assert!(r.is_constant());
}

#[test]
fn laurent_square_roots() {
    let a = Laurent::from_ints(-2, &[1, 0, -2, 0, 1]);
    assert_eq!(a.sqrt().unwrap(), Laurent::from_ints(-1, &[-1, 0, 1]));
    assert!(Laurent::from_ints(0, &[1, 0, 1]).sqrt().is_none());
}

#[test]
fn radical_squares_to_q2_plus_1() {
    let r = Elem::r();
    assert_eq!(
        r.mul(&r),
        Elem::from_laurent(Laurent::from_ints(0, &[1, 0, 1]))
    );
}

#[test]
fn inverse_with_radical() {
    let x = Elem::from_laurent(Laurent::q_pow(1)).add(&Elem::r());
    assert!(x.mul(&x.inv().unwrap()).is_one());
}

#[test]
fn fractions_are_reduced() {
    let a = Elem::from_laurent(Laurent::from_ints(0, &[-1, 0, 1]));
    let b = Elem::from_laurent(Laurent::from_ints(0, &[1, 1]));
    let c = a.div(&b).unwrap();
    assert_eq!(c, Elem::from_laurent(Laurent::from_ints(0, &[-1, 1])));
    assert_eq!(c.to_string(), "q-1");
    assert_eq!(Elem::one().div(&b).unwrap().to_string(), "1/(q+1)");
}

#[test]
fn scalar_parsing() {
    assert_eq!(parse_scalar("(q^2-1)/q^2").unwrap().to_string(), "1-q^-2");
    assert_eq!(parse_scalar("r*r").unwrap(), parse_scalar("q^2+1").unwrap());
    let y = parse_scalar("-M*a*(q^3+q^-1-q^2-1)").unwrap();
    assert_eq!(parse_scalar(&y.to_string()).unwrap(), y);
    assert!(parse_scalar("q +").is_err());
    assert!(parse_scalar("x").is_err());
    assert!(parse_scalar("1/(q-q)").is_err());
}

#[test]
fn k_and_qdiff() {
    assert_eq!(Scalar::from_elem(k(0)), parse_scalar("q^2+1").unwrap());
    assert_eq!(Scalar::from_elem(k(1)), parse_scalar("q^3+q^-1").unwrap());
    assert_eq!(
        Scalar::from_elem(qdiff(2)),
        parse_scalar("q^2-q^-2").unwrap()
    );
    for tj in 0..6 {
        let v = k(tj).eval(1.0).unwrap().re;
        assert!((v - 2.0).abs() < 1e-15);
    }
}

#[test]
fn conjugation_fixes_real_q() {
    let x = parse_scalar("i*q + r/q").unwrap();
    assert_eq!(x.conj(), parse_scalar("-i*q + r/q").unwrap());
    assert_eq!(x.conj().conj(), x);
}

#[test]
fn division_by_mass_is_rejected() {
    assert!(Scalar::one().div_ref(&Scalar::mass()).is_err());
}

#[test]
fn deformation_point() {
    let p = NumericPoint::from_deformation(1.0, 1e-3, 1.0);
    assert!((p.q - (1e-3f64).exp()).abs() < 1e-15);
}

#[test]
fn linear_algebra_over_the_field() {
    let m = Matrix::from_rows(vec![
        vec![Scalar::q(), Scalar::one()],
        vec![Scalar::one(), Scalar::q_pow(-1)],
    ]);
    assert_eq!(m.rank().unwrap(), 1);
    let ker = m.kernel().unwrap();
    assert_eq!(ker.len(), 1);
    let v = &ker[0];
    for i in 0..2 {
        let s = m
            .get(i, 0)
            .mul_ref(&v[0])
            .add_ref(&m.get(i, 1).mul_ref(&v[1]));
        assert!(s.is_zero());
    }
    assert!(m.inverse().unwrap().is_none());
    let n = Matrix::from_rows(vec![
        vec![Scalar::q(), Scalar::one()],
        vec![Scalar::zero(), Scalar::q()],
    ]);
    let inv = n.inverse().unwrap().unwrap();
    assert_eq!(n.mul(&inv), Matrix::identity(2));
}

fn laurent() -> impl Strategy<Value = Laurent> {
    (-3i32..3, prop::collection::vec(-4i64..5, 1..4))
        .prop_map(|(low, c)| Laurent::from_ints(low, &c))
}

fn elem() -> impl Strategy<Value = Elem> {
    (laurent(), laurent(), laurent()).prop_filter_map("zero denominator", |(n, r, d)| {
        if d.is_zero() {
            return None;
        }
        Elem::from_parts(n, r, d).ok()
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec(((0u16..3, 0u16..3), elem()), 0..3).prop_map(Scalar::from_terms)
}

fn point() -> impl Strategy<Value = NumericPoint> {
    (1.05f64..1.6, 0.3f64..1.5, 0.5f64..2.0).prop_map(|(q, a, m)| NumericPoint::new(q, a, m))
}

fn close(x: Complex64, y: Complex64) -> bool {
    (x - y).norm() <= 1e-8 * (1.0 + x.norm().max(y.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(x.add_ref(&y), y.add_ref(&x));
        prop_assert_eq!(x.mul_ref(&y), y.mul_ref(&x));
        prop_assert_eq!(x.mul_ref(&y.add_ref(&z)), x.mul_ref(&y).add_ref(&x.mul_ref(&z)));
        prop_assert_eq!(x.mul_ref(&y).mul_ref(&z), x.mul_ref(&y.mul_ref(&z)));
        prop_assert!(x.sub_ref(&x).is_zero());
    }

    #[test]
    fn elem_division_inverts_multiplication(x in elem(), y in elem()) {
        prop_assume!(!y.is_zero());
        prop_assert_eq!(x.mul(&y).div(&y).unwrap(), x.clone());
        prop_assert!(y.mul(&y.inv().unwrap()).is_one());
    }

    #[test]
    fn canonical_form_is_unique(x in elem(), y in elem()) {
        prop_assume!(!y.is_zero());
        let z = x.mul(&y).div(&y).unwrap();
        prop_assert_eq!(z.to_string(), x.to_string());
        prop_assert_eq!(z.den(), x.den());
    }

    #[test]
    fn printing_round_trips(x in scalar()) {
        let s = x.to_string();
        prop_assert_eq!(parse_scalar(&s).unwrap(), x);
    }

    #[test]
    fn evaluation_is_a_homomorphism(x in scalar(), y in scalar(), p in point()) {
        let ex = x.eval(&p).unwrap();
        let ey = y.eval(&p).unwrap();
        prop_assert!(close(x.add_ref(&y).eval(&p).unwrap(), ex + ey));
        prop_assert!(close(x.mul_ref(&y).eval(&p).unwrap(), ex * ey));
        prop_assert!(close(x.conj().eval(&p).unwrap(), ex.conj()));
    }

    #[test]
    fn elem_evaluation_matches_division(x in elem(), y in elem(), q in 1.05f64..1.6) {
        prop_assume!(!y.is_zero());
        let Ok(ey) = y.eval(q) else { return Ok(()); };
        prop_assume!(ey.norm() > 1e-6);
        let d = x.div(&y).unwrap().eval(q).unwrap();
        prop_assert!(close(d, x.eval(q).unwrap() / ey));
    }

    #[test]
    fn laurent_gcd_divides(
        a in prop::collection::vec(-4i64..5, 1..5).prop_map(|c| Laurent::from_ints(0, &c)),
        b in prop::collection::vec(-4i64..5, 1..5).prop_map(|c| Laurent::from_ints(0, &c)),
    ) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let g = Laurent::gcd(&a, &b);
        prop_assert!(a.div_rem(&g).1.is_zero());
        prop_assert!(b.div_rem(&g).1.is_zero());
    }
}
