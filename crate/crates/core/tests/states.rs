use proptest::prelude::*;
use qpoincare::field::parse::parse_scalar;
use qpoincare::field::{NumericPoint, Scalar};
use qpoincare::ncalg::{Gen, Mat, NCPoly, RewriteSystem, Word};
use qpoincare::qalgebra::{base, Observable, OpMatrix};
use qpoincare::rep::{k, Gauge};
use qpoincare::states::analysis::{
    casimir_w_rest_formula, energy, limit_report, rest_invariants, solve_beta, spectrum,
    trq_w_rest_formula, LimitSpec,
};
use qpoincare::states::procedures::{
    pi_polynomial, pi_states, procedure1, procedure1_expected, procedure2, procedure3, procedure4,
    spin1_s5, spin_half_s, spin_half_s_with, SpinHalfReading,
};
use qpoincare::states::spectral::{diagonalize, proportional};
use qpoincare::states::{Module, ModuleState, StateError};

fn sys() -> &'static RewriteSystem {
    &base().system
}

fn sc(s: &str) -> Scalar {
    parse_scalar(s).unwrap()
}

fn op(o: Observable) -> NCPoly {
    o.poly(sys()).unwrap()
}

fn eigenvalue(m: &Module, o: Observable, v: &ModuleState) -> Option<Scalar> {
    m.eigencheck(o.name(), &op(o), "v", v).unwrap().eigenvalue
}

fn g21() -> Gen {
    Gen::new(Mat::G, 2, 1)
}

fn b21() -> Gen {
    Gen::new(Mat::B, 2, 1)
}

#[test]
fn procedure1_literal_values() {
    let m = Module::new(sys(), 1, Gauge::Rational).unwrap();
    let v = procedure1(&m, &[g21(), b21()]).unwrap();
    let cases = [
        (Observable::K4, "q^5"),
        (Observable::K3, "q^7+q^-5"),
        (Observable::K1, "-M*(q^4+q^-2)"),
        (Observable::K2, "-a*M*(q^5+q^-3-q^4-q^-2)"),
        (Observable::P3, "M*(q^2-q^-2)"),
    ];
    for (o, want) in cases {
        assert_eq!(eigenvalue(&m, o, &v), Some(sc(want)), "{}", o.name());
    }
}

#[test]
fn procedure1_formulas_and_degeneracy() {
    for ts in 0..=2u32 {
        let m = Module::new(sys(), ts, Gauge::Rational).unwrap();
        let rest = m.highest();
        let c = [Observable::C1, Observable::C2].map(|o| eigenvalue(&m, o, &rest).unwrap());
        for l in 1..=2u32 {
            let expected = procedure1_expected(ts, l);
            let mut seen: Option<Vec<Option<Scalar>>> = None;
            for bits in 0..1u32 << l {
                let pat: Vec<Gen> = (0..l)
                    .map(|i| if bits >> i & 1 == 1 { b21() } else { g21() })
                    .collect();
                let v = procedure1(&m, &pat).unwrap();
                for (name, want) in &expected {
                    let o: Observable = name.parse().unwrap();
                    assert_eq!(
                        eigenvalue(&m, o, &v).as_ref(),
                        Some(want),
                        "s={ts}/2 {pat:?} {name}"
                    );
                }
                assert_eq!(eigenvalue(&m, Observable::C1, &v).as_ref(), Some(&c[0]));
                assert_eq!(eigenvalue(&m, Observable::C2, &v).as_ref(), Some(&c[1]));
                let tuple: Vec<_> = Observable::COMMUTING
                    .iter()
                    .map(|&o| eigenvalue(&m, o, &v))
                    .collect();
                match &seen {
                    None => seen = Some(tuple),
                    Some(t) => assert_eq!(t, &tuple),
                }
            }
        }
    }
}

#[test]
fn procedure1_rejects_other_letters() {
    let m = Module::new(sys(), 0, Gauge::Rational).unwrap();
    assert!(matches!(
        procedure1(&m, &[Gen::new(Mat::G, 1, 2)]),
        Err(StateError::BadArgument(_))
    ));
}

#[test]
fn procedures_2_to_4() {
    for ts in 0..=3u32 {
        let m = Module::new(sys(), ts, Gauge::Rational).unwrap();
        let j = ts as i32;
        for z in [Mat::G, Mat::B] {
            let v2 = procedure2(&m, z).unwrap();
            assert_eq!(eigenvalue(&m, Observable::K3, &v2), Some(k(j)));
            match procedure3(&m, z) {
                Ok(v) => {
                    assert_eq!(eigenvalue(&m, Observable::K3, &v), Some(k(j)));
                    assert_eq!(eigenvalue(&m, Observable::K4, &v), Some(Scalar::q_pow(j)));
                }
                Err(StateError::SpinTooLow { procedure: 3, .. }) => assert_eq!(ts, 0),
                Err(e) => panic!("{e}"),
            }
            match procedure4(&m, z) {
                Ok(v) => {
                    assert_eq!(eigenvalue(&m, Observable::K3, &v), Some(k(j - 2)));
                    assert_eq!(
                        eigenvalue(&m, Observable::K4, &v),
                        Some(Scalar::q_pow(j - 2))
                    );
                }
                Err(StateError::SpinTooLow { procedure: 4, .. }) => assert!(ts < 2),
                Err(e) => panic!("{e}"),
            }
        }
        assert!(procedure2(&m, Mat::P).is_err());
    }
}

fn binom(n: usize, r: usize) -> i64 {
    (0..r).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

#[test]
fn pi_polynomials_match_closed_form() {
    for n in 0..=8 {
        let mut want = vec![Scalar::zero(); n + 1];
        for r in 0..=n / 2 {
            let sign = if r % 2 == 0 { 1 } else { -1 };
            want[n - 2 * r] =
                Scalar::q_pow(2 * r as i32).mul_ref(&Scalar::from_int(sign * binom(n - r, r)));
        }
        assert_eq!(pi_polynomial(n), want, "n={n}");
    }
    let printed = ["-q^2", "0", "1"].map(sc);
    assert_eq!(pi_polynomial(2), printed.to_vec());
    let printed = ["0", "3*q^4", "0", "-4*q^2", "0", "1"].map(sc);
    assert_eq!(pi_polynomial(5), printed.to_vec());
}

#[test]
fn pi_states_are_energy_eigenstates() {
    let m = Module::new(sys(), 0, Gauge::Rational).unwrap();
    for z in [Mat::G, Mat::B] {
        let states = pi_states(&m, 6, z).unwrap();
        let t = OpMatrix::of(z).trq();
        for (n, v) in states.iter().enumerate() {
            let mut poly_state = ModuleState::zero(0);
            let mut power = m.highest();
            for c in pi_polynomial(n) {
                poly_state.add_scaled(&power, &c);
                power = m.apply(&t, &power).unwrap();
            }
            assert_eq!(&poly_state, v);
            let e = Scalar::mass().neg_ref().mul_ref(&k(n as i32));
            assert_eq!(eigenvalue(&m, Observable::K1, v), Some(e), "pi{n}");
            assert_eq!(eigenvalue(&m, Observable::K2, v), Some(Scalar::zero()));
            assert_eq!(eigenvalue(&m, Observable::K4, v), Some(Scalar::one()));
        }
    }
    let m1 = Module::new(sys(), 1, Gauge::Rational).unwrap();
    assert!(pi_states(&m1, 2, Mat::G).is_err());
}

#[test]
fn spin_half_states() {
    let m = Module::new(sys(), 1, Gauge::Hermitian).unwrap();
    let w13 = sc("a*M*(q^3+q^-1-q^2-1)");
    let w24 = sc("-a*M*(q^4+q^-2-q^3-q^-1)");
    for i in 1..=4u8 {
        let v = spin_half_s(&m, i).unwrap();
        assert_eq!(eigenvalue(&m, Observable::K4, &v), Some(Scalar::q()));
        assert_eq!(eigenvalue(&m, Observable::K3, &v), Some(sc("q^3+q^-1")));
        assert_eq!(
            eigenvalue(&m, Observable::K1, &v),
            Some(sc("-M*(q^3+q^-1)"))
        );
        let w = if i % 2 == 1 { &w13 } else { &w24 };
        assert_eq!(eigenvalue(&m, Observable::K2, &v).as_ref(), Some(w), "S{i}");
        let typeset = spin_half_s_with(&m, i, SpinHalfReading::Printed).unwrap();
        assert_eq!(eigenvalue(&m, Observable::K4, &typeset), None);
    }
    assert!(proportional(
        &spin_half_s(&m, 1).unwrap(),
        &spin_half_s(&m, 3).unwrap()
    ));
    let rational = Module::new(sys(), 1, Gauge::Rational).unwrap();
    assert!(matches!(spin_half_s(&rational, 1), Err(StateError::Gauge)));
}

#[test]
fn spin_one_s5() {
    let m = Module::new(sys(), 2, Gauge::Hermitian).unwrap();
    for z in [Mat::G, Mat::B] {
        let v = spin1_s5(&m, z).unwrap();
        assert_eq!(eigenvalue(&m, Observable::K4, &v), Some(Scalar::one()));
        assert_eq!(eigenvalue(&m, Observable::K3, &v), Some(sc("q^2+1")));
        assert_eq!(
            eigenvalue(&m, Observable::K1, &v),
            Some(sc("-M*(q^3+q^-1)"))
        );
        assert_eq!(eigenvalue(&m, Observable::K2, &v), Some(Scalar::zero()));
    }
}

#[test]
fn beta_is_q_cubed() {
    let b = solve_beta(sys()).unwrap();
    assert_eq!(b.beta, Scalar::q_pow(3));
    for ts in 0..=2u32 {
        let (w, c) = rest_invariants(sys(), ts).unwrap();
        assert_eq!(w, trq_w_rest_formula(ts));
        assert_eq!(c, casimir_w_rest_formula(ts));
    }
    assert_eq!(trq_w_rest_formula(0), Scalar::zero());
}

#[test]
fn energies() {
    let rows = spectrum(sys(), 4).unwrap();
    for r in &rows {
        assert!(r.agrees(), "l={}", r.l);
        for q in [1.0, 1.3, 2.0] {
            let p = NumericPoint::new(q, 1.0, 2.0);
            let l = r.l as f64;
            let want = 2.0 * (q.powf(l + 2.0) + q.powf(-l)) / (q * q + 1.0);
            assert!((r.eval(&p).unwrap() - want).abs() < 1e-12);
        }
    }
    assert_eq!(energy(0), Scalar::mass());
}

#[test]
fn diagonalize_recovers_pi_states() {
    let m = Module::new(sys(), 0, Gauge::Rational).unwrap();
    let t = OpMatrix::of(Mat::G).trq();
    let rest = m.highest();
    let t1 = m.apply(&t, &rest).unwrap();
    let t2 = m.apply(&t, &t1).unwrap();
    let point = NumericPoint::new(1.3, 0.7, 1.1);
    let d = diagonalize(&m, &op(Observable::K1), &[rest, t1, t2], &point).unwrap();
    assert!(d.is_exact());
    for (n, pi) in pi_states(&m, 2, Mat::G).unwrap().iter().enumerate() {
        let want = Scalar::mass().neg_ref().mul_ref(&k(n as i32));
        let p = d
            .exact
            .iter()
            .find(|p| p.eigenvalue == want)
            .expect("eigenvalue");
        assert!(proportional(&p.vectors[0], pi));
    }
}

#[test]
fn limits_converge() {
    let rows = limit_report(&LimitSpec::default());
    assert!(!rows.is_empty());
    for r in rows.iter().filter(|r| r.lambda == 1e-4) {
        let tol = if r.quantity == "energy" { 1e-5 } else { 1e-2 };
        assert!(r.error < tol, "{} {}: {}", r.quantity, r.index, r.error);
    }
}

fn small_poly() -> impl Strategy<Value = NCPoly> {
    let letter = prop::sample::select(Gen::all().filter(|g| g.mat() != Mat::B).collect::<Vec<_>>());
    prop::collection::vec((prop::collection::vec(letter, 0..3), -2i64..3), 1..3).prop_map(|terms| {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(Word::from_slice(&w), &Scalar::from_int(c));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn action_is_multiplicative(a in small_poly(), b in small_poly(), tm in prop::sample::select(vec![2, 0, -2])) {
        let m = Module::new(sys(), 2, Gauge::Rational).unwrap();
        let v = m.rest(tm).unwrap();
        let ab = m.apply(&a.mul_free(&b), &v).unwrap();
        let seq = m.apply(&a, &m.apply(&b, &v).unwrap()).unwrap();
        prop_assert_eq!(ab, seq);
    }

    #[test]
    fn relations_act_as_zero(idx in 0usize..123, tm in prop::sample::select(vec![1, -1])) {
        let m = Module::new(sys(), 1, Gauge::Rational).unwrap();
        let rules = sys().rules();
        let rel = rules[idx % rules.len()].relation();
        let v = m.apply(&NCPoly::letter(g21()), &m.rest(tm).unwrap()).unwrap();
        prop_assert!(m.apply(&rel, &v).unwrap().is_zero());
    }
}
