use proptest::prelude::*;
use qpoincare::field::Scalar;
use qpoincare::ncalg::confluence::{complete, confluence_check};
use qpoincare::ncalg::orient::{
    orient, relation_rank, relations, same_span, violating_products, Order,
};
use qpoincare::ncalg::star::star;
use qpoincare::ncalg::{parse_poly, Gen, Mat, NCPoly, RewriteError, RewriteSystem, Rule, Word};
use qpoincare::qalgebra::standard::orient_block;
use qpoincare::qalgebra::tables::printed;
use qpoincare::qalgebra::{base, Tag};

fn sys() -> &'static RewriteSystem {
    &base().system
}

fn g(m: Mat, i: u8, j: u8) -> Gen {
    Gen::new(m, i, j)
}

fn quantum_plane() -> RewriteSystem {
    let x = g(Mat::P, 1, 1);
    let y = g(Mat::P, 2, 1);
    let rule = Rule {
        lhs: [x, y],
        rhs: NCPoly::term(Word::from_slice(&[y, x]), Scalar::q()),
    };
    RewriteSystem::from_rules([rule]).unwrap()
}

#[test]
fn generator_names_round_trip() {
    let names: Vec<String> = Gen::all().map(Gen::name).collect();
    assert_eq!(names.len(), Gen::COUNT);
    for g in Gen::all() {
        assert_eq!(Gen::parse(&g.name()), Some(g));
        assert_eq!(Gen::from_rank(g.rank()), g);
    }
    assert_eq!(Gen::new(Mat::B, 1, 2).name(), "Gb12");
    assert_eq!(Gen::parse("Q11"), None);
    assert_eq!(Gen::parse("P13"), None);
}

#[test]
fn quantum_plane_normal_order() {
    let s = quantum_plane();
    let x = g(Mat::P, 1, 1);
    let y = g(Mat::P, 2, 1);
    for a in 0..4usize {
        for b in 0..4usize {
            let mut w = vec![x; a];
            w.extend(std::iter::repeat_n(y, b));
            let nf = s.nf_word(&Word::from_slice(&w)).unwrap();
            let mut expect = vec![y; b];
            expect.extend(std::iter::repeat_n(x, a));
            let want = NCPoly::term(Word::from_slice(&expect), Scalar::q_pow((a * b) as i32));
            assert_eq!(nf, want);
        }
    }
}

#[test]
fn increasing_rules_are_rejected() {
    let x = g(Mat::P, 1, 1);
    let y = g(Mat::P, 2, 1);
    let rule = Rule {
        lhs: [y, x],
        rhs: NCPoly::word(Word::from_slice(&[x, y])),
    };
    assert!(matches!(
        RewriteSystem::from_rules([rule]),
        Err(RewriteError::NotDecreasing { .. })
    ));
}

#[test]
fn base_system_shape() {
    assert_eq!(sys().len(), 123);
    assert!(base().completion.added.is_empty());
    let c = confluence_check(sys()).unwrap();
    assert_eq!(c.overlaps_checked, 608);
    assert!(c.is_confluent());
}

#[test]
fn completion_of_a_confluent_system_adds_nothing() {
    let (done, report) = complete(sys(), 2).unwrap();
    assert!(report.is_complete());
    assert!(report.added.is_empty());
    assert_eq!(done.len(), sys().len());
}

#[test]
fn printed_left_hand_sides_lead() {
    let order = Order::standard();
    for tag in Tag::PRINTED {
        let block = printed(tag).unwrap();
        for r in &block.relations {
            let lead = r.relation.leading().unwrap().0.clone();
            let mut words: Vec<Word> = r.relation.terms().map(|(w, _)| w.clone()).collect();
            words.sort_by(|a, b| order.cmp_words(a, b));
            assert_eq!(words.last(), Some(&lead), "{}", r.text);
        }
    }
}

#[test]
fn orient_round_trip_on_pp() {
    let rules = orient_block(Tag::PP).unwrap();
    let again = orient(&relations(&rules), &Order::standard()).unwrap();
    assert_eq!(again, rules);
    let printed_pp = printed(Tag::PP).unwrap().polys();
    assert!(same_span(&relations(&rules), &printed_pp).unwrap());
}

#[test]
fn orient_every_family() {
    for tag in Tag::ALL {
        let rules = orient_block(tag).unwrap();
        let rels = relations(&rules);
        assert_eq!(relation_rank(&rels).unwrap(), rules.len());
        let again = orient(&rels, &Order::standard()).unwrap();
        assert!(same_span(&relations(&again), &rels).unwrap());
    }
}

#[test]
fn every_cross_product_is_ordered() {
    let segs = [Mat::G, Mat::B, Mat::O, Mat::P];
    let letters = |m: Mat| Gen::all().filter(move |x| x.mat() == m).collect::<Vec<_>>();
    for (i, &a) in segs.iter().enumerate() {
        for &b in &segs[i..] {
            for w in violating_products(&letters(a), &letters(b), &Order::standard()) {
                assert!(!sys().is_normal(&w), "{w} is not rewritten");
            }
        }
    }
}

#[test]
fn table_example_products() {
    let p = parse_poly("P12*P11").unwrap();
    let n = sys().nf(&p).unwrap();
    assert!(n.terms().all(|(w, _)| sys().is_normal(w)));
    assert_ne!(n, p);
    let o = sys().nf(&parse_poly("O22*O11").unwrap()).unwrap();
    assert_eq!(o.to_string(), "q^2*O21*O12+1");
}

#[test]
fn star_of_hermitian_letters() {
    let s = sys();
    for (src, img) in [
        ("P12", "P21"),
        ("P11", "P11"),
        ("O12", "O21"),
        ("O22", "O22"),
    ] {
        assert_eq!(
            star(&parse_poly(src).unwrap(), s).unwrap(),
            s.nf(&parse_poly(img).unwrap()).unwrap()
        );
    }
    let i = parse_poly("i*P12").unwrap();
    assert_eq!(star(&i, s).unwrap(), parse_poly("-i*P21").unwrap());
}

#[test]
fn star_is_an_involution_on_letters() {
    let s = sys();
    for x in Gen::all() {
        let p = NCPoly::letter(x);
        assert_eq!(star(&star(&p, s).unwrap(), s).unwrap(), p, "{}", x.name());
    }
}

fn letter() -> impl Strategy<Value = Gen> {
    (0u8..16).prop_map(Gen::from_rank)
}

fn coeff() -> impl Strategy<Value = Scalar> {
    (-3i64..4, -2i32..3, any::<bool>()).prop_map(|(n, e, i)| {
        let c = Scalar::from_int(n).mul_ref(&Scalar::q_pow(e));
        if i {
            c.mul_ref(&Scalar::i())
        } else {
            c
        }
    })
}

fn poly(max_len: usize, max_terms: usize) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec(
        (prop::collection::vec(letter(), 0..=max_len), coeff()),
        1..=max_terms,
    )
    .prop_map(|ts| NCPoly::from_terms(ts.into_iter().map(|(w, c)| (Word::from_slice(&w), c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn nf_is_idempotent(p in poly(4, 3)) {
        let n = sys().nf(&p).unwrap();
        prop_assert_eq!(sys().nf(&n).unwrap(), n.clone());
        prop_assert!(n.terms().all(|(w, _)| sys().is_normal(w)));
    }

    #[test]
    fn multiplication_is_associative(x in poly(2, 2), y in poly(2, 2), z in poly(2, 2)) {
        let s = sys();
        let left = s.mul_any(&s.mul_any(&x, &y).unwrap(), &z).unwrap();
        let right = s.mul_any(&x, &s.mul_any(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(&left, &s.nf(&x.mul_free(&y).mul_free(&z)).unwrap());
        prop_assert_eq!(left, right);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn nf_is_linear(x in poly(3, 3), y in poly(3, 3), c in coeff()) {
        let s = sys();
        let lhs = s.nf(&x.add(&y.scale(&c))).unwrap();
        let rhs = s.nf(&x).unwrap().add(&s.nf(&y).unwrap().scale(&c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn star_reverses_products(x in poly(1, 2), y in poly(1, 2)) {
        let s = sys();
        let lhs = star(&s.mul_any(&x, &y).unwrap(), s).unwrap();
        let rhs = s.mul(&star(&y, s).unwrap(), &star(&x, s).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn star_is_antilinear(x in poly(2, 2), c in coeff()) {
        let s = sys();
        let lhs = star(&x.scale(&c), s).unwrap();
        let rhs = star(&x, s).unwrap().scale(&c.conj());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn parse_print_round_trip(p in poly(3, 3)) {
        let text = p.to_string();
        prop_assert_eq!(parse_poly(&text).unwrap(), p);
    }

    #[test]
    fn word_order_is_total_and_graded(a in prop::collection::vec(letter(), 0..4), b in prop::collection::vec(letter(), 0..4)) {
        let (wa, wb) = (Word::from_slice(&a), Word::from_slice(&b));
        let o = Order::standard();
        let c = o.cmp_words(&wa, &wb);
        prop_assert_eq!(c.reverse(), o.cmp_words(&wb, &wa));
        prop_assert_eq!(c == std::cmp::Ordering::Equal, wa == wb);
        if wa.len() < wb.len() {
            prop_assert_eq!(c, std::cmp::Ordering::Less);
        }
    }
}
