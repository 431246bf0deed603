use std::process::{Command, Stdio};
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use qpoincare::cli::expr::StateSpec;
use qpoincare::cli::report::{Record, Status};
use qpoincare::cli::verify::{run_suite, VerifyOptions};
use qpoincare::field::{NumericPoint, Scalar};
use qpoincare::ncalg::{parse_poly, Gen, NCPoly, RewriteSystem, Word};
use qpoincare::qalgebra::checks::commuting_set_pairs;
use qpoincare::qalgebra::{base, Observable};
use qpoincare::rep::Gauge;
use qpoincare::states::analysis::{limit_report, spectrum, LimitSpec};
use qpoincare::states::procedures::spin_half_s;
use qpoincare::states::Module;

const HERMITICITY_TOL: f64 = 1e-12;
const ENERGY_TOL: f64 = 1e-5;
const LIMIT_TOL: f64 = 1e-2;
const ENGINE_CASES: u32 = 500;
const L_MAX: u32 = 6;

type Criterion = fn() -> Outcome;

struct Outcome {
    pass: bool,
    detail: String,
}

fn sys() -> &'static RewriteSystem {
    &base().system
}

fn suites(names: &[&str]) -> Vec<Record> {
    let opts = VerifyOptions::default();
    names
        .iter()
        .flat_map(|n| run_suite(n, &opts).unwrap_or_else(|e| panic!("suite {n}: {e}")))
        .collect()
}

fn summarize(records: &[Record], extra: &[(&str, bool)]) -> Outcome {
    let failed: Vec<&str> = records
        .iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| r.item.as_str())
        .collect();
    let findings = records
        .iter()
        .filter(|r| r.status == Status::Finding)
        .count();
    let bad_extra: Vec<&str> = extra
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| *n)
        .collect();
    let mut detail = format!("{} records, {} findings", records.len(), findings);
    if !failed.is_empty() {
        detail.push_str(&format!(", failed: {}", failed.join("; ")));
    }
    if !bad_extra.is_empty() {
        detail.push_str(&format!(", failed checks: {}", bad_extra.join("; ")));
    }
    Outcome {
        pass: failed.is_empty() && bad_extra.is_empty() && !records.is_empty(),
        detail,
    }
}

fn count(records: &[Record], check: &str) -> usize {
    records.iter().filter(|r| r.check == check).count()
}

fn c1_ybe() -> Outcome {
    let r = suites(&["ybe"]);
    summarize(&r, &[("two records", r.len() == 2)])
}

fn c2_rtt() -> Outcome {
    let r = suites(&["rtt"]);
    let dup = r.iter().filter(|x| x.item.ends_with("duplicate")).count();
    let distinct = r
        .iter()
        .any(|x| x.item == "distinct printed relations" && x.value == "66");
    summarize(
        &r,
        &[("66 distinct", distinct), ("one duplicate", dup == 1)],
    )
}

fn c3_omega() -> Outcome {
    summarize(&suites(&["omega-link"]), &[])
}

fn c4_commuting() -> Outcome {
    let r = suites(&["commuting"]);
    let pairs = commuting_set_pairs(sys()).unwrap().len();
    summarize(&r, &[("15 commuting-set pairs", pairs == 15)])
}

fn c5_subalgebra() -> Outcome {
    let r = suites(&["subalgebra"]);
    let caveat = r
        .iter()
        .any(|x| x.item == "[TrqOmega, P11]" && x.status == Status::Ok);
    summarize(&r, &[("[TrqOmega, P11] nonzero", caveat)])
}

fn c6_rep() -> Outcome {
    let r = suites(&["rep"]);
    let herm = r
        .iter()
        .filter(|x| x.item.contains("hermiticity"))
        .all(|x| {
            x.value
                .parse::<f64>()
                .map(|d| d < HERMITICITY_TOL)
                .unwrap_or(false)
        });
    summarize(&r, &[("hermiticity", herm)])
}

fn c7_procedure1() -> Outcome {
    let r = suites(&["procedures", "degeneracy"]);
    let mut patterns: Vec<&str> = r
        .iter()
        .filter(|x| x.check == "procedure1")
        .filter_map(|x| x.item.split_once(' ').map(|(_, p)| p))
        .collect();
    patterns.sort();
    patterns.dedup();
    summarize(
        &r,
        &[
            ("42 patterns", patterns.len() == 42),
            ("degeneracy", count(&r, "degeneracy") == 9),
        ],
    )
}

fn c8_pi() -> Outcome {
    let r = suites(&["pi"]);
    summarize(
        &r,
        &[(
            "coefficient lists",
            r.iter()
                .filter(|x| x.item.ends_with("coefficients"))
                .count()
                == 4,
        )],
    )
}

fn c9_s_states() -> Outcome {
    let r = suites(&["s-states"]);
    let m = Module::new(sys(), 1, Gauge::Hermitian).unwrap();
    let p3 = Observable::P3.poly(sys()).unwrap();
    let flagged = [2u8, 4].iter().all(|&i| {
        let v = spin_half_s(&m, i).unwrap();
        !m.eigencheck("P3", &p3, "S", &v).unwrap().is_eigenstate()
    });
    summarize(&r, &[("S2, S4 not P3 eigenstates", flagged)])
}

fn c10_beta() -> Outcome {
    let r = suites(&["beta"]);
    let q3 = r
        .iter()
        .any(|x| x.item == "solve_beta" && x.value == Scalar::q_pow(3).to_string());
    summarize(&r, &[("beta = q^3", q3)])
}

fn c11_spectrum() -> Outcome {
    let r = suites(&["spectrum", "limits"]);
    let rows = spectrum(sys(), L_MAX).unwrap();
    let exact = rows.len() == L_MAX as usize + 1 && rows.iter().all(|x| x.agrees());
    let grid = limit_report(&LimitSpec::default());
    let mut monotone = true;
    let mut within = true;
    for row in &grid {
        let tol = if row.quantity == "energy" {
            ENERGY_TOL
        } else {
            LIMIT_TOL
        };
        let before: Vec<f64> = grid
            .iter()
            .filter(|x| x.quantity == row.quantity && x.index == row.index && x.lambda > row.lambda)
            .map(|x| x.error)
            .collect();
        monotone &= before.iter().all(|&e| e >= row.error);
        if row.lambda == 1e-4 {
            within &= row.error < tol;
        }
    }
    let p = NumericPoint::new(1.0, 1.0, 1.0);
    let at1 = rows
        .iter()
        .all(|x| (x.eval(&p).unwrap() - 1.0).abs() < 1e-12);
    summarize(
        &r,
        &[
            ("exact table", exact),
            ("monotone", monotone),
            ("tolerances", within),
            ("q = 1", at1),
        ],
    )
}

fn random_poly(max_len: usize, max_terms: usize) -> impl Strategy<Value = NCPoly> {
    let letter = (0u8..16).prop_map(Gen::from_rank);
    let coeff =
        (-3i64..4, -2i32..3).prop_map(|(n, e)| Scalar::from_int(n).mul_ref(&Scalar::q_pow(e)));
    prop::collection::vec(
        (prop::collection::vec(letter, 0..=max_len), coeff),
        1..=max_terms,
    )
    .prop_map(|ts| NCPoly::from_terms(ts.into_iter().map(|(w, c)| (Word::from_slice(&w), c))))
}

fn runner() -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases: ENGINE_CASES,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn c12_engine() -> Outcome {
    let r = suites(&["engine"]);
    let s = sys();
    let idempotent = runner()
        .run(&random_poly(4, 3), |p| {
            let n = s.nf(&p).unwrap();
            prop_assert_eq!(s.nf(&n).unwrap(), n);
            Ok(())
        })
        .is_ok();
    let associative = runner()
        .run(
            &(random_poly(2, 2), random_poly(2, 2), random_poly(2, 2)),
            |(x, y, z)| {
                let (x, y, z) = (s.nf(&x).unwrap(), s.nf(&y).unwrap(), s.nf(&z).unwrap());
                let left = s.mul(&s.mul(&x, &y).unwrap(), &z).unwrap();
                let right = s.mul(&x, &s.mul(&y, &z).unwrap()).unwrap();
                prop_assert_eq!(left, right);
                Ok(())
            },
        )
        .is_ok();
    summarize(
        &r,
        &[
            ("nf idempotent", idempotent),
            ("associativity", associative),
        ],
    )
}

fn c13_diagonalize() -> Outcome {
    summarize(&suites(&["diagonalize"]), &[])
}

fn c14_cli() -> Outcome {
    let spawn = || {
        Command::new(env!("CARGO_BIN_EXE_qpoincare"))
            .args(["verify", "all", "--format", "json"])
            .stdout(Stdio::piped())
            .spawn()
            .expect("binary runs")
    };
    let (a, b) = (spawn(), spawn());
    let (a, b) = (a.wait_with_output().unwrap(), b.wait_with_output().unwrap());
    let deterministic = a.stdout == b.stdout && !a.stdout.is_empty();
    let verify_exit = a.status.code() == Some(0);
    let mut round_trip = true;
    for src in [
        "q^2*O21*O12+1",
        "(q-1/q)*G21*B12 - M*a*P11",
        "i*r*O11*P22 + 3/2",
    ] {
        let p = parse_poly(src).unwrap();
        round_trip &= parse_poly(&p.to_string()).unwrap() == p;
        let n = sys().nf(&p).unwrap();
        round_trip &= parse_poly(&n.to_string()).unwrap() == n;
    }
    for src in [
        "rest(M,1,-1)",
        "pi(4,Gb)",
        "S(5,G)",
        "proc1(1/2,\"G21 Gb21\")",
        "proc4(2,Gb)",
    ] {
        let s: StateSpec = src.parse().unwrap();
        round_trip &= s.to_string().parse::<StateSpec>().unwrap() == s;
    }
    let code = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_qpoincare"))
            .args(args)
            .output()
            .unwrap()
            .status
            .code()
    };
    let exits = code(&["verify", "ybe"]) == Some(0)
        && code(&["normal-form", "O11*("]) == Some(2)
        && code(&["eigencheck", "--state", "S(1)", "--gauge", "rational"]) == Some(1);
    let json: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap_or_default();
    let status = json["status"] == "findings";
    Outcome {
        pass: deterministic && verify_exit && round_trip && exits && status,
        detail: format!(
            "deterministic {deterministic}, verify exit {verify_exit}, round trip {round_trip}, exit codes {exits}, status findings {status}"
        ),
    }
}

fn main() {
    let criteria: [(&str, Criterion); 14] = [
        ("Yang-Baxter equation", c1_ybe),
        ("RTT expansion matches the relation tables", c2_rtt),
        ("Omega link", c3_omega),
        ("commuting set", c4_commuting),
        ("subalgebra invariants", c5_subalgebra),
        ("spin-j representations", c6_rep),
        ("procedure 1 and degeneracy", c7_procedure1),
        ("pi states", c8_pi),
        ("S states", c9_s_states),
        ("beta fixing", c10_beta),
        ("spectrum and limits", c11_spectrum),
        ("engine health", c12_engine),
        ("diagonalization", c13_diagonalize),
        ("CLI contract", c14_cli),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        println!(
            "criterion {:>2} {:<45} {}  ({}; {:.1}s)",
            i + 1,
            name,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
        if !o.pass {
            failed.push(i + 1);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 14 criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
