use std::process::{Command, Output};

use qpoincare::cli::expr::StateSpec;
use qpoincare::ncalg::parse_poly;
use qpoincare::qalgebra::base;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpoincare"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--format", "json", "verify", "commuting"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["command"], "verify");
    assert_eq!(v["status"], "ok");
    assert!(v["results"].as_array().unwrap().len() >= 15);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["normal-form", "P11*P21"]).status.code(), Some(0));
    assert_eq!(run(&["normal-form", "P11*"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["eigencheck", "--state", "S(1)", "--gauge", "rational"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn findings_exit_zero() {
    let o = run(&["--format", "json", "verify", "s-states"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "findings");
}

#[test]
fn normal_form_output_is_normal() {
    let o = run(&["--format", "json", "normal-form", "O22*O11 + P12*P11*G21"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let printed = v["results"][0]["value"].as_str().unwrap();
    let p = parse_poly(printed).unwrap();
    let sys = &base().system;
    assert_eq!(sys.nf(&p).unwrap(), p);
    let direct = sys
        .nf(&parse_poly("O22*O11 + P12*P11*G21").unwrap())
        .unwrap();
    assert_eq!(p, direct);
}

#[test]
fn state_spec_round_trip() {
    for src in [
        "rest(M,1/2,-1/2)",
        "pi(3,Gb)",
        "S(2)",
        "S(5,Gb)",
        "proc1(1,\"G21 Gb21\")",
        "proc3(3/2,G)",
    ] {
        let s: StateSpec = src.parse().unwrap();
        assert_eq!(s.to_string(), src);
        assert_eq!(s.to_string().parse::<StateSpec>().unwrap(), s);
    }
    assert_eq!(
        "rest(1)".parse::<StateSpec>().unwrap().to_string(),
        "rest(M,1,1)"
    );
    assert!("S(6)".parse::<StateSpec>().is_err());
    assert!("proc2(1/2)".parse::<StateSpec>().is_err());
}

#[test]
fn eigencheck_reports_values() {
    let o = run(&[
        "--format",
        "json",
        "eigencheck",
        "--state",
        "pi(2)",
        "--observable",
        "TrqP",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["results"][0]["eigenvalue"], "-M*(q^4+q^-2)");
}

#[test]
fn csv_and_text_formats() {
    let csv = stdout(&run(&["--format", "csv", "rules"]));
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("check,item,kind,value,expected,note,status")
    );
    assert!(lines.count() >= 123);
    let text = stdout(&run(&["verify", "ybe"]));
    assert!(text.trim_end().ends_with("failed)"));
    assert!(text.contains("verify: ok"));
}

#[test]
fn spectrum_at_q_one() {
    let o = run(&[
        "--format",
        "json",
        "spectrum",
        "--l-max",
        "3",
        "--numeric",
        "q=1,M=2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "ok");
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("qp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rep.json");
    let o = run(&[
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
        "rep",
        "--spin",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "rep");
    std::fs::remove_dir_all(dir).unwrap();
}
