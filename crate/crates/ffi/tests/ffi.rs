use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use qpoincare_ffi::*;

fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { qp_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(qp_last_error()) }
        .to_str()
        .unwrap()
        .to_string()
}

fn system() -> *mut QpSystem {
    let mut sys = ptr::null_mut();
    assert_eq!(unsafe { qp_system_new(&mut sys) }, QpStatus::Ok);
    sys
}

#[test]
fn normal_form_round_trip() {
    let sys = system();
    let expr = CString::new("O22*O11").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { qp_normal_form(sys, expr.as_ptr(), &mut out) },
        QpStatus::Ok
    );
    assert_eq!(take(out), "q^2*O21*O12+1");
    let mut n = 0usize;
    assert_eq!(unsafe { qp_system_rule_count(sys, &mut n) }, QpStatus::Ok);
    assert_eq!(n, 123);
    unsafe { qp_system_free(sys) };
}

#[test]
fn parse_errors_are_reported() {
    let sys = system();
    let expr = CString::new("G11*(").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { qp_normal_form(sys, expr.as_ptr(), &mut out) },
        QpStatus::Parse
    );
    assert!(out.is_null());
    assert!(!last_error().is_empty());
    let bad = CString::new("nope(1)").unwrap();
    let mut st = ptr::null_mut();
    assert_eq!(
        unsafe { qp_state_new(sys, bad.as_ptr(), QpGauge::Default, &mut st) },
        QpStatus::Parse
    );
    unsafe { qp_system_free(sys) };
}

#[test]
fn null_pointers_are_rejected() {
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { qp_normal_form(ptr::null(), ptr::null(), &mut out) },
        QpStatus::NullPointer
    );
    let sys = system();
    assert_eq!(
        unsafe { qp_normal_form(sys, ptr::null(), &mut out) },
        QpStatus::NullPointer
    );
    assert_eq!(
        unsafe { qp_system_new(ptr::null_mut()) },
        QpStatus::NullPointer
    );
    unsafe {
        qp_string_free(ptr::null_mut());
        qp_state_free(ptr::null_mut());
        qp_system_free(sys);
    }
}

#[test]
fn invalid_utf8_is_rejected() {
    let sys = system();
    let bytes = CString::new(vec![0xffu8, 0xfe]).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { qp_normal_form(sys, bytes.as_ptr(), &mut out) },
        QpStatus::InvalidUtf8
    );
    unsafe { qp_system_free(sys) };
}

#[test]
fn eigencheck_through_handles() {
    let sys = system();
    let spec = CString::new("S(1)").unwrap();
    let mut st = ptr::null_mut();
    assert_eq!(
        unsafe { qp_state_new(sys, spec.as_ptr(), QpGauge::Default, &mut st) },
        QpStatus::Ok
    );
    let op = CString::new("O11").unwrap();
    let mut is_eigen = false;
    let mut ev = ptr::null_mut();
    assert_eq!(
        unsafe { qp_eigencheck(st, op.as_ptr(), &mut is_eigen, &mut ev) },
        QpStatus::Ok
    );
    assert!(is_eigen);
    assert_eq!(take(ev), "q");

    let spec = CString::new("rest(M,0)").unwrap();
    let mut rest = ptr::null_mut();
    assert_eq!(
        unsafe { qp_state_new(sys, spec.as_ptr(), QpGauge::Rational, &mut rest) },
        QpStatus::Ok
    );
    let g = CString::new("G21").unwrap();
    let mut moved = ptr::null_mut();
    assert_eq!(
        unsafe { qp_state_apply(rest, g.as_ptr(), &mut moved) },
        QpStatus::Ok
    );
    let mut text = ptr::null_mut();
    assert_eq!(
        unsafe { qp_state_to_string(moved, &mut text) },
        QpStatus::Ok
    );
    assert!(take(text).contains("G21"));
    let p3 = CString::new("P3").unwrap();
    assert_eq!(
        unsafe { qp_eigencheck(moved, p3.as_ptr(), &mut is_eigen, &mut ev) },
        QpStatus::Ok
    );
    assert!(is_eigen);
    assert_eq!(take(ev), "M*(q-q^-1)");

    let spec = CString::new("pi(2)").unwrap();
    let mut pi2 = ptr::null_mut();
    assert_eq!(
        unsafe { qp_state_new(sys, spec.as_ptr(), QpGauge::Default, &mut pi2) },
        QpStatus::Ok
    );
    assert_eq!(
        unsafe { qp_eigencheck(pi2, p3.as_ptr(), &mut is_eigen, &mut ev) },
        QpStatus::Ok
    );
    assert!(!is_eigen);
    assert!(ev.is_null());
    unsafe {
        qp_state_free(st);
        qp_state_free(rest);
        qp_state_free(moved);
        qp_state_free(pi2);
        qp_system_free(sys);
    }
}

#[test]
fn verify_suite_as_json() {
    let suite = CString::new("ybe").unwrap();
    let mut passed = false;
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { qp_verify(suite.as_ptr(), QpFormat::Json, &mut passed, &mut out) },
        QpStatus::Ok
    );
    assert!(passed);
    let json = take(out);
    assert!(json.contains("\"command\": \"verify\""));
    let bad = CString::new("nope").unwrap();
    assert_eq!(
        unsafe { qp_verify(bad.as_ptr(), QpFormat::Text, &mut passed, &mut out) },
        QpStatus::Parse
    );
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(qp_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_the_api_and_compiles() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/qpoincare.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "qp_last_error",
        "qp_version",
        "qp_string_free",
        "qp_system_new",
        "qp_system_free",
        "qp_normal_form",
        "qp_state_new",
        "qp_state_apply",
        "qp_state_to_string",
        "qp_state_free",
        "qp_eigencheck",
        "qp_verify",
        "typedef struct QpSystem QpSystem",
        "typedef struct QpState QpState",
    ] {
        assert!(text.contains(name), "missing {name}");
    }
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-x", "c", "-std=c99", "-Wall", "-Werror"])
        .arg(&header)
        .status()
    else {
        eprintln!("cc not found; skipping compile check");
        return;
    };
    assert!(status.success());
}
