//! C interface. Every function returns a [`QpStatus`]; strings handed out
//! must be released with [`qp_string_free`], handles with their `_free`
//! function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use qpoincare::cli::expr::{parse_expr, StateSpec};
use qpoincare::cli::report::Report;
use qpoincare::cli::verify::{run_all, run_suite, VerifyOptions, SUITES};
use qpoincare::cli::CliError;
use qpoincare::ncalg::RewriteSystem;
use qpoincare::qalgebra::base;
use qpoincare::rep::Gauge;
use qpoincare::states::{Module, ModuleState};

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum QpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Compute = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum QpGauge {
    /// The state's default gauge.
    Default = 0,
    Rational = 1,
    Hermitian = 2,
}

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum QpFormat {
    Text = 0,
    Json = 1,
    Csv = 2,
}

/// The normal-ordering engine.
pub struct QpSystem {
    sys: &'static RewriteSystem,
}

/// A state together with the module it lives in.
pub struct QpState {
    module: Arc<Module<'static>>,
    state: ModuleState,
    label: String,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: QpStatus, msg: &str) -> QpStatus {
    set_error(msg);
    status
}

fn from_cli(e: CliError) -> QpStatus {
    let s = if e.exit_code() == 2 {
        QpStatus::Parse
    } else {
        QpStatus::Compute
    };
    fail(s, &e.to_string())
}

fn guard(f: impl FnOnce() -> QpStatus) -> QpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == QpStatus::Ok {
                set_error("");
            }
            s
        }
        Err(_) => fail(QpStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, QpStatus> {
    if p.is_null() {
        return Err(fail(QpStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(QpStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

unsafe fn write_str(out: *mut *mut c_char, s: String) -> QpStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            QpStatus::Ok
        }
        Err(_) => fail(QpStatus::Compute, "result contains a NUL byte"),
    }
}

macro_rules! check_out {
    ($($p:expr),*) => {
        $(if $p.is_null() {
            return fail(QpStatus::NullPointer, concat!("null pointer: ", stringify!($p)));
        })*
    };
}

macro_rules! try_qp {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message for the last failed call on this thread; empty after success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn qp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version string; static, do not free.
#[no_mangle]
pub extern "C" fn qp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds (once per process) and returns the rewrite system.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qp_system_new(out: *mut *mut QpSystem) -> QpStatus {
    guard(|| {
        check_out!(out);
        *out = Box::into_raw(Box::new(QpSystem {
            sys: &base().system,
        }));
        QpStatus::Ok
    })
}

/// # Safety
/// `sys` must come from [`qp_system_new`] or be null.
#[no_mangle]
pub unsafe extern "C" fn qp_system_free(sys: *mut QpSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Number of rewrite rules.
///
/// # Safety
/// `sys` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qp_system_rule_count(sys: *const QpSystem, out: *mut usize) -> QpStatus {
    guard(|| {
        check_out!(sys, out);
        *out = (*sys).sys.len();
        QpStatus::Ok
    })
}

/// Normal form of an expression over letters, scalar symbols and
/// observable names.
///
/// # Safety
/// `sys`, `expr` and `out` must be valid; `expr` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn qp_normal_form(
    sys: *const QpSystem,
    expr: *const c_char,
    out: *mut *mut c_char,
) -> QpStatus {
    guard(|| {
        check_out!(sys, out);
        let src = try_qp!(read_str(expr));
        let s = (*sys).sys;
        let p = try_qp!(parse_expr(src, s).map_err(from_cli));
        let n = try_qp!(s
            .nf(&p)
            .map_err(|e| fail(QpStatus::Compute, &e.to_string())));
        write_str(out, n.to_string())
    })
}

/// Builds a state from a description such as `rest(M,1/2)`, `pi(3)` or
/// `S(2)`.
///
/// # Safety
/// `sys`, `spec` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qp_state_new(
    sys: *const QpSystem,
    spec: *const c_char,
    gauge: QpGauge,
    out: *mut *mut QpState,
) -> QpStatus {
    guard(|| {
        check_out!(sys, out);
        let src = try_qp!(read_str(spec));
        let parsed: StateSpec = try_qp!(src.parse().map_err(from_cli));
        let g = match gauge {
            QpGauge::Default => None,
            QpGauge::Rational => Some(Gauge::Rational),
            QpGauge::Hermitian => Some(Gauge::Hermitian),
        };
        let (module, state) = try_qp!(parsed
            .build((*sys).sys, g)
            .map_err(|e| fail(QpStatus::Compute, &e.to_string())));
        *out = Box::into_raw(Box::new(QpState {
            module: Arc::new(module),
            state,
            label: parsed.to_string(),
        }));
        QpStatus::Ok
    })
}

/// # Safety
/// `st` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn qp_state_free(st: *mut QpState) {
    if !st.is_null() {
        drop(Box::from_raw(st));
    }
}

/// Expansion of the state in the Γ-word basis.
///
/// # Safety
/// `st` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qp_state_to_string(st: *const QpState, out: *mut *mut c_char) -> QpStatus {
    guard(|| {
        check_out!(st, out);
        write_str(out, (*st).state.to_string())
    })
}

/// Applies an operator and returns the result as a new state.
///
/// # Safety
/// `st`, `op` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qp_state_apply(
    st: *const QpState,
    op: *const c_char,
    out: *mut *mut QpState,
) -> QpStatus {
    guard(|| {
        check_out!(st, out);
        let src = try_qp!(read_str(op));
        let st = &*st;
        let p = try_qp!(parse_expr(src, st.module.system()).map_err(from_cli));
        let v = try_qp!(st
            .module
            .apply(&p, &st.state)
            .map_err(|e| fail(QpStatus::Compute, &e.to_string())));
        *out = Box::into_raw(Box::new(QpState {
            module: Arc::clone(&st.module),
            state: v,
            label: format!("{src} {}", st.label),
        }));
        QpStatus::Ok
    })
}

/// Tests the state against an operator. On success `is_eigen` is set and,
/// for eigenstates, `eigenvalue` receives the eigenvalue; otherwise it is
/// set to null.
///
/// # Safety
/// `st`, `op`, `is_eigen` and `eigenvalue` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qp_eigencheck(
    st: *const QpState,
    op: *const c_char,
    is_eigen: *mut bool,
    eigenvalue: *mut *mut c_char,
) -> QpStatus {
    guard(|| {
        check_out!(st, is_eigen, eigenvalue);
        let src = try_qp!(read_str(op));
        let st = &*st;
        let p = try_qp!(parse_expr(src, st.module.system()).map_err(from_cli));
        let r = try_qp!(st
            .module
            .eigencheck(src, &p, &st.label, &st.state)
            .map_err(|e| fail(QpStatus::Compute, &e.to_string())));
        *is_eigen = r.is_eigenstate();
        match r.eigenvalue {
            Some(e) => write_str(eigenvalue, e.to_string()),
            None => {
                *eigenvalue = ptr::null_mut();
                QpStatus::Ok
            }
        }
    })
}

/// Runs a verification suite (or `all`) and returns the report. `passed`
/// is false when any check failed.
///
/// # Safety
/// `suite`, `passed` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qp_verify(
    suite: *const c_char,
    format: QpFormat,
    passed: *mut bool,
    out: *mut *mut c_char,
) -> QpStatus {
    guard(|| {
        check_out!(passed, out);
        let name = try_qp!(read_str(suite));
        let opts = VerifyOptions::default();
        let results = if name == "all" {
            run_all(&opts)
        } else if SUITES.contains(&name) {
            run_suite(name, &opts)
        } else {
            return fail(QpStatus::Parse, &format!("unknown suite '{name}'"));
        };
        let mut report = Report::new("verify");
        report.input("suite", name);
        report.results = try_qp!(results.map_err(from_cli));
        *passed = report.status().exit_code() == 0;
        let text = match format {
            QpFormat::Text => report.to_text(),
            QpFormat::Json => report.to_json(),
            QpFormat::Csv => report.to_csv(),
        };
        write_str(out, text)
    })
}
