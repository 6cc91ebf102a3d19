//! C interface to `eudoxus`.
//!
//! Values are opaque `EudoxusReal` handles released with
//! [`eudoxus_real_free`]; strings returned through out-parameters are
//! released with [`eudoxus_string_free`]. Every function returns an
//! [`EudoxusStatus`], and on failure [`eudoxus_last_error`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use eudoxus::cli::{self, parse::parse, Config, EvalError, Outcome};
use eudoxus::real::{self, Fuel, RealError, SignResult};
use eudoxus::EndoNode;

/// An exact real. Thread-safe; share it freely but free it exactly once.
pub struct EudoxusReal {
    node: EndoNode,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EudoxusStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    /// A sign could not be certified within the fuel budget.
    Inconclusive = 4,
    InvalidArgument = 5,
    Panic = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: EudoxusStatus, msg: impl Into<String>) -> EudoxusStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> EudoxusStatus) -> EudoxusStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(EudoxusStatus::Panic, "internal panic"),
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, EudoxusStatus> {
    if s.is_null() {
        return Err(fail(EudoxusStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(EudoxusStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn real_ref<'a>(r: *const EudoxusReal) -> Result<&'a EndoNode, EudoxusStatus> {
    r.as_ref()
        .map(|r| &r.node)
        .ok_or_else(|| fail(EudoxusStatus::NullPointer, "null real handle"))
}

unsafe fn put_real(out: *mut *mut EudoxusReal, node: EndoNode) -> EudoxusStatus {
    if out.is_null() {
        return fail(EudoxusStatus::NullPointer, "null out-pointer");
    }
    *out = Box::into_raw(Box::new(EudoxusReal { node }));
    EudoxusStatus::Ok
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> EudoxusStatus {
    if out.is_null() {
        return fail(EudoxusStatus::NullPointer, "null out-pointer");
    }
    *out = CString::new(s).expect("no interior nul").into_raw();
    EudoxusStatus::Ok
}

fn fuel(n: u32) -> Result<Fuel, EudoxusStatus> {
    Fuel::new(n).map_err(|e| fail(EudoxusStatus::InvalidArgument, e.to_string()))
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn eudoxus_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses and lowers an expression such as `cf[1;(2)*] / 3`.
///
/// # Safety
/// `expr` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn eudoxus_parse(
    expr: *const c_char,
    fuel_doublings: u32,
    out: *mut *mut EudoxusReal,
) -> EudoxusStatus {
    guard(|| {
        let src = tri!(text(expr));
        let config = Config {
            fuel: tri!(fuel(fuel_doublings)),
            ..Config::default()
        };
        let e = match parse(src) {
            Ok(e) => e,
            Err(err) => return fail(EudoxusStatus::Syntax, err.to_string()),
        };
        match cli::lower(&e, &config) {
            Ok(node) => put_real(out, node),
            Err(err @ EvalError::Inconclusive { .. }) => {
                fail(EudoxusStatus::Inconclusive, err.to_string())
            }
            Err(err) => fail(EudoxusStatus::InvalidArgument, err.to_string()),
        }
    })
}

/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn eudoxus_from_int(k: i64, out: *mut *mut EudoxusReal) -> EudoxusStatus {
    guard(|| put_real(out, EndoNode::int(k)))
}

/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn eudoxus_from_ratio(
    p: i64,
    q: i64,
    out: *mut *mut EudoxusReal,
) -> EudoxusStatus {
    guard(|| match EndoNode::rat(p, q) {
        Ok(node) => put_real(out, node),
        Err(e) => fail(EudoxusStatus::InvalidArgument, e.to_string()),
    })
}

/// # Safety
/// `a`, `b` must be live handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn eudoxus_add(
    a: *const EudoxusReal,
    b: *const EudoxusReal,
    out: *mut *mut EudoxusReal,
) -> EudoxusStatus {
    guard(|| put_real(out, real::add(tri!(real_ref(a)), tri!(real_ref(b)))))
}

/// # Safety
/// `a`, `b` must be live handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn eudoxus_mul(
    a: *const EudoxusReal,
    b: *const EudoxusReal,
    out: *mut *mut EudoxusReal,
) -> EudoxusStatus {
    guard(|| put_real(out, real::mul(tri!(real_ref(a)), tri!(real_ref(b)))))
}

/// # Safety
/// `a` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn eudoxus_neg(
    a: *const EudoxusReal,
    out: *mut *mut EudoxusReal,
) -> EudoxusStatus {
    guard(|| put_real(out, real::neg(tri!(real_ref(a)))))
}

/// Returns `EUDOXUS_STATUS_INCONCLUSIVE` when the sign of `a` is not
/// certified within the budget.
///
/// # Safety
/// `a` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn eudoxus_invert(
    a: *const EudoxusReal,
    fuel_doublings: u32,
    out: *mut *mut EudoxusReal,
) -> EudoxusStatus {
    guard(|| {
        let f = tri!(fuel(fuel_doublings));
        match real::invert(tri!(real_ref(a)), f) {
            Ok(node) => put_real(out, node),
            Err(e @ RealError::InconclusiveSign { .. }) => {
                fail(EudoxusStatus::Inconclusive, e.to_string())
            }
            Err(e) => fail(EudoxusStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Writes 1 or -1 on a certified sign. An inconclusive search writes 0 and
/// returns `EUDOXUS_STATUS_INCONCLUSIVE`.
///
/// # Safety
/// `a` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn eudoxus_sign(
    a: *const EudoxusReal,
    fuel_doublings: u32,
    out: *mut i32,
) -> EudoxusStatus {
    guard(|| {
        let f = tri!(fuel(fuel_doublings));
        let node = tri!(real_ref(a));
        if out.is_null() {
            return fail(EudoxusStatus::NullPointer, "null out-pointer");
        }
        match real::sign(node, f) {
            SignResult::Positive { .. } => *out = 1,
            SignResult::Negative { .. } => *out = -1,
            s @ SignResult::Inconclusive { .. } => {
                *out = 0;
                return fail(EudoxusStatus::Inconclusive, s.to_string());
            }
        }
        EudoxusStatus::Ok
    })
}

/// Certified decimal such as `1.4142 ±1e-4`.
///
/// # Safety
/// `a` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn eudoxus_to_decimal(
    a: *const EudoxusReal,
    digits: u32,
    out: *mut *mut c_char,
) -> EudoxusStatus {
    guard(|| match real::to_decimal(tri!(real_ref(a)), digits) {
        Ok(d) => put_string(out, d.to_string()),
        Err(e) => fail(EudoxusStatus::InvalidArgument, e.to_string()),
    })
}

/// The certified defect bound, in decimal.
///
/// # Safety
/// `a` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn eudoxus_defect_bound(
    a: *const EudoxusReal,
    out: *mut *mut c_char,
) -> EudoxusStatus {
    guard(|| put_string(out, tri!(real_ref(a)).defect().to_string()))
}

/// Runs one calculator command line such as `saturate 6, 10`. The text and
/// the calculator's exit code (0, 1 or 2) are written out; the status only
/// reports problems with the call itself.
///
/// # Safety
/// `line` must be a NUL-terminated string; `out_text` and `out_code` must be
/// writable pointers.
#[no_mangle]
pub unsafe extern "C" fn eudoxus_execute(
    line: *const c_char,
    fuel_doublings: u32,
    digits: u32,
    out_text: *mut *mut c_char,
    out_code: *mut i32,
) -> EudoxusStatus {
    guard(|| {
        let src = tri!(text(line));
        let config = Config {
            fuel: tri!(fuel(fuel_doublings)),
            digits,
        };
        if out_code.is_null() {
            return fail(EudoxusStatus::NullPointer, "null out-pointer");
        }
        let outcome = cli::run_line(src, &config).unwrap_or_else(|| Outcome::ok(String::new()));
        *out_code = outcome.code;
        put_string(out_text, outcome.text)
    })
}

/// # Safety
/// `r` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn eudoxus_real_free(r: *mut EudoxusReal) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn eudoxus_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
