//! C interface to `lscat`.
//!
//! Expressions and results are opaque heap handles released with their
//! `_free` functions. Every fallible call returns an [`LscatStatus`]; the
//! message of the last failure on the calling thread is available from
//! [`lscat_last_error`]. Strings returned to the caller are released with
//! [`lscat_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lscat::category::{
    check_certificate, detectability, ls_category, ls_category_complex, verify_ganea, CatResult, Certificate, Detect,
};
use lscat::complex::parse_dcx;
use lscat::manifold::ManifoldExpr;
use lscat::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LscatStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    BadLensParams = 4,
    NoTriangulation = 5,
    NonOrientable = 6,
    ComputationError = 7,
    InvalidArgument = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LscatDetect {
    Detectable = 0,
    Unknown = 1,
    NotApplicable = 2,
}

/// A normalized connected-sum expression.
pub struct LscatExpr(ManifoldExpr);

/// A category value with its certificate.
pub struct LscatResult(CatResult);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> LscatStatus {
    match e {
        Error::Parse { .. } => LscatStatus::ParseError,
        Error::BadLensParams { .. } => LscatStatus::BadLensParams,
        Error::NoTriangulation(_) => LscatStatus::NoTriangulation,
        Error::NonOrientable(_) => LscatStatus::NonOrientable,
        Error::Invalid(_) | Error::BadModulus(_) => LscatStatus::InvalidArgument,
        _ => LscatStatus::ComputationError,
    }
}

fn fail(e: Error) -> LscatStatus {
    set_error(&e.to_string());
    status_of(&e)
}

/// Runs `f`, turning panics into [`LscatStatus::Panic`].
fn guard(f: impl FnOnce() -> LscatStatus) -> LscatStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            LscatStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, LscatStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(LscatStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        LscatStatus::InvalidUtf8
    })
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message of the last failure (or certificate rejection) on this thread.
/// The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn lscat_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses and normalizes a connected-sum expression such as `"L(5,1) # T3"`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lscat_expr_parse(text: *const c_char, out: *mut *mut LscatExpr) -> LscatStatus {
    guard(|| {
        if out.is_null() {
            return LscatStatus::NullPointer;
        }
        let s = match read_str(text) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match ManifoldExpr::parse_normalized(s) {
            Ok(e) => {
                *out = Box::into_raw(Box::new(LscatExpr(e)));
                LscatStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Normal form of an expression as a new string.
///
/// # Safety
/// `expr` must come from [`lscat_expr_parse`].
#[no_mangle]
pub unsafe extern "C" fn lscat_expr_to_string(expr: *const LscatExpr) -> *mut c_char {
    match expr.as_ref() {
        Some(e) => to_c_string(e.0.to_string()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `expr` must come from [`lscat_expr_parse`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lscat_expr_free(expr: *mut LscatExpr) {
    if !expr.is_null() {
        drop(Box::from_raw(expr));
    }
}

unsafe fn store(out: *mut *mut LscatResult, r: lscat::Result<CatResult>) -> LscatStatus {
    match r {
        Ok(r) => {
            *out = Box::into_raw(Box::new(LscatResult(r)));
            LscatStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Category of an expression.
///
/// # Safety
/// `expr` must come from [`lscat_expr_parse`]; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lscat_category(expr: *const LscatExpr, out: *mut *mut LscatResult) -> LscatStatus {
    guard(|| match (expr.as_ref(), out.is_null()) {
        (Some(e), false) => store(out, ls_category(&e.0)),
        _ => LscatStatus::NullPointer,
    })
}

/// Category of `M × S^n`.
///
/// # Safety
/// As [`lscat_category`].
#[no_mangle]
pub unsafe extern "C" fn lscat_ganea(expr: *const LscatExpr, n: usize, out: *mut *mut LscatResult) -> LscatStatus {
    guard(|| match (expr.as_ref(), out.is_null()) {
        (Some(e), false) => store(out, verify_ganea(&e.0, n)),
        _ => LscatStatus::NullPointer,
    })
}

/// Category of a triangulated closed 3-manifold given as DCX text.
///
/// # Safety
/// `dcx` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lscat_category_dcx(dcx: *const c_char, out: *mut *mut LscatResult) -> LscatStatus {
    guard(|| {
        if out.is_null() {
            return LscatStatus::NullPointer;
        }
        let s = match read_str(dcx) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match parse_dcx(s) {
            Ok(x) => store(out, ls_category_complex(&x)),
            Err(e) => fail(e),
        }
    })
}

/// Lower and upper bounds; equal when the value is exact.
///
/// # Safety
/// `result` must come from a category call; `lo` and `hi` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lscat_result_bounds(result: *const LscatResult, lo: *mut usize, hi: *mut usize) -> LscatStatus {
    match result.as_ref() {
        Some(r) if !lo.is_null() && !hi.is_null() => {
            let (a, b) = r.0.bounds();
            *lo = a;
            *hi = b;
            LscatStatus::Ok
        }
        _ => LscatStatus::NullPointer,
    }
}

/// Detectability verdict carried by a result.
///
/// # Safety
/// `result` must come from a category call.
#[no_mangle]
pub unsafe extern "C" fn lscat_result_detect(result: *const LscatResult) -> LscatDetect {
    match result.as_ref().map(|r| &r.0.detect) {
        Some(Detect::Detectable(_)) => LscatDetect::Detectable,
        Some(Detect::Unknown { .. }) => LscatDetect::Unknown,
        _ => LscatDetect::NotApplicable,
    }
}

/// Certificate text of a result as a new string.
///
/// # Safety
/// `result` must come from a category call.
#[no_mangle]
pub unsafe extern "C" fn lscat_result_certificate(result: *const LscatResult) -> *mut c_char {
    match result.as_ref() {
        Some(r) => to_c_string(r.0.certificate.to_string()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `result` must come from a category call and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lscat_result_free(result: *mut LscatResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// Parses and checks certificate text; `*accepted` receives the verdict.
/// Diagnostics of a rejected certificate are available from
/// [`lscat_last_error`].
///
/// # Safety
/// `text` must be a NUL-terminated string and `accepted` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lscat_check_certificate(text: *const c_char, accepted: *mut bool) -> LscatStatus {
    guard(|| {
        if accepted.is_null() {
            return LscatStatus::NullPointer;
        }
        let s = match read_str(text) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match Certificate::parse(s) {
            Ok(c) => {
                let rep = check_certificate(&c);
                *accepted = rep.ok;
                if !rep.ok {
                    set_error(&rep.diagnostics.join("\n"));
                }
                LscatStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Structural detectability verdict for an expression.
///
/// # Safety
/// `expr` must come from [`lscat_expr_parse`].
#[no_mangle]
pub unsafe extern "C" fn lscat_detect(expr: *const LscatExpr) -> LscatDetect {
    match expr.as_ref().map(|e| detectability(&e.0)) {
        Some(Detect::Detectable(_)) => LscatDetect::Detectable,
        Some(Detect::Unknown { .. }) => LscatDetect::Unknown,
        _ => LscatDetect::NotApplicable,
    }
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lscat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
