use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use lscat_ffi::*;

fn parse(s: &str) -> (LscatStatus, *mut LscatExpr) {
    let text = CString::new(s).unwrap();
    let mut e = ptr::null_mut();
    let st = unsafe { lscat_expr_parse(text.as_ptr(), &mut e) };
    (st, e)
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(lscat_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn category_through_handles() {
    let (st, e) = parse("T3 # L(5,1)");
    assert_eq!(st, LscatStatus::Ok);
    unsafe {
        let s = lscat_expr_to_string(e);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "T3 # L(5,1)");
        lscat_string_free(s);

        let mut r = ptr::null_mut();
        assert_eq!(lscat_category(e, &mut r), LscatStatus::Ok);
        let (mut lo, mut hi) = (0, 0);
        assert_eq!(lscat_result_bounds(r, &mut lo, &mut hi), LscatStatus::Ok);
        assert_eq!((lo, hi), (3, 3));
        assert_eq!(lscat_result_detect(r), LscatDetect::Detectable);

        let cert = lscat_result_certificate(r);
        let mut ok = false;
        assert_eq!(lscat_check_certificate(cert, &mut ok), LscatStatus::Ok);
        assert!(ok);
        lscat_string_free(cert);
        lscat_result_free(r);
        lscat_expr_free(e);
    }
}

#[test]
fn ganea_and_detect() {
    let (_, e) = parse("RP3");
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(lscat_ganea(e, 1, &mut r), LscatStatus::Ok);
        let (mut lo, mut hi) = (0, 0);
        lscat_result_bounds(r, &mut lo, &mut hi);
        assert_eq!((lo, hi), (4, 4));
        lscat_result_free(r);
        lscat_expr_free(e);
    }
    let (_, e) = parse("S1~S2 # L(3,1)");
    assert_eq!(unsafe { lscat_detect(e) }, LscatDetect::Unknown);
    unsafe { lscat_expr_free(e) };
}

#[test]
fn error_codes() {
    let (st, e) = parse("L(4,2)");
    assert_eq!(st, LscatStatus::BadLensParams);
    assert!(e.is_null());
    assert!(last_error().contains("L(4,2)"));

    let (st, _) = parse("T3 # ");
    assert_eq!(st, LscatStatus::ParseError);
    assert!(last_error().contains("byte 5"));

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { lscat_expr_parse(ptr::null(), &mut out) }, LscatStatus::NullPointer);
    assert_eq!(unsafe { lscat_category(ptr::null(), &mut ptr::null_mut()) }, LscatStatus::NullPointer);

    let (_, e) = parse("S3");
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { lscat_ganea(e, 0, &mut r) }, LscatStatus::InvalidArgument);
    unsafe { lscat_expr_free(e) };

    let bad = CString::new("dcx 1\ndim 3\n").unwrap();
    assert_eq!(unsafe { lscat_category_dcx(bad.as_ptr(), &mut r) }, LscatStatus::ParseError);
}

#[test]
fn rejected_certificate_reports_diagnostics() {
    let (_, e) = parse("T3");
    unsafe {
        let mut r = ptr::null_mut();
        lscat_category(e, &mut r);
        let cert = lscat_result_certificate(r);
        let text = CStr::from_ptr(cert).to_str().unwrap().replace("bound=3 premise=Verified ref=\"aspherical", "bound=2 premise=Verified ref=\"aspherical");
        let text = CString::new(text).unwrap();
        let mut ok = true;
        assert_eq!(lscat_check_certificate(text.as_ptr(), &mut ok), LscatStatus::Ok);
        assert!(!ok);
        assert!(last_error().contains("lower"));
        lscat_string_free(cert);
        lscat_result_free(r);
        lscat_expr_free(e);
    }
}

#[test]
fn dcx_input() {
    let dcx = lscat::complex::write_dcx(&lscat::complex::generator("S1xS2", &[]).unwrap());
    let dcx = CString::new(dcx).unwrap();
    let mut r = ptr::null_mut();
    unsafe {
        assert_eq!(lscat_category_dcx(dcx.as_ptr(), &mut r), LscatStatus::Ok);
        let (mut lo, mut hi) = (0, 0);
        lscat_result_bounds(r, &mut lo, &mut hi);
        assert_eq!((lo, hi), (2, 2));
        lscat_result_free(r);
    }
}

#[test]
fn header_is_generated_and_valid_c() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/lscat.h")).unwrap();
    for name in [
        "lscat_expr_parse",
        "lscat_category",
        "lscat_ganea",
        "lscat_category_dcx",
        "lscat_check_certificate",
        "lscat_result_free",
        "typedef struct LscatExpr LscatExpr",
        "LSCAT_STATUS_NO_TRIANGULATION = 5",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", "-"])
        .arg("-I")
        .arg(dir.join("include"))
        .stdin(std::process::Stdio::piped())
        .spawn()
        .and_then(|mut child| {
            use std::io::Write;
            child
                .stdin
                .take()
                .unwrap()
                .write_all(b"#include \"lscat.h\"\nint main(void) { LscatExpr *e = 0; return lscat_expr_parse(\"S3\", &e); }\n")?;
            child.wait()
        })
    else {
        eprintln!("no C compiler available; skipping syntax check");
        return;
    };
    assert!(status.success());
}
