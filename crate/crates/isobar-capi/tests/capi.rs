//! ABI tests driven from Rust: every exported function, including the
//! error paths.

use std::ffi::{c_char, CStr, CString};

use isobar_capi::*;

fn text(p: *const IsobarPoly) -> String {
    unsafe {
        let s = isobar_poly_text(p);
        assert!(!s.is_null());
        let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
        isobar_string_free(s);
        out
    }
}

fn last_error() -> String {
    unsafe {
        let e = isobar_last_error();
        assert!(!e.is_null(), "expected an error message");
        CStr::from_ptr(e).to_str().unwrap().to_owned()
    }
}

fn take_string(s: *mut c_char) -> String {
    unsafe {
        assert!(!s.is_null());
        let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
        isobar_string_free(s);
        out
    }
}

#[test]
fn wip_and_text() {
    let weights = CString::new("ones").unwrap();
    let p = unsafe { isobar_wip(4, 4, weights.as_ptr()) };
    assert!(!p.is_null());
    assert_eq!(unsafe { isobar_poly_level(p) }, 4);
    assert_eq!(unsafe { isobar_poly_term_count(p) }, 5);
    assert_eq!(text(p), "t1^4 + 3t1^2*t2 + t2^2 + 2t1*t3 + t4");
    unsafe { isobar_poly_free(p) };
}

#[test]
fn schur_hook_and_root() {
    let lambda = CString::new("3,2").unwrap();
    let s = unsafe { isobar_schur(lambda.as_ptr(), 'e' as c_char) };
    let h = unsafe { isobar_schur(lambda.as_ptr(), 'h' as c_char) };
    assert_eq!(text(s), "t1*t2^2 - t1^2*t3 + t2*t3 - t1*t4");
    assert_eq!(text(s), text(h));
    unsafe {
        isobar_poly_free(s);
        isobar_poly_free(h);
    }

    let hook = isobar_hook(4, 1);
    assert_eq!(text(hook), "-t1^2*t2 - t2^2 - t1*t3 - t4");
    unsafe { isobar_poly_free(hook) };

    let weights = CString::new("ones").unwrap();
    let q = CString::new("1/2").unwrap();
    let r = unsafe { isobar_root(2, 2, weights.as_ptr(), q.as_ptr()) };
    assert_eq!(text(r), "(3/8)t1^2 + (1/2)t2");
    unsafe { isobar_poly_free(r) };
}

#[test]
fn arithmetic_on_handles() {
    let ones = CString::new("ones").unwrap();
    let hookw = CString::new("hook:1").unwrap();
    let f4 = unsafe { isobar_wip(4, 4, ones.as_ptr()) };
    let s31 = unsafe { isobar_wip(4, 4, hookw.as_ptr()) };
    // adding members adds weights: ones + hook:1 = (1,0,0,0)
    let sum = unsafe { isobar_poly_add(f4, s31) };
    assert_eq!(text(sum), "t1^4 + 2t1^2*t2 + t1*t3");

    let t1 = unsafe { isobar_wip(1, 1, ones.as_ptr()) };
    let prod = unsafe { isobar_poly_mul(t1, t1) };
    assert_eq!(text(prod), "t1^2");

    let trunc = unsafe { isobar_poly_truncate(f4, 2) };
    assert_eq!(text(trunc), "t1^4 + 3t1^2*t2 + t2^2");

    // grading mismatch
    let bad = unsafe { isobar_poly_add(f4, t1) };
    assert!(bad.is_null());
    assert!(last_error().contains("level mismatch"));

    unsafe {
        isobar_poly_free(trunc);
        isobar_poly_free(prod);
        isobar_poly_free(t1);
        isobar_poly_free(sum);
        isobar_poly_free(s31);
        isobar_poly_free(f4);
    }
}

#[test]
fn evaluate_weight_and_json() {
    let ones = CString::new("ones").unwrap();
    let f4 = unsafe { isobar_wip(4, 4, ones.as_ptr()) };

    let point = CString::new("1,1,1,1").unwrap();
    let mut out: *mut c_char = std::ptr::null_mut();
    let status = unsafe { isobar_poly_evaluate(f4, point.as_ptr(), &mut out) };
    assert_eq!(status, IsobarStatus::IsobarOk);
    assert_eq!(take_string(out), "8");

    // short point is a computation error
    let short = CString::new("1,1").unwrap();
    let mut out2: *mut c_char = std::ptr::null_mut();
    let status = unsafe { isobar_poly_evaluate(f4, short.as_ptr(), &mut out2) };
    assert_eq!(status, IsobarStatus::IsobarComputationError);
    assert!(out2.is_null());

    let mut w: *mut c_char = std::ptr::null_mut();
    assert_eq!(unsafe { isobar_poly_weight(f4, &mut w) }, IsobarStatus::IsobarOk);
    assert_eq!(take_string(w), "1,1,1,1");

    let lambda = CString::new("2,2").unwrap();
    let s22 = unsafe { isobar_schur(lambda.as_ptr(), 'e' as c_char) };
    let mut none: *mut c_char = std::ptr::null_mut();
    assert_eq!(
        unsafe { isobar_poly_weight(s22, &mut none) },
        IsobarStatus::IsobarNotWeighted
    );
    assert!(none.is_null());

    let json = unsafe { isobar_poly_json(s22) };
    let json = take_string(json);
    assert_eq!(
        json,
        r#"{"level":4,"terms":[{"alpha":[0,2],"coeff":"1"},{"alpha":[1,0,1],"coeff":"-1"}]}"#
    );
    let back = unsafe {
        let c = CString::new(json).unwrap();
        isobar_poly_from_json(c.as_ptr())
    };
    assert_eq!(text(back), text(s22));

    unsafe {
        isobar_poly_free(back);
        isobar_poly_free(s22);
        isobar_poly_free(f4);
    }
}

#[test]
fn arith_entry_points() {
    let coeffs = CString::new("1,1").unwrap();
    let q1 = CString::new("1").unwrap();
    let qh = CString::new("1/2").unwrap();

    let local = unsafe { isobar_arith_local(coeffs.as_ptr(), qh.as_ptr(), 2) };
    assert_eq!(take_string(local), r#"["1","1/2","7/8"]"#);

    let mut out: *mut c_char = std::ptr::null_mut();
    let status = unsafe { isobar_arith_global(coeffs.as_ptr(), q1.as_ptr(), 12, &mut out) };
    assert_eq!(status, IsobarStatus::IsobarOk);
    assert_eq!(take_string(out), "2");

    // m = 0 is a computation error
    let mut out2: *mut c_char = std::ptr::null_mut();
    let status = unsafe { isobar_arith_global(coeffs.as_ptr(), q1.as_ptr(), 0, &mut out2) };
    assert_eq!(status, IsobarStatus::IsobarComputationError);

    // malformed coefficients are invalid arguments
    let bad = CString::new("1,x").unwrap();
    let mut out3: *mut c_char = std::ptr::null_mut();
    let status = unsafe { isobar_arith_global(bad.as_ptr(), q1.as_ptr(), 5, &mut out3) };
    assert_eq!(status, IsobarStatus::IsobarInvalidArgument);
}

#[test]
fn chartable_and_errors() {
    let json = isobar_chartable_json(2);
    assert_eq!(
        take_string(json),
        r#"{"n":2,"rows":[[2],[1,1]],"columns":[[1,1],[2]],"entries":[["1","1"],["1","-1"]]}"#
    );

    assert!(isobar_chartable_json(99).is_null());
    assert!(last_error().contains("up to"));

    assert!(isobar_hook(3, 7).is_null());
    assert!(last_error().contains("hook"));

    // null handles are tolerated by the observers
    assert_eq!(unsafe { isobar_poly_level(std::ptr::null()) }, -1);
    assert_eq!(unsafe { isobar_poly_term_count(std::ptr::null()) }, -1);
    unsafe {
        isobar_poly_free(std::ptr::null_mut());
        isobar_string_free(std::ptr::null_mut());
    }
}
