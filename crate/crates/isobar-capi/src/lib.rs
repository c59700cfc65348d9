//! C ABI for the isobar library: opaque polynomial handles, status codes,
//! and UTF-8 string exchange. The matching header lives in
//! `include/isobar.h` (cbindgen layout; see `cbindgen.toml`).
//!
//! Conventions:
//! - constructors return NULL on failure and record a message retrievable
//!   through [`isobar_last_error`];
//! - functions with output parameters return an [`IsobarStatus`];
//! - every `char*` returned by the library must be released with
//!   [`isobar_string_free`], every polynomial with [`isobar_poly_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use isobar::arith::{evaluate_global, rational_power, CoreFunctionSpec};
use isobar::partition::parse_partition;
use isobar::poly::IsobaricPolynomial;
use isobar::rational::{format_rational, parse_rational, Rat};
use isobar::roots::{root, RootQuery};
use isobar::schur::{character_table, hook_reflect, schur_reflect, SchurBasis};
use isobar::weights::{detect_weight, parse_weight_spec, wip};

/// Result of a fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IsobarStatus {
    IsobarOk = 0,
    IsobarNullArgument = 1,
    IsobarInvalidArgument = 2,
    IsobarComputationError = 3,
    IsobarNotWeighted = 4,
}

use IsobarStatus::*;

/// Opaque handle to an exact isobaric polynomial.
pub struct IsobarPoly(IsobaricPolynomial);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into()).unwrap_or_else(|_| CString::new("invalid error").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

/// # Safety
/// `s` must be NULL or a NUL-terminated string valid for the call.
unsafe fn arg_str<'a>(s: *const c_char) -> Result<&'a str, IsobarStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(IsobarNullArgument);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not UTF-8");
        IsobarInvalidArgument
    })
}

fn give_string(s: String) -> *mut c_char {
    match CString::new(s) {
        Ok(c) => c.into_raw(),
        Err(_) => {
            set_error("output contained an interior NUL");
            ptr::null_mut()
        }
    }
}

fn give_poly(p: IsobaricPolynomial) -> *mut IsobarPoly {
    Box::into_raw(Box::new(IsobarPoly(p)))
}

unsafe fn poly_ref<'a>(p: *const IsobarPoly) -> Result<&'a IsobaricPolynomial, IsobarStatus> {
    if p.is_null() {
        set_error("null polynomial handle");
        return Err(IsobarNullArgument);
    }
    Ok(&(*p).0)
}

fn parse_weight_vector(spec: &str, len: usize) -> Result<isobar::WeightVector, String> {
    parse_weight_spec(spec)
        .and_then(|p| p.vector(len))
        .map_err(|e| e.to_string())
}

/// Message describing the most recent failure on this thread, or NULL.
/// The pointer is valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn isobar_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map(|c| c.as_ptr())
            .unwrap_or(ptr::null())
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must have been returned by an isobar function and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn isobar_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases a polynomial handle.
///
/// # Safety
/// `p` must have been returned by an isobar function and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn isobar_poly_free(p: *mut IsobarPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// P_{k,n,ω} for a weight spec (`ones`, `naturals`, `hook:r`, or a comma
/// list of fractions). NULL on error.
///
/// # Safety
/// `weights` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn isobar_wip(n: u32, k: u32, weights: *const c_char) -> *mut IsobarPoly {
    clear_error();
    let Ok(spec) = arg_str(weights) else { return ptr::null_mut() };
    if k == 0 {
        set_error("k must be at least 1");
        return ptr::null_mut();
    }
    let len = (n as usize).min(k as usize);
    match parse_weight_vector(spec, len)
        .and_then(|w| wip(n as usize, k as usize, &w).map_err(|e| e.to_string()))
    {
        Ok(p) => give_poly(p),
        Err(e) => {
            set_error(e);
            ptr::null_mut()
        }
    }
}

/// The Schur reflect of a partition such as "3,2"; `basis` is 'e' or 'h'.
/// NULL on error.
///
/// # Safety
/// `lambda` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn isobar_schur(lambda: *const c_char, basis: c_char) -> *mut IsobarPoly {
    clear_error();
    let Ok(lambda) = arg_str(lambda) else { return ptr::null_mut() };
    let basis = match basis as u8 {
        b'e' | b'E' => SchurBasis::Elementary,
        b'h' | b'H' => SchurBasis::Homogeneous,
        _ => {
            set_error("basis must be 'e' or 'h'");
            return ptr::null_mut();
        }
    };
    match parse_partition(lambda) {
        Ok(shape) => give_poly(schur_reflect(&shape, basis)),
        Err(e) => {
            set_error(e.to_string());
            ptr::null_mut()
        }
    }
}

/// The hook reflect of shape (n−r, 1^r). NULL on error.
#[no_mangle]
pub extern "C" fn isobar_hook(n: u32, r: u32) -> *mut IsobarPoly {
    clear_error();
    match hook_reflect(n as usize, r as usize) {
        Ok(p) => give_poly(p),
        Err(e) => {
            set_error(e.to_string());
            ptr::null_mut()
        }
    }
}

/// The level-n slice of the q-th level root H_{k,n,ω}; `q` is an exact
/// fraction string. NULL on error.
///
/// # Safety
/// `weights` and `q` must be valid NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn isobar_root(
    n: u32,
    k: u32,
    weights: *const c_char,
    q: *const c_char,
) -> *mut IsobarPoly {
    clear_error();
    let Ok(spec) = arg_str(weights) else { return ptr::null_mut() };
    let Ok(q) = arg_str(q) else { return ptr::null_mut() };
    if k == 0 {
        set_error("k must be at least 1");
        return ptr::null_mut();
    }
    let len = (n as usize).min(k as usize);
    let built = parse_rational(q).map_err(|e| e.to_string()).and_then(|q| {
        let omega = parse_weight_vector(spec, len)?;
        root(&RootQuery { n: n as usize, k: k as usize, omega, q }).map_err(|e| e.to_string())
    });
    match built {
        Ok(p) => give_poly(p),
        Err(e) => {
            set_error(e);
            ptr::null_mut()
        }
    }
}

/// Sum of two polynomials of one level. NULL on a grading mismatch.
///
/// # Safety
/// Both handles must be valid.
#[no_mangle]
pub unsafe extern "C" fn isobar_poly_add(
    a: *const IsobarPoly,
    b: *const IsobarPoly,
) -> *mut IsobarPoly {
    clear_error();
    let (Ok(a), Ok(b)) = (poly_ref(a), poly_ref(b)) else { return ptr::null_mut() };
    match a.add(b) {
        Ok(p) => give_poly(p),
        Err(e) => {
            set_error(e.to_string());
            ptr::null_mut()
        }
    }
}

/// Product of two polynomials.
///
/// # Safety
/// Both handles must be valid.
#[no_mangle]
pub unsafe extern "C" fn isobar_poly_mul(
    a: *const IsobarPoly,
    b: *const IsobarPoly,
) -> *mut IsobarPoly {
    clear_error();
    let (Ok(a), Ok(b)) = (poly_ref(a), poly_ref(b)) else { return ptr::null_mut() };
    give_poly(a.mul(b))
}

/// Drops every term involving t_j with j > k.
///
/// # Safety
/// `p` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn isobar_poly_truncate(p: *const IsobarPoly, k: u32) -> *mut IsobarPoly {
    clear_error();
    let Ok(p) = poly_ref(p) else { return ptr::null_mut() };
    give_poly(p.truncate(k as usize))
}

/// Parses the JSON polynomial form. NULL on error.
///
/// # Safety
/// `json` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn isobar_poly_from_json(json: *const c_char) -> *mut IsobarPoly {
    clear_error();
    let Ok(json) = arg_str(json) else { return ptr::null_mut() };
    match IsobaricPolynomial::from_json_str(json) {
        Ok(p) => give_poly(p),
        Err(e) => {
            set_error(e.to_string());
            ptr::null_mut()
        }
    }
}

/// The level of the polynomial; −1 on a null handle.
///
/// # Safety
/// `p` must be NULL or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn isobar_poly_level(p: *const IsobarPoly) -> i64 {
    match poly_ref(p) {
        Ok(p) => p.level() as i64,
        Err(_) => -1,
    }
}

/// The number of stored monomials; −1 on a null handle.
///
/// # Safety
/// `p` must be NULL or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn isobar_poly_term_count(p: *const IsobarPoly) -> i64 {
    match poly_ref(p) {
        Ok(p) => p.num_terms() as i64,
        Err(_) => -1,
    }
}

/// Text rendering, monomials ascending: `t1^4 + 3t1^2*t2 + ...`.
/// Free with isobar_string_free.
///
/// # Safety
/// `p` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn isobar_poly_text(p: *const IsobarPoly) -> *mut c_char {
    clear_error();
    match poly_ref(p) {
        Ok(p) => give_string(p.to_string()),
        Err(_) => ptr::null_mut(),
    }
}

/// JSON rendering: {"level":n,"terms":[{"alpha":[...],"coeff":"..."}]}.
/// Free with isobar_string_free.
///
/// # Safety
/// `p` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn isobar_poly_json(p: *const IsobarPoly) -> *mut c_char {
    clear_error();
    match poly_ref(p) {
        Ok(p) => give_string(p.to_json_string()),
        Err(_) => ptr::null_mut(),
    }
}

/// Evaluates at the comma-separated rational point `point` (value of t_1
/// first). On success writes a fraction string to `*out`.
///
/// # Safety
/// `p` must be valid; `point` a NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn isobar_poly_evaluate(
    p: *const IsobarPoly,
    point: *const c_char,
    out: *mut *mut c_char,
) -> IsobarStatus {
    clear_error();
    if out.is_null() {
        set_error("null output parameter");
        return IsobarNullArgument;
    }
    *out = ptr::null_mut();
    let poly = match poly_ref(p) {
        Ok(p) => p,
        Err(status) => return status,
    };
    let point = match arg_str(point) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let coords: Result<Vec<Rat>, _> = point.split(',').map(parse_rational).collect();
    let coords = match coords {
        Ok(c) => c,
        Err(e) => {
            set_error(e.to_string());
            return IsobarInvalidArgument;
        }
    };
    match poly.evaluate(&coords) {
        Ok(value) => {
            *out = give_string(format_rational(&value));
            IsobarOk
        }
        Err(e) => {
            set_error(e.to_string());
            IsobarComputationError
        }
    }
}

/// Recovers the weight vector of a weighted polynomial as a comma list in
/// `*out`, or returns IsobarNotWeighted.
///
/// # Safety
/// `p` must be valid; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn isobar_poly_weight(
    p: *const IsobarPoly,
    out: *mut *mut c_char,
) -> IsobarStatus {
    clear_error();
    if out.is_null() {
        set_error("null output parameter");
        return IsobarNullArgument;
    }
    *out = ptr::null_mut();
    let poly = match poly_ref(p) {
        Ok(p) => p,
        Err(status) => return status,
    };
    match detect_weight(poly) {
        Some(w) => {
            let list = w
                .entries()
                .iter()
                .map(format_rational)
                .collect::<Vec<_>>()
                .join(",");
            *out = give_string(list);
            IsobarOk
        }
        None => IsobarNotWeighted,
    }
}

/// Local values χ^{*q}(p^0..p^n) of the core function with the given
/// comma-separated coefficients, as a JSON array of fraction strings.
/// Free with isobar_string_free; NULL on error.
///
/// # Safety
/// `coeffs` and `q` must be valid NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn isobar_arith_local(
    coeffs: *const c_char,
    q: *const c_char,
    n: u32,
) -> *mut c_char {
    clear_error();
    let Ok(coeffs) = arg_str(coeffs) else { return ptr::null_mut() };
    let Ok(q) = arg_str(q) else { return ptr::null_mut() };
    let built = (|| -> Result<String, String> {
        let coeffs: Vec<Rat> = coeffs
            .split(',')
            .map(parse_rational)
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let spec = CoreFunctionSpec::new(coeffs).map_err(|e| e.to_string())?;
        let q = parse_rational(q).map_err(|e| e.to_string())?;
        let local = rational_power(&spec, &q, n as usize).map_err(|e| e.to_string())?;
        serde_json::to_string(&local.values().iter().map(format_rational).collect::<Vec<_>>())
            .map_err(|e| e.to_string())
    })();
    match built {
        Ok(s) => give_string(s),
        Err(e) => {
            set_error(e);
            ptr::null_mut()
        }
    }
}

/// χ^{*q}(m) over the factorization of m; writes a fraction string.
///
/// # Safety
/// `coeffs` and `q` must be valid NUL-terminated strings; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn isobar_arith_global(
    coeffs: *const c_char,
    q: *const c_char,
    m: u64,
    out: *mut *mut c_char,
) -> IsobarStatus {
    clear_error();
    if out.is_null() {
        set_error("null output parameter");
        return IsobarNullArgument;
    }
    *out = ptr::null_mut();
    let coeffs = match arg_str(coeffs) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let q = match arg_str(q) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let parsed = (|| -> Result<(CoreFunctionSpec, Rat), String> {
        let coeffs: Vec<Rat> = coeffs
            .split(',')
            .map(parse_rational)
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        Ok((
            CoreFunctionSpec::new(coeffs).map_err(|e| e.to_string())?,
            parse_rational(q).map_err(|e| e.to_string())?,
        ))
    })();
    let (spec, q) = match parsed {
        Ok(pair) => pair,
        Err(e) => {
            set_error(e);
            return IsobarInvalidArgument;
        }
    };
    match evaluate_global(&spec, &q, m) {
        Ok(value) => {
            *out = give_string(format_rational(&value));
            IsobarOk
        }
        Err(e) => {
            set_error(e.to_string());
            IsobarComputationError
        }
    }
}

/// The character table of Sym(n) as JSON with partition row/column labels.
/// Free with isobar_string_free; NULL on error (n = 0 or beyond the bound).
#[no_mangle]
pub extern "C" fn isobar_chartable_json(n: u32) -> *mut c_char {
    clear_error();
    match character_table(n as usize) {
        Ok(table) => give_string(table.to_json_string()),
        Err(e) => {
            set_error(e.to_string());
            ptr::null_mut()
        }
    }
}
