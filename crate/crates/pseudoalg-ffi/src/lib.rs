//! C interface to `pseudoalg`.
//!
//! Algebras are exposed as an opaque handle, `PaAlgebra`, created by
//! [`pa_algebra_parse`] or [`pa_algebra_from_family`] and released with
//! [`pa_algebra_free`].  Every fallible function returns a [`PaStatus`];
//! on failure a description is available from [`pa_last_error`] until the
//! next call on the same thread.  Strings returned through `char **out`
//! parameters are owned by the caller and released with [`pa_string_free`].
//!
//! No function unwinds across the boundary: panics are caught and reported
//! as `PA_STATUS_INTERNAL`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pseudoalg::catalog::{self, Mode, Params};
use pseudoalg::io::{parse_algebra, print_algebra};
use pseudoalg::lambda::{format_lambda, to_lambda_with, Charset, SignConvention};
use pseudoalg::{Classification, PseudoAlgebra};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The algebra text could not be parsed.
    Parse = 3,
    /// Unknown family or invalid parameters.
    Catalog = 4,
    /// An enumeration argument was out of range.
    InvalidArgument = 5,
    /// A bug in the library; the message says where.
    Internal = 6,
}

/// Classification of a pseudoalgebra.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaClassification {
    Lie = 0,
    LeibnizNotLie = 1,
    NotLeibniz = 2,
}

/// Sign convention of the λ-bracket output.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaSignConvention {
    /// `λ` stands for `s ⊗ 1`.
    Canonical = 0,
    /// `λ ↦ −λ`: the usual conformal-algebra axioms.
    Reverse = 1,
}

/// Opaque algebra handle.
pub struct PaAlgebra {
    inner: PseudoAlgebra,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', "\\0");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(PaStatus, String);

/// Runs `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PaStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PaStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal error: {msg}"));
            PaStatus::Internal
        }
    }
}

/// # Safety
/// `p` is null or a valid NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(PaStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Failure(PaStatus::InvalidUtf8, format!("{what}: {e}")))
}

/// # Safety
/// `a` is null or a handle returned by this library and not yet freed.
unsafe fn algebra<'a>(a: *const PaAlgebra) -> Result<&'a PseudoAlgebra, Failure> {
    a.as_ref().map(|h| &h.inner).ok_or_else(|| Failure(PaStatus::NullArgument, "algebra handle is null".into()))
}

fn out_ptr<T>(out: *mut T) -> Result<(), Failure> {
    if out.is_null() {
        Err(Failure(PaStatus::NullArgument, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', "\\0")).expect("NUL bytes replaced").into_raw()
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn pa_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message describing the last failure on this thread, or null.  The
/// pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn pa_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses an algebra in the `.pa` text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pa_algebra_parse(text: *const c_char, out: *mut *mut PaAlgebra) -> PaStatus {
    guard(|| {
        out_ptr(out)?;
        *out = ptr::null_mut();
        let text = read_str(text, "text")?;
        let inner = parse_algebra(text).map_err(|e| Failure(PaStatus::Parse, e.to_string()))?;
        *out = Box::into_raw(Box::new(PaAlgebra { inner }));
        Ok(())
    })
}

/// Builds a member of a catalog family.  `params` holds `name=value`
/// assignments separated by `;` or newlines and may be null or empty.
///
/// # Safety
/// `id` and `params` (if non-null) must be NUL-terminated strings and
/// `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pa_algebra_from_family(
    id: *const c_char,
    params: *const c_char,
    out: *mut *mut PaAlgebra,
) -> PaStatus {
    guard(|| {
        out_ptr(out)?;
        *out = ptr::null_mut();
        let id = read_str(id, "family id")?;
        let params = if params.is_null() { "" } else { read_str(params, "params")? };
        let pairs = params.split([';', '\n']).map(str::trim).filter(|s| !s.is_empty());
        let p = Params::parse_pairs(pairs).map_err(|e| Failure(PaStatus::Catalog, e))?;
        let built =
            catalog::build_mode(id, &p, Mode::Corrected).map_err(|e| Failure(PaStatus::Catalog, e.to_string()))?;
        *out = Box::into_raw(Box::new(PaAlgebra { inner: built.algebra }));
        Ok(())
    })
}

/// Releases a handle.  Null is ignored.
///
/// # Safety
/// `a` must be null or a handle from this library that is not used again.
#[no_mangle]
pub unsafe extern "C" fn pa_algebra_free(a: *mut PaAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Number of generators, or 0 for a null handle.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pa_algebra_rank(a: *const PaAlgebra) -> usize {
    a.as_ref().map_or(0, |h| h.inner.rank())
}

/// Checks skew-symmetry and the Jacobi identity; writes 1 (holds) or 0.
/// Either output pointer may be null to skip that check.
///
/// # Safety
/// `a` must be a live handle; non-null outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn pa_algebra_check(a: *const PaAlgebra, skew_ok: *mut i32, jacobi_ok: *mut i32) -> PaStatus {
    guard(|| {
        let a = algebra(a)?;
        if !skew_ok.is_null() {
            *skew_ok = i32::from(a.check_skew().passed());
        }
        if !jacobi_ok.is_null() {
            *jacobi_ok = i32::from(a.check_jacobi().passed());
        }
        Ok(())
    })
}

/// Classifies the algebra as Lie, Leibniz but not Lie, or neither.
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pa_algebra_classify(a: *const PaAlgebra, out: *mut PaClassification) -> PaStatus {
    guard(|| {
        out_ptr(out)?;
        *out = match algebra(a)?.classify() {
            Classification::Lie => PaClassification::Lie,
            Classification::LeibnizNotLie => PaClassification::LeibnizNotLie,
            Classification::NotLeibniz => PaClassification::NotLeibniz,
        };
        Ok(())
    })
}

/// Renders the algebra in the `.pa` text format.
///
/// # Safety
/// `a` must be a live handle and `out` writable; free the result with
/// [`pa_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pa_algebra_print(a: *const PaAlgebra, out: *mut *mut c_char) -> PaStatus {
    guard(|| {
        out_ptr(out)?;
        *out = ptr::null_mut();
        *out = into_c_string(print_algebra(algebra(a)?));
        Ok(())
    })
}

/// Renders the λ-brackets of the algebra.  `convention` is a
/// [`PaSignConvention`] value; `ascii` nonzero selects the ASCII spelling
/// (`lam`, `d`) instead of `λ`, `∂`.
///
/// # Safety
/// `a` must be a live handle and `out` writable; free the result with
/// [`pa_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pa_algebra_to_lambda(
    a: *const PaAlgebra,
    convention: i32,
    ascii: i32,
    out: *mut *mut c_char,
) -> PaStatus {
    guard(|| {
        out_ptr(out)?;
        *out = ptr::null_mut();
        let a = algebra(a)?;
        let conv = match convention {
            x if x == PaSignConvention::Canonical as i32 => SignConvention::Canonical,
            x if x == PaSignConvention::Reverse as i32 => SignConvention::PaperReverse,
            n => return Err(Failure(PaStatus::InvalidArgument, format!("unknown sign convention {n}"))),
        };
        let cs = if ascii != 0 { Charset::Ascii } else { Charset::Utf8 };
        *out = into_c_string(format_lambda(&to_lambda_with(a, conv), cs));
        Ok(())
    })
}

/// Releases a string returned by this library.  Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library that is not used again.
#[no_mangle]
pub unsafe extern "C" fn pa_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
