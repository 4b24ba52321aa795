//! C interface to the `dowling` library.
//!
//! Triangles live behind an opaque [`DowlingTriangle`] handle. Numbers cross
//! the boundary as NUL-terminated decimal strings that the caller releases
//! with [`dowling_string_free`]. Every fallible call returns a
//! [`DowlingStatus`]; the message for the most recent failure on the calling
//! thread is available from [`dowling_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dowling::catalog::{build_triangle, sum_by_name};
use dowling::cli::to_json;
use dowling::exactmath::{format_rat, parse_rat};
use dowling::verify;
use dowling::{CoeffMatrix, Error, Family, Params};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DowlingStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    UnknownFamily = 3,
    UnknownIdentity = 4,
    OutOfRange = 5,
    VerificationFailed = 6,
    Internal = 7,
}

/// Parameters as decimal or `p/q` strings. Null fields are unset.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct DowlingParams {
    pub m: *const c_char,
    pub r: *const c_char,
    pub alpha: *const c_char,
    pub beta: *const c_char,
    pub gamma: *const c_char,
}

/// Opaque handle to a computed triangle.
pub struct DowlingTriangle {
    inner: CoeffMatrix,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let message = CString::new(message.into().replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = message);
}

struct Failure(DowlingStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::UnknownFamily(_) => DowlingStatus::UnknownFamily,
            Error::UnknownIdentity(_) => DowlingStatus::UnknownIdentity,
            Error::Io(_) | Error::Json(_) => DowlingStatus::Internal,
            _ => DowlingStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(DowlingStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, translating errors and panics into a status and the thread's last error.
fn guarded(f: impl FnOnce() -> Result<DowlingStatus, Failure>) -> DowlingStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => {
            if status == DowlingStatus::Ok {
                set_error("");
            }
            status
        }
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            DowlingStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(DowlingStatus::InvalidArgument, format!("{what} is not valid UTF-8")))
}

unsafe fn read_params(p: *const DowlingParams) -> Result<Params, Failure> {
    let Some(p) = p.as_ref() else {
        return Ok(Params::none());
    };
    let field = |ptr: *const c_char, name: &str| -> Result<_, Failure> {
        if ptr.is_null() {
            return Ok(None);
        }
        Ok(Some(parse_rat(read_str(ptr, name)?)?))
    };
    Ok(Params {
        m: field(p.m, "m")?,
        r: field(p.r, "r")?,
        alpha: field(p.alpha, "alpha")?,
        beta: field(p.beta, "beta")?,
        gamma: field(p.gamma, "gamma")?,
    })
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let s = CString::new(s).map_err(|_| Failure(DowlingStatus::Internal, "interior NUL".into()))?;
    *out = s.into_raw();
    Ok(())
}

/// Builds rows `0..=nmax` of `family` and stores a new handle in `*out`.
///
/// # Safety
/// `family` must be a NUL-terminated string, `params` null or valid, and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dowling_triangle_new(
    family: *const c_char,
    params: *const DowlingParams,
    nmax: usize,
    out: *mut *mut DowlingTriangle,
) -> DowlingStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let family: Family = read_str(family, "family")?.parse()?;
        let tri = build_triangle(family, &read_params(params)?, nmax)?;
        *out = Box::into_raw(Box::new(DowlingTriangle { inner: tri }));
        Ok(DowlingStatus::Ok)
    })
}

/// Largest row index, or 0 for a null handle.
///
/// # Safety
/// `tri` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dowling_triangle_nmax(tri: *const DowlingTriangle) -> usize {
    tri.as_ref().map_or(0, |t| t.inner.nmax())
}

/// Writes entry `(n, k)` as a decimal string to `*out`.
///
/// # Safety
/// `tri` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dowling_triangle_entry(
    tri: *const DowlingTriangle,
    n: usize,
    k: usize,
    out: *mut *mut c_char,
) -> DowlingStatus {
    guarded(|| {
        let tri = tri.as_ref().ok_or_else(|| null("triangle"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        if k > n || n > tri.inner.nmax() {
            return Err(Failure(
                DowlingStatus::OutOfRange,
                format!("({n},{k}) is outside rows 0..={}", tri.inner.nmax()),
            ));
        }
        write_string(out, format_rat(&tri.inner.get(n, k)))?;
        Ok(DowlingStatus::Ok)
    })
}

/// Writes the triangle in its JSON form to `*out`.
///
/// # Safety
/// `tri` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dowling_triangle_json(tri: *const DowlingTriangle, out: *mut *mut c_char) -> DowlingStatus {
    guarded(|| {
        let tri = tri.as_ref().ok_or_else(|| null("triangle"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(out, to_json(&tri.inner))?;
        Ok(DowlingStatus::Ok)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `tri` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dowling_triangle_free(tri: *mut DowlingTriangle) {
    if !tri.is_null() {
        drop(Box::from_raw(tri));
    }
}

/// Writes a Bell-type number (or a row sum of a triangle family) to `*out`.
///
/// # Safety
/// `family` must be a NUL-terminated string, `params` null or valid, and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dowling_sum(
    family: *const c_char,
    params: *const DowlingParams,
    n: usize,
    out: *mut *mut c_char,
) -> DowlingStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let v = sum_by_name(read_str(family, "family")?, &read_params(params)?, n)?;
        write_string(out, format_rat(&v))?;
        Ok(DowlingStatus::Ok)
    })
}

/// Checks a named identity and writes the JSON report to `*report`.
///
/// A negative `nmax` selects the identity's default. Returns
/// `DOWLING_STATUS_VERIFICATION_FAILED` when the check ran but found
/// disagreements; the report is written in that case too.
///
/// # Safety
/// `identity` must be a NUL-terminated string, `params` null or valid, and `report` writable.
#[no_mangle]
pub unsafe extern "C" fn dowling_verify(
    identity: *const c_char,
    params: *const DowlingParams,
    nmax: i64,
    with_oracle: bool,
    report: *mut *mut c_char,
) -> DowlingStatus {
    guarded(|| {
        if report.is_null() {
            return Err(null("report"));
        }
        *report = ptr::null_mut();
        let nmax = usize::try_from(nmax).ok();
        let r = verify::run(read_str(identity, "identity")?, &read_params(params)?, nmax, with_oracle)?;
        let json = serde_json::to_string(&r).map_err(Error::from)?;
        write_string(report, json)?;
        Ok(if r.pass { DowlingStatus::Ok } else { DowlingStatus::VerificationFailed })
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dowling_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread; empty after a success.
///
/// The pointer stays valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn dowling_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
