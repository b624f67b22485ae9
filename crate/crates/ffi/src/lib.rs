//! C interface to `hwdesign`.
//!
//! Certificates cross the boundary as opaque `HwCertificate` handles. Every
//! call returns an `HwCode`; on failure the message of the last error on
//! the calling thread is available from `hw_last_error`. Strings returned
//! by the library are owned by the caller and released with
//! `hw_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hwdesign::compose::{self, Externals};
use hwdesign::model::Certificate;
use hwdesign::verify::check_certificate;
use hwdesign::{format, Error};

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HwCode {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Parameters out of range or rejected by a builder.
    Rejected = 3,
    /// Certificate text does not parse.
    Parse = 4,
    /// File could not be read or written.
    Io = 5,
    /// The design is known not to exist.
    Nonexistent = 6,
    /// Existence is an open problem.
    Open = 7,
    /// A necessary condition fails.
    NecessaryFail = 8,
    /// The build needs a design the caller has to supply.
    MissingIngredient = 9,
    /// The search gave up, or no construction is implemented.
    NotFound = 10,
    UnknownFixture = 11,
    /// A built object failed verification.
    Unverified = 12,
    /// `hw_verify` found the certificate INVALID.
    Invalid = 13,
    /// The library panicked.
    Internal = 14,
}

fn code_of(e: &Error) -> HwCode {
    match e {
        Error::Parse { .. } => HwCode::Parse,
        Error::Io(_) => HwCode::Io,
        Error::Nonexistent(_) => HwCode::Nonexistent,
        Error::Open(_) => HwCode::Open,
        Error::NecessaryFail(_) => HwCode::NecessaryFail,
        Error::MissingIngredient(_) => HwCode::MissingIngredient,
        Error::NotFound(_) | Error::Unsupported(_) => HwCode::NotFound,
        Error::UnknownFixture(_) => HwCode::UnknownFixture,
        Error::Unverified(_) => HwCode::Unverified,
        _ => HwCode::Rejected,
    }
}

/// Opaque handle to a verified or parsed certificate.
pub struct HwCertificate {
    inner: Certificate,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

/// Runs `f`, turning errors and panics into codes.
fn guard(f: impl FnOnce() -> Result<(), (HwCode, String)>) -> HwCode {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HwCode::Ok,
        Ok(Err((code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal panic");
            HwCode::Internal
        }
    }
}

fn lib_err(e: Error) -> (HwCode, String) {
    (code_of(&e), e.to_string())
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (HwCode, String)> {
    if p.is_null() {
        return Err((HwCode::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (HwCode::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn cert_arg<'a>(p: *const HwCertificate) -> Result<&'a Certificate, (HwCode, String)> {
    p.as_ref()
        .map(|c| &c.inner)
        .ok_or((HwCode::NullArgument, "certificate is null".to_string()))
}

unsafe fn put_cert(out: *mut *mut HwCertificate, r: hwdesign::Result<Certificate>) -> Result<(), (HwCode, String)> {
    if out.is_null() {
        return Err((HwCode::NullArgument, "out is null".into()));
    }
    *out = ptr::null_mut();
    let c = r.map_err(lib_err)?;
    *out = Box::into_raw(Box::new(HwCertificate { inner: c }));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (HwCode, String)> {
    if out.is_null() {
        return Err((HwCode::NullArgument, "out is null".into()));
    }
    *out = CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw();
    Ok(())
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn hw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases a certificate handle. Null is ignored.
///
/// # Safety
/// `cert` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hw_certificate_free(cert: *mut HwCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// Builds a `k`-ARCS(2kt+1).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hw_build_arcs(k: u32, t: u32, out: *mut *mut HwCertificate) -> HwCode {
    guard(|| put_cert(out, hwdesign::arcs::build_arcs(k as usize, t as usize)))
}

/// Builds `HW(v; m, n; alpha, beta)` from the implemented routes.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hw_build_hw(
    v: u32,
    m: u32,
    n: u32,
    alpha: u32,
    beta: u32,
    out: *mut *mut HwCertificate,
) -> HwCode {
    guard(|| put_cert(out, compose::build_hw(v, m, n, alpha, beta, &Externals::default())))
}

/// Builds one of the stored designs by name, e.g. `"L4.6"`.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hw_build_fixture(name: *const c_char, out: *mut *mut HwCertificate) -> HwCode {
    guard(|| {
        let name = str_arg(name, "name")?;
        put_cert(out, compose::fixture(name))
    })
}

/// Parses certificate text.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hw_certificate_parse(text: *const c_char, out: *mut *mut HwCertificate) -> HwCode {
    guard(|| {
        let text = str_arg(text, "text")?;
        put_cert(out, format::parse(text))
    })
}

/// Reads a certificate file.
///
/// # Safety
/// `path` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hw_certificate_read(path: *const c_char, out: *mut *mut HwCertificate) -> HwCode {
    guard(|| {
        let path = str_arg(path, "path")?;
        put_cert(out, format::read_file(std::path::Path::new(path)))
    })
}

/// Writes a certificate file.
///
/// # Safety
/// `cert` must be a live handle and `path` a nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn hw_certificate_write(cert: *const HwCertificate, path: *const c_char) -> HwCode {
    guard(|| {
        let c = cert_arg(cert)?;
        let path = str_arg(path, "path")?;
        format::write_file(std::path::Path::new(path), c).map_err(lib_err)
    })
}

/// Certificate text; free with `hw_string_free`.
///
/// # Safety
/// `cert` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hw_certificate_serialize(cert: *const HwCertificate, out: *mut *mut c_char) -> HwCode {
    guard(|| {
        let c = cert_arg(cert)?;
        put_string(out, format::serialize(c))
    })
}

/// Number of vertices of the host graph.
///
/// # Safety
/// `cert` must be a live handle or null (null gives 0).
#[no_mangle]
pub unsafe extern "C" fn hw_certificate_order(cert: *const HwCertificate) -> usize {
    cert.as_ref().map_or(0, |c| c.inner.host.order())
}

/// Number of classes (factors, almost parallel classes, half classes).
///
/// # Safety
/// `cert` must be a live handle or null (null gives 0).
#[no_mangle]
pub unsafe extern "C" fn hw_certificate_class_count(cert: *const HwCertificate) -> usize {
    cert.as_ref().map_or(0, |c| c.inner.classes.len())
}

/// Checks the certificate. Returns `HW_CODE_OK` when VALID and
/// `HW_CODE_INVALID` otherwise; when `report` is not null it receives the
/// verifier report (free with `hw_string_free`).
///
/// # Safety
/// `cert` must be a live handle; `report` null or a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hw_verify(cert: *const HwCertificate, report: *mut *mut c_char) -> HwCode {
    let mut valid = false;
    let code = guard(|| {
        let c = cert_arg(cert)?;
        let r = check_certificate(c);
        valid = r.is_valid();
        if !report.is_null() {
            put_string(report, r.to_string())?;
        }
        Ok(())
    });
    match code {
        HwCode::Ok if !valid => {
            set_error("certificate is INVALID");
            HwCode::Invalid
        }
        c => c,
    }
}

/// Classification line for `HW(v; m, n; alpha, beta)`, e.g.
/// `SOLVABLE(fixture L4.6)`; free with `hw_string_free`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hw_status(v: u64, m: u64, n: u64, alpha: u64, beta: u64, out: *mut *mut c_char) -> HwCode {
    guard(|| put_string(out, compose::hwp_status(v, m, n, alpha, beta).to_string()))
}

/// Classification line for a `k`-ARCS(2kt+1).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hw_arcs_status(k: u64, t: u64, out: *mut *mut c_char) -> HwCode {
    guard(|| put_string(out, compose::arcs_status(k, t).to_string()))
}
