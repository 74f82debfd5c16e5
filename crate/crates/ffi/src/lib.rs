//! C interface to `invhol`.
//!
//! Semigroups are opaque handles created by one of the `invhol_semigroup_*`
//! constructors and released with [`invhol_semigroup_free`]. Every fallible
//! call returns an [`InvholStatus`]; on failure the message is available from
//! [`invhol_last_error`] on the same thread until the next failing call.
//! Strings returned to the caller must be released with [`invhol_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use invhol::catalog;
use invhol::error::Error;
use invhol::heap::enumerate_sha;
use invhol::holomorph::{enumerate_holomorph_from, units};
use invhol::io;
use invhol::morphisms::enumerate_premorphisms;
use invhol::polycyclic::parse_expression;
use invhol::search::Budget;
use invhol::semigroup::{InverseSemigroup, DEFAULT_SIZE_CAP};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvholStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    NotAssociative = 4,
    NotInverse = 5,
    SizeCap = 6,
    BudgetExceeded = 7,
    Internal = 8,
}

/// A validated finite inverse semigroup.
pub struct InvholSemigroup {
    inner: InverseSemigroup,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> InvholStatus {
    match e {
        Error::Parse { .. } => InvholStatus::ParseError,
        Error::NotAssociative { .. } => InvholStatus::NotAssociative,
        Error::NotInverse(_) => InvholStatus::NotInverse,
        Error::SizeCap { .. } => InvholStatus::SizeCap,
        Error::SearchBudgetExceeded { .. } => InvholStatus::BudgetExceeded,
        Error::Consistency(_) => InvholStatus::Internal,
        _ => InvholStatus::InvalidArgument,
    }
}

/// Runs `f`, recording errors and turning panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<(), (InvholStatus, String)>) -> InvholStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => InvholStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            InvholStatus::Internal
        }
    }
}

fn lib(e: Error) -> (InvholStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (InvholStatus, String) {
    (InvholStatus::NullPointer, format!("{what} is null"))
}

unsafe fn c_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (InvholStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (InvholStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a>(s: *const InvholSemigroup) -> Result<&'a InverseSemigroup, (InvholStatus, String)> {
    s.as_ref().map(|h| &h.inner).ok_or_else(|| null("semigroup"))
}

fn budget(nodes: u64) -> Budget {
    Budget::new(if nodes == 0 { invhol::search::DEFAULT_NODE_BUDGET } else { nodes })
}

unsafe fn emit(out: *mut *mut InvholSemigroup, s: InverseSemigroup) {
    *out = Box::into_raw(Box::new(InvholSemigroup { inner: s }));
}

/// Message of the last failed call on this thread, or null. Owned by the
/// library; valid until the next failing call.
#[no_mangle]
pub extern "C" fn invhol_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn invhol_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a semigroup from a row-major `n * n` table. Elements are named
/// by their index.
///
/// # Safety
/// `table` must point to `n * n` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn invhol_semigroup_from_table(
    n: usize,
    table: *const usize,
    out: *mut *mut InvholSemigroup,
) -> InvholStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if table.is_null() && n > 0 {
            return Err(null("table"));
        }
        if n > DEFAULT_SIZE_CAP {
            return Err(lib(Error::SizeCap { requested: n as u128, cap: DEFAULT_SIZE_CAP }));
        }
        let cells = if n == 0 { &[][..] } else { std::slice::from_raw_parts(table, n * n) };
        let rows = cells.chunks(n.max(1)).map(<[usize]>::to_vec).collect();
        let names = (0..n).map(|i| i.to_string()).collect();
        let s = InverseSemigroup::from_table_capped(names, rows, DEFAULT_SIZE_CAP).map_err(lib)?;
        emit(out, s);
        Ok(())
    })
}

/// Builds one of the named examples (`z3`, `s3`, `i2`, ...).
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn invhol_semigroup_from_name(name: *const c_char, out: *mut *mut InvholSemigroup) -> InvholStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let s = catalog::build(c_str(name, "name")?, DEFAULT_SIZE_CAP).map_err(lib)?;
        emit(out, s);
        Ok(())
    })
}

/// Builds a semigroup from the JSON file format used by the command line.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn invhol_semigroup_from_json(json: *const c_char, out: *mut *mut InvholSemigroup) -> InvholStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let file = io::parse_semigroup_file(c_str(json, "json")?).map_err(lib)?;
        emit(out, file.build(DEFAULT_SIZE_CAP).map_err(lib)?);
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `s` must come from a constructor in this library and not be used again.
#[no_mangle]
pub unsafe extern "C" fn invhol_semigroup_free(s: *mut InvholSemigroup) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn invhol_semigroup_size(s: *const InvholSemigroup) -> usize {
    s.as_ref().map_or(0, |h| h.inner.len())
}

/// Product `a * b`.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn invhol_semigroup_mul(s: *const InvholSemigroup, a: usize, b: usize, out: *mut usize) -> InvholStatus {
    guard(|| {
        let s = handle(s)?;
        if out.is_null() {
            return Err(null("out"));
        }
        if a >= s.len() || b >= s.len() {
            return Err((InvholStatus::InvalidArgument, format!("element out of range for {} elements", s.len())));
        }
        *out = s.mul(a, b);
        Ok(())
    })
}

/// Semigroup as JSON text; release with [`invhol_string_free`].
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn invhol_semigroup_to_json(s: *const InvholSemigroup, out: *mut *mut c_char) -> InvholStatus {
    guard(|| {
        let s = handle(s)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = CString::new(io::write_semigroup(s)).expect("no NUL in JSON").into_raw();
        Ok(())
    })
}

/// Counts premorphisms of `s`. A `budget` of 0 selects the default.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn invhol_count_premorphisms(s: *const InvholSemigroup, budget_nodes: u64, out: *mut usize) -> InvholStatus {
    guard(|| {
        let s = handle(s)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = enumerate_premorphisms(s, &budget(budget_nodes)).map_err(lib)?.len();
        Ok(())
    })
}

/// Counts elements of Hol(S) and its group of units.
///
/// # Safety
/// `s` must be a live handle; `elements` and `unit_count` writable.
#[no_mangle]
pub unsafe extern "C" fn invhol_count_holomorph(
    s: *const InvholSemigroup,
    budget_nodes: u64,
    elements: *mut usize,
    unit_count: *mut usize,
) -> InvholStatus {
    guard(|| {
        let s = handle(s)?;
        if elements.is_null() || unit_count.is_null() {
            return Err(null("out"));
        }
        let b = budget(budget_nodes);
        let prems = enumerate_premorphisms(s, &b).map_err(lib)?;
        let hol = enumerate_holomorph_from(s, &prems, &b).map_err(lib)?;
        *elements = hol.len();
        *unit_count = units(s, &hol).len();
        Ok(())
    })
}

/// Counts heap-preserving maps of `s`.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn invhol_count_sha(s: *const InvholSemigroup, budget_nodes: u64, out: *mut usize) -> InvholStatus {
    guard(|| {
        let s = handle(s)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = enumerate_sha(s, &budget(budget_nodes)).map_err(lib)?.len();
        Ok(())
    })
}

/// Evaluates a polycyclic expression over `alphabet` letters to its normal
/// form, e.g. `"(ab)^-1 a * b^-1"`. Release the result with
/// [`invhol_string_free`].
///
/// # Safety
/// `expr` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn invhol_poly_eval(alphabet: usize, expr: *const c_char, out: *mut *mut c_char) -> InvholStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let value = parse_expression(alphabet, c_str(expr, "expr")?).map_err(lib)?;
        *out = CString::new(value.to_string()).expect("no NUL in words").into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used again.
#[no_mangle]
pub unsafe extern "C" fn invhol_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
