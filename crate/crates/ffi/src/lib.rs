//! C ABI for `bigrade`.
//!
//! Every object is an opaque handle created by a `bigrade_*` constructor and
//! released by the matching `*_free`. Fallible calls return a
//! [`BigradeStatus`] and write their result through an out-pointer; on
//! failure the message is available from [`bigrade_last_error`] on the same
//! thread. Strings returned by the library are freed with
//! [`bigrade_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bigrade::algebra::{Bidegree, BlockOrder, Ideal};
use bigrade::cli::parse_sat_mode;
use bigrade::cli::parser::{format_ideal, parse_ideal_str};
use bigrade::error::Error;
use bigrade::groebner::{groebner_basis, initial_ideal};
use bigrade::ideal_ops::saturate;
use bigrade::regularity::{bigin, reg_empty, xreg_region, xtor, ytor};
use bigrade::staircase::{MonomialIdeal, Region};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BigradeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Usage = 3,
    Parse = 4,
    Math = 5,
    Instability = 6,
    Contradiction = 7,
    Panic = 8,
}

/// A bihomogeneous ideal with its ring and coefficient field.
pub struct BigradeIdeal(Ideal);

/// A monomial ideal, such as a bigeneric initial ideal.
pub struct BigradeMonomialIdeal(MonomialIdeal);

/// An upward-closed set of bidegrees.
pub struct BigradeRegion(Region);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> BigradeStatus {
    match e {
        Error::Usage(_) | Error::Io(_) => BigradeStatus::Usage,
        Error::Parse { .. } => BigradeStatus::Parse,
        Error::Instability { .. } => BigradeStatus::Instability,
        Error::Contradiction { .. } => BigradeStatus::Contradiction,
        _ => BigradeStatus::Math,
    }
}

enum Fail {
    Null,
    Utf8,
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard<F: FnOnce() -> Result<(), Fail>>(f: F) -> BigradeStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BigradeStatus::Ok,
        Ok(Err(Fail::Null)) => {
            set_error("null pointer argument".into());
            BigradeStatus::NullPointer
        }
        Ok(Err(Fail::Utf8)) => {
            set_error("string argument is not valid UTF-8".into());
            BigradeStatus::InvalidUtf8
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            BigradeStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail::Null);
    }
    CStr::from_ptr(s).to_str().map_err(|_| Fail::Utf8)
}

unsafe fn obj<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null)
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null);
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null);
    }
    *out = CString::new(s).map_err(|_| Fail::Utf8)?.into_raw();
    Ok(())
}

unsafe fn put_value<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null);
    }
    *out = v;
    Ok(())
}

fn order_of(x_low: bool) -> BlockOrder {
    if x_low {
        BlockOrder::XLow
    } else {
        BlockOrder::YLow
    }
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn bigrade_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn bigrade_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn bigrade_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse the text of an ideal file.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigrade_ideal_parse(text: *const c_char, out: *mut *mut BigradeIdeal) -> BigradeStatus {
    guard(|| {
        let parsed = parse_ideal_str(str_arg(text)?, None, false)?;
        put(out, BigradeIdeal(parsed.ideal))
    })
}

/// # Safety
/// `ideal` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn bigrade_ideal_free(ideal: *mut BigradeIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// The ideal in file syntax.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigrade_ideal_to_string(ideal: *const BigradeIdeal, out: *mut *mut c_char) -> BigradeStatus {
    guard(|| put_string(out, format_ideal(&obj(ideal)?.0)))
}

/// The reduced Gröbner basis, as a new ideal handle.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigrade_ideal_groebner_basis(ideal: *const BigradeIdeal, out: *mut *mut BigradeIdeal) -> BigradeStatus {
    guard(|| put(out, BigradeIdeal(groebner_basis(&obj(ideal)?.0).to_ideal())))
}

/// Saturation; `by` is `b`, `mx`, `my` or `poly:<expr>`.
///
/// # Safety
/// `ideal` must be a live handle, `by` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bigrade_ideal_saturate(
    ideal: *const BigradeIdeal,
    by: *const c_char,
    out: *mut *mut BigradeIdeal,
) -> BigradeStatus {
    guard(|| {
        let i = &obj(ideal)?.0;
        let mode = parse_sat_mode(str_arg(by)?, i)?;
        put(out, BigradeIdeal(saturate(i, &mode)?))
    })
}

/// `HF_{S/I}(a, b)`, saturated at `u64::MAX`.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigrade_ideal_hilbert_function(
    ideal: *const BigradeIdeal,
    a: i64,
    b: i64,
    out: *mut u64,
) -> BigradeStatus {
    guard(|| {
        let v = initial_ideal(&obj(ideal)?.0).hilbert_function(Bidegree::new(a, b))?;
        put_value(out, u64::try_from(v).unwrap_or(u64::MAX))
    })
}

/// Bigeneric initial ideal. `x_low` nonzero selects the order with the
/// x-block lowest.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigrade_ideal_bigin(
    ideal: *const BigradeIdeal,
    x_low: bool,
    seed: u64,
    out: *mut *mut BigradeMonomialIdeal,
) -> BigradeStatus {
    guard(|| put(out, BigradeMonomialIdeal(bigin(&obj(ideal)?.0, order_of(x_low), seed)?.ideal)))
}

/// Region where `HF_{S/I}` vanishes, for an ideal with empty variety.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigrade_ideal_reg_empty(ideal: *const BigradeIdeal, out: *mut *mut BigradeRegion) -> BigradeStatus {
    guard(|| put(out, BigradeRegion(reg_empty(&obj(ideal)?.0)?)))
}

/// # Safety
/// `m` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn bigrade_monomial_ideal_free(m: *mut BigradeMonomialIdeal) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigrade_monomial_ideal_to_string(m: *const BigradeMonomialIdeal, out: *mut *mut c_char) -> BigradeStatus {
    guard(|| put_string(out, obj(m)?.0.to_string()))
}

/// Number of minimal generators.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigrade_monomial_ideal_num_generators(m: *const BigradeMonomialIdeal, out: *mut usize) -> BigradeStatus {
    guard(|| put_value(out, obj(m)?.0.generators().len()))
}

/// Bidegree of the `i`-th minimal generator.
///
/// # Safety
/// `m` must be a live handle; `a` and `b` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigrade_monomial_ideal_generator_bidegree(
    m: *const BigradeMonomialIdeal,
    i: usize,
    a: *mut i64,
    b: *mut i64,
) -> BigradeStatus {
    guard(|| {
        let gens = obj(m)?.0.generators();
        let d = gens
            .get(i)
            .ok_or_else(|| Error::Usage(format!("generator index {i} out of range ({})", gens.len())))?
            .bidegree();
        put_value(a, d.a)?;
        put_value(b, d.b)
    })
}

/// `xreg` of a bi-Borel monomial ideal.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigrade_monomial_ideal_xreg(m: *const BigradeMonomialIdeal, out: *mut *mut BigradeRegion) -> BigradeStatus {
    guard(|| put(out, BigradeRegion(xreg_region(&obj(m)?.0)?)))
}

/// Largest x- and y-degrees of the minimal generators of a bi-Borel ideal.
///
/// # Safety
/// `m` must be a live handle; `x` and `y` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigrade_monomial_ideal_tor(
    m: *const BigradeMonomialIdeal,
    x: *mut i64,
    y: *mut i64,
) -> BigradeStatus {
    guard(|| {
        let m = &obj(m)?.0;
        put_value(x, xtor(m)?)?;
        put_value(y, ytor(m)?)
    })
}

/// # Safety
/// `r` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn bigrade_region_free(r: *mut BigradeRegion) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// 1 if `(a, b)` lies in the region, 0 if not, -1 on a null handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bigrade_region_contains(r: *const BigradeRegion, a: i64, b: i64) -> i32 {
    match r.as_ref() {
        Some(r) => i32::from(r.0.contains(Bidegree::new(a, b))),
        None => -1,
    }
}

/// Number of minimal elements.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigrade_region_num_minimal(r: *const BigradeRegion, out: *mut usize) -> BigradeStatus {
    guard(|| put_value(out, obj(r)?.0.minimal_elements().len()))
}

/// The `i`-th minimal element.
///
/// # Safety
/// `r` must be a live handle; `a` and `b` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigrade_region_minimal(r: *const BigradeRegion, i: usize, a: *mut i64, b: *mut i64) -> BigradeStatus {
    guard(|| {
        let mins = obj(r)?.0.minimal_elements();
        let d = *mins
            .get(i)
            .ok_or_else(|| Error::Usage(format!("index {i} out of range ({})", mins.len())))?;
        put_value(a, d.a)?;
        put_value(b, d.b)
    })
}
