//! C bindings for the weilmax core.
//!
//! Every function is callable from C: handles are opaque pointers owned by
//! the caller and released with the matching `_free` function, statuses are
//! integer codes, and all numeric data crosses the boundary as NUL-terminated
//! decimal strings. Polynomials use the canonical text form, a
//! comma-separated coefficient list with the constant term first. Returned
//! strings are freshly allocated and must be released with
//! `wm_string_free`. On any non-ok status a thread-local message is set and
//! can be retrieved with `wm_last_error_message`.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;

use weilmax::maxclass::{self, MaxClassError, ScanResult};
use weilmax::weil::{self, WeilCandidate};

/// Status code returned by every fallible binding.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WmStatus {
    /// The call succeeded.
    Ok = 0,
    /// An argument was null, unparseable, or out of range.
    BadArgument = 1,
    /// The inputs were well formed but outside the supported domain,
    /// e.g. a q that is not an even prime power.
    Unsupported = 2,
    /// An internal invariant failed; the library state is still sound.
    Internal = 3,
}

/// Opaque isogeny class handle.
pub struct WmClass {
    cand: WeilCandidate,
    ordinary: bool,
}

/// Opaque scan result handle.
pub struct WmScan {
    result: ScanResult,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let stored = CString::new(message.replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(stored));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(status: WmStatus, message: &str) -> WmStatus {
    set_error(message);
    status
}

fn class_error(e: &MaxClassError) -> WmStatus {
    match e {
        MaxClassError::OddPower(_)
        | MaxClassError::TooSmall { .. }
        | MaxClassError::SharedCharacteristic { .. }
        | MaxClassError::RootMagnitude { .. }
        | MaxClassError::ScanRange(_)
        | MaxClassError::NoFieldClass(_)
        | MaxClassError::Trace(_)
        | MaxClassError::Arith(_) => WmStatus::Unsupported,
        _ => WmStatus::Internal,
    }
}

/// Runs a fallible body, converting panics into `Internal`.
fn guarded(body: impl FnOnce() -> WmStatus) -> WmStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic with non-string payload".to_string());
            fail(WmStatus::Internal, &msg)
        }
    }
}

/// # Safety
/// `p` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, WmStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(WmStatus::BadArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        WmStatus::BadArgument
    })
}

fn parse_q(s: &str) -> Result<BigInt, WmStatus> {
    s.trim().parse().map_err(|_| {
        set_error("q must be a decimal integer");
        WmStatus::BadArgument
    })
}

fn alloc_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap().into_raw()
}

fn coeff_csv(p: &weilmax::intpoly::IntPoly) -> String {
    let items: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    items.join(",")
}

fn boxed_class(cand: WeilCandidate) -> *mut WmClass {
    let ordinary = weil::is_ordinary(&cand.full, &cand.q);
    Box::into_raw(Box::new(WmClass { cand, ordinary }))
}

unsafe fn write_class(
    out: *mut *mut WmClass,
    result: Result<WeilCandidate, MaxClassError>,
) -> WmStatus {
    match result {
        Ok(cand) => {
            *out = boxed_class(cand);
            WmStatus::Ok
        }
        Err(e) => fail(class_error(&e), &e.to_string()),
    }
}

/// Writes the trace-minimal polynomial of dimension `g` to `*out` as a
/// coefficient list. The search is capped at dimension 6.
///
/// # Safety
/// `out` must be a valid pointer; the result is released with `wm_string_free`.
#[no_mangle]
pub unsafe extern "C" fn wm_trace_polynomial(g: usize, out: *mut *mut c_char) -> WmStatus {
    guarded(|| {
        if out.is_null() {
            return fail(WmStatus::BadArgument, "null output pointer");
        }
        match maxclass::build_parameters(g, maxclass::DEFAULT_DEGREE_BUDGET) {
            Ok(params) => {
                *out = alloc_string(coeff_csv(&params.fg));
                WmStatus::Ok
            }
            Err(e) => fail(class_error(&e), &e.to_string()),
        }
    })
}

/// Writes the cyclicity invariant N_g to `*out` as a decimal string.
///
/// # Safety
/// `out` must be a valid pointer; the result is released with `wm_string_free`.
#[no_mangle]
pub unsafe extern "C" fn wm_cyclicity_invariant(g: usize, out: *mut *mut c_char) -> WmStatus {
    guarded(|| {
        if out.is_null() {
            return fail(WmStatus::BadArgument, "null output pointer");
        }
        match maxclass::build_parameters(g, maxclass::DEFAULT_DEGREE_BUDGET) {
            Ok(params) => {
                *out = alloc_string(params.n_g.to_string());
                WmStatus::Ok
            }
            Err(e) => fail(class_error(&e), &e.to_string()),
        }
    })
}

/// Constructs the point-count-maximal class of dimension `g` over F_q.
/// `q` is a decimal string and must be an even prime power above the
/// dimension-dependent size threshold.
///
/// # Safety
/// `q` must be a valid NUL-terminated string and `out` a valid pointer;
/// the handle is released with `wm_class_free`.
#[no_mangle]
pub unsafe extern "C" fn wm_maximal_class(
    g: usize,
    q: *const c_char,
    out: *mut *mut WmClass,
) -> WmStatus {
    guarded(|| {
        if out.is_null() {
            return fail(WmStatus::BadArgument, "null output pointer");
        }
        let q = match read_str(q).and_then(|s| parse_q(s)) {
            Ok(q) => q,
            Err(status) => return status,
        };
        write_class(out, maxclass::maximal_class(g, &q))
    })
}

/// Constructs the point-count-minimal class of dimension `g` over F_q.
///
/// # Safety
/// Same contract as `wm_maximal_class`.
#[no_mangle]
pub unsafe extern "C" fn wm_minimal_class(
    g: usize,
    q: *const c_char,
    out: *mut *mut WmClass,
) -> WmStatus {
    guarded(|| {
        if out.is_null() {
            return fail(WmStatus::BadArgument, "null output pointer");
        }
        let q = match read_str(q).and_then(|s| parse_q(s)) {
            Ok(q) => q,
            Err(status) => return status,
        };
        write_class(out, maxclass::minimal_class(g, &q))
    })
}

/// Runs the exhaustive squarefree scan in dimension 3 over F_q.
///
/// # Safety
/// `q` must be a valid NUL-terminated string and `out` a valid pointer;
/// the handle is released with `wm_scan_free`.
#[no_mangle]
pub unsafe extern "C" fn wm_scan_threefolds(q: *const c_char, out: *mut *mut WmScan) -> WmStatus {
    guarded(|| {
        if out.is_null() {
            return fail(WmStatus::BadArgument, "null output pointer");
        }
        let q = match read_str(q).and_then(|s| parse_q(s)) {
            Ok(q) => q,
            Err(status) => return status,
        };
        match maxclass::scan_threefolds(&q) {
            Ok(result) => {
                *out = Box::into_raw(Box::new(WmScan { result }));
                WmStatus::Ok
            }
            Err(e) => fail(class_error(&e), &e.to_string()),
        }
    })
}

/// Copies the scan's point-count-maximal field class into a new handle.
///
/// # Safety
/// `scan` must come from `wm_scan_threefolds`; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wm_scan_best(scan: *const WmScan, out: *mut *mut WmClass) -> WmStatus {
    guarded(|| {
        if scan.is_null() || out.is_null() {
            return fail(WmStatus::BadArgument, "null argument");
        }
        let scan = &*scan;
        *out = boxed_class(scan.result.best.clone());
        WmStatus::Ok
    })
}

/// Number of squarefree classes that beat the best field class, or -1 on
/// a null handle.
///
/// # Safety
/// `scan` must be null or come from `wm_scan_threefolds`.
#[no_mangle]
pub unsafe extern "C" fn wm_scan_exceeder_count(scan: *const WmScan) -> c_int {
    if scan.is_null() {
        return -1;
    }
    (&*scan).result.exceeders.len() as c_int
}

/// Copies the exceeder at `index` (most points first) into a new handle.
///
/// # Safety
/// `scan` must come from `wm_scan_threefolds`; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wm_scan_exceeder(
    scan: *const WmScan,
    index: usize,
    out: *mut *mut WmClass,
) -> WmStatus {
    guarded(|| {
        if scan.is_null() || out.is_null() {
            return fail(WmStatus::BadArgument, "null argument");
        }
        let scan = &*scan;
        match scan.result.exceeders.get(index) {
            Some((cand, _)) => {
                *out = boxed_class(cand.clone());
                WmStatus::Ok
            }
            None => fail(WmStatus::BadArgument, "exceeder index out of range"),
        }
    })
}

/// Releases a scan handle. Null is ignored.
///
/// # Safety
/// `scan` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn wm_scan_free(scan: *mut WmScan) {
    if !scan.is_null() {
        drop(Box::from_raw(scan));
    }
}

unsafe fn class_string(
    class: *const WmClass,
    f: impl FnOnce(&WmClass) -> String,
) -> *mut c_char {
    if class.is_null() {
        return ptr::null_mut();
    }
    alloc_string(f(&*class))
}

/// The class's label, e.g. "3.4.h_ba_cl", or null on a null handle.
///
/// # Safety
/// `class` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn wm_class_label(class: *const WmClass) -> *mut c_char {
    class_string(class, |c| {
        weil::lmfdb_label(&c.cand.full, &c.cand.q, c.cand.g)
    })
}

/// The class's Weil polynomial as a coefficient list, constant term first.
///
/// # Safety
/// `class` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn wm_class_polynomial(class: *const WmClass) -> *mut c_char {
    class_string(class, |c| coeff_csv(&c.cand.full))
}

/// The class's real Weil polynomial as a coefficient list.
///
/// # Safety
/// `class` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn wm_class_real_polynomial(class: *const WmClass) -> *mut c_char {
    class_string(class, |c| coeff_csv(&c.cand.real_part))
}

/// The class's rational point count as a decimal string.
///
/// # Safety
/// `class` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn wm_class_points(class: *const WmClass) -> *mut c_char {
    class_string(class, |c| c.cand.points.to_string())
}

/// A human-readable name of the class's extremal structure, e.g. "M_3^0(4)".
///
/// # Safety
/// `class` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn wm_class_tag(class: *const WmClass) -> *mut c_char {
    class_string(class, |c| maxclass::class_tag(&c.cand))
}

/// The primes at which the group of rational points can fail to be cyclic,
/// as a comma-separated list; the empty string means cyclic at all primes.
///
/// # Safety
/// `class` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn wm_class_exceptions(class: *const WmClass) -> *mut c_char {
    class_string(class, |c| {
        match weil::cyclicity_exceptions(&c.cand.full) {
            Ok(primes) => {
                let items: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
                items.join(",")
            }
            Err(e) => format!("error: {e}"),
        }
    })
}

/// The class's dimension, or 0 on a null handle.
///
/// # Safety
/// `class` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn wm_class_dimension(class: *const WmClass) -> usize {
    if class.is_null() {
        return 0;
    }
    (*class).cand.g
}

/// 1 when the class is ordinary, 0 when not, -1 on a null handle.
///
/// # Safety
/// `class` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn wm_class_is_ordinary(class: *const WmClass) -> c_int {
    if class.is_null() {
        return -1;
    }
    c_int::from((*class).ordinary)
}

/// Releases a class handle. Null is ignored.
///
/// # Safety
/// `class` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn wm_class_free(class: *mut WmClass) {
    if !class.is_null() {
        drop(Box::from_raw(class));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or an unreleased string from this library.
#[no_mangle]
pub unsafe extern "C" fn wm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// A copy of the message for the most recent non-ok status on this thread,
/// or null when the last call succeeded.
#[no_mangle]
pub extern "C" fn wm_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => ptr::null_mut(),
    })
}
