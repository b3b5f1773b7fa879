//! Exercises the C surface exactly as a foreign caller would: through raw
//! pointers, status codes, and the string ownership contract.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use weilmax_capi::*;

/// Takes ownership of a returned string and frees it through the C API.
unsafe fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null(), "expected a string result");
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    wm_string_free(p);
    s
}

unsafe fn last_error() -> String {
    take_string(wm_last_error_message())
}

#[test]
fn maximal_class_round_trip() {
    unsafe {
        let q = CString::new("4").unwrap();
        let mut class: *mut WmClass = ptr::null_mut();
        assert_eq!(wm_maximal_class(3, q.as_ptr(), &mut class), WmStatus::Ok);
        assert_eq!(take_string(wm_class_label(class)), "3.4.h_ba_cl");
        assert_eq!(take_string(wm_class_points(class)), "377");
        assert_eq!(
            take_string(wm_class_polynomial(class)),
            "64,112,104,63,26,7,1"
        );
        assert_eq!(take_string(wm_class_real_polynomial(class)), "-7,14,-7,1");
        assert_eq!(take_string(wm_class_tag(class)), "M_3^0(4)");
        assert_eq!(take_string(wm_class_exceptions(class)), "");
        assert_eq!(wm_class_dimension(class), 3);
        assert_eq!(wm_class_is_ordinary(class), 1);
        wm_class_free(class);
    }
}

#[test]
fn minimal_class_round_trip() {
    unsafe {
        let q = CString::new("9").unwrap();
        let mut class: *mut WmClass = ptr::null_mut();
        assert_eq!(wm_minimal_class(1, q.as_ptr(), &mut class), WmStatus::Ok);
        assert_eq!(take_string(wm_class_points(class)), "5");
        assert_eq!(take_string(wm_class_polynomial(class)), "9,-5,1");
        wm_class_free(class);
    }
}

#[test]
fn trace_polynomial_and_invariant() {
    unsafe {
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(wm_trace_polynomial(3, &mut s), WmStatus::Ok);
        assert_eq!(take_string(s), "-1,6,-5,1");
        let mut n: *mut c_char = ptr::null_mut();
        assert_eq!(wm_cyclicity_invariant(3, &mut n), WmStatus::Ok);
        assert_eq!(take_string(n), "-343");
    }
}

#[test]
fn scan_exposes_best_and_exceeders() {
    unsafe {
        let q = CString::new("4").unwrap();
        let mut scan: *mut WmScan = ptr::null_mut();
        assert_eq!(wm_scan_threefolds(q.as_ptr(), &mut scan), WmStatus::Ok);
        assert_eq!(wm_scan_exceeder_count(scan), 2);

        let mut best: *mut WmClass = ptr::null_mut();
        assert_eq!(wm_scan_best(scan, &mut best), WmStatus::Ok);
        assert_eq!(take_string(wm_class_points(best)), "377");
        wm_class_free(best);

        let mut first: *mut WmClass = ptr::null_mut();
        assert_eq!(wm_scan_exceeder(scan, 0, &mut first), WmStatus::Ok);
        assert_eq!(take_string(wm_class_points(first)), "440");
        assert_eq!(
            take_string(wm_class_tag(first)),
            "E_max-1(4) x M_2^0(4)"
        );
        wm_class_free(first);

        let mut oob: *mut WmClass = ptr::null_mut();
        assert_eq!(
            wm_scan_exceeder(scan, 2, &mut oob),
            WmStatus::BadArgument
        );
        assert!(oob.is_null());
        wm_scan_free(scan);
    }
}

#[test]
fn domain_errors_set_messages() {
    unsafe {
        let q = CString::new("7").unwrap();
        let mut class: *mut WmClass = ptr::null_mut();
        assert_eq!(
            wm_maximal_class(3, q.as_ptr(), &mut class),
            WmStatus::Unsupported
        );
        assert!(class.is_null());
        assert!(last_error().contains("even"), "message should name the domain");

        let q4 = CString::new("4").unwrap();
        assert_eq!(
            wm_maximal_class(7, q4.as_ptr(), &mut class),
            WmStatus::Unsupported,
            "dimension 7 exceeds the trace search budget"
        );
        let composite = CString::new("36").unwrap();
        assert_eq!(
            wm_scan_threefolds(composite.as_ptr(), &mut ptr::null_mut()),
            WmStatus::Unsupported,
            "36 is not a prime power"
        );
    }
}

#[test]
fn argument_errors_are_reported() {
    unsafe {
        let mut class: *mut WmClass = ptr::null_mut();
        assert_eq!(
            wm_maximal_class(3, ptr::null(), &mut class),
            WmStatus::BadArgument
        );
        let junk = CString::new("twelve").unwrap();
        assert_eq!(
            wm_maximal_class(3, junk.as_ptr(), &mut class),
            WmStatus::BadArgument
        );
        let bad_utf8: [c_char; 2] = [-1i8 as c_char, 0];
        assert_eq!(
            wm_maximal_class(3, bad_utf8.as_ptr(), &mut class),
            WmStatus::BadArgument
        );
        let q = CString::new("4").unwrap();
        assert_eq!(
            wm_maximal_class(3, q.as_ptr(), ptr::null_mut()),
            WmStatus::BadArgument
        );
        assert_eq!(
            wm_trace_polynomial(9, &mut ptr::null_mut()),
            WmStatus::Unsupported,
            "dimension above the search budget"
        );
    }
}

#[test]
fn null_handles_degrade_gracefully() {
    unsafe {
        assert!(wm_class_label(ptr::null()).is_null());
        assert!(wm_class_points(ptr::null()).is_null());
        assert_eq!(wm_class_dimension(ptr::null()), 0);
        assert_eq!(wm_class_is_ordinary(ptr::null()), -1);
        assert_eq!(wm_scan_exceeder_count(ptr::null()), -1);
        wm_class_free(ptr::null_mut());
        wm_scan_free(ptr::null_mut());
        wm_string_free(ptr::null_mut());
    }
}
