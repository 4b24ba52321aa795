use std::ffi::{c_char, CStr, CString};
use std::ptr;

use dowling_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let v = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { dowling_string_free(s) };
    v
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(dowling_last_error()) }.to_str().unwrap().to_owned()
}

struct OwnedParams {
    _values: Vec<CString>,
    raw: DowlingParams,
}

fn params(pairs: &[(&str, &str)]) -> OwnedParams {
    let mut raw = DowlingParams {
        m: ptr::null(),
        r: ptr::null(),
        alpha: ptr::null(),
        beta: ptr::null(),
        gamma: ptr::null(),
    };
    let values: Vec<CString> = pairs.iter().map(|(_, v)| CString::new(*v).unwrap()).collect();
    for ((name, _), v) in pairs.iter().zip(&values) {
        let slot = match *name {
            "m" => &mut raw.m,
            "r" => &mut raw.r,
            "alpha" => &mut raw.alpha,
            "beta" => &mut raw.beta,
            "gamma" => &mut raw.gamma,
            _ => panic!("{name}"),
        };
        *slot = v.as_ptr();
    }
    OwnedParams { _values: values, raw }
}

#[test]
fn triangle_handle() {
    let family = CString::new("r-lah").unwrap();
    let p = params(&[("r", "2")]);
    let mut tri = ptr::null_mut();
    let status = unsafe { dowling_triangle_new(family.as_ptr(), &p.raw, 5, &mut tri) };
    assert_eq!(status, DowlingStatus::Ok);
    assert_eq!(unsafe { dowling_triangle_nmax(tri) }, 5);

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { dowling_triangle_entry(tri, 5, 1, &mut s) }, DowlingStatus::Ok);
    assert_eq!(take(s), "8400");

    assert_eq!(unsafe { dowling_triangle_entry(tri, 2, 3, &mut s) }, DowlingStatus::OutOfRange);
    assert!(last_error().contains("outside"));
    assert_eq!(unsafe { dowling_triangle_entry(tri, 6, 0, &mut s) }, DowlingStatus::OutOfRange);

    assert_eq!(unsafe { dowling_triangle_json(tri, &mut s) }, DowlingStatus::Ok);
    let json = take(s);
    assert!(json.starts_with(r#"{"family":"r-lah","params":{"r":"2"},"nmax":5,"#));
    assert_eq!(dowling::cli::to_json(&dowling::cli::parse_json(&json).unwrap()), json);

    unsafe { dowling_triangle_free(tri) };
    unsafe { dowling_triangle_free(ptr::null_mut()) };
    assert_eq!(unsafe { dowling_triangle_nmax(ptr::null()) }, 0);
}

#[test]
fn rational_parameters() {
    let family = CString::new("hs1").unwrap();
    let p = params(&[("alpha", "1/2"), ("beta", "0.25"), ("gamma", "-2")]);
    let mut tri = ptr::null_mut();
    assert_eq!(unsafe { dowling_triangle_new(family.as_ptr(), &p.raw, 3, &mut tri) }, DowlingStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { dowling_triangle_entry(tri, 3, 3, &mut s) }, DowlingStatus::Ok);
    assert_eq!(take(s), "1");
    unsafe { dowling_triangle_free(tri) };
}

#[test]
fn errors() {
    let mut tri = ptr::null_mut();
    let bad = CString::new("no-such-family").unwrap();
    assert_eq!(unsafe { dowling_triangle_new(bad.as_ptr(), ptr::null(), 3, &mut tri) }, DowlingStatus::UnknownFamily);
    assert!(tri.is_null());
    assert!(last_error().contains("no-such-family"));

    let family = CString::new("stirling2").unwrap();
    let p = params(&[("r", "2")]);
    assert_eq!(unsafe { dowling_triangle_new(family.as_ptr(), &p.raw, 3, &mut tri) }, DowlingStatus::InvalidArgument);
    let p = params(&[("alpha", "x")]);
    let whitney = CString::new("whitney2").unwrap();
    assert_eq!(unsafe { dowling_triangle_new(whitney.as_ptr(), &p.raw, 3, &mut tri) }, DowlingStatus::InvalidArgument);

    assert_eq!(unsafe { dowling_triangle_new(ptr::null(), ptr::null(), 3, &mut tri) }, DowlingStatus::NullPointer);
    assert_eq!(unsafe { dowling_triangle_new(family.as_ptr(), ptr::null(), 3, ptr::null_mut()) }, DowlingStatus::NullPointer);

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { dowling_triangle_entry(ptr::null(), 0, 0, &mut s) }, DowlingStatus::NullPointer);
    assert_eq!(unsafe { dowling_triangle_new(family.as_ptr(), ptr::null(), 3, &mut tri) }, DowlingStatus::Ok);
    assert_eq!(last_error(), "");
    unsafe { dowling_triangle_free(tri) };
}

#[test]
fn sums() {
    let family = CString::new("r-dowling").unwrap();
    let p = params(&[("m", "2"), ("r", "2")]);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { dowling_sum(family.as_ptr(), &p.raw, 4, &mut s) }, DowlingStatus::Ok);
    assert_eq!(take(s), "257");
    let bell = CString::new("bell").unwrap();
    assert_eq!(unsafe { dowling_sum(bell.as_ptr(), ptr::null(), 0, &mut s) }, DowlingStatus::Ok);
    assert_eq!(take(s), "1");
}

#[test]
fn verification() {
    let id = CString::new("dow1").unwrap();
    let p = params(&[("alpha", "3")]);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { dowling_verify(id.as_ptr(), &p.raw, 8, false, &mut s) }, DowlingStatus::Ok);
    assert_eq!(take(s), r#"{"identity":"dow1","params":{"alpha":"3"},"nmax":8,"pass":true,"failures":[]}"#);

    let id = CString::new("expB").unwrap();
    assert_eq!(unsafe { dowling_verify(id.as_ptr(), ptr::null(), -1, true, &mut s) }, DowlingStatus::Ok);
    assert!(take(s).contains(r#""pass":true"#));

    let id = CString::new("nope").unwrap();
    assert_eq!(unsafe { dowling_verify(id.as_ptr(), ptr::null(), 3, false, &mut s) }, DowlingStatus::UnknownIdentity);
    assert!(s.is_null());
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/dowling.h")).unwrap();
    for name in [
        "typedef struct DowlingTriangle DowlingTriangle",
        "DOWLING_STATUS_OK",
        "DOWLING_STATUS_VERIFICATION_FAILED",
        "dowling_triangle_new",
        "dowling_triangle_entry",
        "dowling_triangle_nmax",
        "dowling_triangle_json",
        "dowling_triangle_free",
        "dowling_sum",
        "dowling_verify",
        "dowling_string_free",
        "dowling_last_error",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}
