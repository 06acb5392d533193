use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use inscribed_ffi::*;

fn load(json: &str) -> *mut InscribedConfig {
    let s = CString::new(json).unwrap();
    let mut cfg = ptr::null_mut();
    let status = unsafe { inscribed_config_from_json(s.as_ptr(), &mut cfg) };
    assert_eq!(status, InscribedStatus::Ok, "{}", last_error());
    cfg
}

fn last_error() -> String {
    let p = inscribed_last_error();
    if p.is_null() {
        String::new()
    } else {
        unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
    }
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { inscribed_string_free(p) };
    s
}

const SQUARE: &str = r#"{"type":"point_configuration","dim":2,
  "points":{"1":["0","0"],"2":["1","0"],"3":["0","1"],"4":["1","1"],"5":["1/2","1/3"]}}"#;

#[test]
fn round_trip_and_shape() {
    let cfg = load(SQUARE);
    let (mut len, mut dim) = (0, 0);
    assert_eq!(unsafe { inscribed_config_shape(cfg, &mut len, &mut dim) }, InscribedStatus::Ok);
    assert_eq!((len, dim), (5, 2));
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { inscribed_config_to_json(cfg, &mut out) }, InscribedStatus::Ok);
    let text = take_string(out);
    assert!(text.contains("\"1/2\""));
    let again = load(&text);
    unsafe {
        inscribed_config_free(again);
        inscribed_config_free(cfg);
    }
}

#[test]
fn predicates() {
    let cfg = load(SQUARE);
    let mut s = 7;
    assert_eq!(unsafe { inscribed_orientation(cfg, [1, 2, 3].as_ptr(), 3, &mut s) }, InscribedStatus::Ok);
    assert_eq!(s, 1);
    assert_eq!(unsafe { inscribed_orientation(cfg, [2, 1, 3].as_ptr(), 3, &mut s) }, InscribedStatus::Ok);
    assert_eq!(s, -1);
    // The square's corners are cocircular; the fifth point is inside.
    assert_eq!(unsafe { inscribed_in_sphere(cfg, [1, 2, 3, 4].as_ptr(), 4, &mut s) }, InscribedStatus::Ok);
    assert_eq!(s, 0);
    assert_eq!(unsafe { inscribed_in_sphere(cfg, [1, 2, 3, 5].as_ptr(), 4, &mut s) }, InscribedStatus::Ok);
    assert_eq!(s, -1);
    assert_eq!(
        unsafe { inscribed_orientation(cfg, [1, 2, 9].as_ptr(), 3, &mut s) },
        InscribedStatus::InvalidInput
    );
    assert!(last_error().contains("label 9"));
    unsafe { inscribed_config_free(cfg) };
}

#[test]
fn null_and_malformed_inputs() {
    let mut cfg = ptr::null_mut();
    assert_eq!(unsafe { inscribed_config_from_json(ptr::null(), &mut cfg) }, InscribedStatus::NullPointer);
    let bad = CString::new(r#"{"type":"point_configuration","dim":2,"points":{"1":["0"]}}"#).unwrap();
    assert_eq!(unsafe { inscribed_config_from_json(bad.as_ptr(), &mut cfg) }, InscribedStatus::InvalidInput);
    assert!(!last_error().is_empty());
    let mut b = false;
    assert_eq!(unsafe { inscribed_is_neighborly(ptr::null(), &mut b) }, InscribedStatus::NullPointer);
    unsafe { inscribed_config_free(ptr::null_mut()) };
    unsafe { inscribed_string_free(ptr::null_mut()) };
}

#[test]
fn success_clears_the_last_error() {
    let mut cfg = ptr::null_mut();
    unsafe { inscribed_config_from_json(ptr::null(), &mut cfg) };
    assert!(!inscribed_last_error().is_null());
    let mut n = 0;
    assert_eq!(unsafe { inscribed_fm_root_count(1, &mut n) }, InscribedStatus::Ok);
    assert!(inscribed_last_error().is_null());
    assert_eq!(n, 4);
}

#[test]
fn delaunay_and_facets() {
    let cfg = load(SQUARE);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { inscribed_delaunay_json(cfg, true, &mut out) }, InscribedStatus::Ok);
    let t: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(t["cells"].as_array().unwrap().len(), 4);
    assert_eq!(t["hull_facets"].as_array().unwrap().len(), 4);
    assert_eq!(unsafe { inscribed_facets_json(cfg, &mut out) }, InscribedStatus::Ok);
    let f: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(f["facets"], serde_json::json!([[1, 2], [1, 3], [2, 4], [3, 4]]));
    unsafe { inscribed_config_free(cfg) };
}

#[test]
fn lifting_and_search() {
    let line = load(r#"{"type":"point_configuration","dim":1,"points":{"1":["0"],"2":["1"],"3":["3"],"4":["7"],"5":["12"]}}"#);
    let mut lifted = ptr::null_mut();
    let signs = CString::new("+-+-").unwrap();
    assert_eq!(unsafe { inscribed_lex_lift(line, signs.as_ptr(), false, &mut lifted) }, InscribedStatus::Ok);
    let (mut len, mut dim) = (0, 0);
    unsafe { inscribed_config_shape(lifted, &mut len, &mut dim) };
    assert_eq!((len, dim), (6, 2));

    let mut k = ptr::null_mut();
    assert_eq!(unsafe { inscribed_kortenkamp(line, 0, 1, &mut k) }, InscribedStatus::SearchFailure);
    assert_eq!(unsafe { inscribed_kortenkamp(line, 1_000_000, 1, &mut k) }, InscribedStatus::Ok);
    let mut b = false;
    assert_eq!(unsafe { inscribed_is_neighborly(k, &mut b) }, InscribedStatus::Ok);
    assert!(b);
    unsafe { inscribed_config_shape(k, &mut len, &mut dim) };
    assert_eq!((len, dim), (10, 6));
    unsafe {
        inscribed_config_free(k);
        inscribed_config_free(lifted);
        inscribed_config_free(line);
    }
}

#[test]
fn header_declares_every_export_and_compiles() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/inscribed.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "inscribed_last_error",
        "inscribed_string_free",
        "inscribed_config_from_json",
        "inscribed_config_free",
        "inscribed_config_to_json",
        "inscribed_config_shape",
        "inscribed_orientation",
        "inscribed_in_sphere",
        "inscribed_is_neighborly",
        "inscribed_is_inscribed",
        "inscribed_facets_json",
        "inscribed_delaunay_json",
        "inscribed_lex_lift",
        "inscribed_kortenkamp",
        "inscribed_neighborly_pipeline",
        "inscribed_fm_root_count",
        "typedef struct InscribedConfig InscribedConfig",
    ] {
        assert!(text.contains(name), "{name} missing from the header");
    }
    let status = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"])
        .arg(&header)
        .status()
        .expect("a C compiler is available");
    assert!(status.success());
}
