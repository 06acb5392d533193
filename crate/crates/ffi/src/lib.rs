//! C ABI over the `inscribed` toolkit.
//!
//! Configurations cross the boundary as opaque `InscribedConfig` handles
//! built from, and rendered to, the JSON artifact format. Every function
//! returns an `InscribedStatus`; on failure `inscribed_last_error()` holds a
//! message for the calling thread. Strings returned through out-parameters
//! are owned by the caller and released with `inscribed_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use inscribed::construct::{
    fm_polynomial, kortenkamp_lift, lex_lift, neighborly_pipeline, sturm_root_count, LiftMode,
    SignVector,
};
use inscribed::delaunay::{delaunay_subdivision, delaunay_subdivision_strict};
use inscribed::exact::{in_sphere, orientation};
use inscribed::io;
use inscribed::polytope::{facets, is_neighborly};
use inscribed::sphere::is_inscribed;
use inscribed::{Error, PointConfiguration};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InscribedStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    SearchFailure = 3,
    Internal = 5,
}

/// A point configuration, optionally inscribed with a marked pole.
pub struct InscribedConfig {
    points: PointConfiguration,
    pole: Option<usize>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(e: Error) -> InscribedStatus {
    let status = if e.is_search_failure() {
        InscribedStatus::SearchFailure
    } else {
        InscribedStatus::InvalidInput
    };
    set_error(e.to_string());
    status
}

fn guard(f: impl FnOnce() -> Result<(), InscribedStatus>) -> InscribedStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => InscribedStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic".into());
            InscribedStatus::Internal
        }
    }
}

unsafe fn config<'a>(p: *const InscribedConfig) -> Result<&'a InscribedConfig, InscribedStatus> {
    if p.is_null() {
        set_error("null configuration handle".into());
        return Err(InscribedStatus::NullPointer);
    }
    Ok(&*p)
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, InscribedStatus> {
    if p.is_null() {
        set_error("null string".into());
        return Err(InscribedStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string is not UTF-8".into());
        InscribedStatus::InvalidInput
    })
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), InscribedStatus> {
    if out.is_null() {
        set_error("null output pointer".into());
        return Err(InscribedStatus::NullPointer);
    }
    out.write(v);
    Ok(())
}

unsafe fn put_config(out: *mut *mut InscribedConfig, c: InscribedConfig) -> Result<(), InscribedStatus> {
    put(out, Box::into_raw(Box::new(c)))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), InscribedStatus> {
    let c = CString::new(s).map_err(|_| {
        set_error("output contains a NUL byte".into());
        InscribedStatus::Internal
    })?;
    put(out, c.into_raw())
}

fn plain(points: PointConfiguration) -> InscribedConfig {
    InscribedConfig { points, pole: None }
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn inscribed_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library or be NULL.
#[no_mangle]
pub unsafe extern "C" fn inscribed_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a `point_configuration` artifact, validating it.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn inscribed_config_from_json(
    json: *const c_char,
    out: *mut *mut InscribedConfig,
) -> InscribedStatus {
    guard(|| {
        let v: serde_json::Value = serde_json::from_str(text(json)?).map_err(|e| fail(e.into()))?;
        let c = match io::Artifact::from_json(&v).map_err(fail)? {
            io::Artifact::Points(points) => plain(points),
            io::Artifact::Inscribed(a) => InscribedConfig {
                pole: a.marked_pole(),
                points: a.into_base(),
            },
            other => {
                return Err(fail(Error::Parse(format!(
                    "expected a point configuration, found {}",
                    other.kind()
                ))))
            }
        };
        put_config(out, c)
    })
}

/// # Safety
/// `cfg` must come from this library or be NULL; it must not be used after.
#[no_mangle]
pub unsafe extern "C" fn inscribed_config_free(cfg: *mut InscribedConfig) {
    if !cfg.is_null() {
        drop(Box::from_raw(cfg));
    }
}

/// # Safety
/// `cfg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn inscribed_config_to_json(
    cfg: *const InscribedConfig,
    out: *mut *mut c_char,
) -> InscribedStatus {
    guard(|| {
        let c = config(cfg)?;
        let mut v = io::points_to_json(&c.points);
        if let Some(p) = c.pole {
            v["inscribed"] = serde_json::Value::Bool(true);
            v["marked_pole"] = (p + 1).into();
        }
        put_string(out, io::to_pretty(&v))
    })
}

/// # Safety
/// `cfg` must be a live handle and the outputs writable.
#[no_mangle]
pub unsafe extern "C" fn inscribed_config_shape(
    cfg: *const InscribedConfig,
    len: *mut usize,
    dim: *mut usize,
) -> InscribedStatus {
    guard(|| {
        let c = config(cfg)?;
        put(len, c.points.len())?;
        put(dim, c.points.dim())
    })
}

unsafe fn signed_predicate(
    cfg: *const InscribedConfig,
    labels: *const usize,
    count: usize,
    out: *mut i32,
    f: fn(&[&[inscribed::Rational]]) -> inscribed::Result<inscribed::Sign>,
) -> InscribedStatus {
    guard(|| {
        let c = config(cfg)?;
        if labels.is_null() && count > 0 {
            set_error("null label array".into());
            return Err(InscribedStatus::NullPointer);
        }
        let labels = if count == 0 { &[][..] } else { std::slice::from_raw_parts(labels, count) };
        let pts = labels
            .iter()
            .map(|&l| match l.checked_sub(1) {
                Some(i) => c.points.point(i),
                None => Err(Error::UnknownLabel { label: 0, n: c.points.len() }),
            })
            .collect::<inscribed::Result<Vec<_>>>()
            .map_err(fail)?;
        put(out, i32::from(f(&pts).map_err(fail)?.to_i8()))
    })
}

/// Sign of `det[(p_1,1), …, (p_{d+1},1)]` for the 1-based `labels`.
///
/// # Safety
/// `labels` must point to `count` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn inscribed_orientation(
    cfg: *const InscribedConfig,
    labels: *const usize,
    count: usize,
    out: *mut i32,
) -> InscribedStatus {
    signed_predicate(cfg, labels, count, out, orientation)
}

/// Position of the last of `d+2` labelled points relative to the sphere
/// through the others: +1 outside, 0 on, −1 inside.
///
/// # Safety
/// `labels` must point to `count` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn inscribed_in_sphere(
    cfg: *const InscribedConfig,
    labels: *const usize,
    count: usize,
    out: *mut i32,
) -> InscribedStatus {
    signed_predicate(cfg, labels, count, out, in_sphere)
}

/// # Safety
/// `cfg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn inscribed_is_neighborly(cfg: *const InscribedConfig, out: *mut bool) -> InscribedStatus {
    guard(|| {
        let c = config(cfg)?;
        put(out, is_neighborly(&c.points).map_err(fail)?)
    })
}

/// # Safety
/// `cfg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn inscribed_is_inscribed(cfg: *const InscribedConfig, out: *mut bool) -> InscribedStatus {
    guard(|| {
        let c = config(cfg)?;
        put(out, is_inscribed(&c.points))
    })
}

/// `face_lattice` artifact of the convex hull.
///
/// # Safety
/// `cfg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn inscribed_facets_json(cfg: *const InscribedConfig, out: *mut *mut c_char) -> InscribedStatus {
    guard(|| {
        let c = config(cfg)?;
        let f = facets(&c.points).map_err(fail)?;
        put_string(out, io::to_pretty(&io::face_lattice_to_json(&f)))
    })
}

/// `subdivision` artifact of the Delaunay subdivision.
///
/// # Safety
/// `cfg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn inscribed_delaunay_json(
    cfg: *const InscribedConfig,
    strict_boundary: bool,
    out: *mut *mut c_char,
) -> InscribedStatus {
    guard(|| {
        let c = config(cfg)?;
        let t = if strict_boundary {
            delaunay_subdivision_strict(&c.points)
        } else {
            delaunay_subdivision(&c.points)
        }
        .map_err(fail)?;
        put_string(out, io::to_pretty(&io::subdivision_to_json(&t)))
    })
}

/// Lexicographic lifting; `signs` is a string over `+` and `-` of length
/// `n − d`.
///
/// # Safety
/// `cfg` must be a live handle, `signs` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn inscribed_lex_lift(
    cfg: *const InscribedConfig,
    signs: *const c_char,
    delaunay: bool,
    out: *mut *mut InscribedConfig,
) -> InscribedStatus {
    guard(|| {
        let c = config(cfg)?;
        let s: SignVector = text(signs)?.parse().map_err(fail)?;
        let mode = if delaunay { LiftMode::Delaunay } else { LiftMode::Generic };
        let (lifted, _) = lex_lift(&c.points, &s, mode).map_err(fail)?;
        put_config(out, plain(lifted))
    })
}

/// Neighborly configuration of `2d+8` points in `R^{2d+4}` from `d+4`
/// points in `R^d`.
///
/// # Safety
/// `cfg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn inscribed_kortenkamp(
    cfg: *const InscribedConfig,
    budget: u64,
    seed: u64,
    out: *mut *mut InscribedConfig,
) -> InscribedStatus {
    guard(|| {
        let c = config(cfg)?;
        let k = kortenkamp_lift(&c.points, budget, seed).map_err(fail)?;
        put_config(out, plain(k.configuration))
    })
}

/// Inscribed neighborly polytope with `2n+2` vertices in `R^{2n−2}` from `n`
/// points in `R^{n−4}`; the pole is marked.
///
/// # Safety
/// `cfg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn inscribed_neighborly_pipeline(
    cfg: *const InscribedConfig,
    seed: u64,
    budget: u64,
    out: *mut *mut InscribedConfig,
) -> InscribedStatus {
    guard(|| {
        let c = config(cfg)?;
        let o = neighborly_pipeline(&c.points, seed, budget).map_err(fail)?;
        put_config(
            out,
            InscribedConfig {
                pole: o.inscribed.marked_pole(),
                points: o.inscribed.into_base(),
            },
        )
    })
}

/// Number of distinct real roots of `f_m`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn inscribed_fm_root_count(m: usize, out: *mut usize) -> InscribedStatus {
    guard(|| {
        if m > 16 {
            return Err(fail(Error::Precondition("m must be at most 16".into())));
        }
        put(out, sturm_root_count(&fm_polynomial(m)).map_err(fail)?)
    })
}
