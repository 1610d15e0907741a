//! C ABI for `nclocus`.
//!
//! Graphs and fans live behind opaque handles. Every fallible call returns an
//! [`NclStatus`]; on failure the message is available from
//! [`ncl_last_error`] on the same thread. Structured results come back as
//! NUL-terminated JSON strings owned by the caller and released with
//! [`ncl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nclocus::graph::{dual_surface, DecoratedGraph};
use nclocus::report::{self, Sections};
use nclocus::toric::{self, Fan};
use nclocus::topology::h1_graph_manifold;
use nclocus::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NclStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidInput = 4,
    /// The input is well formed but the requested invariant is undefined
    /// for it (disconnected, non-orientable, negative defect, ...).
    DomainError = 5,
    Panic = 6,
}

/// Decorated trivalent graph.
pub struct NclGraph(DecoratedGraph);

/// Fan of a smooth toric threefold.
pub struct NclFan(Fan);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> NclStatus {
    match e {
        Error::Parse(_) => NclStatus::ParseError,
        Error::InvalidGraph(_) | Error::InvalidFan(_) | Error::MalformedTransitions(_) => NclStatus::InvalidInput,
        _ => NclStatus::DomainError,
    }
}

fn fail(e: Error) -> NclStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn guard(f: impl FnOnce() -> NclStatus) -> NclStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        set_error("internal panic");
        NclStatus::Panic
    })
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, NclStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(NclStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        NclStatus::InvalidUtf8
    })
}

unsafe fn write_out<T>(out: *mut T, value: T) -> NclStatus {
    if out.is_null() {
        set_error("null output pointer");
        return NclStatus::NullPointer;
    }
    out.write(value);
    NclStatus::Ok
}

unsafe fn write_json(out: *mut *mut c_char, json: String) -> NclStatus {
    let c = CString::new(json).expect("JSON has no interior NUL");
    write_out(out, c.into_raw())
}

macro_rules! deref {
    ($p:expr) => {
        match $p.as_ref() {
            Some(h) => &h.0,
            None => {
                set_error("null handle");
                return NclStatus::NullPointer;
            }
        }
    };
}

macro_rules! try_ncl {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message of the last failed call on this thread, or NULL. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn ncl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ncl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a graph from JSON. The graph is not validated here.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncl_graph_from_json(json: *const c_char, out: *mut *mut NclGraph) -> NclStatus {
    guard(|| {
        let s = try_ncl!(read_str(json));
        match DecoratedGraph::from_json(s) {
            Ok(g) => write_out(out, Box::into_raw(Box::new(NclGraph(g)))),
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `g` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ncl_graph_free(g: *mut NclGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Serializes the graph back to JSON.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncl_graph_to_json(g: *const NclGraph, out: *mut *mut c_char) -> NclStatus {
    guard(|| write_json(out, deref!(g).to_json()))
}

/// Writes the number of structural violations (0 for a valid graph). The
/// messages are joined into [`ncl_last_error`] when there are any.
///
/// # Safety
/// `g` must be a live handle; `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncl_graph_validate(g: *const NclGraph, count: *mut usize) -> NclStatus {
    guard(|| {
        let violations = deref!(g).validate();
        if !violations.is_empty() {
            set_error(Error::InvalidGraph(violations.clone()).to_string());
        }
        write_out(count, violations.len())
    })
}

/// Genus of the dual surface (crosscap number if it is non-orientable).
///
/// # Safety
/// `g` must be a live handle; `genus` and `orientable` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncl_graph_genus(g: *const NclGraph, genus: *mut i64, orientable: *mut bool) -> NclStatus {
    guard(|| match dual_surface(deref!(g)) {
        Ok(s) => {
            let st = write_out(genus, s.genus as i64);
            if st != NclStatus::Ok {
                return st;
            }
            write_out(orientable, s.orientable)
        }
        Err(e) => fail(e),
    })
}

/// First homology of the graph manifold as `{"free": r, "torsion": [...]}`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncl_graph_h1_json(g: *const NclGraph, out: *mut *mut c_char) -> NclStatus {
    guard(|| match h1_graph_manifold(deref!(g)) {
        Ok(h) => write_json(out, serde_json::to_string(&h).expect("serializable")),
        Err(e) => fail(e),
    })
}

/// All analyses as one JSON object with a `result` and a `diagnostics`
/// array. Sections that do not apply are listed in `diagnostics`; the call
/// itself still succeeds.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncl_graph_analyze_json(g: *const NclGraph, out: *mut *mut c_char) -> NclStatus {
    guard(|| {
        let (result, diagnostics) = report::analyze(deref!(g), None, Sections::all());
        let v = serde_json::json!({"result": result, "diagnostics": diagnostics});
        write_json(out, v.to_string())
    })
}

/// Parses a fan from JSON and validates it.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncl_fan_from_json(json: *const c_char, out: *mut *mut NclFan) -> NclStatus {
    guard(|| {
        let s = try_ncl!(read_str(json));
        let fan = match Fan::from_json(s) {
            Ok(f) => f,
            Err(e) => return fail(e),
        };
        let violations = fan.validate();
        if !violations.is_empty() {
            return fail(Error::InvalidFan(violations));
        }
        write_out(out, Box::into_raw(Box::new(NclFan(fan))))
    })
}

/// Fan of the tetrahedral quartic mirror. Never NULL.
#[no_mangle]
pub extern "C" fn ncl_fan_quartic_mirror() -> *mut NclFan {
    Box::into_raw(Box::new(NclFan(toric::quartic_mirror_fan())))
}

/// # Safety
/// `f` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ncl_fan_free(f: *mut NclFan) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Numbers of rays, maximal cones and walls.
///
/// # Safety
/// `f` must be a live handle; the outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncl_fan_counts(
    f: *const NclFan,
    rays: *mut usize,
    cones: *mut usize,
    walls: *mut usize,
) -> NclStatus {
    guard(|| {
        let f = deref!(f);
        for (out, n) in [(rays, f.rays.len()), (cones, f.cones.len()), (walls, f.walls().len())] {
            let st = write_out(out, n);
            if st != NclStatus::Ok {
                return st;
            }
        }
        NclStatus::Ok
    })
}

/// Per-wall self-intersections, defect and anticanonical degree as a JSON
/// array.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncl_fan_walls_json(f: *const NclFan, out: *mut *mut c_char) -> NclStatus {
    guard(|| match toric::wall_reports(deref!(f)) {
        Ok(w) => write_json(out, serde_json::to_string(&w).expect("serializable")),
        Err(e) => fail(e),
    })
}

/// Decorated graph of the toric boundary.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncl_fan_boundary_graph(f: *const NclFan, out: *mut *mut NclGraph) -> NclStatus {
    guard(|| match toric::boundary_graph(deref!(f)) {
        Ok(g) => write_out(out, Box::into_raw(Box::new(NclGraph(g)))),
        Err(e) => fail(e),
    })
}
