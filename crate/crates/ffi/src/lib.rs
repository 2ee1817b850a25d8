//! C ABI over the interlace library.
//!
//! Graphs are opaque handles created by `interlace_graph_parse` and released
//! with `interlace_graph_free`. Every fallible call returns an
//! `InterlaceStatus`; the message of the last failure on the calling thread
//! is available from `interlace_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use interlace::circle::is_circle_graph_with_budget;
use interlace::codes::{self, CodeType};
use interlace::orbits::{orbit, DEFAULT_ORBIT_BUDGET};
use interlace::{parse_graph6, Error, Graph, InterlaceCache, OrbitKind, PolyKind};
use num_traits::ToPrimitive;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InterlaceStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    OrbitBudget = 5,
    BufferTooSmall = 6,
    Overflow = 7,
    Panic = 8,
}

/// Which interlace polynomial.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InterlacePolyKind {
    /// Vertex-nullity polynomial q.
    Lower = 0,
    /// Global polynomial Q.
    Upper = 1,
}

/// Which orbit.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InterlaceOrbitKind {
    Lc = 0,
    Elc = 1,
}

/// Code parameters of a connected graph.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct InterlaceMetrics {
    pub n: u32,
    /// Minimum degree over the LC orbit, or -1 when not computed.
    pub delta: i32,
    pub deg_q: u32,
    /// Q(G,4) / 2^n.
    pub q4_norm: u64,
    pub cmf_num: u64,
    pub cmf_den: u64,
    /// 1 or 2.
    pub code_type: u32,
}

/// Opaque graph handle.
pub struct InterlaceGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: InterlaceStatus, msg: impl AsRef<str>) -> InterlaceStatus {
    set_error(msg.as_ref());
    status
}

fn from_error(e: Error) -> InterlaceStatus {
    let status = match e {
        Error::Graph6Char { .. } | Error::Graph6Length { .. } | Error::Graph6Empty | Error::TooManyVertices(_) => {
            InterlaceStatus::Parse
        }
        Error::OrbitBudget(_) => InterlaceStatus::OrbitBudget,
        _ => InterlaceStatus::Domain,
    };
    fail(status, e.to_string())
}

fn guard<F: FnOnce() -> InterlaceStatus>(f: F) -> InterlaceStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(InterlaceStatus::Panic, "internal panic"))
}

fn budget_or_default(budget: u64) -> usize {
    if budget == 0 {
        DEFAULT_ORBIT_BUDGET
    } else {
        usize::try_from(budget).unwrap_or(usize::MAX)
    }
}

unsafe fn graph_ref<'a>(g: *const InterlaceGraph) -> Option<&'a Graph> {
    g.as_ref().map(|h| &h.graph)
}

/// Message of the last failure on this thread; empty if none. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn interlace_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parse one graph6 string into a new handle stored in `*out`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn interlace_graph_parse(text: *const c_char, out: *mut *mut InterlaceGraph) -> InterlaceStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(InterlaceStatus::NullArgument, "null argument");
        }
        *out = ptr::null_mut();
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return fail(InterlaceStatus::InvalidUtf8, "input is not UTF-8");
        };
        match parse_graph6(s.trim()) {
            Ok(graph) => {
                *out = Box::into_raw(Box::new(InterlaceGraph { graph }));
                InterlaceStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Release a handle. Null is ignored.
///
/// # Safety
/// `g` must come from `interlace_graph_parse` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn interlace_graph_free(g: *mut InterlaceGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn interlace_graph_order(g: *const InterlaceGraph) -> u32 {
    graph_ref(g).map_or(0, |g| g.order() as u32)
}

/// Write the graph6 encoding plus a NUL into `buf`. `*needed` receives the
/// required capacity including the NUL, also when the buffer is too small.
///
/// # Safety
/// `g` must be a live handle, `buf` valid for `cap` bytes (may be null when
/// `cap` is 0) and `needed` null or valid.
#[no_mangle]
pub unsafe extern "C" fn interlace_graph_to_graph6(
    g: *const InterlaceGraph,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> InterlaceStatus {
    guard(|| {
        let Some(g) = graph_ref(g) else {
            return fail(InterlaceStatus::NullArgument, "null graph");
        };
        let text = g.to_string();
        let len = text.len() + 1;
        if !needed.is_null() {
            *needed = len;
        }
        if buf.is_null() || cap < len {
            return fail(InterlaceStatus::BufferTooSmall, format!("need {len} bytes"));
        }
        ptr::copy_nonoverlapping(text.as_ptr(), buf.cast::<u8>(), text.len());
        *buf.add(text.len()) = 0;
        InterlaceStatus::Ok
    })
}

/// Coefficients a_0..a_d of q or Q into `coeffs`. `*len` receives d+1, also
/// when the buffer is too small.
///
/// # Safety
/// `g` must be a live handle, `coeffs` valid for `cap` values (may be null
/// when `cap` is 0) and `len` valid.
#[no_mangle]
pub unsafe extern "C" fn interlace_polynomial(
    g: *const InterlaceGraph,
    kind: InterlacePolyKind,
    coeffs: *mut u64,
    cap: usize,
    len: *mut usize,
) -> InterlaceStatus {
    guard(|| {
        let (Some(g), false) = (graph_ref(g), len.is_null()) else {
            return fail(InterlaceStatus::NullArgument, "null argument");
        };
        let kind = match kind {
            InterlacePolyKind::Lower => PolyKind::LowerQ,
            InterlacePolyKind::Upper => PolyKind::UpperQ,
        };
        let c = InterlaceCache::new().coefficients(g, kind);
        *len = c.len();
        if c.len() > cap || (coeffs.is_null() && !c.is_empty()) {
            return fail(InterlaceStatus::BufferTooSmall, format!("need {} coefficients", c.len()));
        }
        ptr::copy_nonoverlapping(c.as_ptr(), coeffs, c.len());
        InterlaceStatus::Ok
    })
}

/// Whether the graph is a circle graph. `budget` caps the LC orbit size
/// (0 selects the default).
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn interlace_is_circle(g: *const InterlaceGraph, budget: u64, out: *mut bool) -> InterlaceStatus {
    guard(|| {
        let (Some(g), false) = (graph_ref(g), out.is_null()) else {
            return fail(InterlaceStatus::NullArgument, "null argument");
        };
        match is_circle_graph_with_budget(g, budget_or_default(budget)) {
            Ok(c) => {
                *out = c;
                InterlaceStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Number of isomorphism classes in the LC or ELC orbit.
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn interlace_orbit_size(
    g: *const InterlaceGraph,
    kind: InterlaceOrbitKind,
    budget: u64,
    out: *mut u64,
) -> InterlaceStatus {
    guard(|| {
        let (Some(g), false) = (graph_ref(g), out.is_null()) else {
            return fail(InterlaceStatus::NullArgument, "null argument");
        };
        let kind = match kind {
            InterlaceOrbitKind::Lc => OrbitKind::Lc,
            InterlaceOrbitKind::Elc => OrbitKind::Elc,
        };
        match orbit(g, kind, budget_or_default(budget)) {
            Ok(o) => {
                *out = o.len() as u64;
                InterlaceStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Code parameters of a connected graph. When `require_delta` is false an
/// over-budget orbit leaves `delta` at -1 instead of failing.
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn interlace_metrics(
    g: *const InterlaceGraph,
    budget: u64,
    require_delta: bool,
    out: *mut InterlaceMetrics,
) -> InterlaceStatus {
    guard(|| {
        let (Some(g), false) = (graph_ref(g), out.is_null()) else {
            return fail(InterlaceStatus::NullArgument, "null argument");
        };
        let m = match codes::metrics_with(g, &InterlaceCache::new(), budget_or_default(budget), require_delta) {
            Ok(m) => m,
            Err(e) => return from_error(e),
        };
        let (Some(q4), Some(num), Some(den)) = (m.q4_norm.to_u64(), m.cmf.num().to_u64(), m.cmf.den().to_u64()) else {
            return fail(InterlaceStatus::Overflow, "value does not fit in 64 bits");
        };
        *out = InterlaceMetrics {
            n: m.n as u32,
            delta: m.delta.map_or(-1, |d| d as i32),
            deg_q: m.deg_q as u32,
            q4_norm: q4,
            cmf_num: num,
            cmf_den: den,
            code_type: match m.code_type {
                CodeType::I => 1,
                CodeType::II => 2,
            },
        };
        InterlaceStatus::Ok
    })
}
