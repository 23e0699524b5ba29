//! C ABI over the hbdiff library: opaque handles, integer status codes,
//! and a thread-local error message. Every entry point catches panics, so
//! nothing unwinds across the boundary. The generated header lands in
//! `include/hbdiff.h`.
//!
//! Conventions: functions return `HbdiffStatus`; `HBDIFF_STATUS_OK` is 0.
//! On failure, `hbdiff_last_error_message` describes the problem (pointer
//! valid on the calling thread until its next failing call). Handles from
//! `*_from_*` constructors are released with the matching `*_free`;
//! strings returned through `char **` with `hbdiff_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hbdiff::diffusion::{run, DiffusionTrace};
use hbdiff::eval::spearman;
use hbdiff::genrand::generate;
use hbdiff::io::config::parse_generator_config;
use hbdiff::io::document::{graph_to_document, parse_graph, serialize_graph, ParsedGraph};
use hbdiff::rwalk::{run_n_walks, WalkConfig};
use hbdiff::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HbdiffStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Malformed input text (syntax).
    ParseError = 3,
    /// Well-formed input with invalid content.
    SchemaError = 4,
    /// Operating-system I/O failure.
    IoError = 5,
    /// A buffer or vector had the wrong length.
    LengthMismatch = 6,
    /// Any other domain error (see the error message).
    DomainError = 7,
    /// An internal panic was caught.
    Panic = 8,
}

/// Opaque graph handle: vertices, hb-edges and optional metadata.
pub struct HbdiffGraph {
    parsed: ParsedGraph,
}

/// Opaque diffusion trace handle.
pub struct HbdiffTrace {
    trace: DiffusionTrace,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = msg);
}

fn fail(err: Error) -> HbdiffStatus {
    set_error(&format!("{}: {err}", err.name()));
    match err.name() {
        "ParseError" => HbdiffStatus::ParseError,
        "SchemaError" => HbdiffStatus::SchemaError,
        "IoError" => HbdiffStatus::IoError,
        "LengthMismatch" => HbdiffStatus::LengthMismatch,
        _ => HbdiffStatus::DomainError,
    }
}

fn null_arg(what: &str) -> HbdiffStatus {
    set_error(&format!("{what} must not be null"));
    HbdiffStatus::NullArgument
}

fn guarded(body: impl FnOnce() -> HbdiffStatus) -> HbdiffStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            HbdiffStatus::Panic
        }
    }
}

/// # Safety
/// `p` must be null or point to a nul-terminated string.
unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, HbdiffStatus> {
    if p.is_null() {
        return Err(null_arg(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(&format!("{what} is not valid UTF-8"));
        HbdiffStatus::InvalidUtf8
    })
}

fn give_string(text: String, out: *mut *mut c_char) -> HbdiffStatus {
    let c = CString::new(text.replace('\0', " ")).expect("no interior nul");
    unsafe { *out = c.into_raw() };
    HbdiffStatus::Ok
}

/// Message for the most recent failure on this thread. Never null; valid
/// until the next failing call on the same thread. Do not free.
#[no_mangle]
pub extern "C" fn hbdiff_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn hbdiff_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a JSON graph document into a new graph handle.
///
/// # Safety
/// `json` must be nul-terminated; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hbdiff_graph_from_json(
    json: *const c_char,
    out: *mut *mut HbdiffGraph,
) -> HbdiffStatus {
    guarded(|| {
        if out.is_null() {
            return null_arg("out");
        }
        let text = match str_arg(json, "json") {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_graph(text) {
            Ok(parsed) => {
                *out = Box::into_raw(Box::new(HbdiffGraph { parsed }));
                HbdiffStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Generates a random graph from a TOML generator config.
///
/// # Safety
/// `toml` must be nul-terminated; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hbdiff_generate_from_toml(
    toml: *const c_char,
    out: *mut *mut HbdiffGraph,
) -> HbdiffStatus {
    guarded(|| {
        if out.is_null() {
            return null_arg("out");
        }
        let text = match str_arg(toml, "toml") {
            Ok(t) => t,
            Err(s) => return s,
        };
        let cfg = match parse_generator_config(text) {
            Ok(cfg) => cfg,
            Err(e) => return fail(e),
        };
        match generate(&cfg) {
            Ok(generated) => {
                let doc = generated.to_document();
                let parsed = hbdiff::io::document::document_to_graph(&doc)
                    .expect("generated documents are valid");
                *out = Box::into_raw(Box::new(HbdiffGraph { parsed }));
                HbdiffStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Serializes a graph handle back to a JSON document (labels and
/// provenance included when present).
///
/// # Safety
/// `g` must be a live graph handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hbdiff_graph_to_json(
    g: *const HbdiffGraph,
    out: *mut *mut c_char,
) -> HbdiffStatus {
    guarded(|| {
        if g.is_null() {
            return null_arg("g");
        }
        if out.is_null() {
            return null_arg("out");
        }
        let parsed = &(*g).parsed;
        let doc = graph_to_document(
            &parsed.graph,
            parsed.labels.as_ref(),
            parsed.provenance.as_ref(),
        );
        give_string(serialize_graph(&doc), out)
    })
}

/// Releases a graph handle. Null is ignored.
///
/// # Safety
/// `g` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hbdiff_graph_free(g: *mut HbdiffGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn hbdiff_graph_vertex_count(g: *const HbdiffGraph) -> usize {
    if g.is_null() {
        0
    } else {
        (*g).parsed.graph.vertex_count()
    }
}

/// Number of hb-edges; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn hbdiff_graph_hbedge_count(g: *const HbdiffGraph) -> usize {
    if g.is_null() {
        0
    } else {
        (*g).parsed.graph.hbedge_count()
    }
}

/// Copies the id of the vertex at `index` (the order all vertex-aligned
/// buffers use) into a fresh string.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hbdiff_graph_vertex_id(
    g: *const HbdiffGraph,
    index: usize,
    out: *mut *mut c_char,
) -> HbdiffStatus {
    guarded(|| {
        if g.is_null() {
            return null_arg("g");
        }
        if out.is_null() {
            return null_arg("out");
        }
        match (*g).parsed.graph.vertices().get(index) {
            Some(id) => give_string(id.clone(), out),
            None => {
                set_error(&format!("vertex index {index} out of range"));
                HbdiffStatus::LengthMismatch
            }
        }
    })
}

/// Copies the id of the hb-edge at `index` (the order all hb-edge-aligned
/// buffers use) into a fresh string.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hbdiff_graph_hbedge_id(
    g: *const HbdiffGraph,
    index: usize,
    out: *mut *mut c_char,
) -> HbdiffStatus {
    guarded(|| {
        if g.is_null() {
            return null_arg("g");
        }
        if out.is_null() {
            return null_arg("out");
        }
        match (*g).parsed.graph.hbedges().get(index) {
            Some(e) => give_string(e.id().to_string(), out),
            None => {
                set_error(&format!("hb-edge index {index} out of range"));
                HbdiffStatus::LengthMismatch
            }
        }
    })
}

/// Runs `steps` whole exchange-diffusion steps (at least 1) and returns a
/// trace handle.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hbdiff_diffuse(
    g: *const HbdiffGraph,
    steps: usize,
    out: *mut *mut HbdiffTrace,
) -> HbdiffStatus {
    guarded(|| {
        if g.is_null() {
            return null_arg("g");
        }
        if out.is_null() {
            return null_arg("out");
        }
        if steps == 0 {
            set_error("steps must be at least 1");
            return HbdiffStatus::DomainError;
        }
        let trace = run(&(*g).parsed.graph, steps);
        *out = Box::into_raw(Box::new(HbdiffTrace { trace }));
        HbdiffStatus::Ok
    })
}

/// Releases a trace handle. Null is ignored.
///
/// # Safety
/// `t` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hbdiff_trace_free(t: *mut HbdiffTrace) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of whole steps in the trace; 0 for a null handle.
///
/// # Safety
/// `t` must be null or a live trace handle.
#[no_mangle]
pub unsafe extern "C" fn hbdiff_trace_step_count(t: *const HbdiffTrace) -> usize {
    if t.is_null() {
        0
    } else {
        (*t).trace.step_count()
    }
}

/// Number of vertex entries per step; 0 for a null handle.
///
/// # Safety
/// `t` must be null or a live trace handle.
#[no_mangle]
pub unsafe extern "C" fn hbdiff_trace_vertex_count(t: *const HbdiffTrace) -> usize {
    if t.is_null() {
        0
    } else {
        (*t).trace.vertex_count()
    }
}

/// Number of hb-edge entries per half step; 0 for a null handle.
///
/// # Safety
/// `t` must be null or a live trace handle.
#[no_mangle]
pub unsafe extern "C" fn hbdiff_trace_hbedge_count(t: *const HbdiffTrace) -> usize {
    if t.is_null() {
        0
    } else {
        (*t).trace.hbedge_count()
    }
}

/// Copies the vertex values after `step` whole steps (0 = the uniform
/// start) into `buf`, which holds `len` doubles; `len` must equal the
/// trace's vertex count.
///
/// # Safety
/// `t` must be a live trace handle; `buf` must point to `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn hbdiff_trace_alpha(
    t: *const HbdiffTrace,
    step: usize,
    buf: *mut f64,
    len: usize,
) -> HbdiffStatus {
    guarded(|| {
        if t.is_null() {
            return null_arg("t");
        }
        if buf.is_null() {
            return null_arg("buf");
        }
        let trace = &(*t).trace;
        if step > trace.step_count() {
            set_error(&format!(
                "step {step} out of range (trace has {} steps)",
                trace.step_count()
            ));
            return HbdiffStatus::LengthMismatch;
        }
        let values = trace.alpha_at(step);
        if len != values.len() {
            set_error(&format!("buffer holds {len} values, need {}", values.len()));
            return HbdiffStatus::LengthMismatch;
        }
        std::ptr::copy_nonoverlapping(values.as_ptr(), buf, len);
        HbdiffStatus::Ok
    })
}

/// Copies the hb-edge values at half step `step + 1/2` into `buf`, which
/// holds `len` doubles; `len` must equal the trace's hb-edge count and
/// `step` must be below the trace's step count.
///
/// # Safety
/// `t` must be a live trace handle; `buf` must point to `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn hbdiff_trace_epsilon(
    t: *const HbdiffTrace,
    step: usize,
    buf: *mut f64,
    len: usize,
) -> HbdiffStatus {
    guarded(|| {
        if t.is_null() {
            return null_arg("t");
        }
        if buf.is_null() {
            return null_arg("buf");
        }
        let trace = &(*t).trace;
        if step >= trace.step_count() {
            set_error(&format!(
                "half step {step} out of range (trace has {} steps)",
                trace.step_count()
            ));
            return HbdiffStatus::LengthMismatch;
        }
        let values = trace.epsilon_at(step);
        if len != values.len() {
            set_error(&format!("buffer holds {len} values, need {}", values.len()));
            return HbdiffStatus::LengthMismatch;
        }
        std::ptr::copy_nonoverlapping(values.as_ptr(), buf, len);
        HbdiffStatus::Ok
    })
}

/// Aggregates `n_walks` full-exploration random walks (`beta` = move
/// probability, seeded) and writes per-vertex and per-hb-edge passage
/// counts into the two buffers, whose lengths must match the graph.
/// `total_moves` (optional, may be null) receives the summed move count.
///
/// # Safety
/// `g` must be a live graph handle; the buffers must match their lengths.
#[no_mangle]
pub unsafe extern "C" fn hbdiff_walk(
    g: *const HbdiffGraph,
    beta: f64,
    n_walks: usize,
    seed: u64,
    vertex_passages: *mut u64,
    vertex_len: usize,
    hbedge_passages: *mut u64,
    hbedge_len: usize,
    total_moves: *mut u64,
) -> HbdiffStatus {
    guarded(|| {
        if g.is_null() {
            return null_arg("g");
        }
        if vertex_passages.is_null() {
            return null_arg("vertex_passages");
        }
        if hbedge_passages.is_null() {
            return null_arg("hbedge_passages");
        }
        let graph = &(*g).parsed.graph;
        if vertex_len != graph.vertex_count() {
            set_error(&format!(
                "vertex buffer holds {vertex_len} values, need {}",
                graph.vertex_count()
            ));
            return HbdiffStatus::LengthMismatch;
        }
        if hbedge_len != graph.hbedge_count() {
            set_error(&format!(
                "hb-edge buffer holds {hbedge_len} values, need {}",
                graph.hbedge_count()
            ));
            return HbdiffStatus::LengthMismatch;
        }
        let cfg = WalkConfig {
            beta,
            n_walks,
            seed,
            ..WalkConfig::default()
        };
        match run_n_walks(graph, &cfg) {
            Ok(outcome) => {
                std::ptr::copy_nonoverlapping(
                    outcome.counts.vertex_passages.as_ptr(),
                    vertex_passages,
                    vertex_len,
                );
                std::ptr::copy_nonoverlapping(
                    outcome.counts.hbedge_passages.as_ptr(),
                    hbedge_passages,
                    hbedge_len,
                );
                if !total_moves.is_null() {
                    *total_moves = outcome.per_walk_steps.iter().sum();
                }
                HbdiffStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Spearman rank correlation (ties averaged) of two length-`len` vectors;
/// 0.0 when either side has no rank variance.
///
/// # Safety
/// `a` and `b` must point to `len` doubles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hbdiff_spearman(
    a: *const f64,
    b: *const f64,
    len: usize,
    out: *mut f64,
) -> HbdiffStatus {
    guarded(|| {
        if a.is_null() {
            return null_arg("a");
        }
        if b.is_null() {
            return null_arg("b");
        }
        if out.is_null() {
            return null_arg("out");
        }
        let a = std::slice::from_raw_parts(a, len);
        let b = std::slice::from_raw_parts(b, len);
        match spearman(a, b) {
            Ok(rho) => {
                *out = rho;
                HbdiffStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}
