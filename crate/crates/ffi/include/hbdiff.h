#ifndef HBDIFF_H
#define HBDIFF_H

/* Generated by the build script from src/lib.rs; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum {
  // Success.
  HBDIFF_STATUS_OK = 0,
  // A required pointer argument was null.
  HBDIFF_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  HBDIFF_STATUS_INVALID_UTF8 = 2,
  // Malformed input text (syntax).
  HBDIFF_STATUS_PARSE_ERROR = 3,
  // Well-formed input with invalid content.
  HBDIFF_STATUS_SCHEMA_ERROR = 4,
  // Operating-system I/O failure.
  HBDIFF_STATUS_IO_ERROR = 5,
  // A buffer or vector had the wrong length.
  HBDIFF_STATUS_LENGTH_MISMATCH = 6,
  // Any other domain error (see the error message).
  HBDIFF_STATUS_DOMAIN_ERROR = 7,
  // An internal panic was caught.
  HBDIFF_STATUS_PANIC = 8,
} hbdiff_status;

// Opaque graph handle: vertices, hb-edges and optional metadata.
typedef struct hbdiff_graph hbdiff_graph;

// Opaque diffusion trace handle.
typedef struct hbdiff_trace hbdiff_trace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread. Never null; valid
// until the next failing call on the same thread. Do not free.
const char *hbdiff_last_error_message(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must have been returned by this library and not freed before.
void hbdiff_string_free(char *s);

// Parses a JSON graph document into a new graph handle.
//
// # Safety
// `json` must be nul-terminated; `out` must be a valid pointer.
hbdiff_status hbdiff_graph_from_json(const char *json, hbdiff_graph **out);

// Generates a random graph from a TOML generator config.
//
// # Safety
// `toml` must be nul-terminated; `out` must be a valid pointer.
hbdiff_status hbdiff_generate_from_toml(const char *toml, hbdiff_graph **out);

// Serializes a graph handle back to a JSON document (labels and
// provenance included when present).
//
// # Safety
// `g` must be a live graph handle; `out` must be a valid pointer.
hbdiff_status hbdiff_graph_to_json(const hbdiff_graph *g, char **out);

// Releases a graph handle. Null is ignored.
//
// # Safety
// `g` must have come from this library and not be freed twice.
void hbdiff_graph_free(hbdiff_graph *g);

// Number of vertices; 0 for a null handle.
//
// # Safety
// `g` must be null or a live graph handle.
size_t hbdiff_graph_vertex_count(const hbdiff_graph *g);

// Number of hb-edges; 0 for a null handle.
//
// # Safety
// `g` must be null or a live graph handle.
size_t hbdiff_graph_hbedge_count(const hbdiff_graph *g);

// Copies the id of the vertex at `index` (the order all vertex-aligned
// buffers use) into a fresh string.
//
// # Safety
// `g` must be a live graph handle; `out` must be a valid pointer.
hbdiff_status hbdiff_graph_vertex_id(const hbdiff_graph *g, size_t index, char **out);

// Copies the id of the hb-edge at `index` (the order all hb-edge-aligned
// buffers use) into a fresh string.
//
// # Safety
// `g` must be a live graph handle; `out` must be a valid pointer.
hbdiff_status hbdiff_graph_hbedge_id(const hbdiff_graph *g, size_t index, char **out);

// Runs `steps` whole exchange-diffusion steps (at least 1) and returns a
// trace handle.
//
// # Safety
// `g` must be a live graph handle; `out` must be a valid pointer.
hbdiff_status hbdiff_diffuse(const hbdiff_graph *g, size_t steps, hbdiff_trace **out);

// Releases a trace handle. Null is ignored.
//
// # Safety
// `t` must have come from this library and not be freed twice.
void hbdiff_trace_free(hbdiff_trace *t);

// Number of whole steps in the trace; 0 for a null handle.
//
// # Safety
// `t` must be null or a live trace handle.
size_t hbdiff_trace_step_count(const hbdiff_trace *t);

// Number of vertex entries per step; 0 for a null handle.
//
// # Safety
// `t` must be null or a live trace handle.
size_t hbdiff_trace_vertex_count(const hbdiff_trace *t);

// Number of hb-edge entries per half step; 0 for a null handle.
//
// # Safety
// `t` must be null or a live trace handle.
size_t hbdiff_trace_hbedge_count(const hbdiff_trace *t);

// Copies the vertex values after `step` whole steps (0 = the uniform
// start) into `buf`, which holds `len` doubles; `len` must equal the
// trace's vertex count.
//
// # Safety
// `t` must be a live trace handle; `buf` must point to `len` doubles.
hbdiff_status hbdiff_trace_alpha(const hbdiff_trace *t, size_t step, double *buf, size_t len);

// Copies the hb-edge values at half step `step + 1/2` into `buf`, which
// holds `len` doubles; `len` must equal the trace's hb-edge count and
// `step` must be below the trace's step count.
//
// # Safety
// `t` must be a live trace handle; `buf` must point to `len` doubles.
hbdiff_status hbdiff_trace_epsilon(const hbdiff_trace *t, size_t step, double *buf, size_t len);

// Aggregates `n_walks` full-exploration random walks (`beta` = move
// probability, seeded) and writes per-vertex and per-hb-edge passage
// counts into the two buffers, whose lengths must match the graph.
// `total_moves` (optional, may be null) receives the summed move count.
//
// # Safety
// `g` must be a live graph handle; the buffers must match their lengths.
hbdiff_status hbdiff_walk(const hbdiff_graph *g,
                          double beta,
                          size_t n_walks,
                          uint64_t seed,
                          uint64_t *vertex_passages,
                          size_t vertex_len,
                          uint64_t *hbedge_passages,
                          size_t hbedge_len,
                          uint64_t *total_moves);

// Spearman rank correlation (ties averaged) of two length-`len` vectors;
// 0.0 when either side has no rank variance.
//
// # Safety
// `a` and `b` must point to `len` doubles; `out` must be valid.
hbdiff_status hbdiff_spearman(const double *a, const double *b, size_t len, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HBDIFF_H */
