#ifndef INTERLACE_H
#define INTERLACE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Which orbit.
 */
typedef enum InterlaceOrbitKind {
  INTERLACE_ORBIT_KIND_LC = 0,
  INTERLACE_ORBIT_KIND_ELC = 1,
} InterlaceOrbitKind;

/**
 * Which interlace polynomial.
 */
typedef enum InterlacePolyKind {
  /**
   * Vertex-nullity polynomial q.
   */
  INTERLACE_POLY_KIND_LOWER = 0,
  /**
   * Global polynomial Q.
   */
  INTERLACE_POLY_KIND_UPPER = 1,
} InterlacePolyKind;

/**
 * Result of every fallible call.
 */
typedef enum InterlaceStatus {
  INTERLACE_STATUS_OK = 0,
  INTERLACE_STATUS_NULL_ARGUMENT = 1,
  INTERLACE_STATUS_INVALID_UTF8 = 2,
  INTERLACE_STATUS_PARSE = 3,
  INTERLACE_STATUS_DOMAIN = 4,
  INTERLACE_STATUS_ORBIT_BUDGET = 5,
  INTERLACE_STATUS_BUFFER_TOO_SMALL = 6,
  INTERLACE_STATUS_OVERFLOW = 7,
  INTERLACE_STATUS_PANIC = 8,
} InterlaceStatus;

/**
 * Opaque graph handle.
 */
typedef struct InterlaceGraph InterlaceGraph;

/**
 * Code parameters of a connected graph.
 */
typedef struct InterlaceMetrics {
  uint32_t n;
  /**
   * Minimum degree over the LC orbit, or -1 when not computed.
   */
  int32_t delta;
  uint32_t deg_q;
  /**
   * Q(G,4) / 2^n.
   */
  uint64_t q4_norm;
  uint64_t cmf_num;
  uint64_t cmf_den;
  /**
   * 1 or 2.
   */
  uint32_t code_type;
} InterlaceMetrics;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread; empty if none. Valid until the
 * next failing call on the same thread.
 */
const char *interlace_last_error(void);

/**
 * Parse one graph6 string into a new handle stored in `*out`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum InterlaceStatus interlace_graph_parse(const char *text, struct InterlaceGraph **out);

/**
 * Release a handle. Null is ignored.
 *
 * # Safety
 * `g` must come from `interlace_graph_parse` and not be used afterwards.
 */
void interlace_graph_free(struct InterlaceGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uint32_t interlace_graph_order(const struct InterlaceGraph *g);

/**
 * Write the graph6 encoding plus a NUL into `buf`. `*needed` receives the
 * required capacity including the NUL, also when the buffer is too small.
 *
 * # Safety
 * `g` must be a live handle, `buf` valid for `cap` bytes (may be null when
 * `cap` is 0) and `needed` null or valid.
 */
enum InterlaceStatus interlace_graph_to_graph6(const struct InterlaceGraph *g,
                                               char *buf,
                                               size_t cap,
                                               size_t *needed);

/**
 * Coefficients a_0..a_d of q or Q into `coeffs`. `*len` receives d+1, also
 * when the buffer is too small.
 *
 * # Safety
 * `g` must be a live handle, `coeffs` valid for `cap` values (may be null
 * when `cap` is 0) and `len` valid.
 */
enum InterlaceStatus interlace_polynomial(const struct InterlaceGraph *g,
                                          enum InterlacePolyKind kind,
                                          uint64_t *coeffs,
                                          size_t cap,
                                          size_t *len);

/**
 * Whether the graph is a circle graph. `budget` caps the LC orbit size
 * (0 selects the default).
 *
 * # Safety
 * `g` must be a live handle and `out` valid.
 */
enum InterlaceStatus interlace_is_circle(const struct InterlaceGraph *g,
                                         uint64_t budget,
                                         bool *out);

/**
 * Number of isomorphism classes in the LC or ELC orbit.
 *
 * # Safety
 * `g` must be a live handle and `out` valid.
 */
enum InterlaceStatus interlace_orbit_size(const struct InterlaceGraph *g,
                                          enum InterlaceOrbitKind kind,
                                          uint64_t budget,
                                          uint64_t *out);

/**
 * Code parameters of a connected graph. When `require_delta` is false an
 * over-budget orbit leaves `delta` at -1 instead of failing.
 *
 * # Safety
 * `g` must be a live handle and `out` valid.
 */
enum InterlaceStatus interlace_metrics(const struct InterlaceGraph *g,
                                       uint64_t budget,
                                       bool require_delta,
                                       struct InterlaceMetrics *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INTERLACE_H */
