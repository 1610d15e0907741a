#ifndef NCLOCUS_H
#define NCLOCUS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum NclStatus {
  NCL_STATUS_OK = 0,
  NCL_STATUS_NULL_POINTER = 1,
  NCL_STATUS_INVALID_UTF8 = 2,
  NCL_STATUS_PARSE_ERROR = 3,
  NCL_STATUS_INVALID_INPUT = 4,
  /**
   * The input is well formed but the requested invariant is undefined
   * for it (disconnected, non-orientable, negative defect, ...).
   */
  NCL_STATUS_DOMAIN_ERROR = 5,
  NCL_STATUS_PANIC = 6,
} NclStatus;

/**
 * Fan of a smooth toric threefold.
 */
typedef struct NclFan NclFan;

/**
 * Decorated trivalent graph.
 */
typedef struct NclGraph NclGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *ncl_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void ncl_string_free(char *s);

/**
 * Parses a graph from JSON. The graph is not validated here.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum NclStatus ncl_graph_from_json(const char *json, struct NclGraph **out);

/**
 * # Safety
 * `g` must be NULL or a live handle from this library.
 */
void ncl_graph_free(struct NclGraph *g);

/**
 * Serializes the graph back to JSON.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum NclStatus ncl_graph_to_json(const struct NclGraph *g, char **out);

/**
 * Writes the number of structural violations (0 for a valid graph). The
 * messages are joined into [`ncl_last_error`] when there are any.
 *
 * # Safety
 * `g` must be a live handle; `count` must be writable.
 */
enum NclStatus ncl_graph_validate(const struct NclGraph *g, uintptr_t *count);

/**
 * Genus of the dual surface (crosscap number if it is non-orientable).
 *
 * # Safety
 * `g` must be a live handle; `genus` and `orientable` must be writable.
 */
enum NclStatus ncl_graph_genus(const struct NclGraph *g, int64_t *genus, bool *orientable);

/**
 * First homology of the graph manifold as `{"free": r, "torsion": [...]}`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum NclStatus ncl_graph_h1_json(const struct NclGraph *g, char **out);

/**
 * All analyses as one JSON object with a `result` and a `diagnostics`
 * array. Sections that do not apply are listed in `diagnostics`; the call
 * itself still succeeds.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum NclStatus ncl_graph_analyze_json(const struct NclGraph *g, char **out);

/**
 * Parses a fan from JSON and validates it.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum NclStatus ncl_fan_from_json(const char *json, struct NclFan **out);

/**
 * Fan of the tetrahedral quartic mirror. Never NULL.
 */
struct NclFan *ncl_fan_quartic_mirror(void);

/**
 * # Safety
 * `f` must be NULL or a live handle from this library.
 */
void ncl_fan_free(struct NclFan *f);

/**
 * Numbers of rays, maximal cones and walls.
 *
 * # Safety
 * `f` must be a live handle; the outputs must be writable.
 */
enum NclStatus ncl_fan_counts(const struct NclFan *f,
                              uintptr_t *rays,
                              uintptr_t *cones,
                              uintptr_t *walls);

/**
 * Per-wall self-intersections, defect and anticanonical degree as a JSON
 * array.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum NclStatus ncl_fan_walls_json(const struct NclFan *f, char **out);

/**
 * Decorated graph of the toric boundary.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum NclStatus ncl_fan_boundary_graph(const struct NclFan *f, struct NclGraph **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NCLOCUS_H */
