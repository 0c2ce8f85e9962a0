#ifndef FLATDELTA_H
#define FLATDELTA_H

/* This header is generated by cbindgen from flatdelta-ffi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every C API call.
 */
typedef enum FdStatus {
  /**
   * The call succeeded.
   */
  FD_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  FD_STATUS_NULL_POINTER = 1,
  /**
   * Arguments were outside the domain of the operation.
   */
  FD_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The vertices do not span a full-dimensional simplex.
   */
  FD_STATUS_DEGENERATE = 3,
  /**
   * The requested flat pattern has more leading than trailing zeros.
   */
  FD_STATUS_NOT_REALIZABLE = 4,
  /**
   * Enumeration exceeded its candidate budget.
   */
  FD_STATUS_BUDGET_EXCEEDED = 5,
  /**
   * A string was not valid UTF-8 or not valid JSON for the schema.
   */
  FD_STATUS_PARSE_ERROR = 6,
  /**
   * A value does not fit the fixed-width result type.
   */
  FD_STATUS_OVERFLOW = 7,
  /**
   * An internal invariant failed.
   */
  FD_STATUS_INTERNAL = 8,
} FdStatus;

/**
 * Opaque delta-vector handle.
 */
typedef struct FdDelta FdDelta;

/**
 * Opaque simplex handle.
 */
typedef struct FdSimplex FdSimplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string pointer returned by this library, not yet
 * freed.
 */
void fd_string_free(char *s);

/**
 * Release a simplex handle. Null is ignored.
 *
 * # Safety
 * `s` must be null or a handle returned by this library, not yet freed.
 */
void fd_simplex_free(struct FdSimplex *s);

/**
 * Release a delta-vector handle. Null is ignored.
 *
 * # Safety
 * `d` must be null or a handle returned by this library, not yet freed.
 */
void fd_delta_free(struct FdDelta *d);

/**
 * Parse a simplex from its JSON form
 * `{"dim": d, "vertices": [[int, ...], ...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum FdStatus fd_simplex_from_json(const char *json, struct FdSimplex **out);

/**
 * Serialize a simplex to its JSON form.
 *
 * # Safety
 * `s` must be a live simplex handle; `out` must be a valid pointer.
 */
enum FdStatus fd_simplex_to_json(const struct FdSimplex *s, char **out);

/**
 * The standard simplex `conv(0, e_1, ..., e_dim)`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum FdStatus fd_simplex_unit(uintptr_t dim, struct FdSimplex **out);

/**
 * The pyramid over a simplex (appends a zero to its delta-vector).
 *
 * # Safety
 * `s` must be a live simplex handle; `out` must be a valid pointer.
 */
enum FdStatus fd_simplex_pyramid(const struct FdSimplex *s, struct FdSimplex **out);

/**
 * Dimension of a simplex.
 *
 * # Safety
 * `s` must be a live simplex handle; `out` must be a valid pointer.
 */
enum FdStatus fd_simplex_dim(const struct FdSimplex *s, uintptr_t *out);

/**
 * Normalized volume (the absolute edge determinant).
 *
 * # Safety
 * `s` must be a live simplex handle; `out` must be a valid pointer.
 */
enum FdStatus fd_simplex_normalized_volume(const struct FdSimplex *s, int64_t *out);

/**
 * Count lattice points of the `dilation`-th dilate; with `interior` set,
 * only strictly interior points (requires `dilation >= 1`).
 *
 * # Safety
 * `s` must be a live simplex handle; `out` must be a valid pointer.
 */
enum FdStatus fd_simplex_count(const struct FdSimplex *s,
                               uint64_t dilation,
                               bool interior,
                               uint64_t max_candidates,
                               int64_t *out);

/**
 * Whether the flat pattern `(1, 0^leading, level..., 0^trailing)` is the
 * delta-vector of some lattice polytope.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum FdStatus fd_is_realizable(uintptr_t dim,
                               uintptr_t leading_zeros,
                               uintptr_t trailing_zeros,
                               uint64_t level,
                               bool *out);

/**
 * Build a simplex realizing the flat pattern; fails with
 * `FD_STATUS_NOT_REALIZABLE` when `leading_zeros > trailing_zeros`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum FdStatus fd_realize_flat(uintptr_t dim,
                              uintptr_t leading_zeros,
                              uintptr_t trailing_zeros,
                              uint64_t level,
                              uint64_t max_candidates,
                              struct FdSimplex **out);

/**
 * Parse a delta-vector from its JSON form `{"d": d, "delta": [1, ...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum FdStatus fd_delta_from_json(const char *json, struct FdDelta **out);

/**
 * Serialize a delta-vector to its JSON form.
 *
 * # Safety
 * `d` must be a live delta handle; `out` must be a valid pointer.
 */
enum FdStatus fd_delta_to_json(const struct FdDelta *d, char **out);

/**
 * Delta-vector by counting dilations `0..=dim`.
 *
 * # Safety
 * `s` must be a live simplex handle; `out` must be a valid pointer.
 */
enum FdStatus fd_delta_by_counting(const struct FdSimplex *s,
                                   uint64_t max_candidates,
                                   struct FdDelta **out);

/**
 * Delta-vector as the degree distribution of the half-open parallelepiped.
 *
 * # Safety
 * `s` must be a live simplex handle; `out` must be a valid pointer.
 */
enum FdStatus fd_delta_from_box_points(const struct FdSimplex *s,
                                       uint64_t max_candidates,
                                       struct FdDelta **out);

/**
 * Dimension `d` of a delta-vector (it has `d + 1` entries).
 *
 * # Safety
 * `d` must be a live delta handle; `out` must be a valid pointer.
 */
enum FdStatus fd_delta_dim(const struct FdDelta *d, uintptr_t *out);

/**
 * One entry of a delta-vector.
 *
 * # Safety
 * `d` must be a live delta handle; `out` must be a valid pointer.
 */
enum FdStatus fd_delta_entry(const struct FdDelta *d, uintptr_t index, int64_t *out);

/**
 * Evaluate the counting polynomial at any integer dilation.
 *
 * # Safety
 * `d` must be a live delta handle; `out` must be a valid pointer.
 */
enum FdStatus fd_delta_ehrhart(const struct FdDelta *d, int64_t dilation, int64_t *out);

/**
 * Interior count at a positive dilation via reciprocity.
 *
 * # Safety
 * `d` must be a live delta handle; `out` must be a valid pointer.
 */
enum FdStatus fd_delta_interior(const struct FdDelta *d, uint64_t dilation, int64_t *out);

/**
 * Check the prefix/suffix inequality. On a violation `out_holds` is set to
 * false and `out_witness` (if non-null) receives the first failing index.
 *
 * # Safety
 * `d` must be a live delta handle; `out_holds` must be a valid pointer;
 * `out_witness` may be null.
 */
enum FdStatus fd_delta_stanley_holds(const struct FdDelta *d,
                                     bool *out_holds,
                                     uintptr_t *out_witness);

/**
 * Check the trailing-sum inequality; same contract as
 * [`fd_delta_stanley_holds`].
 *
 * # Safety
 * `d` must be a live delta handle; `out_holds` must be a valid pointer;
 * `out_witness` may be null.
 */
enum FdStatus fd_delta_hibi_holds(const struct FdDelta *d, bool *out_holds, uintptr_t *out_witness);

/**
 * Recognize the flat shape `(1, 0^k, a, ..., a, 0^l)`. When the vector is
 * flat, `out_is_flat` is set to true and the pattern parameters are
 * written; otherwise only `out_is_flat` is set (to false).
 *
 * # Safety
 * `d` must be a live delta handle; `out_is_flat` must be a valid pointer;
 * the parameter out-pointers may be null.
 */
enum FdStatus fd_delta_classify_flat(const struct FdDelta *d,
                                     uintptr_t *out_leading,
                                     uintptr_t *out_trailing,
                                     uint64_t *out_level,
                                     bool *out_is_flat);

/**
 * Verify by direct counting that two simplices agree in lattice-point
 * counts for dilations `1..=counts_agree` and interior counts for
 * `1..=interiors_agree`, then strictly diverge in both. `out_report_json`
 * (if non-null) receives the full report.
 *
 * # Safety
 * `p` and `q` must be live simplex handles; `out_passed` must be a valid
 * pointer; `out_report_json` may be null.
 */
enum FdStatus fd_verify_pair(const struct FdSimplex *p,
                             const struct FdSimplex *q,
                             uintptr_t counts_agree,
                             uintptr_t interiors_agree,
                             uint64_t max_candidates,
                             bool *out_passed,
                             char **out_report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FLATDELTA_H */
