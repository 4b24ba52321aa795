#ifndef DOWLING_H
#define DOWLING_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DowlingStatus {
  DOWLING_STATUS_OK = 0,
  DOWLING_STATUS_NULL_POINTER = 1,
  DOWLING_STATUS_INVALID_ARGUMENT = 2,
  DOWLING_STATUS_UNKNOWN_FAMILY = 3,
  DOWLING_STATUS_UNKNOWN_IDENTITY = 4,
  DOWLING_STATUS_OUT_OF_RANGE = 5,
  DOWLING_STATUS_VERIFICATION_FAILED = 6,
  DOWLING_STATUS_INTERNAL = 7,
} DowlingStatus;

/**
 * Opaque handle to a computed triangle.
 */
typedef struct DowlingTriangle DowlingTriangle;

/**
 * Parameters as decimal or `p/q` strings. Null fields are unset.
 */
typedef struct DowlingParams {
  const char *m;
  const char *r;
  const char *alpha;
  const char *beta;
  const char *gamma;
} DowlingParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds rows `0..=nmax` of `family` and stores a new handle in `*out`.
 *
 * # Safety
 * `family` must be a NUL-terminated string, `params` null or valid, and `out` writable.
 */
enum DowlingStatus dowling_triangle_new(const char *family,
                                        const struct DowlingParams *params,
                                        size_t nmax,
                                        struct DowlingTriangle **out);

/**
 * Largest row index, or 0 for a null handle.
 *
 * # Safety
 * `tri` must be null or a live handle.
 */
size_t dowling_triangle_nmax(const struct DowlingTriangle *tri);

/**
 * Writes entry `(n, k)` as a decimal string to `*out`.
 *
 * # Safety
 * `tri` must be a live handle and `out` writable.
 */
enum DowlingStatus dowling_triangle_entry(const struct DowlingTriangle *tri,
                                          size_t n,
                                          size_t k,
                                          char **out);

/**
 * Writes the triangle in its JSON form to `*out`.
 *
 * # Safety
 * `tri` must be a live handle and `out` writable.
 */
enum DowlingStatus dowling_triangle_json(const struct DowlingTriangle *tri, char **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `tri` must be null or a handle not yet freed.
 */
void dowling_triangle_free(struct DowlingTriangle *tri);

/**
 * Writes a Bell-type number (or a row sum of a triangle family) to `*out`.
 *
 * # Safety
 * `family` must be a NUL-terminated string, `params` null or valid, and `out` writable.
 */
enum DowlingStatus dowling_sum(const char *family,
                               const struct DowlingParams *params,
                               size_t n,
                               char **out);

/**
 * Checks a named identity and writes the JSON report to `*report`.
 *
 * A negative `nmax` selects the identity's default. Returns
 * `DOWLING_STATUS_VERIFICATION_FAILED` when the check ran but found
 * disagreements; the report is written in that case too.
 *
 * # Safety
 * `identity` must be a NUL-terminated string, `params` null or valid, and `report` writable.
 */
enum DowlingStatus dowling_verify(const char *identity,
                                  const struct DowlingParams *params,
                                  int64_t nmax,
                                  bool with_oracle,
                                  char **report);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void dowling_string_free(char *s);

/**
 * Message for the last failed call on this thread; empty after a success.
 *
 * The pointer stays valid until the next call into the library on the same thread.
 */
const char *dowling_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DOWLING_H */
