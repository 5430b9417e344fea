#ifndef BIGRADE_H
#define BIGRADE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BigradeStatus {
  BIGRADE_STATUS_OK = 0,
  BIGRADE_STATUS_NULL_POINTER = 1,
  BIGRADE_STATUS_INVALID_UTF8 = 2,
  BIGRADE_STATUS_USAGE = 3,
  BIGRADE_STATUS_PARSE = 4,
  BIGRADE_STATUS_MATH = 5,
  BIGRADE_STATUS_INSTABILITY = 6,
  BIGRADE_STATUS_CONTRADICTION = 7,
  BIGRADE_STATUS_PANIC = 8,
} BigradeStatus;

/**
 * A bihomogeneous ideal with its ring and coefficient field.
 */
typedef struct BigradeIdeal BigradeIdeal;

/**
 * A monomial ideal, such as a bigeneric initial ideal.
 */
typedef struct BigradeMonomialIdeal BigradeMonomialIdeal;

/**
 * An upward-closed set of bidegrees.
 */
typedef struct BigradeRegion BigradeRegion;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into the library on this thread.
 */
const char *bigrade_last_error(void);

/**
 * Library version, a static string.
 */
const char *bigrade_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void bigrade_string_free(char *s);

/**
 * Parse the text of an ideal file.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum BigradeStatus bigrade_ideal_parse(const char *text, struct BigradeIdeal **out);

/**
 * # Safety
 * `ideal` must be null or a handle from this library, freed once.
 */
void bigrade_ideal_free(struct BigradeIdeal *ideal);

/**
 * The ideal in file syntax.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum BigradeStatus bigrade_ideal_to_string(const struct BigradeIdeal *ideal, char **out);

/**
 * The reduced Gröbner basis, as a new ideal handle.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum BigradeStatus bigrade_ideal_groebner_basis(const struct BigradeIdeal *ideal,
                                                struct BigradeIdeal **out);

/**
 * Saturation; `by` is `b`, `mx`, `my` or `poly:<expr>`.
 *
 * # Safety
 * `ideal` must be a live handle, `by` a NUL-terminated string, `out` writable.
 */
enum BigradeStatus bigrade_ideal_saturate(const struct BigradeIdeal *ideal,
                                          const char *by,
                                          struct BigradeIdeal **out);

/**
 * `HF_{S/I}(a, b)`, saturated at `u64::MAX`.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum BigradeStatus bigrade_ideal_hilbert_function(const struct BigradeIdeal *ideal,
                                                  int64_t a,
                                                  int64_t b,
                                                  uint64_t *out);

/**
 * Bigeneric initial ideal. `x_low` nonzero selects the order with the
 * x-block lowest.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum BigradeStatus bigrade_ideal_bigin(const struct BigradeIdeal *ideal,
                                       bool x_low,
                                       uint64_t seed,
                                       struct BigradeMonomialIdeal **out);

/**
 * Region where `HF_{S/I}` vanishes, for an ideal with empty variety.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum BigradeStatus bigrade_ideal_reg_empty(const struct BigradeIdeal *ideal,
                                           struct BigradeRegion **out);

/**
 * # Safety
 * `m` must be null or a handle from this library, freed once.
 */
void bigrade_monomial_ideal_free(struct BigradeMonomialIdeal *m);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum BigradeStatus bigrade_monomial_ideal_to_string(const struct BigradeMonomialIdeal *m,
                                                    char **out);

/**
 * Number of minimal generators.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum BigradeStatus bigrade_monomial_ideal_num_generators(const struct BigradeMonomialIdeal *m,
                                                         size_t *out);

/**
 * Bidegree of the `i`-th minimal generator.
 *
 * # Safety
 * `m` must be a live handle; `a` and `b` must be writable.
 */
enum BigradeStatus bigrade_monomial_ideal_generator_bidegree(const struct BigradeMonomialIdeal *m,
                                                             size_t i,
                                                             int64_t *a,
                                                             int64_t *b);

/**
 * `xreg` of a bi-Borel monomial ideal.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum BigradeStatus bigrade_monomial_ideal_xreg(const struct BigradeMonomialIdeal *m,
                                               struct BigradeRegion **out);

/**
 * Largest x- and y-degrees of the minimal generators of a bi-Borel ideal.
 *
 * # Safety
 * `m` must be a live handle; `x` and `y` must be writable.
 */
enum BigradeStatus bigrade_monomial_ideal_tor(const struct BigradeMonomialIdeal *m,
                                              int64_t *x,
                                              int64_t *y);

/**
 * # Safety
 * `r` must be null or a handle from this library, freed once.
 */
void bigrade_region_free(struct BigradeRegion *r);

/**
 * 1 if `(a, b)` lies in the region, 0 if not, -1 on a null handle.
 *
 * # Safety
 * `r` must be null or a live handle.
 */
int32_t bigrade_region_contains(const struct BigradeRegion *r, int64_t a, int64_t b);

/**
 * Number of minimal elements.
 *
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum BigradeStatus bigrade_region_num_minimal(const struct BigradeRegion *r, size_t *out);

/**
 * The `i`-th minimal element.
 *
 * # Safety
 * `r` must be a live handle; `a` and `b` must be writable.
 */
enum BigradeStatus bigrade_region_minimal(const struct BigradeRegion *r,
                                          size_t i,
                                          int64_t *a,
                                          int64_t *b);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BIGRADE_H */
