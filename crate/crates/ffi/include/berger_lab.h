#ifndef BERGER_LAB_H
#define BERGER_LAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
enum BlStatus
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : int32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  BL_STATUS_OK = 0,
  BL_STATUS_NULL_POINTER = 1,
  BL_STATUS_INVALID_ARGUMENT = 2,
  BL_STATUS_INVALID_SIGNATURE = 3,
  BL_STATUS_UNKNOWN_ALGEBRA = 4,
  BL_STATUS_NO_ISOTROPIC_SUBSPACE = 5,
  BL_STATUS_DOES_NOT_PRESERVE = 6,
  BL_STATUS_INTERNAL = 7,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum BlStatus BlStatus;
#else
typedef int32_t BlStatus;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

/**
 * A registered matrix Lie algebra on a space.
 */
typedef struct BlAlgebra BlAlgebra;

/**
 * The space of algebraic curvature tensors of an algebra.
 */
typedef struct BlCurvatureSpace BlCurvatureSpace;

/**
 * A pseudo-quaternionic-Hermitian space `ℍ^{r,s}` with Witt index `t`.
 */
typedef struct BlSpace BlSpace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *bl_version(void);

/**
 * Message of the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on this thread.
 */
const char *bl_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string obtained from this library that has not
 * been freed.
 */
void bl_string_free(char *s);

/**
 * Creates `ℍ^{r,s}` with Witt index `t ≤ min(r, s)`.
 *
 * # Safety
 * `out` must be NULL or valid for writing one pointer.
 */
BlStatus bl_space_new(size_t r, size_t s, size_t t, struct BlSpace **out);

/**
 * # Safety
 * `space` must be NULL or a handle from [`bl_space_new`] not yet freed.
 */
void bl_space_free(struct BlSpace *space);

/**
 * Real dimension `4(r + s)`.
 *
 * # Safety
 * `space` must be a live handle; `out` must be valid for writing.
 */
BlStatus bl_space_real_dim(const struct BlSpace *space, size_t *out);

/**
 * Builds a registered algebra (`sp`, `sp_w`, `sp1`, `glq`, `h0`,
 * `sp1+sp`, `sp1+sp_w`) on a space.
 *
 * # Safety
 * `space` must be a live handle, `name` a NUL-terminated string and
 * `out` valid for writing one pointer.
 */
BlStatus bl_algebra_new(const struct BlSpace *space, const char *name, struct BlAlgebra **out);

/**
 * # Safety
 * `algebra` must be NULL or a handle from [`bl_algebra_new`] not yet freed.
 */
void bl_algebra_free(struct BlAlgebra *algebra);

/**
 * # Safety
 * `algebra` must be a live handle; `out` must be valid for writing.
 */
BlStatus bl_algebra_dim(const struct BlAlgebra *algebra, size_t *out);

/**
 * Dimensions of the first and second prolongations of the algebra
 * restricted to the isotropic subspace `W`.
 *
 * # Safety
 * `algebra` must be a live handle; `first` and `second` must be valid for
 * writing.
 */
BlStatus bl_prolongation_dims(const struct BlAlgebra *algebra, size_t *first, size_t *second);

/**
 * Computes the space of algebraic curvature tensors of `algebra`.
 *
 * # Safety
 * `algebra` must be a live handle; `out` must be valid for writing one
 * pointer.
 */
BlStatus bl_curvature_space_new(const struct BlAlgebra *algebra, struct BlCurvatureSpace **out);

/**
 * # Safety
 * `space` must be NULL or a handle from [`bl_curvature_space_new`] not yet
 * freed.
 */
void bl_curvature_space_free(struct BlCurvatureSpace *space);

/**
 * # Safety
 * `space` must be a live handle; `out` must be valid for writing.
 */
BlStatus bl_curvature_space_dim(const struct BlCurvatureSpace *space, size_t *out);

/**
 * The space as JSON `{algebra, dim, basis}` with rationals as strings.
 * Free the result with [`bl_string_free`].
 *
 * # Safety
 * `space` must be a live handle; `out` must be valid for writing one
 * pointer.
 */
BlStatus bl_curvature_space_to_json(const struct BlCurvatureSpace *space, char **out);

/**
 * Berger closure report of the curvature space's algebra, as JSON.
 * Free the result with [`bl_string_free`].
 *
 * # Safety
 * `space` must be a live handle; `out` must be valid for writing one
 * pointer.
 */
BlStatus bl_berger_report_json(const struct BlCurvatureSpace *space, char **out);

/**
 * Runs the verification suite at `tier` (1 or 2) and returns the JSON
 * report. `all_passed` receives whether every check passed; failing checks
 * are not an error status.
 *
 * # Safety
 * `out` must be valid for writing one pointer; `all_passed` must be NULL or
 * valid for writing.
 */
BlStatus bl_verify_paper_json(uint8_t tier, char **out, bool *all_passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BERGER_LAB_H */
