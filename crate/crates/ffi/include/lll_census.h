#ifndef LLL_CENSUS_H
#define LLL_CENSUS_H

/* This header is generated by cbindgen from lll-census-ffi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every fallible call.
 */
typedef enum LcStatus {
  LcOk = 0,
  /**
   * An argument is outside its mathematical domain.
   */
  LcInvalidArgument = 1,
  /**
   * The operation needs a narrower parameter regime than given.
   */
  LcRegimeViolation = 2,
  /**
   * A required pointer was null.
   */
  LcNullPointer = 3,
  /**
   * Internal numeric machinery could not certify its accuracy.
   */
  LcNumericalError = 4,
} LcStatus;

/**
 * Parameter regime of a handle.
 */
typedef enum LcRegime {
  /**
   * 0 < eta < delta, n >= 2.
   */
  LcGeneral = 0,
  /**
   * Additionally n >= 22 and 1/2 < eta < delta < 1 (bound theorems apply).
   */
  LcBoundDomain = 1,
  /**
   * Additionally eta < 3/(4*sqrt(2)) and delta > 3/4 (approximations apply).
   */
  LcRestricted = 2,
} LcRegime;

/**
 * Opaque handle over validated reduction parameters.
 */
typedef struct LcParams LcParams;

/**
 * A lower/exact/upper triple in ln units with its sandwich verdict.
 */
typedef struct LcBounds {
  double lower_ln;
  double exact_ln;
  double upper_ln;
  bool sandwich_ok;
} LcBounds;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *lc_version(void);

/**
 * Validates (n, eta, delta) and allocates a parameter handle into `out`.
 * The handle must be released with [`lc_params_free`].
 *
 * # Safety
 * `out` must be a valid pointer to writable memory for one pointer.
 */
enum LcStatus lc_params_new(uint32_t n, double eta, double delta, struct LcParams **out);

/**
 * Releases a handle created by [`lc_params_new`]. Null is a no-op.
 *
 * # Safety
 * `params` must be null or a pointer previously returned by
 * [`lc_params_new`] that has not been freed yet.
 */
void lc_params_free(struct LcParams *params);

/**
 * Reports the regime classification of a handle.
 *
 * # Safety
 * `params` must be a live handle; `out` must be writable.
 */
enum LcStatus lc_params_regime(const struct LcParams *params, enum LcRegime *out);

/**
 * ln of the count in the direct (sphere-surface / zeta) form.
 *
 * # Safety
 * `params` must be a live handle; `out` must be writable.
 */
enum LcStatus lc_log_count_direct(const struct LcParams *params, double *out);

/**
 * ln of the count in the Riemann-Xi form.
 *
 * # Safety
 * `params` must be a live handle; `out` must be writable.
 */
enum LcStatus lc_log_count_xi(const struct LcParams *params, double *out);

/**
 * ln of the count divided by 2^n.
 *
 * # Safety
 * `params` must be a live handle; `out` must be writable.
 */
enum LcStatus lc_log_count_normalized(const struct LcParams *params, double *out);

/**
 * The composed lower/upper bounds on the full count, with the exact value
 * and sandwich verdict. Requires the bound domain (n >= 22, standard
 * parameter range).
 *
 * # Safety
 * `params` must be a live handle; `out` must point to an [`LcBounds`].
 */
enum LcStatus lc_combined_bounds(const struct LcParams *params, struct LcBounds *out);

/**
 * The restricted-regime bounds (n² terms with one n ln n correction each
 * side). Requires the restricted regime.
 *
 * # Safety
 * `params` must be a live handle; `out` must point to an [`LcBounds`].
 */
enum LcStatus lc_restricted_bounds(const struct LcParams *params, struct LcBounds *out);

/**
 * ln of the rough approximation cos^(-n³/6)(arcsin(eta/delta)).
 *
 * # Safety
 * `params` must be a live handle; `out` must be writable.
 */
enum LcStatus lc_rough_approx_log(const struct LcParams *params, double *out);

/**
 * ln of the tight approximation with correction weight `c` in [1/2, 4].
 *
 * # Safety
 * `params` must be a live handle; `out` must be writable.
 */
enum LcStatus lc_tight_approx_log(const struct LcParams *params, double c, double *out);

/**
 * Ratio of the rough approximation's ln to the exact ln-count.
 *
 * # Safety
 * `params` must be a live handle; `out` must be writable.
 */
enum LcStatus lc_asymptotic_ratio(const struct LcParams *params, double *out);

/**
 * ln Gamma(x) for x > 0.
 *
 * # Safety
 * `out` must be writable.
 */
enum LcStatus lc_log_gamma(double x, double *out);

/**
 * Riemann zeta at s >= 2.
 *
 * # Safety
 * `out` must be writable.
 */
enum LcStatus lc_zeta(double s, double *out);

/**
 * ln of the Riemann-Xi function at s >= 2.
 *
 * # Safety
 * `out` must be writable.
 */
enum LcStatus lc_xi_log(double s, double *out);

/**
 * ln of the secant-power integral over [0, phi], exact recurrence.
 *
 * # Safety
 * `out` must be writable.
 */
enum LcStatus lc_sec_integral_log(uint32_t m, double phi, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LLL_CENSUS_H */
