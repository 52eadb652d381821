//! C ABI over the count evaluator, bounds and approximations.
//!
//! Reduction parameters live behind an opaque [`LcParams`] handle created by
//! [`lc_params_new`] and released by [`lc_params_free`]. Every computation
//! writes its result through an out-pointer and returns an [`LcStatus`];
//! results are natural logs, like everywhere else in the library.
//!
//! The companion header `include/lll_census.h` is regenerated by the build
//! script.

use std::os::raw::c_char;

use lll_census::analysis;
use lll_census::census::{self, ReductionParams, Regime};
use lll_census::error::Error;
use lll_census::secint;
use lll_census::specialfn;

/// Status code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcStatus {
    LcOk = 0,
    /// An argument is outside its mathematical domain.
    LcInvalidArgument = 1,
    /// The operation needs a narrower parameter regime than given.
    LcRegimeViolation = 2,
    /// A required pointer was null.
    LcNullPointer = 3,
    /// Internal numeric machinery could not certify its accuracy.
    LcNumericalError = 4,
}

/// Parameter regime of a handle.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcRegime {
    /// 0 < eta < delta, n >= 2.
    LcGeneral = 0,
    /// Additionally n >= 22 and 1/2 < eta < delta < 1 (bound theorems apply).
    LcBoundDomain = 1,
    /// Additionally eta < 3/(4*sqrt(2)) and delta > 3/4 (approximations apply).
    LcRestricted = 2,
}

/// A lower/exact/upper triple in ln units with its sandwich verdict.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct LcBounds {
    pub lower_ln: f64,
    pub exact_ln: f64,
    pub upper_ln: f64,
    pub sandwich_ok: bool,
}

/// Opaque handle over validated reduction parameters.
pub struct LcParams {
    inner: ReductionParams,
}

fn status_of(err: &Error) -> LcStatus {
    match err {
        Error::RegimeViolation { .. } => LcStatus::LcRegimeViolation,
        Error::QuadratureAccuracy { .. } => LcStatus::LcNumericalError,
        _ => LcStatus::LcInvalidArgument,
    }
}

// Writes a computed value through an out-pointer, mapping errors to statuses.
unsafe fn write_result(out: *mut f64, value: Result<f64, Error>) -> LcStatus {
    if out.is_null() {
        return LcStatus::LcNullPointer;
    }
    match value {
        Ok(v) => {
            *out = v;
            LcStatus::LcOk
        }
        Err(e) => status_of(&e),
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn lc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Validates (n, eta, delta) and allocates a parameter handle into `out`.
/// The handle must be released with [`lc_params_free`].
///
/// # Safety
/// `out` must be a valid pointer to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_params_new(
    n: u32,
    eta: f64,
    delta: f64,
    out: *mut *mut LcParams,
) -> LcStatus {
    if out.is_null() {
        return LcStatus::LcNullPointer;
    }
    match ReductionParams::new(n, eta, delta) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(LcParams { inner }));
            LcStatus::LcOk
        }
        Err(e) => {
            *out = std::ptr::null_mut();
            status_of(&e)
        }
    }
}

/// Releases a handle created by [`lc_params_new`]. Null is a no-op.
///
/// # Safety
/// `params` must be null or a pointer previously returned by
/// [`lc_params_new`] that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn lc_params_free(params: *mut LcParams) {
    if !params.is_null() {
        drop(Box::from_raw(params));
    }
}

unsafe fn params_ref<'a>(params: *const LcParams) -> Option<&'a ReductionParams> {
    params.as_ref().map(|p| &p.inner)
}

/// Reports the regime classification of a handle.
///
/// # Safety
/// `params` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_params_regime(params: *const LcParams, out: *mut LcRegime) -> LcStatus {
    let Some(p) = params_ref(params) else {
        return LcStatus::LcNullPointer;
    };
    if out.is_null() {
        return LcStatus::LcNullPointer;
    }
    *out = match p.regime() {
        Regime::General => LcRegime::LcGeneral,
        Regime::BoundDomain => LcRegime::LcBoundDomain,
        Regime::Restricted => LcRegime::LcRestricted,
    };
    LcStatus::LcOk
}

/// ln of the count in the direct (sphere-surface / zeta) form.
///
/// # Safety
/// `params` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_log_count_direct(params: *const LcParams, out: *mut f64) -> LcStatus {
    let Some(p) = params_ref(params) else {
        return LcStatus::LcNullPointer;
    };
    write_result(out, census::log_count_direct(p))
}

/// ln of the count in the Riemann-Xi form.
///
/// # Safety
/// `params` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_log_count_xi(params: *const LcParams, out: *mut f64) -> LcStatus {
    let Some(p) = params_ref(params) else {
        return LcStatus::LcNullPointer;
    };
    write_result(out, census::log_count_xi(p))
}

/// ln of the count divided by 2^n.
///
/// # Safety
/// `params` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_log_count_normalized(
    params: *const LcParams,
    out: *mut f64,
) -> LcStatus {
    let Some(p) = params_ref(params) else {
        return LcStatus::LcNullPointer;
    };
    write_result(out, census::normalized_log_count(p))
}

unsafe fn write_bounds(out: *mut LcBounds, rep: Result<analysis::BoundsReport, Error>) -> LcStatus {
    if out.is_null() {
        return LcStatus::LcNullPointer;
    }
    match rep {
        Ok(rep) => {
            *out = LcBounds {
                lower_ln: rep.lower.ln_abs(),
                exact_ln: rep.exact.map(|e| e.ln_abs()).unwrap_or(f64::NAN),
                upper_ln: rep.upper.ln_abs(),
                sandwich_ok: rep.sandwich_ok,
            };
            LcStatus::LcOk
        }
        Err(e) => status_of(&e),
    }
}

/// The composed lower/upper bounds on the full count, with the exact value
/// and sandwich verdict. Requires the bound domain (n >= 22, standard
/// parameter range).
///
/// # Safety
/// `params` must be a live handle; `out` must point to an [`LcBounds`].
#[no_mangle]
pub unsafe extern "C" fn lc_combined_bounds(
    params: *const LcParams,
    out: *mut LcBounds,
) -> LcStatus {
    let Some(p) = params_ref(params) else {
        return LcStatus::LcNullPointer;
    };
    write_bounds(out, analysis::combined_bounds_log(p))
}

/// The restricted-regime bounds (n² terms with one n ln n correction each
/// side). Requires the restricted regime.
///
/// # Safety
/// `params` must be a live handle; `out` must point to an [`LcBounds`].
#[no_mangle]
pub unsafe extern "C" fn lc_restricted_bounds(
    params: *const LcParams,
    out: *mut LcBounds,
) -> LcStatus {
    let Some(p) = params_ref(params) else {
        return LcStatus::LcNullPointer;
    };
    write_bounds(out, analysis::restricted_bounds_log(p))
}

/// ln of the rough approximation cos^(-n³/6)(arcsin(eta/delta)).
///
/// # Safety
/// `params` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_rough_approx_log(params: *const LcParams, out: *mut f64) -> LcStatus {
    let Some(p) = params_ref(params) else {
        return LcStatus::LcNullPointer;
    };
    write_result(out, analysis::rough_approx_log(p))
}

/// ln of the tight approximation with correction weight `c` in [1/2, 4].
///
/// # Safety
/// `params` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_tight_approx_log(
    params: *const LcParams,
    c: f64,
    out: *mut f64,
) -> LcStatus {
    let Some(p) = params_ref(params) else {
        return LcStatus::LcNullPointer;
    };
    write_result(out, analysis::tight_approx_log(p, c))
}

/// Ratio of the rough approximation's ln to the exact ln-count.
///
/// # Safety
/// `params` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_asymptotic_ratio(params: *const LcParams, out: *mut f64) -> LcStatus {
    let Some(p) = params_ref(params) else {
        return LcStatus::LcNullPointer;
    };
    write_result(out, analysis::asymptotic_ratio(p))
}

/// ln Gamma(x) for x > 0.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_log_gamma(x: f64, out: *mut f64) -> LcStatus {
    write_result(out, specialfn::log_gamma(x))
}

/// Riemann zeta at s >= 2.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_zeta(s: f64, out: *mut f64) -> LcStatus {
    write_result(out, specialfn::zeta(s))
}

/// ln of the Riemann-Xi function at s >= 2.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_xi_log(s: f64, out: *mut f64) -> LcStatus {
    write_result(out, specialfn::xi_log(s))
}

/// ln of the secant-power integral over [0, phi], exact recurrence.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_sec_integral_log(m: u32, phi: f64, out: *mut f64) -> LcStatus {
    write_result(out, secint::sec_integral_log(m, phi))
}
