//! The exact average count of (δ, η)-LLL bases in dimension n, in both of
//! its printed forms, plus the cross-check that they agree.
//!
//! The direct form multiplies sphere-surface/zeta ratios; the xi form
//! rewrites that product through the Riemann-Xi function. Both share the
//! weight-integral product from [`crate::secint`]. The two evaluations take
//! genuinely different code paths through the special functions, so their
//! agreement is a meaningful end-to-end check.

use std::f64::consts::LN_2;

use crate::error::{Error, Result};
use crate::secint::{self, DerivedParams};
use crate::specialfn;

/// Parameter regime classification.
///
/// `General` is the full mathematical domain 0 < η < δ, n >= 2, on which the
/// count formulas are well defined; it admits closed-form test anchors like
/// η/δ = 1/2 that sit outside the standard reduction-parameter domain
/// (1/2 < δ < 1, 1/2 < η < δ). `BoundDomain` additionally requires n >= 22
/// and the standard domain — the precondition of every bound theorem here.
/// `Restricted` narrows further to 1/2 < η < 3/(4√2), 3/4 < δ < 1, where the
/// closed-form approximations apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Regime {
    General,
    BoundDomain,
    Restricted,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::General => "general",
            Regime::BoundDomain => "bound-domain",
            Regime::Restricted => "restricted",
        }
    }
}

/// Upper limit of η in the restricted regime: 3/(4√2).
pub const RESTRICTED_ETA_MAX: f64 = 0.5303300858899106;

/// Validated reduction parameters (n, δ, η).
#[derive(Clone, Copy, Debug)]
pub struct ReductionParams {
    n: u32,
    eta: f64,
    delta: f64,
}

impl ReductionParams {
    /// Accepts the general domain: n >= 2, 0 < η < δ, with η/δ bounded away
    /// from 1 (see [`secint::derive_params`]).
    pub fn new(n: u32, eta: f64, delta: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadDimension {
                value: n,
                constraint: "n >= 2",
            });
        }
        // validates finiteness, 0 < eta < delta and the t floor
        secint::derive_params(n, eta, delta)?;
        Ok(ReductionParams { n, eta, delta })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn derived(&self) -> DerivedParams {
        // cannot fail: inputs were validated at construction
        secint::derive_params(self.n, self.eta, self.delta).expect("validated at construction")
    }

    /// True on the standard reduction-parameter domain
    /// 1/2 < δ < 1, 1/2 < η < δ.
    pub fn in_definition_domain(&self) -> bool {
        0.5 < self.delta && self.delta < 1.0 && 0.5 < self.eta && self.eta < self.delta
    }

    /// Most specific regime these parameters fall into.
    pub fn regime(&self) -> Regime {
        if self.n >= 22 && self.in_definition_domain() {
            if self.eta < RESTRICTED_ETA_MAX && self.delta > 0.75 {
                Regime::Restricted
            } else {
                Regime::BoundDomain
            }
        } else {
            Regime::General
        }
    }
}

/// ln of the count in its direct form:
///
///   2 (2η)^((n-1)(n-2)/2) ∏_{i=2..n} S_i(1)/ζ(i) · (1/n) ∏ 1/(i(n-i))
///     · ∏_i ∫_{-η}^{η} (δ²-x²)^(-i(n-i)/2) dx.
pub fn log_count_direct(p: &ReductionParams) -> Result<f64> {
    let n = p.n;
    let nf = f64::from(n);
    let mut acc = LN_2 + 0.5 * (nf - 1.0) * (nf - 2.0) * (2.0 * p.eta).ln();
    for i in 2..=n {
        acc += specialfn::sphere_surface_log(i)? - specialfn::zeta(f64::from(i))?.ln();
    }
    acc -= nf.ln();
    for i in 1..n {
        acc -= (f64::from(i) * (nf - f64::from(i))).ln();
    }
    acc += secint::product_integrals_log(n, p.eta, p.delta)?;
    Ok(acc)
}

/// ln of the count in its Riemann-Xi form:
///
///   2^((n²-3n+4)/2) η^((n-1)(n-2)/2) ∏_{i=2..n} 1/ξ(i)
///     · ∏_i ∫_{-η}^{η} (δ²-x²)^(-i(n-i)/2) dx.
pub fn log_count_xi(p: &ReductionParams) -> Result<f64> {
    let nf = f64::from(p.n);
    Ok(0.5 * (nf * nf - 3.0 * nf + 4.0) * LN_2
        + 0.5 * (nf - 1.0) * (nf - 2.0) * p.eta.ln()
        + specialfn::xi_inv_prod_log(p.n)?
        + secint::product_integrals_log(p.n, p.eta, p.delta)?)
}

/// ln of the count divided by 2^n (the shortest-vector sign symmetry).
pub fn normalized_log_count(p: &ReductionParams) -> Result<f64> {
    Ok(log_count_xi(p)? - f64::from(p.n) * LN_2)
}

/// Outcome of cross-checking the two forms at one parameter point.
#[derive(Clone, Debug)]
pub struct ConsistencyReport {
    pub direct_ln: f64,
    pub xi_ln: f64,
    pub abs_diff_ln: f64,
    pub tol: f64,
    pub pass: bool,
}

impl ConsistencyReport {
    pub fn from_values(direct_ln: f64, xi_ln: f64, tol: f64) -> Self {
        let abs_diff_ln = (direct_ln - xi_ln).abs();
        ConsistencyReport {
            direct_ln,
            xi_ln,
            abs_diff_ln,
            tol,
            pass: abs_diff_ln <= tol,
        }
    }
}

/// Evaluates both forms and reports their ln-difference against `tol`.
/// Disagreement is a report, not an error.
pub fn consistency_check(p: &ReductionParams, tol: f64) -> Result<ConsistencyReport> {
    Ok(ConsistencyReport::from_values(
        log_count_direct(p)?,
        log_count_xi(p)?,
        tol,
    ))
}
