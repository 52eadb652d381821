//! Secant-power integrals in the log domain.
//!
//! The weight integrals of the count formula reduce, by x = δ sin θ, to
//! ∫₀^φ sec^m θ dθ with φ = arcsin(η/δ). These are evaluated exactly by the
//! upward reduction recurrence
//!
//!   I_m = sec^(m-2)φ tan φ / (m-1) + (m-2)/(m-1) · I_(m-2),
//!
//! whose terms are all positive on 0 < φ < π/2, so the ln-domain
//! accumulation is cancellation-free. An independent adaptive quadrature
//! oracle evaluates the same integrals directly from the integrand and is
//! used by the test layer to certify the recurrence.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::logdomain::log_add_exp;

/// Geometry constants derived from (n, η, δ): φ = arcsin(η/δ), t = cos φ,
/// a = t^n.
#[derive(Clone, Copy, Debug)]
pub struct DerivedParams {
    pub phi: f64,
    pub t: f64,
    pub a: f64,
}

// Below this cos φ the ln t factors blow up and the certified accuracy is
// gone; such inputs are rejected outright.
const MIN_T: f64 = 1e-8;

/// Derives (φ, t, a) from n and 0 < η < δ.
pub fn derive_params(n: u32, eta: f64, delta: f64) -> Result<DerivedParams> {
    if !eta.is_finite() || !delta.is_finite() {
        return Err(Error::NonFinite(if eta.is_finite() { delta } else { eta }));
    }
    if eta <= 0.0 {
        return Err(Error::OutOfDomain {
            what: "eta",
            value: eta,
            constraint: "eta > 0",
        });
    }
    if delta <= eta {
        return Err(Error::OutOfDomain {
            what: "delta",
            value: delta,
            constraint: "delta > eta",
        });
    }
    if n < 1 {
        return Err(Error::BadDimension {
            value: n,
            constraint: "n >= 1",
        });
    }
    let ratio = eta / delta;
    let t = (1.0 - ratio * ratio).sqrt();
    if t < MIN_T {
        return Err(Error::OutOfDomain {
            what: "cos(arcsin(eta/delta))",
            value: t,
            constraint: "t >= 1e-8 (eta/delta too close to 1)",
        });
    }
    Ok(DerivedParams {
        phi: ratio.asin(),
        t,
        a: (f64::from(n) * t.ln()).exp(),
    })
}

fn check_phi(phi: f64) -> Result<()> {
    if !phi.is_finite() {
        return Err(Error::NonFinite(phi));
    }
    if phi <= 0.0 || phi >= std::f64::consts::FRAC_PI_2 {
        return Err(Error::OutOfDomain {
            what: "phi",
            value: phi,
            constraint: "0 < phi < pi/2",
        });
    }
    Ok(())
}

/// Precomputed ln ∫₀^φ sec^m θ dθ for every m up to a chosen maximum.
///
/// One census evaluation needs the integral at m = i(n-i)-1 for all i, so
/// building the whole chain once (O(max_m) log-additions) beats re-running
/// the recurrence per factor.
pub struct SecantChain {
    ln_values: Vec<f64>,
}

impl SecantChain {
    pub fn new(phi: f64, max_m: u32) -> Result<Self> {
        check_phi(phi)?;
        let ln_sec = -phi.cos().ln();
        // ln(sec φ + tan φ) = ln((1 + sin φ)/cos φ), computed stably
        let sec_plus_tan_ln = phi.sin().ln_1p() + ln_sec;
        let ln_tan = phi.tan().ln();

        let len = max_m as usize + 1;
        let mut ln_values = Vec::with_capacity(len.max(2));
        ln_values.push(phi.ln()); // I_0 = φ
        if max_m >= 1 {
            ln_values.push(sec_plus_tan_ln.ln()); // I_1 = ln(sec φ + tan φ)
        }
        for m in 2..=max_m as usize {
            let mf = m as f64;
            // boundary term sec^(m-2)φ tan φ / (m-1)
            let boundary = (mf - 2.0) * ln_sec + ln_tan - (mf - 1.0).ln();
            let recursive = if m == 2 {
                f64::NEG_INFINITY // (m-2)/(m-1) vanishes
            } else {
                (mf - 2.0).ln() - (mf - 1.0).ln() + ln_values[m - 2]
            };
            ln_values.push(log_add_exp(boundary, recursive));
        }
        Ok(SecantChain { ln_values })
    }

    /// ln I_m; panics if m exceeds the chain length.
    pub fn log_integral(&self, m: u32) -> f64 {
        self.ln_values[m as usize]
    }

    pub fn max_m(&self) -> u32 {
        (self.ln_values.len() - 1) as u32
    }
}

/// ln ∫₀^φ sec^m θ dθ via the exact reduction recurrence.
pub fn sec_integral_log(m: u32, phi: f64) -> Result<f64> {
    let chain = SecantChain::new(phi, m)?;
    Ok(chain.log_integral(m))
}

// ---------------------------------------------------------------------------
// Adaptive quadrature in the log domain
// ---------------------------------------------------------------------------

// Gauss–Legendre nodes/weights on [-1, 1], computed once by Newton iteration
// on the Legendre recurrence.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        // Chebyshev-based initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0f64, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = (n as f64) * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((x, w));
    }
    out
}

fn gl_nodes_15() -> &'static [(f64, f64)] {
    static NODES: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    NODES.get_or_init(|| gauss_legendre(15))
}

fn gl_nodes_31() -> &'static [(f64, f64)] {
    static NODES: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    NODES.get_or_init(|| gauss_legendre(31))
}

// ln of Σ w_i exp(f_ln(x_i)) · (b-a)/2 over one panel.
fn panel_ln(f_ln: &dyn Fn(f64) -> f64, a: f64, b: f64, nodes: &[(f64, f64)]) -> f64 {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = f64::NEG_INFINITY;
    for &(x, w) in nodes {
        let v = w.ln() + f_ln(mid + half * x);
        acc = log_add_exp(acc, v);
    }
    acc + half.ln()
}

/// ln ∫_a^b exp(f_ln(x)) dx by adaptive bisection with an embedded
/// 15/31-point Gauss–Legendre pair, everything combined in the log domain.
///
/// Accepting a panel when the two rules agree to `ln_tol/2` keeps the
/// relative error of every summand, and hence of the ln of the total, near
/// `ln_tol`.
pub fn ln_integrate_exp(f_ln: impl Fn(f64) -> f64, a: f64, b: f64, ln_tol: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite()) || b <= a {
        return Err(Error::OutOfDomain {
            what: "integration interval",
            value: b - a,
            constraint: "finite with b > a",
        });
    }
    let f: &dyn Fn(f64) -> f64 = &f_ln;
    let mut total = f64::NEG_INFINITY;
    // (lo, hi, depth) work stack
    let mut stack = vec![(a, b, 0u32)];
    const MAX_DEPTH: u32 = 52;
    while let Some((lo, hi, depth)) = stack.pop() {
        let coarse = panel_ln(f, lo, hi, gl_nodes_15());
        let fine = panel_ln(f, lo, hi, gl_nodes_31());
        if (coarse - fine).abs() <= 0.5 * ln_tol {
            total = log_add_exp(total, fine);
        } else {
            if depth >= MAX_DEPTH {
                return Err(Error::QuadratureAccuracy { a, b, tol: ln_tol });
            }
            let mid = 0.5 * (lo + hi);
            stack.push((lo, mid, depth + 1));
            stack.push((mid, hi, depth + 1));
        }
    }
    Ok(total)
}

// The oracle's certified range; the secant integrand steepens with m and
// past this the panel budget no longer guarantees 1e-8.
const ORACLE_MAX_M: u32 = 500;
const ORACLE_LN_TOL: f64 = 1e-9;

/// Independent evaluation of ln ∫₀^φ sec^m θ dθ by adaptive quadrature of
/// exp(m ln sec θ), for m <= 500.
pub fn quadrature_oracle_log(m: u32, phi: f64) -> Result<f64> {
    check_phi(phi)?;
    if m > ORACLE_MAX_M {
        return Err(Error::OutOfDomain {
            what: "oracle secant power",
            value: f64::from(m),
            constraint: "m <= 500",
        });
    }
    let mf = f64::from(m);
    ln_integrate_exp(|theta| -mf * theta.cos().ln(), 0.0, phi, ORACLE_LN_TOL)
}

/// ln ∫_{-η}^{η} (δ² - x²)^(-m_exp/2) dx
///   = ln 2 + (1 - m_exp) ln δ + ln ∫₀^φ sec^(m_exp - 1) θ dθ.
pub fn weight_integral_log(m_exp: u32, eta: f64, delta: f64) -> Result<f64> {
    if m_exp < 1 {
        return Err(Error::BadDimension {
            value: m_exp,
            constraint: "m_exp >= 1",
        });
    }
    let d = derive_params(1, eta, delta)?;
    Ok(std::f64::consts::LN_2
        + (1.0 - f64::from(m_exp)) * delta.ln()
        + sec_integral_log(m_exp - 1, d.phi)?)
}

/// ln of the product over i = 1..n-1 of the weight integrals with exponent
/// i(n-i), i.e. Σ_i weight_integral_log(i(n-i), η, δ).
pub fn product_integrals_log(n: u32, eta: f64, delta: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::BadDimension {
            value: n,
            constraint: "n >= 2",
        });
    }
    let d = derive_params(n, eta, delta)?;
    let max_m = n * n / 4; // max of i(n-i)
    let chain = SecantChain::new(d.phi, max_m.saturating_sub(1).max(1))?;
    let ln_delta = delta.ln();
    let nf = f64::from(n);
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for i in 1..n {
        let m = f64::from(i) * (nf - f64::from(i));
        let term = std::f64::consts::LN_2 + (1.0 - m) * ln_delta + chain.log_integral(m as u32 - 1);
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    Ok(sum)
}

/// ln of the secant-integral product alone, without the change-of-variables
/// prefactors: Σ_i ln ∫₀^φ sec^(i(n-i)-1) θ dθ. This is the quantity the
/// integral-product bound lemmas are stated for.
pub fn sec_product_log(n: u32, eta: f64, delta: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::BadDimension {
            value: n,
            constraint: "n >= 2",
        });
    }
    let d = derive_params(n, eta, delta)?;
    let max_m = n * n / 4;
    let chain = SecantChain::new(d.phi, max_m.saturating_sub(1).max(1))?;
    let nf = f64::from(n);
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for i in 1..n {
        let m = (f64::from(i) * (nf - f64::from(i))) as u32;
        let term = chain.log_integral(m - 1);
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    Ok(sum)
}
