//! ln Γ, ζ, the Riemann-Xi function and unit-sphere surface areas, plus the
//! analytic sandwich bounds used by the verification layer.
//!
//! ζ is a truncated power sum with the integral tail `N^(1-s)/(s-1)` added
//! back and two Euler–Maclaurin refinements, so the truncation error is
//! certified by the same integral test that underlies the ζ sandwich.
//! ln Γ is a shifted Stirling series (shift to z >= 18, Bernoulli terms
//! through B14); its accuracy is cross-checked in tests against independent
//! oracles.

use crate::error::{Error, Result};
use crate::logdomain::LogReal;

/// A verified lower/upper pair for one analytic quantity.
#[derive(Clone, Copy, Debug)]
pub struct SandwichPair {
    pub lower: LogReal,
    pub upper: LogReal,
}

const LN_PI: f64 = 1.1447298858494002; // ln(pi)
const HALF_LN_2PI: f64 = 0.9189385332046727; // ln(2*pi)/2

// Stirling series coefficients B_{2j} / ((2j)(2j-1)) for j = 1..=7.
const STIRLING: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
];

// Arguments below this are shifted up before applying the Stirling series;
// the first omitted term at z = 18 is ~4e-21.
const STIRLING_MIN: f64 = 18.0;

/// ln Γ(x) for x > 0.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite(x));
    }
    if x <= 0.0 {
        return Err(Error::OutOfDomain {
            what: "log_gamma argument",
            value: x,
            constraint: "x > 0",
        });
    }
    let mut shift = 0.0f64;
    let mut z = x;
    while z < STIRLING_MIN {
        shift += z.ln();
        z += 1.0;
    }
    let mut series = 0.0f64;
    let z2 = z * z;
    let mut zp = z;
    for c in STIRLING {
        series += c / zp;
        zp *= z2;
    }
    Ok((z - 0.5) * z.ln() - z + HALF_LN_2PI + series - shift)
}

// Picks the truncation point so the first omitted Euler–Maclaurin term is
// below 1e-16.
fn zeta_cutoff(s: f64) -> usize {
    let coef = s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) / 30240.0;
    let n = (coef / 1e-16).powf(1.0 / (s + 5.0)).ceil();
    (n as usize).clamp(8, 200)
}

/// ζ(s) - 1 for s >= 2, i.e. the sum over k >= 2 alone.
///
/// Keeping the leading 1 out preserves the tiny tail exactly: for s = 60 the
/// result is ~8.7e-19, far below one ulp of ζ itself.
pub fn zeta_minus_one(s: f64) -> Result<f64> {
    if !s.is_finite() {
        return Err(Error::NonFinite(s));
    }
    if s < 2.0 {
        return Err(Error::OutOfDomain {
            what: "zeta argument",
            value: s,
            constraint: "s >= 2",
        });
    }
    let n = zeta_cutoff(s);
    let nf = n as f64;
    // small terms first
    let mut sum = 0.0f64;
    for k in (2..=n).rev() {
        sum += (k as f64).powf(-s);
    }
    let tail = nf.powf(1.0 - s) / (s - 1.0);
    let em1 = -0.5 * nf.powf(-s);
    let em2 = s / 12.0 * nf.powf(-s - 1.0);
    let em3 = -s * (s + 1.0) * (s + 2.0) / 720.0 * nf.powf(-s - 3.0);
    Ok(sum + tail + em1 + em2 + em3)
}

/// ζ(s) for s >= 2, absolute error below 1e-13.
pub fn zeta(s: f64) -> Result<f64> {
    Ok(1.0 + zeta_minus_one(s)?)
}

/// The integral-test sandwich 1 < ζ(s) < 1 + 1/(s-1), valid for s > 1.
pub fn zeta_bounds(s: f64) -> Result<SandwichPair> {
    if !s.is_finite() {
        return Err(Error::NonFinite(s));
    }
    if s <= 1.0 {
        return Err(Error::OutOfDomain {
            what: "zeta_bounds argument",
            value: s,
            constraint: "s > 1",
        });
    }
    Ok(SandwichPair {
        lower: LogReal::one(),
        upper: LogReal::from_ln_pos((1.0 / (s - 1.0)).ln_1p()),
    })
}

/// The Γ(s/2) sandwich
/// sqrt(pi) ((s-2)/(2e))^((s-2)/2) (s-2)^(1/2)
///   < Γ(s/2) <
/// sqrt(pi) ((s-2)/(2e))^((s-2)/2) (s-1)^(1/2).
///
/// Defined for s >= 3; certified (and asserted by the verification suite)
/// for s >= 6. For 3 <= s < 6 the status is reported, not asserted.
pub fn gamma_bounds(s: f64) -> Result<SandwichPair> {
    if !s.is_finite() {
        return Err(Error::NonFinite(s));
    }
    if s < 3.0 {
        return Err(Error::OutOfDomain {
            what: "gamma_bounds argument",
            value: s,
            constraint: "s >= 3",
        });
    }
    let common = 0.5 * LN_PI + 0.5 * (s - 2.0) * ((s - 2.0).ln() - std::f64::consts::LN_2 - 1.0);
    Ok(SandwichPair {
        lower: LogReal::from_ln_pos(common + 0.5 * (s - 2.0).ln()),
        upper: LogReal::from_ln_pos(common + 0.5 * (s - 1.0).ln()),
    })
}

/// ln ξ(s) where ξ(s) = (1/2) s (s-1) π^(-s/2) Γ(s/2) ζ(s), for s >= 2.
pub fn xi_log(s: f64) -> Result<f64> {
    if !s.is_finite() {
        return Err(Error::NonFinite(s));
    }
    if s < 2.0 {
        return Err(Error::OutOfDomain {
            what: "xi argument",
            value: s,
            constraint: "s >= 2",
        });
    }
    let ln_zeta = zeta_minus_one(s)?.ln_1p();
    Ok(
        -std::f64::consts::LN_2 + s.ln() + (s - 1.0).ln() - 0.5 * s * LN_PI
            + log_gamma(0.5 * s)?
            + ln_zeta,
    )
}

/// ξ(s) as a positive [`LogReal`].
pub fn xi(s: f64) -> Result<LogReal> {
    Ok(LogReal::from_ln_pos(xi_log(s)?))
}

/// ln of the product of 1/ξ(s) for s = 2..=n, i.e. -Σ ln ξ(s).
pub fn xi_inv_prod_log(n: u32) -> Result<f64> {
    if n < 2 {
        return Err(Error::BadDimension {
            value: n,
            constraint: "n >= 2",
        });
    }
    let mut sum = 0.0f64;
    let mut comp = 0.0f64; // Kahan compensation
    for s in 2..=n {
        let term = -xi_log(f64::from(s))?;
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    Ok(sum)
}

/// ln of the surface area of the unit sphere in R^i: ln 2 + (i/2) ln π - ln Γ(i/2).
pub fn sphere_surface_log(i: u32) -> Result<f64> {
    if i < 1 {
        return Err(Error::BadDimension {
            value: i,
            constraint: "i >= 1",
        });
    }
    let half = 0.5 * f64::from(i);
    Ok(std::f64::consts::LN_2 + half * LN_PI - log_gamma(half)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    // ln(k!) by direct summation; exact oracle for integer Γ arguments.
    fn ln_factorial(k: u32) -> f64 {
        (2..=k).map(|j| f64::from(j).ln()).sum()
    }

    #[test]
    fn log_gamma_closed_forms() {
        // Γ(3) = 2, Γ(1/2) = sqrt(pi)
        let g3 = log_gamma(3.0).unwrap();
        assert!((g3 - 2f64.ln()).abs() < 1e-13);
        let gh = log_gamma(0.5).unwrap();
        assert!((gh - 0.5 * PI.ln()).abs() < 1e-13);
    }

    #[test]
    fn log_gamma_integer_ladder() {
        // Γ(n) = (n-1)! pins the shifted Stirling path against exact sums.
        for n in [4u32, 10, 20, 50, 171, 1000, 10000] {
            let got = log_gamma(f64::from(n)).unwrap();
            let want = ln_factorial(n - 1);
            assert!(
                (got - want).abs() <= 1e-12 * want.abs().max(1.0),
                "n = {n}: got {got}, want {want}"
            );
        }
    }

    #[test]
    fn log_gamma_x50_reference() {
        // ln Γ(50) = ln 49!
        let want = ln_factorial(49);
        let got = log_gamma(50.0).unwrap();
        assert!((got - want).abs() <= 1e-12 * want);
    }

    #[test]
    fn log_gamma_rejects_bad_input() {
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-1.5).is_err());
        assert!(log_gamma(f64::NAN).is_err());
    }

    #[test]
    fn zeta_closed_forms() {
        let z2 = zeta(2.0).unwrap();
        assert!((z2 - PI * PI / 6.0).abs() < 1e-13);
        let z4 = zeta(4.0).unwrap();
        assert!((z4 - PI.powi(4) / 90.0).abs() < 1e-13);
    }

    #[test]
    fn zeta_s30_vs_brute_force() {
        // million-term direct summation, small terms first
        let mut brute = 0.0f64;
        for k in (1..=1_000_000u64).rev() {
            brute += (k as f64).powi(-30);
        }
        let got = zeta(30.0).unwrap();
        assert!((got - brute).abs() < 1e-13);
    }

    #[test]
    fn zeta_tail_is_tiny_at_60() {
        // ζ(60) - 1 = 2^-60 + 3^-60 + ... < 1e-17; in double precision
        // ζ(60) itself collapses to exactly 1.
        let zm1 = zeta_minus_one(60.0).unwrap();
        assert!(zm1 > 0.0 && zm1 < 1e-17);
        assert_eq!(zeta(60.0).unwrap(), 1.0);
    }

    #[test]
    fn zeta_rejects_below_two() {
        assert!(zeta(1.999).is_err());
        assert!(zeta_minus_one(0.0).is_err());
    }

    #[test]
    fn zeta_monotone_grid() {
        // ζ(s)-1 is strictly decreasing; checked on the residual since
        // ζ itself saturates at 1.0 in doubles past s ≈ 53.
        let mut prev = zeta_minus_one(2.0).unwrap();
        for s in 3..=200u32 {
            let cur = zeta_minus_one(f64::from(s)).unwrap();
            assert!(cur < prev, "zeta residual not decreasing at s = {s}");
            prev = cur;
        }
    }

    #[test]
    fn zeta_bounds_cases() {
        let b2 = zeta_bounds(2.0).unwrap();
        assert!((b2.lower.ln_abs() - 0.0).abs() < 1e-15);
        assert!((b2.upper.ln_abs() - 2f64.ln()).abs() < 1e-15);
        let b11 = zeta_bounds(11.0).unwrap();
        assert!((b11.upper.ln_abs() - 1.1f64.ln()).abs() < 1e-15);
        // ζ(3) inside (1, 1.5)
        let z3 = zeta(3.0).unwrap();
        let b3 = zeta_bounds(3.0).unwrap();
        assert!(b3.lower.ln_abs() < z3.ln() && z3.ln() < b3.upper.ln_abs());
        assert!(zeta_bounds(1.0).is_err());
    }

    #[test]
    fn zeta_sandwich_grid() {
        for s in 2..=200u32 {
            let s = f64::from(s);
            let zm1 = zeta_minus_one(s).unwrap();
            assert!(zm1 > 0.0, "lower sandwich side at s = {s}");
            assert!(zm1 < 1.0 / (s - 1.0), "upper sandwich side at s = {s}");
        }
    }

    #[test]
    fn gamma_bounds_cases() {
        // Γ(2) = 1 and Γ(3) = 2 inside their pairs
        for (s, g) in [(4.0, 1.0f64), (6.0, 2.0)] {
            let b = gamma_bounds(s).unwrap();
            let lg = g.ln();
            assert!(b.lower.ln_abs() < lg && lg < b.upper.ln_abs(), "s = {s}");
        }
        // s = 100: ln Γ(50) inside the ln-domain pair
        let b = gamma_bounds(100.0).unwrap();
        let lg = log_gamma(50.0).unwrap();
        assert!(b.lower.ln_abs() < lg && lg < b.upper.ln_abs());
        assert!(gamma_bounds(2.9).is_err());
    }

    #[test]
    fn gamma_sandwich_grid() {
        use std::cmp::Ordering;
        for s in 6..=400u32 {
            let b = gamma_bounds(f64::from(s)).unwrap();
            let lg = log_gamma(f64::from(s) / 2.0).unwrap();
            assert!(
                b.lower.ln_abs() < lg && lg < b.upper.ln_abs(),
                "gamma sandwich failed at s = {s}"
            );
            // the pair itself is ordered under the log-domain total order
            assert_ne!(b.lower.total_cmp(&b.upper), Ordering::Greater);
        }
    }

    #[test]
    fn xi_closed_forms() {
        // ξ(2) = π/6, ξ(4) = π²/15
        let x2 = xi(2.0).unwrap();
        assert_eq!(x2.sign(), 1);
        assert!((x2.ln_abs() - (PI / 6.0).ln()).abs() < 1e-12);
        let x4 = xi_log(4.0).unwrap();
        assert!((x4 - (PI * PI / 15.0).ln()).abs() < 1e-12);
        // ξ(5) = (15/2) π^-2 ζ(5)
        let x5 = xi_log(5.0).unwrap();
        let want = (7.5 * zeta(5.0).unwrap() / (PI * PI)).ln();
        assert!((x5 - want).abs() < 1e-12);
        assert!(xi(1.5).is_err());
    }

    #[test]
    fn xi_positive_on_grid() {
        for s in 2..=300u32 {
            assert_eq!(xi(f64::from(s)).unwrap().sign(), 1);
        }
    }

    #[test]
    fn xi_inv_prod_reference_value() {
        // Γ and ζ at s = 2..5 collapse to the identity
        // ξ(2)ξ(3)ξ(4)ξ(5) = ζ(3)ζ(5)/8, so the exact value is
        // 3 ln 2 - ln ζ(3) - ln ζ(5) = 1.859145106639116584 (40-digit
        // reference). The commonly quoted 1.85914510535951 is off by
        // 1.28e-9; the audit reports that deviation.
        let got = xi_inv_prod_log(5).unwrap();
        assert!((got - 1.8591451066391166).abs() < 1e-11, "got {got}");
        let identity = 3.0 * 2f64.ln() - zeta(3.0).unwrap().ln() - zeta(5.0).unwrap().ln();
        assert!((got - identity).abs() < 1e-12);
        // single factor: -ln ξ(2) = -ln(π/6)
        let one = xi_inv_prod_log(2).unwrap();
        assert!((one + (PI / 6.0).ln()).abs() < 1e-12);
        assert!(xi_inv_prod_log(1).is_err());
    }

    // Lanczos approximation (g = 7, 9 terms, the GSL coefficient set kept
    // verbatim): a separate algorithm family from the shifted Stirling
    // series used by log_gamma.
    #[allow(clippy::excessive_precision)]
    fn lanczos_log_gamma(x: f64) -> f64 {
        const C: [f64; 9] = [
            0.99999999999980993,
            676.5203681218851,
            -1259.1392167224028,
            771.32342877765313,
            -176.61502916214059,
            12.507343278686905,
            -0.13857109526572012,
            9.9843695780195716e-6,
            1.5056327351493116e-7,
        ];
        let mut acc = C[0];
        for (k, c) in C.iter().enumerate().skip(1) {
            acc += c / (x - 1.0 + k as f64);
        }
        let t = x + 6.5;
        0.5 * (2.0 * PI).ln() + (x - 0.5) * t.ln() - t + acc.ln()
    }

    #[test]
    fn lanczos_oracle_agrees_with_log_gamma() {
        for &x in &[0.5, 1.0, 2.5, 7.3, 10.0, 25.0, 50.0] {
            let got = log_gamma(x).unwrap();
            let want = lanczos_log_gamma(x);
            assert!(
                (got - want).abs() <= 1e-12 * want.abs().max(1.0),
                "x = {x}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn xi_inv_prod_vs_independent_oracle_n20() {
        // term-by-term recomputation with the Spouge Γ oracle and brute ζ
        // summation; ζ(2) = π²/6 exactly, and for s >= 3 the truncation
        // error N^(1-s)/(s-1) is kept below 1e-13
        let mut oracle = 0.0f64;
        for s in 2..=20u32 {
            let zeta_brute = match s {
                2 => PI * PI / 6.0,
                _ => {
                    let terms = match s {
                        3 => 2_000_000u64,
                        4 => 20_000,
                        5 => 2_000,
                        _ => 500,
                    };
                    let sf = f64::from(s);
                    let mut acc = 0.0f64;
                    for k in (1..=terms).rev() {
                        acc += (k as f64).powf(-sf);
                    }
                    acc
                }
            };
            let s = f64::from(s);
            let ln_xi = -std::f64::consts::LN_2 + s.ln() + (s - 1.0).ln() - 0.5 * s * LN_PI
                + lanczos_log_gamma(0.5 * s)
                + zeta_brute.ln();
            oracle -= ln_xi;
        }
        let got = xi_inv_prod_log(20).unwrap();
        assert!((got - oracle).abs() <= 1e-9, "{got} vs {oracle}");
    }

    #[test]
    fn xi_inv_prod_telescopes() {
        for n in 3..=60u32 {
            let diff = xi_inv_prod_log(n).unwrap() - xi_inv_prod_log(n - 1).unwrap();
            let expect = -xi_log(f64::from(n)).unwrap();
            assert!(
                (diff - expect).abs() <= 1e-12 * expect.abs().max(1.0),
                "n = {n}"
            );
        }
    }

    #[test]
    fn sphere_surface_closed_forms() {
        // circle 2π, sphere 4π, and S_10 = 2π^5/24
        assert!((sphere_surface_log(2).unwrap() - (2.0 * PI).ln()).abs() < 1e-13);
        assert!((sphere_surface_log(3).unwrap() - (4.0 * PI).ln()).abs() < 1e-13);
        let s10 = sphere_surface_log(10).unwrap();
        assert!((s10 - (2.0 * PI.powi(5) / 24.0).ln()).abs() < 1e-12);
        assert!((sphere_surface_log(1).unwrap() - 2f64.ln()).abs() < 1e-13);
        assert!(sphere_surface_log(0).is_err());
    }
}
