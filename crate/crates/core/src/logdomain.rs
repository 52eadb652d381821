//! Signed log-domain real arithmetic.
//!
//! Every quantity in this crate is carried as the natural log of its
//! magnitude plus a sign, so products and ratios of astronomically scaled
//! values (magnitudes up to e^(±10^6) appear in high dimensions) are plain
//! sums in log space. Positive sums go through log-sum-exp; general signed
//! addition is deliberately not provided since it is cancellation-prone and
//! no formula here needs it. Subtraction of positives is available as
//! [`log1m_exp`] for `1 - e^x` style terms.

use std::cmp::Ordering;
use std::ops::Mul;

use crate::error::{Error, Result};

/// ln(e^a + e^b) without overflow.
#[inline]
pub fn log_add_exp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    if a > b {
        a + (b - a).exp().ln_1p()
    } else {
        b + (a - b).exp().ln_1p()
    }
}

/// ln(1 - e^x) for x < 0.
///
/// Branches at -ln 2 so both the tiny-x and near-zero cases stay accurate.
#[inline]
pub fn log1m_exp(x: f64) -> f64 {
    debug_assert!(x < 0.0, "log1m_exp requires a negative argument");
    if x < -std::f64::consts::LN_2 {
        (-x.exp()).ln_1p()
    } else {
        (-x.exp_m1()).ln()
    }
}

/// ln(e^a - e^b), requires a > b.
#[inline]
pub fn log_sub_exp(a: f64, b: f64) -> Result<f64> {
    // NaN operands fail this gate too
    let ordered = matches!(a.partial_cmp(&b), Some(std::cmp::Ordering::Greater));
    if !ordered {
        return Err(Error::OutOfDomain {
            what: "log_sub_exp minuend",
            value: a,
            constraint: "a > b",
        });
    }
    if b == f64::NEG_INFINITY {
        return Ok(a);
    }
    Ok(a + log1m_exp(b - a))
}

/// A signed real represented by sign and ln of magnitude.
///
/// Invariants: `sign == 0` iff the value is exactly zero (then `ln_abs` is
/// -inf); `ln_abs` is finite whenever `sign != 0`.
#[derive(Clone, Copy, Debug)]
pub struct LogReal {
    sign: i8,
    ln_abs: f64,
}

impl LogReal {
    pub fn zero() -> Self {
        LogReal {
            sign: 0,
            ln_abs: f64::NEG_INFINITY,
        }
    }

    pub fn one() -> Self {
        LogReal {
            sign: 1,
            ln_abs: 0.0,
        }
    }

    /// Builds from an ordinary real. Rejects non-finite input.
    pub fn from_value(v: f64) -> Result<Self> {
        if !v.is_finite() {
            return Err(Error::NonFinite(v));
        }
        if v == 0.0 {
            return Ok(Self::zero());
        }
        Ok(LogReal {
            sign: if v > 0.0 { 1 } else { -1 },
            ln_abs: v.abs().ln(),
        })
    }

    /// Builds the positive value e^ln_abs. `ln_abs` must not be NaN or +inf;
    /// -inf yields zero.
    pub fn from_ln_pos(ln_abs: f64) -> Self {
        debug_assert!(!ln_abs.is_nan() && ln_abs != f64::INFINITY);
        if ln_abs == f64::NEG_INFINITY {
            return Self::zero();
        }
        LogReal { sign: 1, ln_abs }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn ln_abs(&self) -> f64 {
        self.ln_abs
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Converts back to f64; overflows to +/-inf when the magnitude exceeds
    /// the double range.
    pub fn to_value(&self) -> f64 {
        f64::from(self.sign) * self.ln_abs.exp()
    }

    /// Raises to the power `p`. A positive base takes any finite exponent;
    /// zero or negative bases require a nonnegative integer exponent (sign
    /// by parity for negative bases).
    pub fn pow(&self, p: f64) -> Result<Self> {
        if !p.is_finite() {
            return Err(Error::NonFinite(p));
        }
        if p == 0.0 {
            return Ok(Self::one());
        }
        match self.sign {
            1 => Ok(LogReal {
                sign: 1,
                ln_abs: p * self.ln_abs,
            }),
            _ => {
                if p.fract() != 0.0 || p < 0.0 {
                    return Err(Error::OutOfDomain {
                        what: "exponent for non-positive base",
                        value: p,
                        constraint: "a nonnegative integer",
                    });
                }
                if self.sign == 0 {
                    return Ok(Self::zero());
                }
                let odd = (p % 2.0) != 0.0;
                Ok(LogReal {
                    sign: if odd { -1 } else { 1 },
                    ln_abs: p * self.ln_abs,
                })
            }
        }
    }

    /// Adds two nonnegative values stably (log-sum-exp). Negative addends
    /// are rejected; signed addition is out of scope by design.
    pub fn add_pos(&self, other: &Self) -> Result<Self> {
        if self.sign < 0 || other.sign < 0 {
            return Err(Error::OutOfDomain {
                what: "add_pos addend sign",
                value: f64::from(self.sign.min(other.sign)),
                constraint: "both addends nonnegative",
            });
        }
        if self.is_zero() {
            return Ok(*other);
        }
        if other.is_zero() {
            return Ok(*self);
        }
        Ok(LogReal {
            sign: 1,
            ln_abs: log_add_exp(self.ln_abs, other.ln_abs),
        })
    }

    /// Total order consistent with the represented real values.
    ///
    /// Sign first; among positives larger ln_abs is larger, among negatives
    /// the order flips. Equal sign and equal ln_abs compare equal — there is
    /// no epsilon here, tolerances belong to the verification layer.
    pub fn total_cmp(&self, other: &Self) -> Ordering {
        match self.sign.cmp(&other.sign) {
            Ordering::Equal => match self.sign {
                1 => self.ln_abs.total_cmp(&other.ln_abs),
                -1 => other.ln_abs.total_cmp(&self.ln_abs),
                _ => Ordering::Equal,
            },
            ord => ord,
        }
    }
}

impl Mul for LogReal {
    type Output = LogReal;

    fn mul(self, rhs: Self) -> Self::Output {
        if self.sign == 0 || rhs.sign == 0 {
            return LogReal::zero();
        }
        LogReal {
            sign: self.sign * rhs.sign,
            ln_abs: self.ln_abs + rhs.ln_abs,
        }
    }
}

impl PartialEq for LogReal {
    fn eq(&self, other: &Self) -> bool {
        self.total_cmp(other) == Ordering::Equal
    }
}

impl PartialOrd for LogReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.total_cmp(other))
    }
}
