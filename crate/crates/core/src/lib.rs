//! Exact log-domain evaluation of the average number of (δ, η)-LLL bases in
//! dimension n, together with the full chain of analytic lower/upper bounds
//! and the two closed-form approximations, and a verification layer that
//! checks every asserted inequality numerically at desk scale.
//!
//! The count grows like t^(-n³/6) with t = cos(arcsin(η/δ)), so raw values
//! overflow doubles around n ≈ 30. Everything is therefore carried as
//! natural logs ([`logdomain`]); all public results are `*_ln` values.
//!
//! ```
//! use lll_census::census::{self, ReductionParams};
//! use lll_census::analysis;
//!
//! let p = ReductionParams::new(22, 0.51, 0.99)?;
//! let ln_count = census::log_count_xi(&p)?;
//! assert!((ln_count - 172.578).abs() < 1e-3);
//!
//! let bounds = analysis::combined_bounds_log(&p)?;
//! assert!(bounds.sandwich_ok);
//! # Ok::<(), lll_census::Error>(())
//! ```

pub mod analysis;
pub mod census;
pub mod cli;
pub mod error;
pub mod logdomain;
pub mod report;
pub mod secint;
pub mod specialfn;
pub mod verify;

pub use error::{Error, Result};
