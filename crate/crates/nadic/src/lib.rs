//! Exact arithmetic for n-adic doubling measures.
//!
//! This crate constructs a singular self-similar measure on the real line by
//! redistributing Lebesgue mass over base-`n` digit cells, and provides the
//! number-theoretic machinery needed to show when that measure fails to be
//! doubling with respect to a *different* base `m`:
//!
//! * [`exact`] — arbitrary-precision helpers: trial-division factorization,
//!   exact floor-of-log-ratio, and multiplicative-dependence detection.
//! * [`adic`] — the algebra of base-`n` intervals `[k/n^level, (k+1)/n^level)`.
//! * [`measure`] — the redistributed measure: density, CDF, interval mass,
//!   and doubling audits, all in exact rational arithmetic.
//! * [`farness`] — the far-number predicate and the optimal far constant of a
//!   rational with respect to a base.
//! * [`pairs`] — solvability of `k/m^(level-1) = 1/n^level`, good and
//!   semi-good pair recognition, and the base-pair classifier.
//! * [`witness`] — explicit `m`-adic sibling intervals whose exact mass ratio
//!   grows without bound, certifying that the measure is not `m`-adic
//!   doubling.
//!
//! Everything is computed with big integers and big rationals; floating point
//! never enters any computation (decimal output is rendered by long division).

// Error variants carry the offending exact values; errors are cold.
#![allow(clippy::result_large_err)]

pub mod adic;
pub mod exact;
pub mod farness;
pub mod measure;
pub mod pairs;
pub mod witness;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
