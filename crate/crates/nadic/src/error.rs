use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// Domain errors (violated preconditions) and capacity errors (inputs beyond
/// the configured factorization bound) are both represented here; callers
/// that need to distinguish them can match on the variant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot factorize zero")]
    FactorizeZero,

    #[error("input {value} exceeds the factorization bound {bound}")]
    FactorizationBound { value: BigUint, bound: BigUint },

    #[error("base must be at least 2, got {0}")]
    BaseTooSmall(BigUint),

    #[error("intervals have mismatched base or level: {left} vs {right}")]
    IntervalMismatch { left: String, right: String },

    #[error("measure base must be at least 2, got {0}")]
    MeasureBaseTooSmall(BigUint),

    #[error("invalid weights: need left + right = 2 and 0 < left < 1 < right, got left={left}, right={right}")]
    InvalidWeights { left: BigRational, right: BigRational },

    #[error("interval endpoints are reversed: {lower} > {upper}")]
    ReversedInterval { lower: BigRational, upper: BigRational },

    #[error("audit depth must be at least 1")]
    ZeroAuditDepth,

    #[error("level must be at least {min}, got {got}")]
    LevelTooSmall { got: u64, min: u64 },

    #[error("1/{n} is not {m}-far; use the good-pair route instead")]
    NotFar { n: BigUint, m: BigUint },

    #[error("{n} has a prime factor that does not divide {m}; use the far route instead")]
    FarPrime { m: BigUint, n: BigUint },

    #[error("({m}, {n}) is not a semi-good pair")]
    NotSemiGood { m: BigUint, n: BigUint },

    #[error("({m}, {n}) is not a good pair")]
    NotGoodPair { m: BigUint, n: BigUint },

    #[error("bases {m} and {n} are multiplicatively dependent with common base {base}")]
    DependentPair { m: BigUint, n: BigUint, base: BigUint },

    #[error("measure base 2 is not supported here; lift to base 4 first (the two bases carry the same doubling classes)")]
    UnliftedBaseTwo,

    #[error("empty level range")]
    EmptyLevels,

    #[error("family lists must be non-empty")]
    EmptyFamily,

    #[error("index {index} does not name a child (base {base})")]
    ChildIndexOutOfRange { index: BigInt, base: BigUint },

    /// An internal consistency check failed. Seeing this means a proven
    /// invariant was violated at runtime; it is always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
