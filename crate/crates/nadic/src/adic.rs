//! Base-`n` interval algebra.
//!
//! An [`AdicInterval`] is the half-open interval `[k/n^level, (k+1)/n^level)`.
//! Indexing is zero-based, so the children of an interval are obtained by
//! multiplying its index by the base, and the parent by floor division.
//! Negative levels (intervals wider than one unit) and negative indices
//! (intervals left of the origin) are allowed; the measure machinery only
//! uses levels ≥ 0 but the algebra is uniform.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;

use crate::exact::rational_pow;
use crate::{Error, Result};

/// The half-open interval `[index/base^level, (index+1)/base^level)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdicInterval {
    base: BigUint,
    level: i64,
    index: BigInt,
}

/// Where an interval sits among its siblings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    Leftmost,
    Middle,
    Rightmost,
}

impl AdicInterval {
    pub fn new(base: BigUint, level: i64, index: BigInt) -> Result<Self> {
        if base < BigUint::from(2u32) {
            return Err(Error::BaseTooSmall(base));
        }
        Ok(AdicInterval { base, level, index })
    }

    pub fn base(&self) -> &BigUint {
        &self.base
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn index(&self) -> &BigInt {
        &self.index
    }

    /// Left endpoint `index/base^level`, exact.
    pub fn left_end(&self) -> BigRational {
        BigRational::from_integer(self.index.clone()) * rational_pow(&self.base, -self.level)
    }

    /// Right endpoint `(index+1)/base^level`, exact.
    pub fn right_end(&self) -> BigRational {
        BigRational::from_integer(&self.index + 1) * rational_pow(&self.base, -self.level)
    }

    pub fn sidelength(&self) -> BigRational {
        rational_pow(&self.base, -self.level)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.left_end() <= *x && *x < self.right_end()
    }

    /// The `base` subintervals at the next level, left to right.
    pub fn children(&self) -> Vec<AdicInterval> {
        let base_int = BigInt::from(self.base.clone());
        let first = &self.index * &base_int;
        let mut out = Vec::new();
        let mut j = BigInt::zero();
        while j < base_int {
            out.push(AdicInterval {
                base: self.base.clone(),
                level: self.level + 1,
                index: &first + &j,
            });
            j += 1;
        }
        out
    }

    /// The child at offset `j` (0-based from the left).
    pub fn child(&self, j: &BigInt) -> Result<AdicInterval> {
        if j.is_negative() || *j >= BigInt::from(self.base.clone()) {
            return Err(Error::ChildIndexOutOfRange {
                index: j.clone(),
                base: self.base.clone(),
            });
        }
        Ok(AdicInterval {
            base: self.base.clone(),
            level: self.level + 1,
            index: &self.index * BigInt::from(self.base.clone()) + j,
        })
    }

    pub fn leftmost_child(&self) -> AdicInterval {
        AdicInterval {
            base: self.base.clone(),
            level: self.level + 1,
            index: &self.index * BigInt::from(self.base.clone()),
        }
    }

    pub fn rightmost_child(&self) -> AdicInterval {
        AdicInterval {
            base: self.base.clone(),
            level: self.level + 1,
            index: &self.index * BigInt::from(self.base.clone())
                + (BigInt::from(self.base.clone()) - 1),
        }
    }

    /// The unique interval one level up containing this one.
    pub fn parent(&self) -> AdicInterval {
        AdicInterval {
            base: self.base.clone(),
            level: self.level - 1,
            index: self.index.div_floor(&BigInt::from(self.base.clone())),
        }
    }

    /// Leftmost, rightmost, or middle child of its parent.
    pub fn position(&self) -> Position {
        let base_int = BigInt::from(self.base.clone());
        let offset = self.index.mod_floor(&base_int);
        if offset.is_zero() {
            Position::Leftmost
        } else if offset == base_int - 1 {
            Position::Rightmost
        } else {
            Position::Middle
        }
    }

    /// True when both intervals share a parent. The intervals must live at
    /// the same base and level.
    pub fn are_siblings(&self, other: &AdicInterval) -> Result<bool> {
        if self.base != other.base || self.level != other.level {
            return Err(Error::IntervalMismatch {
                left: self.to_string(),
                right: other.to_string(),
            });
        }
        Ok(self.parent() == other.parent())
    }

    /// Exact endpoints rendered as `"p/q..r/s"`.
    pub fn endpoints_string(&self) -> String {
        format!("{}..{}", self.left_end(), self.right_end())
    }
}

/// The unique level-`level` interval containing `x`, i.e. the one with index
/// `floor(x * base^level)`.
pub fn locate(x: &BigRational, base: &BigUint, level: i64) -> Result<AdicInterval> {
    if *base < BigUint::from(2u32) {
        return Err(Error::BaseTooSmall(base.clone()));
    }
    let scaled = x * rational_pow(base, level);
    Ok(AdicInterval {
        base: base.clone(),
        level,
        index: scaled.floor().to_integer(),
    })
}

impl fmt::Display for AdicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.base, self.level, self.index)
    }
}
