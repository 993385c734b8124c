//! The redistributed measure.
//!
//! Start from Lebesgue measure. On each unit interval `[u, u+1)` with
//! `u ≥ 0`, split into `n` digit cells and move mass: the leftmost child's
//! density is multiplied by the left weight `a`, the rightmost child's by the
//! right weight `b`, and the middle children keep their density. Because
//! `a + b = 2`, every split preserves mass. The split is then repeated
//! `u + 1` times, but only on cells that were already modified (the leftmost
//! and rightmost chains); middle cells are never refined. Left of the origin
//! nothing changes.
//!
//! The resulting density at a point `x ∈ [u, u+1)` follows from the base-`n`
//! digits of `x - u`: every leading `0` digit contributes a factor `a`, every
//! leading `n-1` digit a factor `b`, and the first middle digit (or the depth
//! cap `u + 1`) ends the product. All queries — density, CDF, interval mass —
//! are answered exactly in rationals by walking at most `u + 1` digits.
//!
//! With `0 < a < 1 < b`, any two children of a base-`n` cell have mass ratio
//! at most `b/a`, so the measure is base-`n` doubling; the weights piled up
//! next to each positive integer (`b^u` just left of `u`, `a^(u+1)` just
//! right) show it is not doubling in the classical sense.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

use crate::adic::{AdicInterval, Position};
use crate::exact::rational_pow;
use crate::{Error, Result};

/// Parameters of the measure: the base and the two redistribution weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureSpec {
    base: BigUint,
    left_weight: BigRational,
    right_weight: BigRational,
    promoted: bool,
}

impl MeasureSpec {
    /// Builds a spec with base `n ≥ 2` and weights `left + right = 2`,
    /// `0 < left < 1 < right`.
    ///
    /// Base 2 is transparently promoted to base 4 — the two bases have
    /// identical doubling classes, and the construction needs at least one
    /// middle child per cell. [`MeasureSpec::was_promoted`] reports when this
    /// happened.
    pub fn new(base: BigUint, left_weight: BigRational, right_weight: BigRational) -> Result<Self> {
        let two = BigUint::from(2u32);
        if base < two {
            return Err(Error::MeasureBaseTooSmall(base));
        }
        let one = BigRational::one();
        let sum = &left_weight + &right_weight;
        if sum != &one + &one
            || !left_weight.is_positive()
            || left_weight >= one
            || right_weight <= one
        {
            return Err(Error::InvalidWeights {
                left: left_weight,
                right: right_weight,
            });
        }
        let promoted = base == two;
        let base = if promoted { BigUint::from(4u32) } else { base };
        Ok(MeasureSpec {
            base,
            left_weight,
            right_weight,
            promoted,
        })
    }

    /// The effective base (after any promotion of 2 to 4).
    pub fn base(&self) -> &BigUint {
        &self.base
    }

    /// Weight multiplier of leftmost children (`0 < a < 1`).
    pub fn left_weight(&self) -> &BigRational {
        &self.left_weight
    }

    /// Weight multiplier of rightmost children (`1 < b < 2`).
    pub fn right_weight(&self) -> &BigRational {
        &self.right_weight
    }

    /// True when the spec was requested with base 2 and stored as base 4.
    pub fn was_promoted(&self) -> bool {
        self.promoted
    }
}

/// A maximal constant-density cell together with its density.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellWeight {
    pub cell: AdicInterval,
    pub density: BigRational,
}

/// Streams base-`n` digits of a fraction in `[0, 1)` by exact
/// multiply-and-floor.
struct DigitWalk {
    numerator: BigUint,
    denominator: BigUint,
    base: BigUint,
}

impl DigitWalk {
    fn new(frac: &BigRational, base: &BigUint) -> Self {
        debug_assert!(!frac.is_negative() && *frac < BigRational::one());
        DigitWalk {
            numerator: frac.numer().to_biguint().expect("fraction is nonnegative"),
            denominator: frac.denom().to_biguint().expect("denominator is positive"),
            base: base.clone(),
        }
    }

    fn next_digit(&mut self) -> BigUint {
        let scaled = &self.numerator * &self.base;
        let (digit, rest) = scaled.div_rem(&self.denominator);
        self.numerator = rest;
        digit
    }

    /// The fraction still unconsumed, rescaled to `[0, 1)`.
    fn remainder(&self) -> BigRational {
        BigRational::new(
            BigInt::from(self.numerator.clone()),
            BigInt::from(self.denominator.clone()),
        )
    }
}

fn split_unit(x: &BigRational) -> (BigInt, BigRational) {
    let unit = x.floor().to_integer();
    let frac = x - BigRational::from_integer(unit.clone());
    (unit, frac)
}

fn redistribution_count(unit: &BigInt) -> u64 {
    unit.to_u64()
        .map(|u| u + 1)
        .expect("integer part too large for a digit walk")
}

/// Exact density of the measure at `x` (weight per unit length).
pub fn density(x: &BigRational, spec: &MeasureSpec) -> BigRational {
    if x.is_negative() {
        return BigRational::one();
    }
    let (unit, frac) = split_unit(x);
    let repetitions = redistribution_count(&unit);
    let top_digit = spec.base() - 1u32;
    let mut walk = DigitWalk::new(&frac, spec.base());
    let mut weight = BigRational::one();
    for _ in 0..repetitions {
        let digit = walk.next_digit();
        if digit.is_zero() {
            weight *= spec.left_weight();
        } else if digit == top_digit {
            weight *= spec.right_weight();
        } else {
            break;
        }
    }
    weight
}

/// All maximal constant-density cells tiling `[unit, unit + 1)`, left to
/// right. This is the brute-force enumeration the digit-walk queries are
/// checked against.
pub fn unit_cells(unit: u64, spec: &MeasureSpec) -> Vec<CellWeight> {
    let root = AdicInterval::new(spec.base().clone(), 0, BigInt::from(unit))
        .expect("measure base is at least 3");
    let mut out = Vec::new();
    collect_cells(&root, BigRational::one(), 0, unit + 1, spec, &mut out);
    out
}

fn collect_cells(
    cell: &AdicInterval,
    density: BigRational,
    depth: u64,
    cap: u64,
    spec: &MeasureSpec,
    out: &mut Vec<CellWeight>,
) {
    if depth == cap {
        out.push(CellWeight {
            cell: cell.clone(),
            density,
        });
        return;
    }
    for child in cell.children() {
        match child.position() {
            Position::Leftmost => collect_cells(
                &child,
                &density * spec.left_weight(),
                depth + 1,
                cap,
                spec,
                out,
            ),
            Position::Rightmost => collect_cells(
                &child,
                &density * spec.right_weight(),
                depth + 1,
                cap,
                spec,
                out,
            ),
            Position::Middle => out.push(CellWeight {
                cell: child,
                density: density.clone(),
            }),
        }
    }
}

/// Mass of `[lower, upper)` computed against an explicit cell list:
/// `Σ density · |cell ∩ [lower, upper)|`. Exact, and independent of the CDF
/// digit walk; used as the oracle in equivalence tests.
pub fn overlap_mass(cells: &[CellWeight], lower: &BigRational, upper: &BigRational) -> BigRational {
    let mut total = BigRational::zero();
    for cw in cells {
        let lo = cw.cell.left_end().max(lower.clone());
        let hi = cw.cell.right_end().min(upper.clone());
        if lo < hi {
            total += &cw.density * (hi - lo);
        }
    }
    total
}

/// The cumulative distribution `F(x) = μ([0, x))` for `x ≥ 0` and
/// `F(x) = x` for `x < 0`.
///
/// One digit walk: full unit intervals left of `x` contribute mass 1 each;
/// inside `x`'s unit the walk descends the digit path, adding the mass of
/// the siblings left of each digit, and closes with a uniform remainder at
/// the first middle digit or at the depth cap.
pub fn cdf(x: &BigRational, spec: &MeasureSpec) -> BigRational {
    if x.is_negative() {
        return x.clone();
    }
    let (unit, frac) = split_unit(x);
    let mut acc = BigRational::from_integer(unit.clone());
    if frac.is_zero() {
        return acc;
    }
    let repetitions = redistribution_count(&unit);
    let top_digit = spec.base() - 1u32;
    let base_rat = BigRational::from_integer(BigInt::from(spec.base().clone()));
    let mut walk = DigitWalk::new(&frac, spec.base());
    let mut weight = BigRational::one();
    let mut cell_len = BigRational::one();
    for _ in 0..repetitions {
        cell_len /= &base_rat;
        let digit = walk.next_digit();
        if !digit.is_zero() {
            // siblings left of this digit: one leftmost (weight · a), then
            // digit − 1 middles (weight each)
            let middles = BigRational::from_integer(BigInt::from(&digit - 1u32));
            acc += &weight * (spec.left_weight() + middles) * &cell_len;
        }
        if digit.is_zero() {
            weight *= spec.left_weight();
        } else if digit == top_digit {
            weight *= spec.right_weight();
        } else {
            // middle cell: uniform from here on
            return acc + weight * walk.remainder() * cell_len;
        }
    }
    acc + weight * walk.remainder() * cell_len
}

/// `μ([lower, upper))`, exact. Requires `lower ≤ upper`.
pub fn measure_interval(
    lower: &BigRational,
    upper: &BigRational,
    spec: &MeasureSpec,
) -> Result<BigRational> {
    if lower > upper {
        return Err(Error::ReversedInterval {
            lower: lower.clone(),
            upper: upper.clone(),
        });
    }
    Ok(cdf(upper, spec) - cdf(lower, spec))
}

/// Every child-mass ratio that occurs among base-`n` intervals inside
/// `[0, range_end)` at levels below `max_depth`.
///
/// A redistributed cell has children with densities `(w·a, w, …, w, w·b)`,
/// so its ordered child-pair ratios do not depend on the accumulated density
/// `w`; a cell that was never redistributed (or sits below a middle digit)
/// is uniform and only ties occur. One pass down the redistribution depth of
/// each unit interval therefore sees every ratio class.
pub fn doubling_ratio_set(
    spec: &MeasureSpec,
    max_depth: u64,
    range_end: u64,
) -> Result<BTreeSet<BigRational>> {
    if max_depth == 0 {
        return Err(Error::ZeroAuditDepth);
    }
    let mut ratios = BTreeSet::new();
    let one = BigRational::one();
    for unit in 0..range_end {
        let repetitions = unit + 1;
        for level in 0..max_depth {
            if level < repetitions {
                let weights = [&one, spec.left_weight(), spec.right_weight()];
                for num in weights {
                    for den in weights {
                        ratios.insert(num / den);
                    }
                }
            } else {
                ratios.insert(one.clone());
                break;
            }
        }
    }
    Ok(ratios)
}

/// The largest child-mass ratio over all base-`n` intervals in
/// `[0, range_end)` at levels below `max_depth`. Always `b/a` once a single
/// redistributed cell is in range.
pub fn doubling_audit(spec: &MeasureSpec, max_depth: u64, range_end: u64) -> Result<BigRational> {
    let ratios = doubling_ratio_set(spec, max_depth, range_end)?;
    ratios
        .into_iter()
        .next_back()
        .ok_or_else(|| Error::Internal("empty audit range".into()))
}

/// The symmetric interval around an integer whose two halves expose the
/// non-doubling blow-up, with its exact half-mass ratio `b^u / a^(u+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonDoublingWitness {
    pub lower: BigRational,
    pub upper: BigRational,
    pub left_mass: BigRational,
    pub right_mass: BigRational,
    pub ratio: BigRational,
}

/// Measures both halves of `[u − n^-(u+1), u + n^-(u+1))` for integer
/// `u ≥ 1`. The left half is the end of the rightmost chain of `[u-1, u)`,
/// the right half the start of the leftmost chain of `[u, u+1)`.
pub fn non_doubling_witness(spec: &MeasureSpec, unit: u64) -> Result<NonDoublingWitness> {
    if unit < 1 {
        return Err(Error::LevelTooSmall { got: unit, min: 1 });
    }
    let center = BigRational::from_integer(BigInt::from(unit));
    let half_len = rational_pow(spec.base(), -(unit as i64 + 1));
    let lower = &center - &half_len;
    let upper = &center + &half_len;
    let left_mass = measure_interval(&lower, &center, spec)?;
    let right_mass = measure_interval(&center, &upper, spec)?;
    let ratio = &left_mass / &right_mass;
    Ok(NonDoublingWitness {
        lower,
        upper,
        left_mass,
        right_mass,
        ratio,
    })
}
