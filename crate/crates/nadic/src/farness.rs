//! Far numbers: rationals bounded away from every base-`n` grid point.
//!
//! A real `δ` is `n`-far when `|δ − k/n^m| ≥ C/n^m` for some fixed `C > 0`
//! and all integers `k` and levels `m ≥ 0`. For rational `δ` this is
//! decidable: exactly the rationals that are not of the form `k/n^m`
//! qualify, i.e. those whose reduced denominator has a prime factor not
//! dividing `n`. The relation is not symmetric in the two bases involved —
//! `1/6` is 2-far while `1/2` is not 6-far — so `(δ, n)` is always an
//! ordered query here.
//!
//! Beyond the predicate, this module computes the *optimal* constant
//! `C = inf_m n^m · dist(δ, n^{-m}ℤ) = inf_m ‖n^m δ‖`: for rational `δ` the
//! orbit of the numerator under multiplication by `n` modulo the denominator
//! is eventually periodic, so the infimum is a minimum attained within one
//! cycle and can be reported exactly together with a level attaining it.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use std::collections::HashSet;

use crate::{Error, Result};

/// Outcome of a far-number query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarReport {
    pub is_far: bool,
    /// The optimal constant, strictly between 0 and 1; present iff far.
    pub constant: Option<BigRational>,
    /// The smallest level at which the constant is attained; present iff far.
    pub witness_level: Option<u64>,
}

fn check_base(base: &BigUint) -> Result<()> {
    if *base < BigUint::from(2u32) {
        return Err(Error::BaseTooSmall(base.clone()));
    }
    Ok(())
}

/// True iff `delta` is `base`-far: its reduced denominator has a prime
/// factor that does not divide `base`.
pub fn is_far(delta: &BigRational, base: &BigUint) -> Result<bool> {
    check_base(base)?;
    let mut den = delta
        .denom()
        .to_biguint()
        .expect("reduced denominator is positive");
    loop {
        let g = den.gcd(base);
        if g.is_one() {
            break;
        }
        den /= g;
    }
    Ok(!den.is_one())
}

/// The full far report for `delta` against `base`, with the exact optimal
/// constant when `delta` is far.
pub fn far_constant(delta: &BigRational, base: &BigUint) -> Result<FarReport> {
    check_base(base)?;
    if !is_far(delta, base)? {
        return Ok(FarReport {
            is_far: false,
            constant: None,
            witness_level: None,
        });
    }
    let den = delta
        .denom()
        .to_biguint()
        .expect("reduced denominator is positive");
    let num = delta
        .numer()
        .mod_floor(delta.denom())
        .to_biguint()
        .expect("floored residue is nonnegative");

    // Walk the orbit r ↦ r·base (mod den) until it revisits a residue; the
    // distance from r/den to the nearest integer is min(r, den − r)/den.
    let mut seen: HashSet<BigUint> = HashSet::new();
    let mut residue = num;
    let mut level = 0u64;
    let mut best: Option<(BigUint, u64)> = None;
    while seen.insert(residue.clone()) {
        let dist = (&residue).min(&(&den - &residue)).clone();
        if best.as_ref().is_none_or(|(d, _)| dist < *d) {
            best = Some((dist, level));
        }
        residue = residue * base % &den;
        level += 1;
    }
    let (dist, witness_level) = best.expect("orbit visits at least one residue");
    Ok(FarReport {
        is_far: true,
        constant: Some(BigRational::new(dist.into(), den.into())),
        witness_level: Some(witness_level),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{pow, rational_pow};
    use num_bigint::BigInt;
    use num_traits::{Signed, Zero};

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn uint(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn far_predicate_anchors() {
        assert!(is_far(&rat(1, 6), &uint(2)).unwrap());
        assert!(!is_far(&rat(1, 2), &uint(6)).unwrap());
        assert!(!is_far(&rat(1, 12), &uint(18)).unwrap());
        assert!(!is_far(&rat(1, 18), &uint(12)).unwrap());
        // 5/8 = 5/2³ is on the base-2 grid
        assert!(!is_far(&rat(5, 8), &uint(2)).unwrap());
        // integers are never far (k/n⁰)
        assert!(!is_far(&rat(7, 1), &uint(3)).unwrap());
    }

    #[test]
    fn far_predicate_matches_grid_search() {
        // oracle: δ = 1/d is NOT n-far iff d divides n^m for some m ≤ 64
        for n in 2u64..=60 {
            for d in 2u64..=60 {
                let mut on_grid = false;
                let mut power = BigUint::one();
                for _ in 0..=64 {
                    if (&power % d).is_zero() {
                        on_grid = true;
                        break;
                    }
                    power *= n;
                }
                let got = is_far(&rat(1, d as i64), &uint(n)).unwrap();
                assert_eq!(got, !on_grid, "delta=1/{d} base={n}");
            }
        }
    }

    #[test]
    fn far_constant_known_orbits() {
        let report = far_constant(&rat(1, 6), &uint(2)).unwrap();
        assert_eq!(report.constant, Some(rat(1, 6)));
        assert_eq!(report.witness_level, Some(0));

        let report = far_constant(&rat(1, 3), &uint(2)).unwrap();
        assert_eq!(report.constant, Some(rat(1, 3)));

        let report = far_constant(&rat(1, 5), &uint(3)).unwrap();
        assert_eq!(report.constant, Some(rat(1, 5)));
        assert_eq!(report.witness_level, Some(0));

        let report = far_constant(&rat(1, 2), &uint(6)).unwrap();
        assert!(!report.is_far);
        assert_eq!(report.constant, None);
        assert_eq!(report.witness_level, None);
    }

    #[test]
    fn far_constant_is_valid_and_optimal() {
        let cases = [
            (rat(1, 6), 2u64),
            (rat(1, 3), 2),
            (rat(1, 5), 3),
            (rat(2, 7), 10),
            (rat(5, 12), 2),
            (rat(13, 30), 7),
            (rat(-1, 6), 2),
        ];
        for (delta, base) in cases {
            let report = far_constant(&delta, &uint(base)).unwrap();
            assert!(report.is_far, "{delta} vs {base}");
            let constant = report.constant.unwrap();
            assert!(constant > BigRational::zero());
            assert!(constant < BigRational::one());

            let mut attained = false;
            for m in 0..=50u64 {
                let scale = rational_pow(&uint(base), m as i64);
                let scaled = &delta * &scale;
                // distance from scaled to the nearest integer
                let below = scaled.floor();
                let dist = (&scaled - &below).min(&below + BigRational::one() - &scaled);
                assert!(
                    dist >= constant,
                    "violated at level {m} for {delta} vs {base}"
                );
                if m == report.witness_level.unwrap() {
                    assert_eq!(dist, constant, "witness level must attain the constant");
                    attained = true;
                }
            }
            assert!(attained);

            // spot check against the definition: |δ − k/n^m| ≥ C/n^m for the
            // two nearest k
            for m in 0..=50u64 {
                let denom = pow(&uint(base), m);
                let scaled = &delta * BigRational::from_integer(BigInt::from(denom.clone()));
                let k = scaled.floor().to_integer();
                for kk in [k.clone(), k + 1] {
                    let grid = BigRational::new(kk, BigInt::from(denom.clone()));
                    let dist = (&delta - &grid).abs();
                    let bound = &constant * rational_pow(&uint(base), -(m as i64));
                    assert!(dist >= bound);
                }
            }
        }
    }

    #[test]
    fn rejects_tiny_bases() {
        assert!(is_far(&rat(1, 6), &uint(1)).is_err());
        assert!(far_constant(&rat(1, 6), &uint(0)).is_err());
    }
}
