//! Base-pair structure: solvability, good and semi-good pairs, and the
//! classification dichotomy.
//!
//! For bases `m, n ≥ 2`, the equation `k/m^(level-1) = 1/n^level` either has
//! a positive integer solution (the pair is *solvable*) or it does not. Over
//! the shared prime decomposition `n = ∏ pᵢ^aᵢ`, `m = ∏ pᵢ^bᵢ` the pair is:
//!
//! * *semi-good* when `m > n` and `bᵢ > aᵢ` for every prime, and
//! * *good* when `m > n`, `bᵢ ≥ aᵢ` everywhere, and `aᵢ = bᵢ > 0` for some
//!   prime. A good pair is never solvable: the tied prime blocks every
//!   level.
//!
//! Any pair whose `n`-primes all divide `m` can be made semi-good by raising
//! `m` to a power, and any semi-good pair becomes good after raising both
//! sides by the reduced maximum of the exponent ratios. Combined with the
//! far-number predicate this yields the dichotomy implemented by
//! [`classify_pair`]: two bases that are not powers of a common integer
//! either have `1/n` far from the base-`m` grids, or lift to a good pair.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::{factorize, floor_log_ratio, multiplicatively_dependent, pow};
use crate::farness::{far_constant, is_far, FarReport};
use crate::{Error, Result};

/// Aligned prime-exponent vectors of a base pair, over the union of their
/// prime supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentPair {
    primes: Vec<BigUint>,
    m_exponents: Vec<u64>,
    n_exponents: Vec<u64>,
}

impl ExponentPair {
    pub fn new(m: &BigUint, n: &BigUint) -> Result<Self> {
        check_pair(m, n)?;
        let fm = factorize(m)?;
        let fn_ = factorize(n)?;
        let mut primes: Vec<BigUint> = fm
            .factors()
            .iter()
            .chain(fn_.factors())
            .map(|(p, _)| p.clone())
            .collect();
        primes.sort();
        primes.dedup();
        let m_exponents = primes
            .iter()
            .map(|p| u64::from(fm.exponent_of(p)))
            .collect();
        let n_exponents = primes
            .iter()
            .map(|p| u64::from(fn_.exponent_of(p)))
            .collect();
        Ok(ExponentPair {
            primes,
            m_exponents,
            n_exponents,
        })
    }

    pub fn primes(&self) -> &[BigUint] {
        &self.primes
    }

    pub fn m_exponents(&self) -> &[u64] {
        &self.m_exponents
    }

    pub fn n_exponents(&self) -> &[u64] {
        &self.n_exponents
    }

    pub fn m_value(&self) -> BigUint {
        reconstruct(&self.primes, &self.m_exponents)
    }

    pub fn n_value(&self) -> BigUint {
        reconstruct(&self.primes, &self.n_exponents)
    }

    /// The pair `(m^x, n^y)`, by scaling the exponent vectors. This is how
    /// lifted pairs are inspected without refactoring huge integers.
    pub fn powered(&self, x: u64, y: u64) -> ExponentPair {
        ExponentPair {
            primes: self.primes.clone(),
            m_exponents: self.m_exponents.iter().map(|e| e * x).collect(),
            n_exponents: self.n_exponents.iter().map(|e| e * y).collect(),
        }
    }

    /// `m > n` and every exponent of `m` strictly dominates.
    pub fn is_semi_good(&self) -> bool {
        self.m_value() > self.n_value()
            && self
                .m_exponents
                .iter()
                .zip(&self.n_exponents)
                .all(|(b, a)| b > a)
    }

    /// `m > n`, exponents of `m` dominate, and some prime is tied with a
    /// positive exponent.
    pub fn is_good(&self) -> bool {
        let dominates = self
            .m_exponents
            .iter()
            .zip(&self.n_exponents)
            .all(|(b, a)| b >= a);
        let tied = self
            .m_exponents
            .iter()
            .zip(&self.n_exponents)
            .any(|(b, a)| b == a && *a > 0);
        self.m_value() > self.n_value() && dominates && tied
    }

    /// Solvability of `k/m^(level-1) = 1/n^level` read off the vectors:
    /// every prime of `n` must appear in `m` with a strictly larger
    /// exponent.
    pub fn is_solvable(&self) -> bool {
        self.m_exponents
            .iter()
            .zip(&self.n_exponents)
            .all(|(b, a)| *a == 0 || b > a)
    }
}

fn reconstruct(primes: &[BigUint], exponents: &[u64]) -> BigUint {
    primes
        .iter()
        .zip(exponents)
        .fold(BigUint::one(), |acc, (p, e)| acc * pow(p, *e))
}

fn check_pair(m: &BigUint, n: &BigUint) -> Result<()> {
    let two = BigUint::from(2u32);
    if *m < two {
        return Err(Error::BaseTooSmall(m.clone()));
    }
    if *n < two {
        return Err(Error::BaseTooSmall(n.clone()));
    }
    Ok(())
}

/// The aligned exponent vectors of `(m, n)`.
pub fn exponent_pair(m: &BigUint, n: &BigUint) -> Result<ExponentPair> {
    ExponentPair::new(m, n)
}

/// Whether `k/m^(level-1) = 1/n^level` has a positive integer solution,
/// together with the minimal level and its `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvabilityResult {
    pub solvable: bool,
    /// Minimal `level ≥ 1` admitting a solution.
    pub min_level: Option<u64>,
    /// The solution `k = m^(min_level - 1) / n^min_level`, an exact integer.
    pub k: Option<BigUint>,
}

/// Decides solvability of `k/m^(level-1) = 1/n^level` in closed form.
///
/// Solvable iff every prime of `n` occurs in `m` with strictly larger
/// exponent; the minimal level is then `max_i ceil(b_i / (b_i - a_i))` and
/// `k` is recovered (and re-verified) by exact division.
pub fn is_solvable(m: &BigUint, n: &BigUint) -> Result<SolvabilityResult> {
    let vectors = ExponentPair::new(m, n)?;
    if !vectors.is_solvable() {
        return Ok(SolvabilityResult {
            solvable: false,
            min_level: None,
            k: None,
        });
    }
    let min_level = vectors
        .m_exponents()
        .iter()
        .zip(vectors.n_exponents())
        .filter(|(_, a)| **a > 0)
        .map(|(b, a)| (*b).div_ceil(b - a))
        .max()
        .ok_or_else(|| Error::Internal("base n ≥ 2 has at least one prime".into()))?;
    let numerator = pow(m, min_level - 1);
    let denominator = pow(n, min_level);
    let (k, remainder) = numerator.div_rem(&denominator);
    if !remainder.is_zero() || k.is_zero() {
        return Err(Error::Internal(format!(
            "closed-form level {min_level} does not solve ({m}, {n})"
        )));
    }
    Ok(SolvabilityResult {
        solvable: true,
        min_level: Some(min_level),
        k: Some(k),
    })
}

/// The largest divisor of `x` coprime to `q`.
fn coprime_part(x: &BigUint, q: &BigUint) -> BigUint {
    let mut rest = x.clone();
    loop {
        let g = rest.gcd(q);
        if g.is_one() {
            return rest;
        }
        rest /= g;
    }
}

/// Good-pair test, by divisibility alone (no factorization, so the inputs
/// can be arbitrarily large): exponent dominance is `n | m`, and given that,
/// some prime ties exactly when `n` has a prime factor not dividing `m/n`.
pub fn is_good_pair(m: &BigUint, n: &BigUint) -> Result<bool> {
    check_pair(m, n)?;
    if m <= n || !(m % n).is_zero() {
        return Ok(false);
    }
    let quotient = m / n;
    Ok(!coprime_part(n, &quotient).is_one())
}

/// Semi-good-pair test: `m > n`, `n | m`, and every prime of `n` still
/// divides `m/n` (strict exponent dominance).
pub fn is_semi_good_pair(m: &BigUint, n: &BigUint) -> Result<bool> {
    check_pair(m, n)?;
    if m <= n || !(m % n).is_zero() {
        return Ok(false);
    }
    let quotient = m / n;
    Ok(coprime_part(n, &quotient).is_one())
}

/// The minimal exponent `e ≥ 1` such that `(m^e, n)` is semi-good.
///
/// Requires every prime of `n` to divide `m` (otherwise `1/n` is `m`-far and
/// the far route applies).
pub fn make_semi_good(m: &BigUint, n: &BigUint) -> Result<u64> {
    let vectors = ExponentPair::new(m, n)?;
    if vectors
        .m_exponents()
        .iter()
        .zip(vectors.n_exponents())
        .any(|(b, a)| *a > 0 && *b == 0)
    {
        return Err(Error::FarPrime {
            m: m.clone(),
            n: n.clone(),
        });
    }
    // smallest e with e·b_i > a_i for every prime of n
    let per_prime = vectors
        .m_exponents()
        .iter()
        .zip(vectors.n_exponents())
        .filter(|(_, a)| **a > 0)
        .map(|(b, a)| a / b + 1)
        .max()
        .unwrap_or(1);
    // smallest e with m^e > n
    let magnitude = floor_log_ratio(n, 1, m)? + 1;
    let exponent = per_prime.max(magnitude);
    if !vectors.powered(exponent, 1).is_semi_good() {
        return Err(Error::Internal(format!(
            "({m}^{exponent}, {n}) failed the semi-good check"
        )));
    }
    Ok(exponent)
}

/// For a semi-good `(m, n)`, the reduced exponents `(x, y)` such that
/// `(m^x, n^y)` ties some prime, i.e. `x/y = max_i a_i/b_i` in lowest terms.
///
/// When `m` and `n` are multiplicatively dependent the tied pair degenerates
/// to `m^x = n^y`, which fails the goodness size condition; [`classify_pair`]
/// screens dependence out beforehand.
pub fn lift_to_good(m: &BigUint, n: &BigUint) -> Result<(u64, u64)> {
    let vectors = ExponentPair::new(m, n)?;
    lift_exponents(&vectors, m, n)
}

fn lift_exponents(vectors: &ExponentPair, m: &BigUint, n: &BigUint) -> Result<(u64, u64)> {
    if !vectors.is_semi_good() {
        return Err(Error::NotSemiGood {
            m: m.clone(),
            n: n.clone(),
        });
    }
    let mut best: Option<(u64, u64)> = None;
    for (b, a) in vectors.m_exponents().iter().zip(vectors.n_exponents()) {
        if *a == 0 {
            continue;
        }
        let better = match best {
            None => true,
            // a/b > x/y  ⟺  a·y > x·b
            Some((x, y)) => (*a as u128) * (y as u128) > (x as u128) * (*b as u128),
        };
        if better {
            best = Some((*a, *b));
        }
    }
    let (x, y) = best.ok_or_else(|| Error::Internal("base n ≥ 2 has at least one prime".into()))?;
    let g = x.gcd(&y);
    Ok((x / g, y / g))
}

/// Outcome of the base-pair dichotomy for a query `(n, m)`: `n` is the base
/// the measure lives on, `m` the base the measure should fail to double on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairClassification {
    /// `m = base^s`, `n = base^t`: the two grids generate the same doubling
    /// classes and no separation is possible.
    Dependent {
        base: BigUint,
        m_exponent: u64,
        n_exponent: u64,
    },
    /// `1/n` is `m`-far; the report carries the exact optimal constant.
    Far(FarReport),
    /// `(m^m_exponent, n^n_exponent)` is a good pair (exponents relative to
    /// the original inputs, with the semi-good step already composed in).
    GoodLift { m_exponent: u64, n_exponent: u64 },
}

/// Classifies a base pair: dependent, far, or lifted to a good pair.
///
/// The checks run in that order, and a returned `GoodLift` has been
/// re-verified to be good and unsolvable. An independent pair for which the
/// lift degenerated would be reported as an internal error rather than
/// silently classified; this cannot happen because a degenerate lift forces
/// proportional exponent vectors, which the dependence check catches first.
pub fn classify_pair(n: &BigUint, m: &BigUint) -> Result<PairClassification> {
    check_pair(m, n)?;
    if let Some((base, m_exponent, n_exponent)) = multiplicatively_dependent(m, n)? {
        return Ok(PairClassification::Dependent {
            base,
            m_exponent,
            n_exponent,
        });
    }
    let inverse_n = BigRational::new(BigUint::one().into(), n.clone().into());
    if is_far(&inverse_n, m)? {
        return Ok(PairClassification::Far(far_constant(&inverse_n, m)?));
    }
    let vectors = ExponentPair::new(m, n)?;
    let semi = make_semi_good(m, n)?;
    let (x, y) = lift_exponents(&vectors.powered(semi, 1), m, n)?;
    let m_exponent = semi * x;
    let n_exponent = y;
    let lifted = vectors.powered(m_exponent, n_exponent);
    if !lifted.is_good() {
        return Err(Error::Internal(format!(
            "lift ({m}^{m_exponent}, {n}^{n_exponent}) is not good; dependence screening failed"
        )));
    }
    if lifted.is_solvable() {
        return Err(Error::Internal(format!(
            "lifted good pair ({m}^{m_exponent}, {n}^{n_exponent}) claims to be solvable"
        )));
    }
    Ok(PairClassification::GoodLift {
        m_exponent,
        n_exponent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uint(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn exponent_pair_alignment() {
        let ep = exponent_pair(&uint(108), &uint(6)).unwrap();
        assert_eq!(ep.primes(), &[uint(2), uint(3)]);
        assert_eq!(ep.m_exponents(), &[2, 3]);
        assert_eq!(ep.n_exponents(), &[1, 1]);
        assert_eq!(ep.m_value(), uint(108));
        assert_eq!(ep.n_value(), uint(6));

        let ep = exponent_pair(&uint(4), &uint(2)).unwrap();
        assert_eq!(ep.primes(), &[uint(2)]);
        assert_eq!(ep.m_exponents(), &[2]);
        assert_eq!(ep.n_exponents(), &[1]);

        let ep = exponent_pair(&uint(18), &uint(12)).unwrap();
        assert_eq!(ep.m_exponents(), &[1, 2]);
        assert_eq!(ep.n_exponents(), &[2, 1]);

        // disjoint supports still align over the union
        let ep = exponent_pair(&uint(4), &uint(9)).unwrap();
        assert_eq!(ep.primes(), &[uint(2), uint(3)]);
        assert_eq!(ep.m_exponents(), &[2, 0]);
        assert_eq!(ep.n_exponents(), &[0, 2]);
    }

    #[test]
    fn solvability_examples() {
        let r = is_solvable(&uint(108), &uint(6)).unwrap();
        assert!(r.solvable);
        assert_eq!(r.min_level, Some(2));
        assert_eq!(r.k, Some(uint(3)));

        let r = is_solvable(&uint(108), &uint(36)).unwrap();
        assert!(!r.solvable);

        let r = is_solvable(&uint(4), &uint(2)).unwrap();
        assert!(r.solvable);
        assert_eq!(r.min_level, Some(2));
        assert_eq!(r.k, Some(uint(1)));
    }

    #[test]
    fn solvability_matches_exhaustive_search_small() {
        for m in 2u64..=40 {
            for n in 2u64..=40 {
                let closed = is_solvable(&uint(m), &uint(n)).unwrap();
                let mut found = None;
                let mut num = BigUint::one(); // m^(level-1)
                let mut den = uint(n); // n^level
                for level in 1u64..=60 {
                    if (&num % &den).is_zero() {
                        found = Some(level);
                        break;
                    }
                    num *= m;
                    den *= n;
                }
                assert_eq!(closed.solvable, found.is_some(), "m={m} n={n}");
                if let Some(level) = found {
                    assert_eq!(closed.min_level, Some(level), "m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn good_and_semi_good_examples() {
        assert!(is_good_pair(&uint(108), &uint(36)).unwrap());
        assert!(!is_semi_good_pair(&uint(108), &uint(36)).unwrap());

        assert!(is_semi_good_pair(&uint(108), &uint(6)).unwrap());
        assert!(!is_good_pair(&uint(108), &uint(6)).unwrap());

        // order matters
        assert!(!is_good_pair(&uint(36), &uint(108)).unwrap());
        assert!(!is_semi_good_pair(&uint(36), &uint(108)).unwrap());

        // (6, 3) is good: exponents tie at the prime 3
        assert!(is_good_pair(&uint(6), &uint(3)).unwrap());
    }

    #[test]
    fn value_route_matches_vector_route() {
        for m in 2u64..=160 {
            for n in 2u64..=160 {
                let ep = ExponentPair::new(&uint(m), &uint(n)).unwrap();
                assert_eq!(
                    is_good_pair(&uint(m), &uint(n)).unwrap(),
                    ep.is_good(),
                    "good m={m} n={n}"
                );
                assert_eq!(
                    is_semi_good_pair(&uint(m), &uint(n)).unwrap(),
                    ep.is_semi_good(),
                    "semi m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn make_semi_good_examples() {
        assert_eq!(make_semi_good(&uint(18), &uint(12)).unwrap(), 3);
        assert_eq!(make_semi_good(&uint(108), &uint(6)).unwrap(), 1);
        assert_eq!(make_semi_good(&uint(4), &uint(2)).unwrap(), 1);
        // 5 does not divide 10... the other way: n = 10 has prime 5, m = 4 lacks it
        assert!(matches!(
            make_semi_good(&uint(4), &uint(10)),
            Err(Error::FarPrime { .. })
        ));
    }

    #[test]
    fn make_semi_good_is_minimal() {
        for m in 2u64..=100 {
            for n in 2u64..=100 {
                let Ok(e) = make_semi_good(&uint(m), &uint(n)) else {
                    continue;
                };
                let ep = ExponentPair::new(&uint(m), &uint(n)).unwrap();
                assert!(ep.powered(e, 1).is_semi_good(), "m={m} n={n} e={e}");
                if e > 1 {
                    assert!(!ep.powered(e - 1, 1).is_semi_good(), "m={m} n={n} e={e}");
                }
            }
        }
    }

    #[test]
    fn lift_examples() {
        assert_eq!(lift_to_good(&uint(108), &uint(6)).unwrap(), (1, 2));

        // 18³ = 5832; exponent vectors (3, 6) vs (2, 1), max ratio 2/3
        assert_eq!(lift_to_good(&uint(5832), &uint(12)).unwrap(), (2, 3));
        let ep = ExponentPair::new(&uint(5832), &uint(12)).unwrap();
        let lifted = ep.powered(2, 3);
        assert!(lifted.is_good());
        // the tied prime in the lift is 2: 6·2 = 2·... exponents 6 and 6
        assert_eq!(lifted.m_exponents()[0], lifted.n_exponents()[0]);

        // dependent semi-good pair: the lift degenerates to equal powers
        assert_eq!(lift_to_good(&uint(4), &uint(2)).unwrap(), (1, 2));
        let ep = ExponentPair::new(&uint(4), &uint(2)).unwrap();
        let lifted = ep.powered(1, 2);
        assert_eq!(lifted.m_value(), lifted.n_value());
        assert!(!lifted.is_good());

        assert!(matches!(
            lift_to_good(&uint(36), &uint(108)),
            Err(Error::NotSemiGood { .. })
        ));
    }

    #[test]
    fn classification_examples() {
        // (n=3, m=5): 3 has a prime not dividing 5
        match classify_pair(&uint(3), &uint(5)).unwrap() {
            PairClassification::Far(report) => {
                assert!(report.is_far);
                assert_eq!(
                    report.constant,
                    Some(BigRational::new(1.into(), 3.into()))
                );
            }
            other => panic!("expected far, got {other:?}"),
        }

        // (n=12, m=18): semi-good exponent 3, then lift (2, 3)
        match classify_pair(&uint(12), &uint(18)).unwrap() {
            PairClassification::GoodLift {
                m_exponent,
                n_exponent,
            } => {
                assert_eq!((m_exponent, n_exponent), (6, 3));
                let lifted = ExponentPair::new(&uint(18), &uint(12))
                    .unwrap()
                    .powered(6, 3);
                assert!(lifted.is_good());
            }
            other => panic!("expected good lift, got {other:?}"),
        }

        match classify_pair(&uint(2), &uint(4)).unwrap() {
            PairClassification::Dependent {
                base,
                m_exponent,
                n_exponent,
            } => {
                assert_eq!(base, uint(2));
                assert_eq!((m_exponent, n_exponent), (2, 1));
            }
            other => panic!("expected dependent, got {other:?}"),
        }
    }

    #[test]
    fn dependence_is_symmetric_in_classification() {
        for n in 2u64..=60 {
            for m in 2u64..=60 {
                let fwd = matches!(
                    classify_pair(&uint(n), &uint(m)).unwrap(),
                    PairClassification::Dependent { .. }
                );
                let rev = matches!(
                    classify_pair(&uint(m), &uint(n)).unwrap(),
                    PairClassification::Dependent { .. }
                );
                assert_eq!(fwd, rev, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn far_is_ordered_not_symmetric() {
        // (n=6, m=2): 1/6 is 2-far. (n=2, m=6): 1/2 is not 6-far, and the
        // pair lifts instead.
        assert!(matches!(
            classify_pair(&uint(6), &uint(2)).unwrap(),
            PairClassification::Far(_)
        ));
        assert!(matches!(
            classify_pair(&uint(2), &uint(6)).unwrap(),
            PairClassification::GoodLift { .. }
        ));
    }
}
