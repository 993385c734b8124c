//! Explicit divergence witnesses: pairs of base-`m` sibling intervals whose
//! exact mass ratio under the base-`n` measure grows without bound.
//!
//! Two routes produce witnesses, matching the two non-dependent outcomes of
//! [`classify_pair`]:
//!
//! * **Far route** — when `1/n` is `m`-far, the weights on the two sides of
//!   the anchor point `level + 1/n` differ by a factor `a·b^level`, and the
//!   anchor stays a fixed proportion away from every base-`m` grid point.
//!   Locating a deep base-`m` interval around the anchor and comparing its
//!   leftmost and rightmost children yields a ratio of at least
//!   `min(C·m, 1) · a·b^level` with `C` the exact far constant. If the
//!   anchor keeps falling into rightmost children the located interval is
//!   pushed down one level at a time; the far constant bounds that descent.
//!
//! * **Good-pair route** — for a good pair `(M, N)`, the point
//!   `(t-1) + 1/N^level` with `t` the exact floor of `level·log M / log N`
//!   is an endpoint of level-`level` base-`M` intervals but (because good
//!   pairs are unsolvable) not of level-`(level-1)` ones, so the two
//!   intervals flanking it are siblings. Their masses sit inside chains of
//!   the base-`N` construction and have the exact ratio `a · b^(t - level)`.
//!
//! Pairs that are multiplicatively dependent admit no witness at all; both
//! routes reject them.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use std::fmt;

use crate::adic::{locate, AdicInterval, Position};
use crate::exact::{floor_log_ratio, multiplicatively_dependent, pow, rational_power};
use crate::farness::{far_constant, is_far};
use crate::measure::{measure_interval, MeasureSpec};
use crate::pairs::{classify_pair, is_good_pair, PairClassification};
use crate::{Error, Result};

/// How a witness was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// Far route, anchor in a middle child: the ratio is exactly
    /// `a·b^level`.
    AnchorInMiddle,
    /// Far route, anchor in the leftmost child: the far constant bounds the
    /// ratio from below.
    AnchorInLeftmost,
    /// Far route after descending through `depth` rightmost children.
    RightmostDescent { depth: u64 },
    /// Good-pair route.
    GoodPair,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::AnchorInMiddle => write!(f, "anchor-in-middle"),
            CaseTag::AnchorInLeftmost => write!(f, "anchor-in-leftmost"),
            CaseTag::RightmostDescent { depth } => write!(f, "rightmost-descent-{depth}"),
            CaseTag::GoodPair => write!(f, "good-pair"),
        }
    }
}

/// A pair of base-`m` sibling intervals with their exact masses under the
/// measure, the normalized mass ratio, and the guaranteed lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivergenceWitness {
    pub level: u64,
    pub case: CaseTag,
    pub left: AdicInterval,
    pub right: AdicInterval,
    pub left_mass: BigRational,
    pub right_mass: BigRational,
    /// `max(left_mass/right_mass, right_mass/left_mass)`, always ≥ 1.
    pub ratio: BigRational,
    pub lower_bound: BigRational,
}

impl DivergenceWitness {
    /// The oriented ratio `left_mass / right_mass` (may be below 1).
    pub fn left_right_ratio(&self) -> BigRational {
        &self.left_mass / &self.right_mass
    }
}

fn normalize(raw: &BigRational) -> BigRational {
    let inverse = raw.recip();
    if *raw >= inverse {
        raw.clone()
    } else {
        inverse
    }
}

/// Far-route witness at `level ≥ 1` for a measure on `spec.base()` against
/// the target base `m`. Requires `1/spec.base()` to be `m`-far.
pub fn far_case_witness(
    spec: &MeasureSpec,
    m: &BigUint,
    level: u64,
) -> Result<DivergenceWitness> {
    if level < 1 {
        return Err(Error::LevelTooSmall { got: level, min: 1 });
    }
    if *m < BigUint::from(2u32) {
        return Err(Error::BaseTooSmall(m.clone()));
    }
    let n = spec.base();
    if let Some((base, _, _)) = multiplicatively_dependent(m, n)? {
        return Err(Error::DependentPair {
            m: m.clone(),
            n: n.clone(),
            base,
        });
    }
    let inverse_n = BigRational::new(BigInt::one(), BigInt::from(n.clone()));
    if !is_far(&inverse_n, m)? {
        return Err(Error::NotFar {
            n: n.clone(),
            m: m.clone(),
        });
    }

    // smallest level' with m^level' > n^(level+1); the located interval then
    // fits inside [anchor - n^-(level+1), anchor + n^-(level+1))
    let deep = floor_log_ratio(n, level + 1, m)? + 1;
    let anchor = BigRational::from_integer(BigInt::from(level)) + &inverse_n;
    let mut cell = locate(&anchor, m, deep as i64)?;
    let mut depth = 0u64;
    let final_position = loop {
        let child = locate(&anchor, m, cell.level() + 1)?;
        match child.position() {
            Position::Rightmost => {
                cell = child;
                depth += 1;
                if depth > deep + 64 {
                    return Err(Error::Internal(format!(
                        "rightmost descent for base {n} against {m} at level {level} did not terminate"
                    )));
                }
            }
            pos => break pos,
        }
    };
    let case = if depth > 0 {
        CaseTag::RightmostDescent { depth }
    } else if final_position == Position::Leftmost {
        CaseTag::AnchorInLeftmost
    } else {
        CaseTag::AnchorInMiddle
    };

    let left = cell.leftmost_child();
    let right = cell.rightmost_child();
    let left_mass = measure_interval(&left.left_end(), &left.right_end(), spec)?;
    let right_mass = measure_interval(&right.left_end(), &right.right_end(), spec)?;

    let constant = far_constant(&inverse_n, m)?
        .constant
        .ok_or_else(|| Error::Internal("far predicate and far constant disagree".into()))?;
    let scaled = &constant * BigRational::from_integer(BigInt::from(m.clone()));
    let capped = scaled.min(BigRational::one());
    let lower_bound =
        capped * spec.left_weight() * rational_power(spec.right_weight(), level);

    let oriented = &left_mass / &right_mass;
    if oriented < lower_bound {
        return Err(Error::Internal(format!(
            "witness ratio {oriented} fell below its guaranteed bound {lower_bound}"
        )));
    }
    Ok(DivergenceWitness {
        level,
        case,
        ratio: normalize(&oriented),
        left,
        right,
        left_mass,
        right_mass,
        lower_bound,
    })
}

/// Good-pair-route witness at `level ≥ 2` for a good pair `(M, N)`: builds
/// the measure with base `N` and weights `(left_weight, right_weight)` and
/// measures the two base-`M` siblings flanking `(t-1) + 1/N^level`.
///
/// The returned oriented ratio is exactly
/// `left_weight · right_weight^(t - level)`, which the function re-verifies
/// against the measured masses.
pub fn nonfar_case_witness(
    big_m: &BigUint,
    big_n: &BigUint,
    left_weight: &BigRational,
    right_weight: &BigRational,
    level: u64,
) -> Result<DivergenceWitness> {
    if level < 2 {
        return Err(Error::LevelTooSmall { got: level, min: 2 });
    }
    if *big_n < BigUint::from(2u32) {
        return Err(Error::BaseTooSmall(big_n.clone()));
    }
    if *big_n == BigUint::from(2u32) {
        return Err(Error::UnliftedBaseTwo);
    }
    if !is_good_pair(big_m, big_n)? {
        return Err(Error::NotGoodPair {
            m: big_m.clone(),
            n: big_n.clone(),
        });
    }
    let spec = MeasureSpec::new(big_n.clone(), left_weight.clone(), right_weight.clone())?;

    let t = floor_log_ratio(big_m, level, big_n)?;
    // N^t ≤ M^level keeps both flanking intervals inside single
    // constant-density chains of the base-N construction
    if pow(big_n, t) > pow(big_m, level) {
        return Err(Error::Internal("floor_log_ratio bracket failed".into()));
    }
    // anchor = (t-1) + 1/N^level = index / M^level, an exact base-M grid
    // point because N divides M
    let quotient = big_m / big_n;
    let anchor_index = BigInt::from(t - 1) * BigInt::from(pow(big_m, level))
        + BigInt::from(pow(&quotient, level));
    let right = AdicInterval::new(big_m.clone(), level as i64, anchor_index.clone())?;
    let left = AdicInterval::new(big_m.clone(), level as i64, anchor_index - 1)?;
    if !left.are_siblings(&right)? {
        // would mean the pair was solvable after all
        return Err(Error::Internal(format!(
            "good pair ({big_m}, {big_n}) produced non-sibling flanks at level {level}"
        )));
    }

    let left_mass = measure_interval(&left.left_end(), &left.right_end(), &spec)?;
    let right_mass = measure_interval(&right.left_end(), &right.right_end(), &spec)?;
    let oriented = &left_mass / &right_mass;
    let expected = left_weight * rational_power(right_weight, t - level);
    if oriented != expected {
        return Err(Error::Internal(format!(
            "measured flank ratio {oriented} differs from the closed form {expected}"
        )));
    }
    Ok(DivergenceWitness {
        level,
        case: CaseTag::GoodPair,
        ratio: normalize(&oriented),
        left,
        right,
        left_mass,
        right_mass,
        lower_bound: expected,
    })
}

/// A table of witnesses for one base pair, produced by the route the
/// classifier picked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepResult {
    pub classification: PairClassification,
    /// Base the measure lives on: `n` (promoted if 2) on the far route,
    /// `n^y` on the good-pair route.
    pub measure_base: BigUint,
    /// Base whose doubling fails: `m` on the far route, `m^x` on the
    /// good-pair route.
    pub target_base: BigUint,
    pub witnesses: Vec<DivergenceWitness>,
}

/// Runs the classifier on `(n, m)` and produces a witness for every entry of
/// `levels`. Dependent pairs are rejected with the common base.
///
/// Far-route sweeps need `levels ≥ 1`, good-pair sweeps `levels ≥ 2`.
pub fn divergence_sweep(
    n: &BigUint,
    m: &BigUint,
    left_weight: &BigRational,
    right_weight: &BigRational,
    levels: &[u64],
) -> Result<SweepResult> {
    if levels.is_empty() {
        return Err(Error::EmptyLevels);
    }
    let classification = classify_pair(n, m)?;
    match &classification {
        PairClassification::Dependent { base, .. } => Err(Error::DependentPair {
            m: m.clone(),
            n: n.clone(),
            base: base.clone(),
        }),
        PairClassification::Far(_) => {
            let spec = MeasureSpec::new(n.clone(), left_weight.clone(), right_weight.clone())?;
            let witnesses = levels
                .iter()
                .map(|&level| far_case_witness(&spec, m, level))
                .collect::<Result<Vec<_>>>()?;
            Ok(SweepResult {
                measure_base: spec.base().clone(),
                target_base: m.clone(),
                classification,
                witnesses,
            })
        }
        PairClassification::GoodLift {
            m_exponent,
            n_exponent,
        } => {
            let lifted_m = pow(m, *m_exponent);
            let lifted_n = pow(n, *n_exponent);
            let witnesses = levels
                .iter()
                .map(|&level| {
                    nonfar_case_witness(&lifted_m, &lifted_n, left_weight, right_weight, level)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(SweepResult {
                measure_base: lifted_n,
                target_base: lifted_m,
                classification,
                witnesses,
            })
        }
    }
}

/// A dependence found while searching for a separating base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependenceWitness {
    pub n: BigUint,
    pub m: BigUint,
    pub common_base: BigUint,
}

/// Classification and witness sample against one target base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetReport {
    pub target: BigUint,
    pub sweep: SweepResult,
}

/// Outcome of [`separate_families`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationReport {
    pub separable: bool,
    /// Index into the `ns` list of the separating base, when one exists.
    pub chosen_index: Option<usize>,
    pub chosen_base: Option<BigUint>,
    /// One report per target base, for the chosen base.
    pub targets: Vec<TargetReport>,
    /// When inseparable: for every candidate base, a target it shares a
    /// power base with.
    pub dependencies: Vec<DependenceWitness>,
}

/// Searches `ns` for a base that is multiplicatively independent of every
/// base in `ms`, and demonstrates the separation with witness sweeps over
/// `sample_levels` (use levels ≥ 2 so both routes accept them).
///
/// When every candidate is dependent on some target no separation exists;
/// the report lists one dependence per candidate.
pub fn separate_families(
    ns: &[BigUint],
    ms: &[BigUint],
    sample_levels: &[u64],
    left_weight: &BigRational,
    right_weight: &BigRational,
) -> Result<SeparationReport> {
    if ns.is_empty() || ms.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mut dependencies = Vec::new();
    let mut chosen = None;
    for (index, n) in ns.iter().enumerate() {
        let mut blocked = None;
        for m in ms {
            if let Some((base, _, _)) = multiplicatively_dependent(m, n)? {
                blocked = Some(DependenceWitness {
                    n: n.clone(),
                    m: m.clone(),
                    common_base: base,
                });
                break;
            }
        }
        match blocked {
            Some(dep) => dependencies.push(dep),
            None => {
                chosen = Some(index);
                break;
            }
        }
    }
    let Some(index) = chosen else {
        return Ok(SeparationReport {
            separable: false,
            chosen_index: None,
            chosen_base: None,
            targets: Vec::new(),
            dependencies,
        });
    };
    let n = &ns[index];
    let targets = ms
        .iter()
        .map(|m| {
            divergence_sweep(n, m, left_weight, right_weight, sample_levels).map(|sweep| {
                TargetReport {
                    target: m.clone(),
                    sweep,
                }
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SeparationReport {
        separable: true,
        chosen_index: Some(index),
        chosen_base: Some(n.clone()),
        targets,
        dependencies: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational_pow;
    use num_traits::Zero;

    fn uint(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn default_spec(base: u64) -> MeasureSpec {
        MeasureSpec::new(uint(base), rat(1, 2), rat(3, 2)).unwrap()
    }

    #[test]
    fn far_witness_level_one_anchor_in_middle() {
        let spec = default_spec(3);
        let w = far_case_witness(&spec, &uint(5), 1).unwrap();
        assert_eq!(w.case, CaseTag::AnchorInMiddle);
        // located cell is [33/25, 34/25); its leftmost child has density ab,
        // its rightmost density 1
        assert_eq!(w.left.parent().left_end(), rat(33, 25));
        assert_eq!(w.left_right_ratio(), rat(3, 4)); // a·b
        assert_eq!(w.ratio, rat(4, 3)); // normalized
        assert!(w.left.are_siblings(&w.right).unwrap());
        // with C = 1/3, min(C·5, 1) = 1, so the bound is a·b exactly
        assert_eq!(w.lower_bound, rat(3, 4));
    }

    #[test]
    fn far_witness_respects_bound_over_levels() {
        let spec = default_spec(3);
        for level in 1..=12 {
            let w = far_case_witness(&spec, &uint(5), level).unwrap();
            assert!(w.left_right_ratio() >= w.lower_bound);
            assert!(w.ratio >= w.lower_bound);
            assert!(w.left.are_siblings(&w.right).unwrap());
            // (3, 5) anchors always land in middle children
            assert_eq!(w.case, CaseTag::AnchorInMiddle);
        }
    }

    #[test]
    fn far_witness_other_cases_occur() {
        // digits of 1/7 in base 3 cycle 0,1,0,2,1,2 — level 2 checks digit 7
        // (a 0: leftmost) and level 4 checks digit 10 (a 2: descend once)
        let spec = default_spec(7);
        let w = far_case_witness(&spec, &uint(3), 2).unwrap();
        assert_eq!(w.case, CaseTag::AnchorInLeftmost);
        assert!(w.left_right_ratio() >= w.lower_bound);

        let w = far_case_witness(&spec, &uint(3), 4).unwrap();
        assert_eq!(w.case, CaseTag::RightmostDescent { depth: 1 });
        assert!(w.left_right_ratio() >= w.lower_bound);
    }

    #[test]
    fn far_witness_rejects_bad_inputs() {
        let spec = default_spec(3);
        assert!(matches!(
            far_case_witness(&spec, &uint(5), 0),
            Err(Error::LevelTooSmall { .. })
        ));
        // 9 and 3 share the base 3
        assert!(matches!(
            far_case_witness(&spec, &uint(9), 3),
            Err(Error::DependentPair { .. })
        ));
        // 1/6 is not 12-far (and (12, 6) is not dependent)
        let spec6 = default_spec(6);
        assert!(matches!(
            far_case_witness(&spec6, &uint(12), 3),
            Err(Error::NotFar { .. })
        ));
    }

    #[test]
    fn nonfar_witness_small_good_pair() {
        // (12, 6): exponents tie at the prime 3
        let w = nonfar_case_witness(&uint(12), &uint(6), &rat(1, 2), &rat(3, 2), 2).unwrap();
        // t = 2: 6² ≤ 12² < 6³, so the oriented ratio is a·b⁰ = a
        assert_eq!(w.left_right_ratio(), rat(1, 2));
        assert_eq!(w.ratio, rat(2, 1));
        assert_eq!(w.case, CaseTag::GoodPair);
        assert!(w.left.are_siblings(&w.right).unwrap());

        // level 3: t = 4 (6⁴ = 1296 ≤ 1728 < 7776), ratio a·b
        let w = nonfar_case_witness(&uint(12), &uint(6), &rat(1, 2), &rat(3, 2), 3).unwrap();
        assert_eq!(w.left_right_ratio(), rat(3, 4));
    }

    #[test]
    fn nonfar_witness_printed_pair() {
        // (108, 36), level 10: t = 13, oriented ratio a·b³
        let w = nonfar_case_witness(&uint(108), &uint(36), &rat(1, 2), &rat(3, 2), 10).unwrap();
        assert_eq!(
            w.left_right_ratio(),
            rat(1, 2) * rational_power(&rat(3, 2), 3)
        );
        assert!(w.left.are_siblings(&w.right).unwrap());
    }

    #[test]
    fn nonfar_witness_flanks_enclosed_by_base_n_chains() {
        for level in [2u64, 3, 5, 8] {
            let w =
                nonfar_case_witness(&uint(108), &uint(36), &rat(1, 2), &rat(3, 2), level).unwrap();
            let t = floor_log_ratio(&uint(108), level, &uint(36)).unwrap();
            let anchor = w.right.left_end();
            let chain_len = rational_pow(&uint(36), -(t as i64));
            // K ⊆ [anchor − 36^−t, anchor), L ⊆ [anchor, anchor + 36^−t)
            assert!(w.left.left_end() >= &anchor - &chain_len);
            assert!(w.left.right_end() == anchor);
            assert!(w.right.right_end() <= &anchor + &chain_len);
        }
    }

    #[test]
    fn nonfar_flank_masses_match_cell_enumeration() {
        // Third route for the flank masses: sum density · overlap over the
        // explicit cell list of the unit interval holding the anchor.
        use crate::measure::{overlap_mass, unit_cells};
        let pairs = [(12u64, 6u64), (6, 3), (108, 36)];
        for (m, n) in pairs {
            for level in [2u64, 3] {
                let w =
                    nonfar_case_witness(&uint(m), &uint(n), &rat(1, 2), &rat(3, 2), level).unwrap();
                let spec = default_spec(n);
                let t = floor_log_ratio(&uint(m), level, &uint(n)).unwrap();
                let cells = unit_cells(t - 1, &spec);
                let left_oracle = overlap_mass(&cells, &w.left.left_end(), &w.left.right_end());
                let right_oracle = overlap_mass(&cells, &w.right.left_end(), &w.right.right_end());
                assert_eq!(w.left_mass, left_oracle, "m={m} n={n} level={level}");
                assert_eq!(w.right_mass, right_oracle, "m={m} n={n} level={level}");
            }
        }
    }

    #[test]
    fn nonfar_witness_rejects_bad_inputs() {
        assert!(matches!(
            nonfar_case_witness(&uint(12), &uint(6), &rat(1, 2), &rat(3, 2), 1),
            Err(Error::LevelTooSmall { .. })
        ));
        // (108, 6) is semi-good but not good
        assert!(matches!(
            nonfar_case_witness(&uint(108), &uint(6), &rat(1, 2), &rat(3, 2), 4),
            Err(Error::NotGoodPair { .. })
        ));
        // (6, 2) is good but the measure base would be 2
        assert!(matches!(
            nonfar_case_witness(&uint(6), &uint(2), &rat(1, 2), &rat(3, 2), 4),
            Err(Error::UnliftedBaseTwo)
        ));
    }

    #[test]
    fn nonfar_witness_handles_huge_lifted_bases() {
        // classify(n=128, m=192) lifts to (192^14, 128^12); both exceed u64
        let big_m = pow(&uint(192), 14);
        let big_n = pow(&uint(128), 12);
        assert!(is_good_pair(&big_m, &big_n).unwrap());
        let w = nonfar_case_witness(&big_m, &big_n, &rat(1, 2), &rat(3, 2), 2).unwrap();
        let t = floor_log_ratio(&big_m, 2, &big_n).unwrap();
        assert_eq!(
            w.left_right_ratio(),
            rat(1, 2) * rational_power(&rat(3, 2), t - 2)
        );
    }

    #[test]
    fn sweep_routes_by_classification() {
        let levels: Vec<u64> = (1..=10).collect();
        let far = divergence_sweep(&uint(3), &uint(5), &rat(1, 2), &rat(3, 2), &levels).unwrap();
        assert!(matches!(far.classification, PairClassification::Far(_)));
        assert_eq!(far.measure_base, uint(3));
        assert_eq!(far.target_base, uint(5));
        // oriented ratios a·b^level increase strictly
        let oriented: Vec<BigRational> = far
            .witnesses
            .iter()
            .map(|w| w.left_right_ratio())
            .collect();
        for pair in oriented.windows(2) {
            assert!(pair[0] < pair[1]);
        }
        // normalized ratios are non-decreasing beyond the first entry
        let normalized: Vec<BigRational> =
            far.witnesses.iter().map(|w| w.ratio.clone()).collect();
        for pair in normalized[1..].windows(2) {
            assert!(pair[0] <= pair[1]);
        }

        let levels: Vec<u64> = (2..=10).collect();
        let lifted =
            divergence_sweep(&uint(12), &uint(18), &rat(1, 2), &rat(3, 2), &levels).unwrap();
        assert!(matches!(
            lifted.classification,
            PairClassification::GoodLift {
                m_exponent: 6,
                n_exponent: 3
            }
        ));
        assert_eq!(lifted.measure_base, uint(1728)); // 12³
        assert_eq!(lifted.target_base, uint(34_012_224)); // 18⁶
        for w in &lifted.witnesses {
            assert!(w.ratio >= BigRational::one());
            assert!(!w.left_mass.is_zero() && !w.right_mass.is_zero());
        }

        assert!(matches!(
            divergence_sweep(&uint(2), &uint(4), &rat(1, 2), &rat(3, 2), &[1, 2]),
            Err(Error::DependentPair { .. })
        ));
        assert!(matches!(
            divergence_sweep(&uint(3), &uint(5), &rat(1, 2), &rat(3, 2), &[]),
            Err(Error::EmptyLevels)
        ));
    }

    #[test]
    fn sweep_succeeds_across_small_grid() {
        // every independent pair must yield witnesses with no internal
        // invariant (far bound, descent cap, lift goodness) tripping
        let a = rat(1, 2);
        let b = rat(3, 2);
        for n in 2u64..=40 {
            for m in 2u64..=40 {
                if multiplicatively_dependent(&uint(m), &uint(n))
                    .unwrap()
                    .is_some()
                {
                    continue;
                }
                let sweep = divergence_sweep(&uint(n), &uint(m), &a, &b, &[2, 3])
                    .unwrap_or_else(|e| panic!("n={n} m={m}: {e}"));
                for w in &sweep.witnesses {
                    assert!(w.ratio >= BigRational::one());
                    assert!(w.left_right_ratio() >= w.lower_bound, "n={n} m={m}");
                    assert!(w.left.are_siblings(&w.right).unwrap());
                }
            }
        }
    }

    #[test]
    fn separation_reports() {
        let a = rat(1, 2);
        let b = rat(3, 2);

        let report = separate_families(&[uint(3)], &[uint(2)], &[2, 3, 4], &a, &b).unwrap();
        assert!(report.separable);
        assert_eq!(report.chosen_index, Some(0));
        assert!(matches!(
            report.targets[0].sweep.classification,
            PairClassification::Far(_)
        ));

        let report = separate_families(&[uint(4)], &[uint(2)], &[2, 3], &a, &b).unwrap();
        assert!(!report.separable);
        assert_eq!(report.dependencies.len(), 1);
        assert_eq!(report.dependencies[0].common_base, uint(2));

        let report =
            separate_families(&[uint(12)], &[uint(18), uint(2)], &[2, 4, 6], &a, &b).unwrap();
        assert!(report.separable);
        assert_eq!(report.targets.len(), 2);
        assert!(matches!(
            report.targets[0].sweep.classification,
            PairClassification::GoodLift { .. }
        ));
        assert!(matches!(
            report.targets[1].sweep.classification,
            PairClassification::Far(_)
        ));

        assert!(matches!(
            separate_families(&[], &[uint(2)], &[2], &a, &b),
            Err(Error::EmptyFamily)
        ));
    }
}
