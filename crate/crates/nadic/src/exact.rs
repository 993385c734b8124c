//! Arbitrary-precision helpers: factorization, exact logarithm floors, and
//! multiplicative-dependence detection.
//!
//! Numbers are plain [`BigUint`] / [`BigRational`] values; this module adds
//! the number theory the rest of the crate is built on. No operation here
//! ever touches floating point: `floor_log_ratio` replaces `log` with exact
//! big-integer powering, which is what keeps every downstream quantity exact.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

use crate::{Error, Result};

static FACTOR_BOUND: std::sync::OnceLock<BigUint> = std::sync::OnceLock::new();

/// Ceiling for [`factorize`] inputs; values at or above it are rejected with
/// a capacity error. Defaults to `2^63` (inputs below it fit machine words
/// during trial division) unless overridden by [`set_factor_bound`].
pub fn default_factor_bound() -> BigUint {
    FACTOR_BOUND
        .get()
        .cloned()
        .unwrap_or_else(|| BigUint::one() << 63)
}

/// Overrides the process-wide factorization bound. Takes effect once;
/// returns false when a bound was already set.
pub fn set_factor_bound(bound: BigUint) -> bool {
    FACTOR_BOUND.set(bound).is_ok()
}

/// A number written as an ascending product of prime powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    factors: Vec<(BigUint, u32)>,
}

impl PrimeFactorization {
    /// The `(prime, exponent)` list, primes strictly ascending, exponents ≥ 1.
    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    /// Multiplies the prime powers back together.
    pub fn product(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    /// The exponent of `prime`, zero when `prime` does not divide the number.
    pub fn exponent_of(&self, prime: &BigUint) -> u32 {
        self.factors
            .iter()
            .find(|(p, _)| p == prime)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// Product of the distinct primes.
    pub fn radical(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (p, _)| acc * p)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

impl fmt::Display for PrimeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factorizes `x ≥ 1` by trial division, with the default input bound.
pub fn factorize(x: &BigUint) -> Result<PrimeFactorization> {
    factorize_with_bound(x, &default_factor_bound())
}

/// Factorizes `x ≥ 1` by trial division, rejecting inputs `≥ bound`.
pub fn factorize_with_bound(x: &BigUint, bound: &BigUint) -> Result<PrimeFactorization> {
    if x.is_zero() {
        return Err(Error::FactorizeZero);
    }
    if x >= bound {
        return Err(Error::FactorizationBound {
            value: x.clone(),
            bound: bound.clone(),
        });
    }

    let mut remaining = x.clone();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let strip = |rem: &mut BigUint, p: &BigUint| -> u32 {
        let mut e = 0;
        while (&*rem % p).is_zero() {
            *rem /= p;
            e += 1;
        }
        e
    };
    for p in [2u32, 3] {
        let p = BigUint::from(p);
        let e = strip(&mut remaining, &p);
        if e > 0 {
            factors.push((p, e));
        }
    }
    // Candidates 6k±1, ascending, so the factor list comes out sorted. The
    // cofactor after stripping 2 and 3 fits u128 whenever the input is below
    // the default bound; larger smooth inputs take the big-integer path.
    match remaining.to_u128() {
        Some(mut rem) => {
            let mut candidate: u128 = 5;
            while candidate.checked_mul(candidate).is_some_and(|sq| sq <= rem) {
                for q in [candidate, candidate + 2] {
                    let mut e = 0;
                    while rem % q == 0 {
                        rem /= q;
                        e += 1;
                    }
                    if e > 0 {
                        factors.push((BigUint::from(q), e));
                    }
                }
                candidate += 6;
            }
            if rem > 1 {
                factors.push((BigUint::from(rem), 1));
            }
        }
        None => {
            let mut candidate = BigUint::from(5u32);
            let six = BigUint::from(6u32);
            let two = BigUint::from(2u32);
            while &candidate * &candidate <= remaining {
                for q in [candidate.clone(), &candidate + &two] {
                    let e = strip(&mut remaining, &q);
                    if e > 0 {
                        factors.push((q, e));
                    }
                }
                candidate += &six;
            }
            if !remaining.is_one() {
                factors.push((remaining, 1));
            }
        }
    }
    Ok(PrimeFactorization { factors })
}

/// Raises a big integer to a `u64` power.
pub fn pow(base: &BigUint, exp: u64) -> BigUint {
    num_traits::Pow::pow(base, exp)
}

/// Raises a rational to a `u64` power.
pub fn rational_power(value: &BigRational, exp: u64) -> BigRational {
    BigRational::new(
        num_traits::Pow::pow(value.numer(), exp),
        num_traits::Pow::pow(value.denom(), exp),
    )
}

/// `base^exp` as an exact rational, for possibly negative `exp`.
pub fn rational_pow(base: &BigUint, exp: i64) -> BigRational {
    let mag = pow(base, exp.unsigned_abs());
    let mag = BigInt::from(mag);
    if exp >= 0 {
        BigRational::from_integer(mag)
    } else {
        BigRational::new(BigInt::one(), mag)
    }
}

/// The largest `t ≥ 0` with `n^t ≤ m^ell`, found by binary search on exact
/// powers. Both bases must be at least 2.
pub fn floor_log_ratio(m: &BigUint, ell: u64, n: &BigUint) -> Result<u64> {
    let two = BigUint::from(2u32);
    if *m < two {
        return Err(Error::BaseTooSmall(m.clone()));
    }
    if *n < two {
        return Err(Error::BaseTooSmall(n.clone()));
    }
    let target = pow(m, ell);
    // n^t ≤ target forces t ≤ bits(target) since n ≥ 2.
    let mut lo = 0u64; // invariant: n^lo ≤ target
    let mut hi = target.bits() + 1; // invariant: n^hi > target
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if pow(n, mid) <= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Detects whether `m` and `n` are both integer powers of a common base.
///
/// Returns `(base, s, t)` with `m = base^s`, `n = base^t` and `base` minimal,
/// or `None` when no common base exists (equivalently, when the prime
/// exponent vectors of `m` and `n` are not proportional over an identical
/// support).
pub fn multiplicatively_dependent(
    m: &BigUint,
    n: &BigUint,
) -> Result<Option<(BigUint, u64, u64)>> {
    let two = BigUint::from(2u32);
    if *m < two {
        return Err(Error::BaseTooSmall(m.clone()));
    }
    if *n < two {
        return Err(Error::BaseTooSmall(n.clone()));
    }
    let fm = factorize(m)?;
    let fn_ = factorize(n)?;
    if fm.factors().len() != fn_.factors().len() {
        return Ok(None);
    }
    let mut m_exps = Vec::with_capacity(fm.factors().len());
    let mut n_exps = Vec::with_capacity(fm.factors().len());
    let mut primes = Vec::with_capacity(fm.factors().len());
    for ((p, e), (q, f)) in fm.factors().iter().zip(fn_.factors()) {
        if p != q {
            return Ok(None); // supports differ
        }
        primes.push(p.clone());
        m_exps.push(u64::from(*e));
        n_exps.push(u64::from(*f));
    }
    // Proportionality: e_i * f_0 == e_0 * f_i for every i.
    for i in 1..m_exps.len() {
        if m_exps[i] as u128 * n_exps[0] as u128 != m_exps[0] as u128 * n_exps[i] as u128 {
            return Ok(None);
        }
    }
    // Reduce the common ratio s : t, then peel off the shared content of the
    // per-prime multipliers so the base comes out minimal.
    let g = m_exps[0].gcd(&n_exps[0]);
    let s = m_exps[0] / g;
    let t = n_exps[0] / g;
    let multipliers: Vec<u64> = m_exps.iter().map(|e| e / s).collect();
    let content = multipliers.iter().fold(0u64, |acc, h| acc.gcd(h));
    let base = primes
        .iter()
        .zip(&multipliers)
        .fold(BigUint::one(), |acc, (p, h)| acc * pow(p, h / content));
    Ok(Some((base, content * s, content * t)))
}

/// Parses a rational from `"p/q"` or a plain integer literal.
pub fn parse_rational(text: &str) -> std::result::Result<BigRational, String> {
    let text = text.trim();
    let parse_int = |s: &str, what: &str| -> std::result::Result<BigInt, String> {
        s.parse::<BigInt>()
            .map_err(|_| format!("invalid {what} `{s}` (expected an integer)"))
    };
    match text.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(text, "number")?)),
        Some((num, den)) => {
            let num = parse_int(num, "numerator")?;
            let den = parse_int(den, "denominator")?;
            if den.is_zero() {
                return Err(format!("zero denominator in `{text}`"));
            }
            Ok(BigRational::new(num, den))
        }
    }
}

/// Renders `value` as a decimal with `sig` significant digits, by long
/// division. Display only: nothing in the crate computes with the result.
pub fn decimal_approx(value: &BigRational, sig: u32) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    let sign = if value.is_negative() { "-" } else { "" };
    let num = value.numer().abs().to_biguint().expect("abs is nonnegative");
    let den = value.denom().abs().to_biguint().expect("denom is positive");
    let ten = BigUint::from(10u32);

    // decimal exponent e with 10^e ≤ num/den < 10^(e+1)
    let mut exp: i64 = 0;
    let mut scaled_num = num.clone();
    let mut scaled_den = den.clone();
    while scaled_num < scaled_den {
        scaled_num *= &ten;
        exp -= 1;
    }
    while scaled_num >= &scaled_den * &ten {
        scaled_den *= &ten;
        exp += 1;
    }

    // Round num/den * 10^(sig-1-e) to the nearest integer; its digits are
    // the significand.
    let shift = i64::from(sig) - 1 - exp;
    let (mut top, mut bottom) = (num, den);
    if shift >= 0 {
        top *= pow(&ten, shift as u64);
    } else {
        bottom *= pow(&ten, (-shift) as u64);
    }
    let (q, r) = top.div_rem(&bottom);
    let mut digits = if &r * 2u32 >= bottom { q + 1u32 } else { q }.to_string();
    // Rounding can carry into an extra digit (e.g. 999.96 -> 1000).
    if digits.len() as u32 > sig {
        digits.truncate(sig as usize);
        exp += 1;
    }
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };

    // Plain notation for moderate exponents, scientific otherwise.
    if (-4..15).contains(&exp) {
        let mut out = String::new();
        if exp >= 0 {
            let int_len = (exp + 1) as usize;
            if digits.len() <= int_len {
                out.push_str(digits);
                out.push_str(&"0".repeat(int_len - digits.len()));
            } else {
                out.push_str(&digits[..int_len]);
                out.push('.');
                out.push_str(&digits[int_len..]);
            }
        } else {
            out.push_str("0.");
            out.push_str(&"0".repeat((-exp - 1) as usize));
            out.push_str(digits);
        }
        format!("{sign}{out}")
    } else {
        let (head, tail) = digits.split_at(1);
        if tail.is_empty() {
            format!("{sign}{head}e{exp}")
        } else {
            format!("{sign}{head}.{tail}e{exp}")
        }
    }
}
