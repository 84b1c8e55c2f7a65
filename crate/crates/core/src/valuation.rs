//! p-adic valuations of rationals, factorial valuations, and multinomials.
//!
//! The base field is fixed to the rationals carrying the valuation
//! `ord_p`, the exponent of `p` in the prime factorization; `|0| = 0` is
//! represented by [`Valuation::Infinite`]. Membership in the ring of
//! integers is the predicate `ord_p >= 0`, so every norm inequality in this
//! crate is stated at valuation level.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::Rat;

/// Divisors are tried up to this bound when validating a prime, which makes
/// the check complete for all `p <= TRIAL_DIVISION_BOUND^2`.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000;

/// Value of `ord_p`: an integer, or infinity exactly for the zero element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// The integrality predicate `ord_p >= 0` (membership in Δ).
    pub fn is_nonnegative(self) -> bool {
        match self {
            Valuation::Finite(v) => v >= 0,
            Valuation::Infinite => true,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add<i64> for Valuation {
    type Output = Valuation;

    fn add(self, shift: i64) -> Valuation {
        match self {
            Valuation::Finite(v) => Valuation::Finite(v + shift),
            Valuation::Infinite => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Validate a caller-supplied prime by trial division.
pub fn check_prime(p: u64) -> Result<(), Error> {
    if p < 2 {
        return Err(Error::NotPrime(p));
    }
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_BOUND {
        match d.checked_mul(d) {
            Some(sq) if sq <= p => {
                if p % d == 0 {
                    return Err(Error::NotPrime(p));
                }
            }
            _ => break,
        }
        d += 1;
    }
    Ok(())
}

fn ord_bigint(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p_big = BigInt::from(p);
    let mut count = 0i64;
    let mut current = n.clone();
    loop {
        let (q, r) = num_integer::Integer::div_rem(&current, &p_big);
        if !r.is_zero() {
            return count;
        }
        count += 1;
        current = q;
    }
}

/// `ord_p` of a rational: the exponent of `p` in the numerator minus the
/// exponent in the denominator, infinite for zero.
pub fn ord(value: &Rat, p: u64) -> Result<Valuation, Error> {
    check_prime(p)?;
    if value.is_zero() {
        return Ok(Valuation::Infinite);
    }
    Ok(Valuation::Finite(
        ord_bigint(value.numer(), p) - ord_bigint(value.denom(), p),
    ))
}

/// Sum of the base-`p` digits of `n`.
pub fn digit_sum(n: u64, p: u64) -> Result<u64, Error> {
    check_prime(p)?;
    let mut rest = n;
    let mut sum = 0;
    while rest > 0 {
        sum += rest % p;
        rest /= p;
    }
    Ok(sum)
}

/// `ord_p(n!)` via the digit-sum formula `(n - S_n)/(p - 1)`.
///
/// Agrees with the Legendre sum `Σ floor(n/p^i)`; the test suite checks the
/// two routes against each other.
pub fn ord_factorial(n: u64, p: u64) -> Result<i64, Error> {
    let s = digit_sum(n, p)?;
    debug_assert_eq!((n - s) % (p - 1), 0);
    Ok(((n - s) / (p - 1)) as i64)
}

/// The multinomial coefficient `(Σ parts)! / Π parts_i!` as an exact integer,
/// accumulated as a product of binomials so every intermediate step is
/// integral.
pub fn multinomial(parts: &[u64]) -> Result<BigUint, Error> {
    if parts.is_empty() {
        return Err(Error::InvalidArgument(
            "multinomial requires at least one part".into(),
        ));
    }
    let mut result = BigUint::one();
    let mut total = 0u64;
    for &part in parts {
        for i in 1..=part {
            total += 1;
            result = result * BigUint::from(total) / BigUint::from(i);
        }
    }
    Ok(result)
}
