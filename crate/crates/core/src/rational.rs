//! Exact rational arithmetic over arbitrary-precision integers.
//!
//! All coefficients in this crate are [`Rat`] values: reduced fractions with
//! a positive denominator and no rounding anywhere. The canonical text form
//! is `"num/den"` with the denominator omitted when it is 1 and the sign
//! carried by the numerator, e.g. `"-3/4"`, `"7"`, `"0"`.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse the canonical `"num/den"` form (denominator optional).
pub fn parse_rat(text: &str) -> Result<Rat, Error> {
    let bad = |_| Error::InvalidArgument(format!("malformed rational `{text}`"));
    match text.split_once('/') {
        None => {
            let n: BigInt = text.trim().parse().map_err(bad)?;
            Ok(Rat::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(bad)?;
            let d: BigInt = den.trim().parse().map_err(bad)?;
            if d.is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "malformed rational `{text}`: zero denominator"
                )));
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// `base^exp` by repeated squaring.
pub fn rat_pow(base: &Rat, exp: u32) -> Rat {
    let mut result = Rat::one();
    let mut square = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result *= &square;
        }
        e >>= 1;
        if e > 0 {
            square = &square * &square;
        }
    }
    result
}

/// Exact `k`-th root over the rationals, if one exists.
///
/// For even `k` the nonnegative root is returned; negative inputs with even
/// `k` and inputs whose numerator or denominator is not a perfect `k`-th
/// power yield `None`.
pub fn nth_root_exact(value: &Rat, k: u32) -> Option<Rat> {
    assert!(k >= 1, "root index must be positive");
    if k == 1 {
        return Some(value.clone());
    }
    if value.is_zero() {
        return Some(Rat::zero());
    }
    let negative = value.is_negative();
    if negative && k % 2 == 0 {
        return None;
    }
    let num = exact_uint_root(value.numer().magnitude(), k)?;
    let den = exact_uint_root(value.denom().magnitude(), k)?;
    let sign = if negative { Sign::Minus } else { Sign::Plus };
    Some(Rat::new_raw(
        BigInt::from_biguint(sign, num),
        BigInt::from_biguint(Sign::Plus, den),
    ))
}

fn exact_uint_root(value: &BigUint, k: u32) -> Option<BigUint> {
    let root = value.nth_root(k);
    if num_traits::pow(root.clone(), k as usize) == *value {
        Some(root)
    } else {
        None
    }
}

/// True when the rational is an integer.
pub fn is_integer(value: &Rat) -> bool {
    value.denom().is_one()
}

/// Ceiling of `a / b` for integers with `b > 0`.
pub fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    Integer::div_ceil(&a, &b)
}
