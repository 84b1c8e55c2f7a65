//! Truncated formal power series over the exact rationals.
//!
//! A [`TruncatedSeries`] stores the coefficients of degrees `0..=N` for an
//! explicit truncation order `N >= 1`; everything beyond `N` is unknown.
//! Operations on operands with different orders work at the smaller order and
//! the result records it, so precision loss stays auditable.
//!
//! [`Germ`] is the refinement with `a_0 = 0` and `a_1 = 1` (tangent to the
//! identity), the objects the classifier and flow machinery act on.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::Rat;

/// Formal power series known exactly through degree `truncation_order()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    /// Dense coefficients; `coeffs[d]` is the degree-`d` coefficient and
    /// `coeffs.len() - 1` is the truncation order.
    coeffs: Vec<Rat>,
}

impl TruncatedSeries {
    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "truncation order must be at least 1");
        TruncatedSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        Self::monomial(Rat::one(), 0, order)
    }

    /// The identity series `x`.
    pub fn identity(order: usize) -> Self {
        Self::monomial(Rat::one(), 1, order)
    }

    /// The linear series `scale * x`.
    pub fn linear(scale: Rat, order: usize) -> Self {
        Self::monomial(scale, 1, order)
    }

    /// The single term `coeff * x^degree`.
    pub fn monomial(coeff: Rat, degree: usize, order: usize) -> Self {
        let mut series = Self::zero(order);
        assert!(degree <= order, "monomial degree beyond truncation order");
        series.coeffs[degree] = coeff;
        series
    }

    /// The elementary conjugation step `x + c x^degree`.
    pub fn binomial_step(c: &Rat, degree: usize, order: usize) -> Self {
        let mut series = Self::identity(order);
        series.coeffs[degree] = c.clone();
        series
    }

    /// From the dense coefficient list `a_0, a_1, ..., a_N`.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(coeffs.len() >= 2, "need coefficients through degree 1");
        TruncatedSeries { coeffs }
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| crate::rational::rat(c)).collect())
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Drop information above `order` (never extends).
    pub fn truncated(&self, order: usize) -> Self {
        let order = order.min(self.truncation_order()).max(1);
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Coefficient of `x^degree`; panics beyond the truncation order.
    pub fn coeff(&self, degree: usize) -> &Rat {
        &self.coeffs[degree]
    }

    /// The bracket operator: coefficient of `x^degree` as a checked lookup.
    pub fn bracket(&self, degree: usize) -> Result<Rat, Error> {
        self.coeffs
            .get(degree)
            .cloned()
            .ok_or(Error::DegreeOutOfRange {
                degree,
                order: self.truncation_order(),
            })
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Overwrite one coefficient; panics beyond the truncation order.
    pub fn set_coeff(&mut self, degree: usize, value: Rat) {
        self.coeffs[degree] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Scalar multiple.
    pub fn scale(&self, factor: &Rat) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplicative power `f^k` with `f^0 = 1`, by repeated squaring.
    pub fn pow(&self, k: usize) -> Self {
        let order = self.truncation_order();
        let mut result = Self::one(order);
        let mut square = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &square;
            }
            e >>= 1;
            if e > 0 {
                square = &square * &square;
            }
        }
        result
    }

    /// Composition `f(g(x))`, requiring `g(0) = 0`, by Horner accumulation of
    /// powers of `g`.
    pub fn compose(&self, inner: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.truncation_order().min(inner.truncation_order());
        let inner = inner.truncated(order);
        let mut acc = TruncatedSeries::monomial(self.coeffs[order].clone(), 0, order);
        for degree in (0..order).rev() {
            acc = &acc * &inner;
            let c = &acc.coeffs[0] + &self.coeffs[degree];
            acc.coeffs[0] = c;
        }
        Ok(acc)
    }

    /// The unique compositional inverse `g` with `f∘g = g∘f = x` modulo
    /// `x^{N+1}`, for `f` with `a_0 = 0` and `a_1 != 0`.
    ///
    /// Solves `g∘f = x` degree by degree: with the multiplicative powers
    /// `f^k` on hand the unknown coefficient of `x^d` in `g` enters the
    /// degree-`d` equation linearly with multiplier `a_1^d`.
    pub fn comp_inverse(&self) -> Result<TruncatedSeries, Error> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotInvertible);
        }
        if self.coeffs[1].is_zero() {
            return Err(Error::NotInvertible);
        }
        let order = self.truncation_order();
        // powers[k] = f^{k+1}
        let mut powers = Vec::with_capacity(order);
        powers.push(self.clone());
        for _ in 1..order {
            let next = powers.last().unwrap() * self;
            powers.push(next);
        }
        let mut inverse = vec![Rat::zero(); order + 1];
        for degree in 1..=order {
            let mut residual = if degree == 1 { Rat::one() } else { Rat::zero() };
            for k in 1..degree {
                if !inverse[k].is_zero() && !powers[k - 1].coeffs[degree].is_zero() {
                    residual -= &inverse[k] * &powers[k - 1].coeffs[degree];
                }
            }
            inverse[degree] = &residual / &powers[degree - 1].coeffs[degree];
        }
        Ok(TruncatedSeries { coeffs: inverse })
    }

    /// First degree at which the two series differ, through the common
    /// truncation order.
    pub fn first_difference(&self, other: &TruncatedSeries) -> Option<usize> {
        let order = self.truncation_order().min(other.truncation_order());
        (0..=order).find(|&d| self.coeffs[d] != other.coeffs[d])
    }

    /// Exact equality through the common truncation order.
    pub fn agrees_with(&self, other: &TruncatedSeries) -> bool {
        self.first_difference(other).is_none()
    }
}

fn binary_op(
    lhs: &TruncatedSeries,
    rhs: &TruncatedSeries,
    op: impl Fn(&Rat, &Rat) -> Rat,
) -> TruncatedSeries {
    let order = lhs.truncation_order().min(rhs.truncation_order());
    TruncatedSeries {
        coeffs: (0..=order).map(|d| op(&lhs.coeffs[d], &rhs.coeffs[d])).collect(),
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        binary_op(self, rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        binary_op(self, rhs, |a, b| a - b)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Cauchy product truncated at the common order.
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.truncation_order().min(rhs.truncation_order());
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match d {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "x")?,
                1 => write!(f, "{c}*x")?,
                _ if c.is_one() => write!(f, "x^{d}")?,
                _ => write!(f, "{c}*x^{d}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.truncation_order() + 1)
    }
}

/// Conjugation `h ∘ f ∘ h^{-1}` for `h` invertible under composition.
pub fn conjugate(h: &TruncatedSeries, f: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
    let h_inverse = h.comp_inverse()?;
    h.compose(f)?.compose(&h_inverse)
}

/// A germ tangent to the identity: `a_0 = 0`, `a_1 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Germ(TruncatedSeries);

impl Germ {
    pub fn new(series: TruncatedSeries) -> Result<Self, Error> {
        if !series.coeff(0).is_zero() || !series.coeff(1).is_one() {
            return Err(Error::InvalidArgument(
                "germ must be tangent to the identity (a_0 = 0, a_1 = 1)".into(),
            ));
        }
        Ok(Germ(series))
    }

    /// The identity germ `x`.
    pub fn identity(order: usize) -> Self {
        Germ(TruncatedSeries::identity(order))
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(TruncatedSeries::from_ints(coeffs)).expect("not tangent to the identity")
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.0
    }

    pub fn into_series(self) -> TruncatedSeries {
        self.0
    }

    pub fn truncation_order(&self) -> usize {
        self.0.truncation_order()
    }

    pub fn coeff(&self, degree: usize) -> &Rat {
        self.0.coeff(degree)
    }

    pub fn truncated(&self, order: usize) -> Self {
        Germ(self.0.truncated(order))
    }

    /// Composition of germs is a germ.
    pub fn compose(&self, inner: &Germ) -> Germ {
        Germ(self.0.compose(&inner.0).expect("germ composition"))
    }
}

impl fmt::Display for Germ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
