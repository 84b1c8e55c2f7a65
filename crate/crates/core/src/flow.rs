//! Formal flows of vector fields, compositional roots, and centralizers.
//!
//! A vector field `V(x) = Σ_{n>=2} v_n x^n ∂/∂x` integrates to a formal flow
//! `T^t(x) = Σ a_n(t) x^n` with `a_1 ≡ 1`, each `a_n` an exact polynomial in
//! `t` of degree at most `n-1`. The flow solves `dT^t/dt = V(T^t)` by
//! antidifferentiation, degree by degree. Time-`t` maps of the flow give
//! one-parameter centralizers and compositional roots of germs.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::certify::{CertificateReport, CoefficientKind, MarginRecord};
use crate::classify::classify;
use crate::error::Error;
use crate::rational::{ceil_div, rat_pow, ratio, Rat};
use crate::series::{Germ, TruncatedSeries};
use crate::valuation::{check_prime, ord, ord_factorial, Valuation};

/// Polynomial in the time variable `t` with exact rational coefficients,
/// stored by ascending `t`-power with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimePoly {
    coeffs: Vec<Rat>,
}

impl TimePoly {
    pub fn zero() -> Self {
        TimePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TimePoly::constant(Rat::one())
    }

    pub fn constant(value: Rat) -> Self {
        TimePoly::from_coeffs(vec![value])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        TimePoly { coeffs }
    }

    /// Coefficients by ascending `t`-power (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `t`, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, power: usize) -> Rat {
        self.coeffs.get(power).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut value = Rat::zero();
        for c in self.coeffs.iter().rev() {
            value = value * t + c;
        }
        value
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        if factor.is_zero() {
            return TimePoly::zero();
        }
        TimePoly {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Formal `d/dt`.
    pub fn derivative(&self) -> Self {
        TimePoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Formal antiderivative vanishing at `t = 0`.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rat::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rat::from_integer(BigInt::from(k + 1)));
        }
        TimePoly::from_coeffs(coeffs)
    }
}

impl Add for &TimePoly {
    type Output = TimePoly;

    fn add(self, rhs: &TimePoly) -> TimePoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for k in 0..len {
            let a = self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero);
            let b = rhs.coeffs.get(k).cloned().unwrap_or_else(Rat::zero);
            coeffs.push(a + b);
        }
        TimePoly::from_coeffs(coeffs)
    }
}

impl Mul for &TimePoly {
    type Output = TimePoly;

    fn mul(self, rhs: &TimePoly) -> TimePoly {
        if self.is_zero() || rhs.is_zero() {
            return TimePoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TimePoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for TimePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{k}")?,
            }
            wrote = true;
        }
        Ok(())
    }
}

/// A formal vector field `Σ_{n>=2} v_n x^n ∂/∂x`, vanishing to order 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorField(TruncatedSeries);

impl VectorField {
    pub fn new(series: TruncatedSeries) -> Result<Self, Error> {
        if !series.coeff(0).is_zero() || !series.coeff(1).is_zero() {
            return Err(Error::InvalidArgument(
                "vector field must vanish to order 2 (v_0 = v_1 = 0)".into(),
            ));
        }
        Ok(VectorField(series))
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(TruncatedSeries::from_ints(coeffs)).expect("field must vanish to order 2")
    }

    /// The single field `x^degree ∂/∂x`.
    pub fn monomial(degree: usize, order: usize) -> Self {
        VectorField(TruncatedSeries::monomial(Rat::one(), degree, order))
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.0
    }

    pub fn coeff(&self, degree: usize) -> &Rat {
        self.0.coeff(degree)
    }

    pub fn truncation_order(&self) -> usize {
        self.0.truncation_order()
    }
}

/// Conjugate a field by the linear map `L_r(x) = rx`: the pushed-forward
/// field has coefficients `r^{n-1} v_n`, and `L_r ∘ T̃^t ∘ L_r^{-1} = T^t`.
pub fn rescale_field(field: &VectorField, r: &Rat) -> VectorField {
    let order = field.truncation_order();
    let mut coeffs = vec![Rat::zero(); order + 1];
    for (n, c) in coeffs.iter_mut().enumerate().skip(2) {
        *c = field.coeff(n) * rat_pow(r, (n - 1) as u32);
    }
    VectorField(TruncatedSeries::from_coeffs(coeffs))
}

/// Smallest `k >= 0` such that rescaling by `r = p^k` makes every
/// coefficient of the field integral at `p`.
pub fn integralizing_scale_exponent(field: &VectorField, p: u64) -> Result<u32, Error> {
    check_prime(p)?;
    let mut k = 0i64;
    for n in 2..=field.truncation_order() {
        if let Valuation::Finite(v) = ord(field.coeff(n), p)? {
            if v < 0 {
                k = k.max(ceil_div(-v, (n - 1) as i64));
            }
        }
    }
    Ok(k as u32)
}

/// The flow `T^t(x) = Σ_{n>=1} a_n(t) x^n` of a vector field, with each
/// `a_n` an exact polynomial in `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowMap {
    field: VectorField,
    /// `coeffs[n] = a_n(t)` for `1 <= n <= N`; index 0 is unused.
    coeffs: Vec<TimePoly>,
}

impl FlowMap {
    pub fn field(&self) -> &VectorField {
        &self.field
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The polynomial `a_n(t)`.
    pub fn coefficient(&self, degree: usize) -> &TimePoly {
        &self.coeffs[degree]
    }

    /// Evaluate the flow at a rational time; the result is tangent to the
    /// identity.
    pub fn time_map(&self, t: &Rat) -> Germ {
        let order = self.truncation_order();
        let mut series = TruncatedSeries::zero(order);
        for n in 1..=order {
            series.set_coeff(n, self.coeffs[n].eval(t));
        }
        Germ::new(series).expect("a_1 is identically 1")
    }
}

/// Integrate a vector field: solve `dT^t/dt = V(T^t)` degree by degree.
///
/// At degree `n` the right-hand side reads `Σ_{j} v_j [T^j]_n`, where
/// `[T^j]_n = Σ_{|i| = n, ℓ(i) = j} a_{i_1} ··· a_{i_j}` involves only
/// coefficients of degree below `n`; one antidifferentiation then yields
/// `a_n(t)` with `a_n(0) = 0` and degree at most `n-1` in `t`.
pub fn flow_coefficients(field: &VectorField) -> FlowMap {
    let order = field.truncation_order();
    let mut coeffs = vec![TimePoly::zero(); order + 1];
    coeffs[1] = TimePoly::one();
    // powers[j][d] = [T^j]_d, filled for d below the current degree
    let mut powers = vec![vec![TimePoly::zero(); order + 1]; order + 1];
    powers[1][1] = TimePoly::one();
    for n in 2..=order {
        for j in 2..=n {
            let mut sum = TimePoly::zero();
            for i in 1..=(n - j + 1) {
                if !coeffs[i].is_zero() && !powers[j - 1][n - i].is_zero() {
                    sum = &sum + &(&coeffs[i] * &powers[j - 1][n - i]);
                }
            }
            powers[j][n] = sum;
        }
        let mut velocity = TimePoly::zero();
        for j in 2..=n {
            let v = field.coeff(j);
            if !v.is_zero() {
                velocity = &velocity + &powers[j][n].scale(v);
            }
        }
        coeffs[n] = velocity.antiderivative();
        debug_assert!(coeffs[n].degree().is_none_or(|d| d <= n - 1));
        powers[1][n] = coeffs[n].clone();
    }
    FlowMap {
        field: field.clone(),
        coeffs,
    }
}

/// Result of a flow group-law comparison.
#[derive(Debug, Clone, PartialEq)]
pub enum GroupLawCheck {
    Pass,
    Fail {
        degree: usize,
        composed: Rat,
        direct: Rat,
    },
}

/// Verify `T^s ∘ T^t = T^{s+t}` exactly through the truncation order.
pub fn check_group_law(flow: &FlowMap, s: &Rat, t: &Rat) -> GroupLawCheck {
    let lhs = flow
        .time_map(s)
        .series()
        .compose(flow.time_map(t).series())
        .expect("time maps have zero constant term");
    let rhs = flow.time_map(&(s + t));
    match lhs.first_difference(rhs.series()) {
        None => GroupLawCheck::Pass,
        Some(degree) => GroupLawCheck::Fail {
            degree,
            composed: lhs.coeff(degree).clone(),
            direct: rhs.coeff(degree).clone(),
        },
    }
}

/// Integrality certificate for a flow of an integral field: every
/// `t`-coefficient of `a_n(t)` satisfies `ord_p(n!) + ord_p(coefficient) >=
/// 0`, and `deg a_n <= n - 1`.
pub fn flow_integrality_check(flow: &FlowMap, p: u64) -> Result<CertificateReport, Error> {
    check_prime(p)?;
    let field = flow.field();
    for n in 2..=field.truncation_order() {
        if !ord(field.coeff(n), p)?.is_nonnegative() {
            return Err(Error::InapplicableCertificate(format!(
                "field coefficient v_{n} has negative valuation at p = {p}"
            )));
        }
    }
    let mut records = Vec::new();
    for n in 1..=flow.truncation_order() {
        let poly = flow.coefficient(n);
        assert!(
            poly.degree().is_none_or(|d| d <= n - 1),
            "flow coefficient a_{n} exceeds degree {}",
            n - 1
        );
        let required = -ord_factorial(n as u64, p).expect("p validated");
        // record the binding t-coefficient
        let mut worst: Option<(usize, Valuation)> = None;
        for (power, c) in poly.coeffs().iter().enumerate() {
            let v = ord(c, p)?;
            if worst.as_ref().is_none_or(|(_, w)| v < *w) {
                worst = Some((power, v));
            }
        }
        let record = match worst {
            Some((power, v)) => {
                let mut r = MarginRecord::new(n, CoefficientKind::FlowCoefficient, v, required);
                r.t_power = Some(power);
                r
            }
            None => MarginRecord::new(
                n,
                CoefficientKind::FlowCoefficient,
                Valuation::Infinite,
                required,
            ),
        };
        records.push(record);
    }
    Ok(CertificateReport::from_records(p, 0, records))
}

/// The field `x^m / (1 - (μ - m/2) x^{m-1}) ∂/∂x`, expanded through the
/// truncation order.
///
/// The denominator parameter is pinned by the time-one map: integrating the
/// field `x^m + β x^{2m-1} + ...` gives `a_{2m-1}(1) = m/2 + β`, so `β = μ -
/// m/2` makes the time-one map's invariants exactly `(m, μ)`.
pub fn embedding_field(m: usize, mu: &Rat, order: usize) -> VectorField {
    assert!(m >= 2, "tangency order must be at least 2");
    assert!(m <= order, "truncation order must reach the leading term");
    let beta = mu - ratio(m as i64, 2);
    let mut coeffs = vec![Rat::zero(); order + 1];
    let mut degree = m;
    let mut factor = Rat::one();
    while degree <= order {
        coeffs[degree] = factor.clone();
        factor *= &beta;
        degree += m - 1;
    }
    VectorField(TruncatedSeries::from_coeffs(coeffs))
}

/// The `n`-fold compositional iterate, with `f^{∘0} = x`.
pub fn iterate(f: &Germ, n: usize) -> Germ {
    let mut result = Germ::identity(f.truncation_order());
    let mut square = f.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            result = result.compose(&square);
        }
        e >>= 1;
        if e > 0 {
            square = square.compose(&square);
        }
    }
    result
}

/// The unique tangent-to-identity compositional `n`-th root: `g` with
/// `g^{∘n} = f` through the truncation order.
///
/// Solved degree by degree: a new coefficient `g_d` enters `[g^{∘n}]_d`
/// linearly with multiplier `n`, so each step is one exact division.
pub fn nth_root(f: &Germ, n: usize) -> Result<Germ, Error> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "root index must be at least 1".into(),
        ));
    }
    let order = f.truncation_order();
    let mut root = TruncatedSeries::identity(order);
    let multiplier = Rat::from_integer(BigInt::from(n));
    for d in 2..=order {
        let partial = Germ::new(root.truncated(d)).expect("root stays tangent");
        let reached = iterate(&partial, n);
        let residual = f.coeff(d) - reached.coeff(d);
        if !residual.is_zero() {
            root.set_coeff(d, residual / &multiplier);
        }
    }
    Ok(Germ::new(root).expect("root is tangent to the identity"))
}

/// An element of the centralizer of `f`: conjugate `f` into the flow frame
/// of its embedding field and flow for time `t` there.
///
/// Classifies `f`, integrates the embedding field of its invariants, and
/// conjugates the time-one map back: with `h ∘ f ∘ h^{-1} = T^1`, the
/// returned germ is `h^{-1} ∘ T^t ∘ h`, which commutes with `f` through the
/// truncation order. At `t = 1/n` this is the compositional `n`-th root.
pub fn centralizer_element(f: &Germ, t: &Rat) -> Result<Germ, Error> {
    let order = f.truncation_order();
    let classification = classify(f)?;
    let field = embedding_field(classification.m, &classification.mu, order);
    let flow = flow_coefficients(&field);
    let time_one = flow.time_map(&Rat::one());
    // second classifier run, on the time-one map
    let frame = classify(&time_one)?;
    assert_eq!(
        (frame.m, &frame.mu),
        (classification.m, &classification.mu),
        "time-one map of the embedding field must share the invariants"
    );
    let conjugator = frame
        .full_conjugator()
        .comp_inverse()?
        .compose(&classification.full_conjugator())?;
    let moved = conjugator
        .comp_inverse()?
        .compose(flow.time_map(t).series())?
        .compose(&conjugator)?;
    Ok(Germ::new(moved).expect("centralizer elements are tangent to the identity"))
}

/// Result of a commutation check.
#[derive(Debug, Clone, PartialEq)]
pub enum CommuteCheck {
    Pass,
    Fail { degree: usize, fg: Rat, gf: Rat },
}

/// Compare `f ∘ g` and `g ∘ f` through the common truncation order.
pub fn check_commute(f: &TruncatedSeries, g: &TruncatedSeries) -> Result<CommuteCheck, Error> {
    let fg = f.compose(g)?;
    let gf = g.compose(f)?;
    match fg.first_difference(&gf) {
        None => Ok(CommuteCheck::Pass),
        Some(degree) => Ok(CommuteCheck::Fail {
            degree,
            fg: fg.coeff(degree).clone(),
            gf: gf.coeff(degree).clone(),
        }),
    }
}
