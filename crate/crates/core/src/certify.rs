//! Valuation certificates for conjugator denominators.
//!
//! The jump function `σ_m` (with periodic part `ε_m`) bounds how fast powers
//! of `q = p^k` accumulate in the denominators of the step coefficients
//! `c_n` and the conjugator coefficients `A_n`. This module evaluates both
//! functions exactly, checks their structural properties over explicit
//! ranges, and emits falsifiable margin reports:
//!
//! - integral case: `ord_p(c_n) + ord_p((n-m)!) >= 0`, and the same for
//!   `A_n`;
//! - general case: `ord_p(c_n) + ord_p((n-m)!) + k·σ_m(n) >= 0`, and the
//!   same for `A_n`.
//!
//! A report never asserts; it carries every per-degree margin so a failure
//! names its witness.

use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::classify::GermClassification;
use crate::error::Error;
use crate::rational::{ceil_div, is_integer, rat, ratio, Rat};
use crate::valuation::{check_prime, ord, ord_factorial, Valuation};

/// The jump function `σ_m` and its periodic part `ε_m`, defined for
/// `n >= m + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SigmaParams {
    m: usize,
}

impl SigmaParams {
    pub fn new(m: usize) -> Result<Self, Error> {
        if m < 2 {
            return Err(Error::InvalidArgument(format!(
                "tangency order must be at least 2, got {m}"
            )));
        }
        Ok(SigmaParams { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `ε_m(n) = 2m + (1 - (2m-1)/(m-1)) r` where `r = (n-2) mod (m-1)`.
    pub fn epsilon(&self, n: usize) -> Rat {
        assert!(n >= self.m + 1, "epsilon is defined for n >= m+1");
        let m = self.m as i64;
        let r = ((n as i64) - 2).rem_euclid(m - 1);
        rat(2 * m) + (rat(1) - ratio(2 * m - 1, m - 1)) * rat(r)
    }

    fn sigma_rat(&self, n: usize) -> Rat {
        let m = self.m as i64;
        ratio(2 * m - 1, m - 1) * rat(n as i64 - (m + 1)) + self.epsilon(n)
    }

    /// `σ_m(n) = ((2m-1)/(m-1))(n - (m+1)) + ε_m(n)`, always an integer.
    pub fn sigma(&self, n: usize) -> i64 {
        let value = self.sigma_rat(n);
        assert!(
            is_integer(&value),
            "sigma must be integer-valued, got {value} at m={}, n={n}",
            self.m
        );
        value.numer().to_i64().expect("sigma fits in i64")
    }
}

/// `ε_m(n)`, free-function form.
pub fn epsilon(m: usize, n: usize) -> Result<Rat, Error> {
    Ok(SigmaParams::new(m)?.epsilon(n))
}

/// `σ_m(n)`, free-function form.
pub fn sigma(m: usize, n: usize) -> Result<i64, Error> {
    Ok(SigmaParams::new(m)?.sigma(n))
}

/// A finite tuple of positive integers with its length/weight bookkeeping:
/// a tuple of length `ℓ` and weight `|i|` contributes to degree
/// `n = |i| - ℓ + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexTuple {
    entries: Vec<usize>,
}

impl IndexTuple {
    pub fn new(entries: Vec<usize>) -> Result<Self, Error> {
        if entries.is_empty() || entries.contains(&0) {
            return Err(Error::InvalidArgument(
                "index tuple must be a nonempty tuple of positive integers".into(),
            ));
        }
        Ok(IndexTuple { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn length(&self) -> usize {
        self.entries.len()
    }

    pub fn weight(&self) -> usize {
        self.entries.iter().sum()
    }

    /// `n = |i| - ℓ + 1`.
    pub fn degree(&self) -> usize {
        self.weight() - self.length() + 1
    }
}

/// One structural violation found by [`sigma_property_suite`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaViolation {
    pub part: &'static str,
    pub witness: String,
}

/// Report of the σ/ε structural checks.
#[derive(Debug, Clone, PartialEq)]
pub struct SigmaSuiteReport {
    pub m: usize,
    pub n_max: usize,
    pub tuple_weight_max: usize,
    pub violations: Vec<SigmaViolation>,
}

impl SigmaSuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn verdict(&self) -> Verdict {
        if self.passed() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// Exhaustively check, over the stated ranges:
///
/// 1. `ε_m` has period `m-1`, decreases on `[m+1, 2m-1]`, and satisfies
///    `m²/(m+1) <= ε_m(n) <= 2m`;
/// 2. `σ_m` is integer-valued, strictly increasing, satisfies
///    `σ_m(n + m - 1) = σ_m(n) + (2m-1)` and the two linear bounds;
/// 3. `b - a >= m - 1` implies `σ_m(b) - σ_m(a) >= (b - a) + m`;
/// 4. for every tuple with entries `>= m+1`, weight `<= tuple_weight_max`
///    and degree `n = |i| - ℓ + 1 >= m+1`: `Σ_j σ_m(i_j) <= σ_m(n)`.
pub fn sigma_property_suite(
    m: usize,
    n_max: usize,
    tuple_weight_max: usize,
) -> Result<SigmaSuiteReport, Error> {
    let params = SigmaParams::new(m)?;
    if n_max < m + 1 {
        return Err(Error::InvalidArgument(format!(
            "n_max must be at least m+1 = {}",
            m + 1
        )));
    }
    let mut violations = Vec::new();
    let mi = m as i64;

    // (1) periodic part
    let lower = ratio(mi * mi, mi + 1);
    let upper = rat(2 * mi);
    for n in (m + 1)..=n_max {
        let value = params.epsilon(n);
        if value < lower || value > upper {
            violations.push(SigmaViolation {
                part: "epsilon-bounds",
                witness: format!("epsilon_{m}({n}) = {value}"),
            });
        }
        if n + m - 1 <= n_max && params.epsilon(n + m - 1) != value {
            violations.push(SigmaViolation {
                part: "epsilon-period",
                witness: format!("epsilon_{m}({}) != epsilon_{m}({n})", n + m - 1),
            });
        }
        if n + 1 <= (2 * m - 1).min(n_max) && params.epsilon(n + 1) >= value {
            violations.push(SigmaViolation {
                part: "epsilon-decreasing",
                witness: format!("epsilon_{m} fails to decrease at n = {n}"),
            });
        }
    }

    // (2) jump function
    let slope = ratio(2 * mi - 1, mi - 1);
    let lower_shift = rat(mi + 2) + ratio(1, mi - 1);
    let upper_shift = ratio(3 * mi - 1, mi - 1);
    for n in (m + 1)..=n_max {
        let value = params.sigma_rat(n);
        if !is_integer(&value) {
            violations.push(SigmaViolation {
                part: "sigma-integrality",
                witness: format!("sigma_{m}({n}) = {value}"),
            });
            continue;
        }
        let s = params.sigma(n);
        if n + 1 <= n_max && params.sigma(n + 1) <= s {
            violations.push(SigmaViolation {
                part: "sigma-increasing",
                witness: format!("sigma_{m}({}) <= sigma_{m}({n})", n + 1),
            });
        }
        if n + m - 1 <= n_max && params.sigma(n + m - 1) != s + 2 * mi - 1 {
            violations.push(SigmaViolation {
                part: "sigma-period-jump",
                witness: format!("sigma_{m}({}) != sigma_{m}({n}) + {}", n + m - 1, 2 * mi - 1),
            });
        }
        let linear = &slope * rat(n as i64);
        if rat(s) < &linear - &lower_shift || rat(s) > &linear - &upper_shift {
            violations.push(SigmaViolation {
                part: "sigma-linear-bounds",
                witness: format!("sigma_{m}({n}) = {s} escapes the linear bounds"),
            });
        }
    }

    // (3) gap growth
    for a in (m + 1)..=n_max {
        for b in (a + m - 1)..=n_max {
            if params.sigma(b) - params.sigma(a) < (b - a) as i64 + mi {
                violations.push(SigmaViolation {
                    part: "sigma-gap",
                    witness: format!("a = {a}, b = {b}"),
                });
            }
        }
    }

    // (4) tuple superadditivity, over nondecreasing tuples (the sum is
    // permutation-invariant)
    let mut stack: Vec<usize> = Vec::new();
    enumerate_tuples(m + 1, tuple_weight_max, &mut stack, &mut |entries| {
        let tuple = IndexTuple::new(entries.to_vec()).expect("entries are positive");
        let n = tuple.degree();
        if n < m + 1 {
            return;
        }
        let sum: i64 = tuple.entries().iter().map(|&i| params.sigma(i)).sum();
        if sum > params.sigma(n) {
            violations.push(SigmaViolation {
                part: "sigma-tuple",
                witness: format!("tuple {:?}: {} > sigma_{m}({n})", tuple.entries(), sum),
            });
        }
    });

    Ok(SigmaSuiteReport {
        m,
        n_max,
        tuple_weight_max,
        violations,
    })
}

fn enumerate_tuples(
    min_entry: usize,
    budget: usize,
    stack: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    let mut entry = min_entry;
    while entry <= budget {
        stack.push(entry);
        visit(stack);
        enumerate_tuples(entry, budget - entry, stack, visit);
        stack.pop();
        entry += 1;
    }
}

/// PASS/FAIL verdict of a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "PASS"),
            Verdict::Fail => write!(f, "FAIL"),
        }
    }
}

/// Which coefficient family a margin record describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientKind {
    /// A step coefficient `c_n`.
    StepCoefficient,
    /// A conjugator coefficient `A_n`.
    ConjugatorCoefficient,
    /// A `t`-coefficient of a flow coefficient `a_n(t)`.
    FlowCoefficient,
}

impl CoefficientKind {
    pub fn label(self) -> &'static str {
        match self {
            CoefficientKind::StepCoefficient => "c",
            CoefficientKind::ConjugatorCoefficient => "A",
            CoefficientKind::FlowCoefficient => "flow",
        }
    }
}

/// One per-degree margin: the coefficient's valuation, the bound it must
/// meet (`ord >= required`), and the slack.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarginRecord {
    pub degree: usize,
    pub kind: CoefficientKind,
    /// For flow records, the `t`-power of the worst coefficient.
    pub t_power: Option<usize>,
    pub ord: Valuation,
    pub required: i64,
    pub margin: Valuation,
}

impl MarginRecord {
    pub fn new(degree: usize, kind: CoefficientKind, ord: Valuation, required: i64) -> Self {
        MarginRecord {
            degree,
            kind,
            t_power: None,
            ord,
            required,
            margin: ord + (-required),
        }
    }
}

/// A falsifiable valuation certificate: PASS exactly when every margin is
/// nonnegative.
#[derive(Debug, Clone, PartialEq)]
pub struct CertificateReport {
    pub prime: u64,
    /// Exponent `k` of `q = p^k`; zero for the integral certificate.
    pub q_exponent: u32,
    pub records: Vec<MarginRecord>,
    pub verdict: Verdict,
}

impl CertificateReport {
    pub fn from_records(prime: u64, q_exponent: u32, records: Vec<MarginRecord>) -> Self {
        let verdict = if records.iter().all(|r| r.margin.is_nonnegative()) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        CertificateReport {
            prime,
            q_exponent,
            records,
            verdict,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Records with negative margin, the failure witnesses.
    pub fn failures(&self) -> impl Iterator<Item = &MarginRecord> {
        self.records.iter().filter(|r| !r.margin.is_nonnegative())
    }
}

/// Smallest `k >= 0` such that `ord_p(a_n) + n k >= 0` for every
/// `1 <= n <= N`, i.e. rescaling by `q = p^k` drives all coefficients into
/// the ring of integers.
pub fn choose_q_exponent(series: &crate::series::TruncatedSeries, p: u64) -> Result<u32, Error> {
    check_prime(p)?;
    let mut k = 0i64;
    for n in 1..=series.truncation_order() {
        if let Valuation::Finite(v) = ord(series.coeff(n), p)? {
            if v < 0 {
                k = k.max(ceil_div(-v, n as i64));
            }
        }
    }
    Ok(k as u32)
}

fn classification_margins(
    classification: &GermClassification,
    p: u64,
    required: impl Fn(usize) -> i64,
) -> Result<Vec<MarginRecord>, Error> {
    let order = classification.truncation_order();
    let m = classification.m;
    let mut records = Vec::with_capacity(2 * (order - m));
    for n in (m + 1)..=order {
        let bound = required(n);
        records.push(MarginRecord::new(
            n,
            CoefficientKind::StepCoefficient,
            ord(&classification.step_coeffs[n], p)?,
            bound,
        ));
        records.push(MarginRecord::new(
            n,
            CoefficientKind::ConjugatorCoefficient,
            ord(classification.conjugator.coeff(n), p)?,
            bound,
        ));
    }
    Ok(records)
}

/// Integral-case certificate: for a classification of a germ with all
/// coefficients (and `μ`) of nonnegative valuation, check
/// `ord_p((n-m)! c_n) >= 0` and `ord_p((n-m)! A_n) >= 0` for
/// `m+1 <= n <= N`.
pub fn certify_integral(
    classification: &GermClassification,
    p: u64,
) -> Result<CertificateReport, Error> {
    check_prime(p)?;
    for (degree, coeff) in classification.germ.series().coeffs().iter().enumerate() {
        if !ord(coeff, p)?.is_nonnegative() {
            return Err(Error::InapplicableCertificate(format!(
                "germ coefficient at degree {degree} has negative valuation at p = {p}"
            )));
        }
    }
    if !ord(&classification.mu, p)?.is_nonnegative() {
        return Err(Error::InapplicableCertificate(format!(
            "normal-form coefficient mu = {} has negative valuation at p = {p}",
            classification.mu
        )));
    }
    let m = classification.m;
    let records = classification_margins(classification, p, |n| {
        -ord_factorial((n - m) as u64, p).expect("p validated")
    })?;
    Ok(CertificateReport::from_records(p, 0, records))
}

/// General-case certificate with `q = p^k`: check
/// `ord_p(c_n) + ord_p((n-m)!) + k σ_m(n) >= 0` and the same for `A_n`,
/// for `m+1 <= n <= N`.
pub fn certify_general(
    classification: &GermClassification,
    p: u64,
    q_exponent: u32,
) -> Result<CertificateReport, Error> {
    check_prime(p)?;
    let m = classification.m;
    let params = SigmaParams::new(m)?;
    let records = classification_margins(classification, p, |n| {
        -ord_factorial((n - m) as u64, p).expect("p validated")
            - (q_exponent as i64) * params.sigma(n)
    })?;
    Ok(CertificateReport::from_records(p, q_exponent, records))
}

/// Truncation-limited convergence proxy: the exponent
/// `e = max_{1<=n<=N, a_n != 0} (-ord_p(a_n) / n)`.
///
/// Every term of the truncated series has positive valuation on the ball
/// `ord_p(x) > e`. This is an order-`N` statement only; the true radius is a
/// limit the truncation cannot determine.
pub fn radius_lower_bound(series: &crate::series::TruncatedSeries, p: u64) -> Result<Rat, Error> {
    check_prime(p)?;
    let mut best: Option<Rat> = None;
    for n in 1..=series.truncation_order() {
        if let Valuation::Finite(v) = ord(series.coeff(n), p)? {
            let candidate = ratio(-v, n as i64);
            if best.as_ref().is_none_or(|b| candidate > *b) {
                best = Some(candidate);
            }
        }
    }
    Ok(best.unwrap_or_else(Rat::zero))
}

/// True when the exponent from [`radius_lower_bound`] certifies the closed
/// unit ball (all coefficients integral).
pub fn unit_ball_certified(exponent: &Rat) -> bool {
    !exponent.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::series::{Germ, TruncatedSeries};

    #[test]
    fn epsilon_examples() {
        let s2 = SigmaParams::new(2).unwrap();
        for n in 3..=40 {
            assert_eq!(s2.epsilon(n), rat(4));
        }
        let s3 = SigmaParams::new(3).unwrap();
        assert_eq!(s3.epsilon(4), rat(6));
        assert_eq!(s3.epsilon(5), ratio(9, 2));
        assert!(SigmaParams::new(1).is_err());
    }

    #[test]
    fn sigma_examples() {
        let s2 = SigmaParams::new(2).unwrap();
        assert_eq!(s2.sigma(3), 4);
        for n in 3..=60 {
            assert_eq!(s2.sigma(n), 3 * n as i64 - 5);
        }
        let s3 = SigmaParams::new(3).unwrap();
        assert_eq!(s3.sigma(4), 6);
        assert_eq!(s3.sigma(5), 7);
        assert_eq!(s3.sigma(6), 11);
        // the jump by m + 1 across the period boundary
        assert_eq!(s3.sigma(6) - s3.sigma(5), 4);
        // part (ii) witness
        assert_eq!(s3.sigma(4 + 2), s3.sigma(4) + 5);
    }

    #[test]
    fn suite_passes_for_small_m() {
        for m in [2, 3, 5] {
            let report = sigma_property_suite(m, 80, 12).unwrap();
            assert!(report.passed(), "violations: {:?}", report.violations);
        }
    }

    #[test]
    fn index_tuple_bookkeeping() {
        let tuple = IndexTuple::new(vec![3, 4, 4]).unwrap();
        assert_eq!(tuple.length(), 3);
        assert_eq!(tuple.weight(), 11);
        assert_eq!(tuple.degree(), 9);
        assert!(IndexTuple::new(vec![]).is_err());
        assert!(IndexTuple::new(vec![2, 0]).is_err());
    }

    #[test]
    fn q_exponent_selection() {
        let f = TruncatedSeries::from_ints(&[0, 1, 1, 1, 1]);
        assert_eq!(choose_q_exponent(&f, 5).unwrap(), 0);

        // a_n = p^{-n}
        let p = 3i64;
        let coeffs: Vec<Rat> = (0..=6)
            .map(|n| {
                if n == 0 {
                    rat(0)
                } else {
                    ratio(1, p.pow(n as u32))
                }
            })
            .collect();
        let g = TruncatedSeries::from_coeffs(coeffs);
        assert_eq!(choose_q_exponent(&g, 3).unwrap(), 1);

        // x + x^2 + x^3 / p^3
        let h = TruncatedSeries::from_coeffs(vec![rat(0), rat(1), rat(1), ratio(1, 8)]);
        assert_eq!(choose_q_exponent(&h, 2).unwrap(), 1);
        assert!(choose_q_exponent(&h, 6).is_err());
    }

    #[test]
    fn integral_certificate_passes() {
        let order = 24;
        let mut coeffs = vec![0i64; order + 1];
        coeffs[1] = 1;
        coeffs[2] = 1;
        coeffs[3] = 1;
        coeffs[4] = 1;
        let f = Germ::from_ints(&coeffs);
        let classification = classify(&f).unwrap();
        for p in [2, 3, 5] {
            let report = certify_integral(&classification, p).unwrap();
            assert!(report.passed(), "failures: {:?}", report.failures().count());
            assert_eq!(report.q_exponent, 0);
            assert_eq!(report.records.len(), 2 * (order - 2));
        }
    }

    #[test]
    fn integral_certificate_trivial_for_normal_form() {
        let f = Germ::from_ints(&[0, 1, 1, 0, 0, 0, 0, 0]);
        let classification = classify(&f).unwrap();
        let report = certify_integral(&classification, 7).unwrap();
        assert!(report.passed());
        assert!(report
            .records
            .iter()
            .all(|r| r.ord == Valuation::Infinite && r.margin == Valuation::Infinite));
    }

    #[test]
    fn integral_certificate_rejects_denominators() {
        let f = Germ::new(TruncatedSeries::from_coeffs(vec![
            rat(0),
            rat(1),
            rat(1),
            ratio(1, 3),
            rat(0),
        ]))
        .unwrap();
        let classification = classify(&f).unwrap();
        assert!(matches!(
            certify_integral(&classification, 3),
            Err(Error::InapplicableCertificate(_))
        ));
        // at p = 2 the same germ is integral
        assert!(certify_integral(&classification, 2).unwrap().passed());
    }

    #[test]
    fn general_certificate_reduces_to_integral_at_k_0() {
        let f = Germ::from_ints(&[0, 1, 1, 2, -3, 4, 0, 0, 1, 0, 0, 0, 0]);
        let classification = classify(&f).unwrap();
        let integral = certify_integral(&classification, 2).unwrap();
        let general = certify_general(&classification, 2, 0).unwrap();
        assert!(general.passed());
        assert_eq!(integral.records, general.records);
    }

    #[test]
    fn general_certificate_on_shaped_germ() {
        // f = x + x^2 + Σ_{n>=3} b_n / p^n x^n with b_n in {0..p-1}
        let p = 2u64;
        let order = 16;
        let mut coeffs = vec![rat(0); order + 1];
        coeffs[1] = rat(1);
        coeffs[2] = rat(1);
        for n in 3..=order {
            let b = ((n * 7 + 3) % 2) as i64;
            coeffs[n] = ratio(b, 2i64.pow(n as u32));
        }
        coeffs[3] = ratio(1, 8); // pin b_3 = 1 so k = 1 exactly
        let f = Germ::new(TruncatedSeries::from_coeffs(coeffs)).unwrap();
        let k = choose_q_exponent(f.series(), p).unwrap();
        assert_eq!(k, 1);
        let classification = classify(&f).unwrap();
        let report = certify_general(&classification, p, k).unwrap();
        let failures: Vec<_> = report.failures().collect();
        assert!(report.passed(), "failures: {failures:?}");
    }

    /// Multiplicative powers of the conjugator obey the same factorial
    /// margins: H^N' = x^N' + Σ b_n x^n with (n-m)! b_n integral.
    #[test]
    fn conjugator_powers_inherit_integrality() {
        let order = 20;
        let mut coeffs = vec![0i64; order + 1];
        coeffs[1] = 1;
        coeffs[2] = 1;
        for n in 3..=order {
            coeffs[n] = (n as i64 * 5 + 1) % 19 - 9;
        }
        let f = Germ::from_ints(&coeffs);
        let classification = classify(&f).unwrap();
        let m = classification.m;
        for power in [2usize, 3] {
            let raised = classification.conjugator.pow(power);
            for p in [2u64, 3] {
                for n in (m + 1)..=order {
                    if n == power {
                        continue;
                    }
                    let margin = ord(raised.coeff(n), p).unwrap()
                        + ord_factorial((n - m) as u64, p).unwrap();
                    assert!(margin.is_nonnegative(), "H^{power}, n = {n}, p = {p}");
                }
            }
        }
    }

    /// On a germ of the rescaled shape with k = 1, the certified conjugator
    /// stays within the combined sigma + factorial growth: since
    /// sigma(n) <= 3n and ord_p(n!) <= n, the convergence exponent of H is
    /// at most 4.
    #[test]
    fn certified_conjugator_radius_exponent() {
        let p = 2i64;
        let order = 20;
        let mut coeffs = vec![rat(0); order + 1];
        coeffs[1] = rat(1);
        coeffs[2] = rat(1);
        for n in 3..=order {
            coeffs[n] = ratio((n as i64) % 2, p.pow(n as u32));
        }
        coeffs[3] = ratio(1, 8);
        let f = Germ::new(TruncatedSeries::from_coeffs(coeffs)).unwrap();
        assert_eq!(choose_q_exponent(f.series(), 2).unwrap(), 1);
        let classification = classify(&f).unwrap();
        assert!(certify_general(&classification, 2, 1).unwrap().passed());
        let exponent = radius_lower_bound(&classification.conjugator, 2).unwrap();
        assert!(exponent <= rat(4), "exponent {exponent}");
    }

    #[test]
    fn radius_exponent_examples() {
        let f = TruncatedSeries::from_ints(&[0, 1, 1, 1]);
        let e = radius_lower_bound(&f, 2).unwrap();
        assert!(unit_ball_certified(&e));

        let p = 5i64;
        let coeffs: Vec<Rat> = (0..=8)
            .map(|n| {
                if n == 0 {
                    rat(0)
                } else {
                    ratio(1, p.pow(n as u32))
                }
            })
            .collect();
        let g = TruncatedSeries::from_coeffs(coeffs);
        assert_eq!(radius_lower_bound(&g, 5).unwrap(), rat(1));
        assert!(!unit_ball_certified(&rat(1)));

        assert_eq!(radius_lower_bound(&TruncatedSeries::zero(4), 2).unwrap(), rat(0));
    }
}
