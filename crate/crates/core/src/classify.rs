//! Normal forms and conjugacy invariants of germs tangent to the identity.
//!
//! Every germ `f(x) = x + a_m x^m + ...` with a rational `(m-1)`-th root of
//! `a_m` reduces, by one linear rescaling and a sequence of elementary
//! conjugations `h_n(x) = x + c_n x^n`, to the normal form
//! `x + x^m + μ x^{2m-1}`. The pair `(m, μ)` classifies the germ; the
//! composed conjugator `H` and the step coefficients `c_n` are returned so
//! the certificate machinery can bound their denominators.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::{nth_root_exact, Rat};
use crate::series::{conjugate, Germ, TruncatedSeries};

/// Outcome of classifying a germ: the invariants, the elementary step
/// coefficients, and the composed conjugator.
#[derive(Debug, Clone, PartialEq)]
pub struct GermClassification {
    /// Order of tangency: the smallest degree >= 2 with nonzero coefficient.
    pub m: usize,
    /// Normal-form coefficient at degree `2m - 1`.
    pub mu: Rat,
    /// The linear rescaling λ that set the leading coefficient to 1
    /// (`λ = 1` when the input was already normalized).
    pub scale: Rat,
    /// Step coefficients `c_n` of `h_n(x) = x + c_n x^n`, indexed by `n`;
    /// entries 0, 1 and `m` are zero. Coefficients whose defining equation
    /// lies beyond the truncation order stay zero.
    pub step_coeffs: Vec<Rat>,
    /// The composed conjugator `H = ... ∘ h_3 ∘ h_2`, tangent to the
    /// identity, with `H ∘ f ∘ H^{-1}` equal to the normal form through the
    /// truncation order.
    pub conjugator: TruncatedSeries,
    /// The normalized germ the recursion ran on.
    pub germ: Germ,
}

impl GermClassification {
    pub fn truncation_order(&self) -> usize {
        self.germ.truncation_order()
    }

    /// The normal form `x + x^m + μ x^{2m-1}` at this truncation order.
    pub fn normal_form_series(&self) -> TruncatedSeries {
        let order = self.truncation_order();
        let mut series = TruncatedSeries::identity(order);
        series.set_coeff(self.m, Rat::one());
        series.set_coeff(2 * self.m - 1, self.mu.clone());
        series
    }

    /// `H ∘ (λ x)`: conjugates the original, unnormalized germ to the normal
    /// form.
    pub fn full_conjugator(&self) -> TruncatedSeries {
        let order = self.truncation_order();
        let linear = TruncatedSeries::linear(self.scale.clone(), order);
        self.conjugator
            .compose(&linear)
            .expect("linear series has zero constant term")
    }
}

/// The order of tangency: smallest `n >= 2` with `a_n != 0`.
pub fn detect_m(f: &Germ) -> Result<usize, Error> {
    let order = f.truncation_order();
    (2..=order)
        .find(|&n| !f.coeff(n).is_zero())
        .ok_or(Error::IdentityGerm { order })
}

/// Rescale by the linear map `λx` so the leading coefficient becomes 1,
/// with `λ^{m-1} = a_m` solved over the rationals.
pub fn normalize_leading(f: &Germ) -> Result<(Rat, Germ), Error> {
    let m = detect_m(f)?;
    let leading = f.coeff(m).clone();
    if leading.is_one() {
        return Ok((Rat::one(), f.clone()));
    }
    let index = (m - 1) as u32;
    let lambda = nth_root_exact(&leading, index).ok_or(Error::NeedsFieldExtension {
        m,
        index,
        leading: leading.clone(),
    })?;
    let linear = TruncatedSeries::linear(lambda.clone(), f.truncation_order());
    let normalized = conjugate(&linear, f.series())?;
    let normalized = Germ::new(normalized).expect("linear conjugation preserves tangency");
    Ok((lambda, normalized))
}

/// Run the elementary-conjugation recursion on a normalized germ
/// (`a_m = 1`).
///
/// For `n = 2, 3, ...` (skipping the free index `n = m`, where instead the
/// invariant `μ` is read off as the `(2m-1)`-coefficient of the current
/// conjugated series), the step coefficient is
///
/// ```text
/// c_n = α_{n+m-1} / (m - n)
/// ```
///
/// where `α_{n+m-1}` is the `(n+m-1)`-coefficient of `H_{n-1} ∘ f ∘
/// H_{n-1}^{-1}`; the target coefficient at that degree is zero because the
/// normal form has terms only at degrees 1, `m` and `2m-1`. Each conjugated
/// series is recomputed by direct composition, truncated just past the
/// degree the step reads.
pub fn normal_form(f: &Germ) -> Result<GermClassification, Error> {
    let order = f.truncation_order();
    let m = detect_m(f)?;
    if !f.coeff(m).is_one() {
        return Err(Error::NotNormalized {
            m,
            leading: f.coeff(m).clone(),
        });
    }
    if 2 * m - 1 > order {
        return Err(Error::InsufficientTruncation {
            required: 2 * m - 1,
            actual: order,
        });
    }

    let mut step_coeffs = vec![Rat::zero(); order + 1];
    let mut conjugator = TruncatedSeries::identity(order);
    // H_{n-1} ∘ f ∘ H_{n-1}^{-1}, advanced one elementary conjugation at a
    // time: H_n ∘ f ∘ H_n^{-1} = h_n ∘ (H_{n-1} ∘ f ∘ H_{n-1}^{-1}) ∘
    // h_n^{-1} exactly, composition being associative degreewise.
    let mut current = f.series().clone();
    let mut mu = None;

    // Steps with n + m - 1 > order cannot be determined at this truncation
    // and do not affect the series through degree `order`; their c_n stay 0.
    let last = order + 1 - m;
    for n in 2..=last {
        if n == m {
            mu = Some(current.coeff(2 * m - 1).clone());
            continue;
        }
        let alpha = current.coeff(n + m - 1);
        if alpha.is_zero() {
            continue;
        }
        let divisor = Rat::from_integer(BigInt::from(m as i64 - n as i64));
        let c = alpha / divisor;
        step_coeffs[n] = c.clone();
        // H_n = h_n ∘ H_{n-1} = H_{n-1} + c_n * H_{n-1}^n
        conjugator = &conjugator + &conjugator.pow(n).scale(&c);
        // current = h_n ∘ current ∘ h_n^{-1}; the step polynomial is sparse,
        // so its inverse's power chain stays sparse
        let step = TruncatedSeries::binomial_step(&c, n, order);
        let outer = &current + &current.pow(n).scale(&c);
        current = outer.compose(&step.comp_inverse()?)?;
    }

    let mu = mu.expect("loop reaches the free index once 2m-1 <= order");
    Ok(GermClassification {
        m,
        mu,
        scale: Rat::one(),
        step_coeffs,
        conjugator,
        germ: f.clone(),
    })
}

/// Full pipeline: rescale the leading coefficient to 1, then run the
/// normal-form recursion. The returned classification records the scale.
pub fn classify(f: &Germ) -> Result<GermClassification, Error> {
    let (scale, normalized) = normalize_leading(f)?;
    let mut classification = normal_form(&normalized)?;
    classification.scale = scale;
    Ok(classification)
}

/// Just the invariant pair `(m, μ)`.
pub fn invariants(f: &Germ) -> Result<(usize, Rat), Error> {
    let classification = classify(f)?;
    Ok((classification.m, classification.mu))
}

/// Which invariant separates two inequivalent germs.
#[derive(Debug, Clone, PartialEq)]
pub enum InvariantMismatch {
    TangencyOrder { left: usize, right: usize },
    NormalFormCoefficient { left: Rat, right: Rat },
}

/// Result of a conjugacy check.
#[derive(Debug, Clone, PartialEq)]
pub enum ConjugacyOutcome {
    /// `conjugate(h, f) = g` through the common truncation order. The
    /// conjugator's linear coefficient is the ratio of the two rescalings,
    /// so it is tangent to the identity exactly when they agree.
    Equivalent { conjugator: TruncatedSeries },
    NotEquivalent(InvariantMismatch),
}

/// Decide conjugacy of two germs at their common truncation order and, when
/// the invariants agree, produce the witness `h = Φ_g^{-1} ∘ Φ_f` built from
/// the two full conjugators.
pub fn check_conjugacy(f: &Germ, g: &Germ) -> Result<ConjugacyOutcome, Error> {
    let order = f.truncation_order().min(g.truncation_order());
    let left = classify(&f.truncated(order))?;
    let right = classify(&g.truncated(order))?;
    if left.m != right.m {
        return Ok(ConjugacyOutcome::NotEquivalent(
            InvariantMismatch::TangencyOrder {
                left: left.m,
                right: right.m,
            },
        ));
    }
    if left.mu != right.mu {
        return Ok(ConjugacyOutcome::NotEquivalent(
            InvariantMismatch::NormalFormCoefficient {
                left: left.mu,
                right: right.mu,
            },
        ));
    }
    let conjugator = right
        .full_conjugator()
        .comp_inverse()?
        .compose(&left.full_conjugator())?;
    Ok(ConjugacyOutcome::Equivalent { conjugator })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn tangency_order_detection() {
        assert_eq!(detect_m(&Germ::from_ints(&[0, 1, 1, 5])).unwrap(), 2);
        assert_eq!(detect_m(&Germ::from_ints(&[0, 1, 0, 0, 0, 1])).unwrap(), 5);
        assert_eq!(detect_m(&Germ::from_ints(&[0, 1, 0, 3])).unwrap(), 3);
        assert_eq!(
            detect_m(&Germ::identity(6)),
            Err(Error::IdentityGerm { order: 6 })
        );
    }

    #[test]
    fn leading_normalization() {
        let (scale, normalized) = normalize_leading(&Germ::from_ints(&[0, 1, 1, 0])).unwrap();
        assert_eq!(scale, rat(1));
        assert_eq!(normalized, Germ::from_ints(&[0, 1, 1, 0]));

        // x + 4x^3: λ^2 = 4
        let f = Germ::from_ints(&[0, 1, 0, 4, 0]);
        let (scale, normalized) = normalize_leading(&f).unwrap();
        assert_eq!(scale, rat(2));
        assert_eq!(*normalized.coeff(3), rat(1));
        let linear = TruncatedSeries::linear(rat(2), 4);
        assert_eq!(
            normalized.series(),
            &conjugate(&linear, f.series()).unwrap()
        );

        // √2 is irrational
        assert_eq!(
            normalize_leading(&Germ::from_ints(&[0, 1, 0, 2])),
            Err(Error::NeedsFieldExtension {
                m: 3,
                index: 2,
                leading: rat(2)
            })
        );
    }

    #[test]
    fn normal_form_fixed_points() {
        // already in normal form: all steps vanish
        let f = Germ::from_ints(&[0, 1, 1, 0, 0, 0]);
        let c = normal_form(&f).unwrap();
        assert_eq!((c.m, c.mu.clone()), (2, rat(0)));
        assert_eq!(c.conjugator, TruncatedSeries::identity(5));
        assert!(c.step_coeffs.iter().all(Rat::is_zero));

        let g = Germ::from_ints(&[0, 1, 1, 1, 0, 0]);
        let c = normal_form(&g).unwrap();
        assert_eq!((c.m, c.mu.clone()), (2, rat(1)));
        assert_eq!(c.conjugator, TruncatedSeries::identity(5));
    }

    #[test]
    fn normal_form_reduction_verified_by_composition() {
        let order = 12;
        let mut coeffs = vec![0i64; order + 1];
        coeffs[1] = 1;
        coeffs[2] = 1;
        coeffs[3] = 1;
        coeffs[4] = 1;
        let f = Germ::from_ints(&coeffs);
        let c = normal_form(&f).unwrap();
        assert_eq!((c.m, c.mu.clone()), (2, rat(1)));
        assert_ne!(c.conjugator, TruncatedSeries::identity(order));
        let reduced = conjugate(&c.conjugator, f.series()).unwrap();
        assert_eq!(reduced, c.normal_form_series());
        assert!(c.step_coeffs[2].is_zero(), "c_m is the free coefficient");
    }

    #[test]
    fn normal_form_requires_unit_leading_coefficient() {
        let f = Germ::from_ints(&[0, 1, 2, 0, 0]);
        assert_eq!(
            normal_form(&f),
            Err(Error::NotNormalized {
                m: 2,
                leading: rat(2)
            })
        );
    }

    #[test]
    fn invariants_examples() {
        assert_eq!(
            invariants(&Germ::from_ints(&[0, 1, 1, 7])).unwrap(),
            (2, rat(7))
        );
        // μ = a_3 / a_2^2 after rescaling by λ = 2
        assert_eq!(
            invariants(&Germ::from_ints(&[0, 1, 2, 4])).unwrap(),
            (2, rat(1))
        );
        assert_eq!(
            invariants(&Germ::from_ints(&[0, 1, 0, 1, 0, 0])).unwrap(),
            (3, rat(0))
        );
    }

    #[test]
    fn truncation_too_small_for_mu() {
        let f = Germ::from_ints(&[0, 1, 0, 1, 0]);
        assert_eq!(
            invariants(&f),
            Err(Error::InsufficientTruncation {
                required: 5,
                actual: 4
            })
        );
    }

    #[test]
    fn self_conjugacy_gives_identity() {
        let f = Germ::from_ints(&[0, 1, 1, 3, -2, 0, 1, 0, 0, 0]);
        match check_conjugacy(&f, &f).unwrap() {
            ConjugacyOutcome::Equivalent { conjugator } => {
                assert_eq!(conjugator, TruncatedSeries::identity(9));
            }
            other => panic!("expected equivalence, got {other:?}"),
        }
    }

    #[test]
    fn mu_separates_germs() {
        let f = Germ::from_ints(&[0, 1, 1, 0, 0, 0]);
        let g = Germ::from_ints(&[0, 1, 1, 1, 0, 0]);
        assert_eq!(
            check_conjugacy(&f, &g).unwrap(),
            ConjugacyOutcome::NotEquivalent(InvariantMismatch::NormalFormCoefficient {
                left: rat(0),
                right: rat(1),
            })
        );
        let h = Germ::from_ints(&[0, 1, 0, 1, 0, 0]);
        assert_eq!(
            check_conjugacy(&f, &h).unwrap(),
            ConjugacyOutcome::NotEquivalent(InvariantMismatch::TangencyOrder {
                left: 2,
                right: 3
            })
        );
    }

    #[test]
    fn conjugacy_witness_verified_by_composition() {
        let order = 10;
        let mut coeffs = vec![0i64; order + 1];
        coeffs[1] = 1;
        coeffs[2] = 1;
        coeffs[3] = 1;
        coeffs[4] = 1;
        let f = Germ::from_ints(&coeffs);
        coeffs[4] = 0;
        let g = Germ::from_ints(&coeffs);
        match check_conjugacy(&f, &g).unwrap() {
            ConjugacyOutcome::Equivalent { conjugator } => {
                let image = conjugate(&conjugator, f.series()).unwrap();
                assert_eq!(image, *g.series());
            }
            other => panic!("expected equivalence, got {other:?}"),
        }
    }

    #[test]
    fn conjugacy_with_distinct_scales() {
        // x + 4x^3 is conjugate to x + x^3 via a non-tangent linear map.
        let f = Germ::from_ints(&[0, 1, 0, 4, 0, 0, 0, 0]);
        let g = Germ::from_ints(&[0, 1, 0, 1, 0, 0, 0, 0]);
        match check_conjugacy(&f, &g).unwrap() {
            ConjugacyOutcome::Equivalent { conjugator } => {
                assert_eq!(*conjugator.coeff(1), rat(2));
                let image = conjugate(&conjugator, f.series()).unwrap();
                assert_eq!(image, *g.series());
            }
            other => panic!("expected equivalence, got {other:?}"),
        }
    }

    #[test]
    fn conjugator_rebuilds_from_step_coefficients() {
        let f = Germ::from_ints(&[0, 1, 1, 4, -2, 0, 3, 1, 0, 0, -5, 0, 0, 0]);
        let classification = classify(&f).unwrap();
        let order = classification.truncation_order();
        let mut rebuilt = TruncatedSeries::identity(order);
        for (n, c) in classification.step_coeffs.iter().enumerate().skip(2) {
            if !c.is_zero() {
                rebuilt = &rebuilt + &rebuilt.pow(n).scale(c);
            }
        }
        assert_eq!(rebuilt, classification.conjugator);
    }

    #[test]
    fn recursion_is_deterministic() {
        let f = Germ::from_ints(&[0, 1, 1, -3, 2, 7, 0, 1, 0, 0, 5, 0, 0]);
        let first = classify(&f).unwrap();
        let second = classify(&f).unwrap();
        assert_eq!(first.step_coeffs, second.step_coeffs);
        assert_eq!(first, second);
    }

    #[test]
    fn mu_is_a3_over_a2_squared_for_m_2() {
        for a2 in [1i64, 2, -1, 3] {
            for a3 in [-4i64, 0, 5, 9] {
                let f = Germ::from_ints(&[0, 1, a2, a3, 2, -1, 0, 0]);
                let (m, mu) = invariants(&f).unwrap();
                assert_eq!(m, 2);
                assert_eq!(mu, ratio(a3, a2 * a2));
            }
        }
    }
}
