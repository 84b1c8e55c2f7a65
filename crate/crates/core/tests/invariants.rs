//! Structural invariants checked over randomized inputs.

use num_traits::{One, Zero};
use proptest::prelude::*;

use germ_core::json::{series_from_value, series_to_value};
use germ_core::series::{conjugate, Germ, TruncatedSeries};
use germ_core::{
    check_group_law, flow_coefficients, invariants, iterate, nth_root, ord, rat, ratio,
    GroupLawCheck, Rat, Valuation, VectorField,
};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-30i64..=30, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

fn small_nonzero_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("nonzero", |r| !r.is_zero())
}

/// A series with zero constant term at the given order.
fn pointed_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec(small_rat(), order)
        .prop_map(|mut coeffs| {
            coeffs.insert(0, Rat::zero());
            TruncatedSeries::from_coeffs(coeffs)
        })
}

/// A composition-invertible series: zero constant term, nonzero linear term.
fn invertible_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    (small_nonzero_rat(), proptest::collection::vec(small_rat(), order - 1)).prop_map(
        move |(linear, rest)| {
            let mut coeffs = vec![Rat::zero(), linear];
            coeffs.extend(rest);
            TruncatedSeries::from_coeffs(coeffs)
        },
    )
}

/// A germ tangent to the identity.
fn germ(order: usize) -> impl Strategy<Value = Germ> {
    proptest::collection::vec(small_rat(), order - 1).prop_map(|rest| {
        let mut coeffs = vec![Rat::zero(), Rat::one()];
        coeffs.extend(rest);
        Germ::new(TruncatedSeries::from_coeffs(coeffs)).expect("tangent by construction")
    })
}

proptest! {
    #[test]
    fn ord_is_additive_and_ultrametric(
        x in small_rat(),
        y in small_rat(),
        p in prop::sample::select(vec![2u64, 3, 5, 7]),
    ) {
        let ox = ord(&x, p).unwrap();
        let oy = ord(&y, p).unwrap();
        let product = ord(&(&x * &y), p).unwrap();
        match (ox, oy) {
            (Valuation::Finite(a), Valuation::Finite(b)) => {
                prop_assert_eq!(product, Valuation::Finite(a + b));
            }
            _ => prop_assert_eq!(product, Valuation::Infinite),
        }
        let sum = ord(&(&x + &y), p).unwrap();
        prop_assert!(sum >= ox.min(oy));
        if ox != oy {
            prop_assert_eq!(sum, ox.min(oy));
        }
    }

    #[test]
    fn composition_is_associative(
        f in pointed_series(6),
        g in pointed_series(6),
        h in pointed_series(6),
    ) {
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn compositional_inverse_round_trips(f in invertible_series(7)) {
        let g = f.comp_inverse().unwrap();
        let x = TruncatedSeries::identity(7);
        prop_assert_eq!(f.compose(&g).unwrap(), x.clone());
        prop_assert_eq!(g.compose(&f).unwrap(), x);
        prop_assert_eq!(g.comp_inverse().unwrap(), f);
    }

    /// For η = α₁x + α_d x^d + ⋯ and j ≠ T with T < j + d - 1, the
    /// T-coefficient of η^j vanishes.
    #[test]
    fn bracket_lemma(
        alpha1 in small_rat(),
        tail in proptest::collection::vec(small_rat(), 12),
        d in 2usize..=5,
        j in 1usize..=8,
        t in 0usize..=13,
    ) {
        prop_assume!(t != j && t < j + d - 1);
        let order = 13;
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[1] = alpha1;
        for (offset, value) in tail.iter().enumerate() {
            let degree = d + offset;
            if degree <= order {
                coeffs[degree] = value.clone();
            }
        }
        let eta = TruncatedSeries::from_coeffs(coeffs);
        prop_assert_eq!(eta.pow(j).bracket(t).unwrap(), Rat::zero());
    }

    #[test]
    fn conjugation_is_a_group_action(
        h1 in invertible_series(8),
        h2 in invertible_series(8),
        f in pointed_series(8),
    ) {
        let stepwise = conjugate(&h2, &conjugate(&h1, &f).unwrap()).unwrap();
        let composed = conjugate(&h2.compose(&h1).unwrap(), &f).unwrap();
        prop_assert_eq!(stepwise, composed);
    }

    #[test]
    fn series_json_round_trips(f in pointed_series(9)) {
        let value = series_to_value(&f);
        prop_assert_eq!(series_from_value(&value).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Conjugating by any tangent-to-identity polynomial preserves (m, μ).
    #[test]
    fn invariants_are_conjugacy_invariant(
        tail in proptest::collection::vec(small_rat(), 5),
        germ_tail in proptest::collection::vec(small_rat(), 7),
        m in 2usize..=3,
    ) {
        let order = 10;
        let mut h = vec![Rat::zero(), Rat::one()];
        h.extend(tail);
        h.resize(order + 1, Rat::zero());
        let h = TruncatedSeries::from_coeffs(h);

        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[1] = Rat::one();
        coeffs[m] = Rat::one();
        for (offset, value) in germ_tail.iter().enumerate() {
            let degree = m + 1 + offset;
            if degree <= order {
                coeffs[degree] = value.clone();
            }
        }
        let f = Germ::new(TruncatedSeries::from_coeffs(coeffs)).unwrap();
        let moved = Germ::new(conjugate(&h, f.series()).unwrap()).unwrap();
        prop_assert_eq!(invariants(&moved).unwrap(), invariants(&f).unwrap());
    }

    #[test]
    fn roots_invert_iteration(
        f in germ(10),
        n in 2usize..=4,
    ) {
        let root = nth_root(&f, n).unwrap();
        prop_assert_eq!(iterate(&root, n), f);
    }

    #[test]
    fn flows_satisfy_the_group_law(
        field_tail in proptest::collection::vec((-9i64..=9).prop_map(rat), 9),
        s in small_rat(),
        t in small_rat(),
    ) {
        let mut coeffs = vec![Rat::zero(), Rat::zero()];
        coeffs.extend(field_tail);
        let field = VectorField::new(TruncatedSeries::from_coeffs(coeffs)).unwrap();
        let flow = flow_coefficients(&field);
        prop_assert_eq!(check_group_law(&flow, &s, &t), GroupLawCheck::Pass);
    }
}

/// Monomials of the conjugator grade by weight: substituting
/// `c_i -> s^{i-1} c_i` scales the degree-`n` coefficient by `s^{n-1}`,
/// which is exactly the length relation `n = |i| - ℓ(i) + 1` for every
/// contributing index tuple.
#[test]
fn conjugator_coefficients_grade_by_weight() {
    let order = 12;
    let steps: Vec<(usize, Rat)> = vec![
        (2, ratio(1, 2)),
        (3, rat(-3)),
        (4, ratio(2, 3)),
        (5, rat(1)),
        (6, rat(7)),
        (7, ratio(-5, 4)),
    ];
    let scale = ratio(3, 2);

    let build = |scaled: bool| -> TruncatedSeries {
        let mut h = TruncatedSeries::identity(order);
        for (n, c) in &steps {
            let mut c = c.clone();
            if scaled {
                let mut power = Rat::one();
                for _ in 1..*n {
                    power *= &scale;
                }
                c *= power;
            }
            // h_n ∘ H = H + c H^n
            h = &h + &h.pow(*n).scale(&c);
        }
        h
    };

    let plain = build(false);
    let graded = build(true);
    let mut expected_factor = Rat::one();
    for n in 1..=order {
        assert_eq!(
            *graded.coeff(n),
            plain.coeff(n) * &expected_factor,
            "degree {n}"
        );
        expected_factor *= &scale;
    }
}

/// The recursion's output must match a from-scratch conjugation of the input
/// by the stored conjugator: the composition oracle for the whole pipeline.
#[test]
fn classification_is_anchored_to_direct_composition() {
    let order = 16;
    let f = Germ::new(TruncatedSeries::from_coeffs(
        (0..=order)
            .map(|d| match d {
                0 => rat(0),
                1 => rat(1),
                2 => rat(1),
                d => ratio((d as i64 * 11) % 17 - 8, 3),
            })
            .collect(),
    ))
    .unwrap();
    let classification = germ_core::classify(&f).unwrap();
    let reduced = conjugate(&classification.conjugator, f.series()).unwrap();
    assert_eq!(reduced, classification.normal_form_series());
}
