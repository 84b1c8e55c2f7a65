//! Shared input builders for the kernel benchmarks.

use germ_core::series::{Germ, TruncatedSeries};
use germ_core::{rat, ratio, Rat, VectorField};

/// The truncation of x/(1-x), the standard nontrivial germ.
pub fn mobius_germ(order: usize) -> Germ {
    let mut coeffs = vec![rat(1); order + 1];
    coeffs[0] = rat(0);
    Germ::new(TruncatedSeries::from_coeffs(coeffs)).expect("tangent to the identity")
}

/// A deterministic pseudo-random integral germ with a_2 = 1.
pub fn integral_germ(order: usize) -> Germ {
    let mut coeffs = vec![Rat::default(); order + 1];
    coeffs[1] = rat(1);
    coeffs[2] = rat(1);
    for (n, c) in coeffs.iter_mut().enumerate().skip(3) {
        *c = rat((n as i64 * 37 + 11) % 19 - 9);
    }
    Germ::new(TruncatedSeries::from_coeffs(coeffs)).expect("tangent to the identity")
}

/// A germ of the rescaled shape x + x^2 + Σ b_n / p^n x^n.
pub fn rescaled_germ(order: usize, p: i64) -> Germ {
    let mut coeffs = vec![Rat::default(); order + 1];
    coeffs[1] = rat(1);
    coeffs[2] = rat(1);
    for n in 3..=order {
        let b = (n as i64 * 7 + 3) % p;
        coeffs[n] = ratio(b, p.pow(n as u32));
    }
    coeffs[3] = ratio(1, p.pow(3));
    Germ::new(TruncatedSeries::from_coeffs(coeffs)).expect("tangent to the identity")
}

/// A deterministic integral vector field vanishing to order 2.
pub fn integral_field(order: usize) -> VectorField {
    let mut coeffs = vec![Rat::default(); order + 1];
    for (n, c) in coeffs.iter_mut().enumerate().skip(2) {
        *c = rat((n as i64 * 13 + 5) % 19 - 9);
    }
    VectorField::new(TruncatedSeries::from_coeffs(coeffs)).expect("vanishes to order 2")
}
