//! Exact-arithmetic local dynamics over the rationals with p-adic
//! certificates.
//!
//! This crate classifies power-series germs tangent to the identity under
//! formal conjugacy, entirely in exact rational arithmetic:
//!
//! - [`valuation`]: p-adic valuations, factorial valuations, digit sums,
//!   multinomials.
//! - [`series`]: truncated formal power series with composition,
//!   compositional inversion, and conjugation.
//! - [`mod@classify`]: the normal form `x + x^m + μ x^{2m-1}`, the invariant
//!   pair `(m, μ)`, and the conjugating series.
//! - [`certify`]: the jump function `σ_m`/`ε_m` and falsifiable valuation
//!   certificates for the denominator growth of conjugator coefficients.
//! - [`flow`]: formal flows of vector fields, compositional roots, and
//!   centralizers.
//! - [`json`]: the machine-readable serialization used by the CLI.
//!
//! Everything is a pure function over immutable values; there is no floating
//! point anywhere.
//!
//! ```
//! use germ_core::series::{Germ, TruncatedSeries};
//! use germ_core::{classify, certify_integral, rat};
//!
//! // x + x^2 + x^3 + x^4, known through degree 16
//! let mut coeffs = vec![0i64; 17];
//! coeffs[1..=4].fill(1);
//! let f = Germ::new(TruncatedSeries::from_ints(&coeffs))?;
//!
//! let classification = classify(&f)?;
//! assert_eq!(classification.m, 2);
//! assert_eq!(classification.mu, rat(1));
//!
//! // (n-m)! c_n and (n-m)! A_n are 2-adic integers
//! assert!(certify_integral(&classification, 2)?.passed());
//! # Ok::<(), germ_core::Error>(())
//! ```

pub mod certify;
pub mod classify;
mod error;
pub mod flow;
pub mod json;
pub mod rational;
pub mod series;
pub mod valuation;

pub use certify::{
    certify_general, certify_integral, choose_q_exponent, radius_lower_bound,
    sigma_property_suite, CertificateReport, CoefficientKind, IndexTuple, MarginRecord,
    SigmaParams, SigmaSuiteReport, Verdict,
};
pub use classify::{
    check_conjugacy, classify, detect_m, invariants, normal_form, normalize_leading,
    ConjugacyOutcome, GermClassification, InvariantMismatch,
};
pub use error::Error;
pub use flow::{
    centralizer_element, check_commute, check_group_law, embedding_field, flow_coefficients,
    flow_integrality_check, integralizing_scale_exponent, iterate, nth_root, rescale_field,
    CommuteCheck, FlowMap, GroupLawCheck, TimePoly, VectorField,
};
pub use rational::{parse_rat, rat, ratio, Rat};
pub use series::{conjugate, Germ, TruncatedSeries};
pub use valuation::{check_prime, digit_sum, multinomial, ord, ord_factorial, Valuation};
