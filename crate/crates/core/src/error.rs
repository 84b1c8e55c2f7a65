use thiserror::Error;

use crate::rational::Rat;

/// Errors produced by the exact-arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The supplied modulus failed the trial-division primality check.
    #[error("{0} is not prime (trial division up to {})", crate::valuation::TRIAL_DIVISION_BOUND)]
    NotPrime(u64),

    /// Composition `f(g(x))` requires `g(0) = 0`.
    #[error("composition requires a zero constant term in the inner series")]
    NonzeroConstantTerm,

    /// Compositional inversion requires a zero constant term and a nonzero
    /// linear term.
    #[error("series is not invertible under composition")]
    NotInvertible,

    /// A coefficient beyond the truncation order was requested.
    #[error("degree {degree} is beyond the truncation order {order}")]
    DegreeOutOfRange { degree: usize, order: usize },

    /// No tangency order exists: the germ is the identity through its
    /// truncation order.
    #[error("germ equals the identity through order {order}; no tangency order at this truncation")]
    IdentityGerm { order: usize },

    /// The leading coefficient has no rational root of the required index, so
    /// normalization would need a field extension.
    #[error(
        "leading coefficient {leading} at degree {m} has no rational {index}-th root; \
         rescale by an adjoined root manually"
    )]
    NeedsFieldExtension { m: usize, index: u32, leading: Rat },

    /// The operation needs a higher truncation order than the input carries.
    #[error("truncation order {actual} is too small: order {required} is required")]
    InsufficientTruncation { required: usize, actual: usize },

    /// An operation that expects a leading coefficient of 1 was handed an
    /// unnormalized germ.
    #[error("germ is not normalized: coefficient at degree {m} is {leading}, expected 1")]
    NotNormalized { m: usize, leading: Rat },

    /// The certificate's hypotheses do not hold for this input.
    #[error("certificate does not apply: {0}")]
    InapplicableCertificate(String),

    /// Catch-all for violated call contracts.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
