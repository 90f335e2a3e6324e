//! Error type shared by the whole crate.

use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Numerical routines return values, not panics: domain violations and
/// non-convergence are surfaced through this enum so callers can react
/// (the CLI maps them onto exit codes, the verification checks record them).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A polynomial degree exceeded the configured cap.
    ///
    /// Degrees are capped because double-precision recurrences drift and
    /// runtimes grow without bound; see [`crate::specfun::PolyDegree`].
    #[error("polynomial degree {degree} exceeds the cap of {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },

    /// An argument failed a basic domain check (non-finite, non-positive
    /// where positivity is required, malformed grid, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A generalized Laguerre upper index below `-m`, where the polynomial
    /// is identically zero and the transform to non-negative index fails.
    #[error("Laguerre index k={k} is below -m={neg_m}; only k >= -m is defined")]
    IndexOutOfRange { k: i64, neg_m: i64 },

    /// A quadrature order outside the supported range.
    #[error("quadrature order {order} outside 1..={max}")]
    InvalidOrder { order: usize, max: usize },

    /// A series failed to satisfy its stopping rule within the term budget.
    #[error(
        "series did not converge after {terms_used} terms (last-term magnitude {tail_estimate:.3e})"
    )]
    NonConvergence { terms_used: usize, tail_estimate: f64 },

    /// The closed form of the Hermite product integral needs the first
    /// degree to be the smaller one; swap the factors (the integral is
    /// symmetric under `(s, alpha) <-> (l, gamma)`).
    #[error("closed form requires s <= l, got s={s}, l={l}; swap the two factors")]
    OrderViolation { s: usize, l: usize },

    /// A quadrature rule too coarse for the requested integrand degree.
    #[error("quadrature order {actual} cannot integrate this exactly; need at least {required}")]
    InsufficientQuadratureOrder { required: usize, actual: usize },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Reject NaN and infinities up front so they cannot masquerade as
/// converged results downstream.
pub(crate) fn ensure_finite(value: f64, name: &str) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{name} must be finite, got {value}")))
    }
}
