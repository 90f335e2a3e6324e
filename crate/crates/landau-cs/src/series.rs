//! Truncated summation with an explicit, uniform stopping rule.
//!
//! Every infinite series in this crate — reproducing kernels, coherent
//! state expansions, the generating identity — runs through
//! [`sum_with_policy`], so truncation behaves identically everywhere: a
//! finite *prefix* (e.g. the negative-index block of a Landau expansion)
//! is always summed in full, then the tail is consumed until a fixed
//! number of consecutive terms falls below `tail_tol` relative to the
//! running partial sum. The series value, the number of terms consumed
//! and a tail estimate are reported together; blowing the term budget is
//! an error, never a silently wrong number.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// When to stop summing a series tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    /// Hard budget on total terms (prefix included).
    pub max_terms: usize,
    /// Relative threshold a tail term must drop below to count as small.
    pub tail_tol: f64,
    /// How many *consecutive* small terms end the sum.
    ///
    /// The window must exceed the longest run of exact zeros a live
    /// series can produce. At symmetric evaluation points the Hermite
    /// factors vanish on every other term (structural period-two zeros),
    /// and an accidental zero of the Laguerre coefficient in between
    /// aligns those into runs of exactly three. Six would additionally
    /// need coefficients of three consecutive even indices to share a
    /// root, which the families summed here cannot do — so the default
    /// window of six never mistakes a degenerate run for a tail.
    pub consecutive_small: usize,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self { max_terms: 512, tail_tol: 1e-14, consecutive_small: 6 }
    }
}

impl TruncationPolicy {
    /// The default policy with a different term budget.
    pub fn with_max_terms(max_terms: usize) -> Self {
        Self { max_terms, ..Self::default() }
    }

    fn validate(&self) -> Result<()> {
        if self.max_terms == 0 {
            return Err(Error::InvalidInput("max_terms must be at least 1".into()));
        }
        if !(self.tail_tol > 0.0 && self.tail_tol.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "tail_tol must be positive and finite, got {}",
                self.tail_tol
            )));
        }
        if self.consecutive_small == 0 {
            return Err(Error::InvalidInput("consecutive_small must be at least 1".into()));
        }
        Ok(())
    }
}

/// A truncated series value with its convergence diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    /// The partial sum at the stopping point.
    pub value: Complex64,
    /// Terms consumed, prefix included. Never exceeds the policy budget.
    pub terms_used: usize,
    /// Sum of the magnitudes of the terms that triggered the stop (zero
    /// when a finite series simply ran out of terms).
    pub tail_estimate: f64,
}

/// Magnitude floor used when the running partial sum is exactly zero, so
/// an all-zero tail still counts as small rather than dividing by zero.
const PARTIAL_FLOOR: f64 = 1e-300;

/// Sum `prefix` in full, then `tail` under the policy's stopping rule.
///
/// `tail` may be an unbounded iterator; the policy's `max_terms` bounds
/// consumption. Returns [`Error::NonConvergence`] if the budget is spent
/// before the stop rule fires (with the last term's magnitude as the tail
/// estimate), and [`Error::InvalidInput`] for a malformed policy.
pub fn sum_with_policy(
    policy: &TruncationPolicy,
    prefix: impl IntoIterator<Item = Complex64>,
    tail: impl IntoIterator<Item = Complex64>,
) -> Result<SeriesResult> {
    policy.validate()?;
    let mut value = Complex64::new(0.0, 0.0);
    let mut terms_used = 0_usize;

    for term in prefix {
        if terms_used == policy.max_terms {
            return Err(Error::NonConvergence { terms_used, tail_estimate: term.norm() });
        }
        value += term;
        terms_used += 1;
    }

    let mut small_run: Vec<f64> = Vec::with_capacity(policy.consecutive_small);
    for term in tail {
        if terms_used == policy.max_terms {
            return Err(Error::NonConvergence { terms_used, tail_estimate: term.norm() });
        }
        value += term;
        terms_used += 1;
        let magnitude = term.norm();
        if magnitude <= policy.tail_tol * value.norm().max(PARTIAL_FLOOR) {
            small_run.push(magnitude);
            if small_run.len() == policy.consecutive_small {
                return Ok(SeriesResult {
                    value,
                    terms_used,
                    tail_estimate: small_run.iter().sum(),
                });
            }
        } else {
            small_run.clear();
        }
    }

    // A genuinely finite series: it ended before the stop rule mattered.
    Ok(SeriesResult { value, terms_used, tail_estimate: 0.0 })
}
