//! The bilateral Hermite generating identity.
//!
//! For a field strength `beta`, level `m`, plane label `(a, b)` and real
//! argument `xi`, write `w = a - ib`. The series
//!
//! `sum_{k=-m}^{inf} (sqrt(beta) w)^k / (2^k (k+m)!)
//!     * L_m^(k)(beta (a^2+b^2) / 2) * H_{k+m}(xi)`
//!
//! has the closed form
//!
//! `(1/m!) exp(-beta w^2 / 4 + xi w sqrt(beta)) H_m(xi - a sqrt(beta))`.
//!
//! (The same label orientation `w = a - ib` must appear on both sides;
//! the classical `m = 0`, `b = 0` reduction is insensitive to it, which
//! is how sign slips here survive casual checks. The conjugation matches
//! the expansion coefficients of the displaced states in
//! [`crate::coherent::states`], which carry conjugated plane-basis
//! values for the same reason.)
//!
//! At `m = 0`, `b = 0`, `a = 2 tau / sqrt(beta)` this collapses to the
//! classical one-sided generating function
//! `exp(2 xi tau - tau^2) = sum_n H_n(xi) tau^n / n!`.
//!
//! [`genfun_lhs`] sums the series under a truncation policy, assembling
//! every term in log space; [`genfun_rhs`] evaluates the closed form. The
//! two are independent code paths on purpose — comparing them is the
//! crate's strongest end-to-end consistency check.

use num_complex::Complex64;

use crate::error::{ensure_finite, Error, Result};
use crate::series::{sum_with_policy, SeriesResult, TruncationPolicy};
use crate::specfun::{
    hermite_scaled, laguerre_eval, log_factorial, LaguerreIndex, PolyDegree, ScaledHermiteSeq,
    ScaledValue,
};

/// Validated parameter bundle for the identity: `beta > 0`, `m` within
/// the degree cap, and finite `a`, `b`, `xi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenFunParams {
    beta: f64,
    m: usize,
    a: f64,
    b: f64,
    xi: f64,
}

impl GenFunParams {
    /// Validate and bundle the parameters.
    pub fn new(beta: f64, m: usize, a: f64, b: f64, xi: f64) -> Result<Self> {
        ensure_finite(beta, "beta")?;
        if beta <= 0.0 {
            return Err(Error::InvalidInput(format!("beta must be positive, got {beta}")));
        }
        PolyDegree::new(m)?;
        ensure_finite(a, "a")?;
        ensure_finite(b, "b")?;
        ensure_finite(xi, "xi")?;
        Ok(Self { beta, m, a, b, xi })
    }

    /// Field strength `beta`.
    pub fn beta(self) -> f64 {
        self.beta
    }

    /// Level index `m`.
    pub fn m(self) -> usize {
        self.m
    }

    /// First label coordinate `a`.
    pub fn a(self) -> f64 {
        self.a
    }

    /// Second label coordinate `b`.
    pub fn b(self) -> f64 {
        self.b
    }

    /// Evaluation point `xi`.
    pub fn xi(self) -> f64 {
        self.xi
    }

    /// The classical generating-function variable `tau = a sqrt(beta) / 2`
    /// that the `m = 0`, `b = 0` reduction runs in.
    pub fn tau(self) -> f64 {
        self.a * self.beta.sqrt() / 2.0
    }
}

/// Sum the bilateral series side of the identity.
///
/// Terms are ordered by ascending `k` starting at `k = -m`; the finite
/// block `k <= 0` is summed unconditionally and the stopping rule applies
/// from `k = 1` on. Each term combines `(sqrt(beta) w / 2)^k / (k+m)!`,
/// the Laguerre factor, and a shared log-scaled Hermite recurrence, so no
/// intermediate overflows even when individual factors would.
pub fn genfun_lhs(p: &GenFunParams, policy: &TruncationPolicy) -> Result<SeriesResult> {
    let m = p.m;
    let w = Complex64::new(p.a, -p.b);
    let u = p.beta * w.norm_sqr() / 2.0;
    let v_scaled = ScaledValue::from_complex(w * (p.beta.sqrt() / 2.0));
    let degenerate = w.norm_sqr() == 0.0;
    let mut hermite = ScaledHermiteSeq::new(p.xi)?;
    let mut term = move |k: i64| -> Result<Complex64> {
        // Keep the Hermite sequence aligned with k even for skipped terms.
        let h = hermite.next_value();
        if degenerate && k != 0 {
            // (sqrt(beta) w)^k is exactly zero for k > 0 and the Laguerre
            // reduction factor (-u)^|k| is exactly zero for k < 0.
            return Ok(Complex64::new(0.0, 0.0));
        }
        let n = (k + m as i64) as usize;
        let laguerre = laguerre_eval(LaguerreIndex::new(m, k)?, u)?;
        let value = v_scaled
            .powi(k as i32)
            .scale_log(-log_factorial(n))
            * ScaledValue::from_real(laguerre)
            * h;
        Ok(value.to_complex())
    };
    let mut prefix = Vec::with_capacity(m + 1);
    for k in -(m as i64)..=0 {
        prefix.push(term(k)?);
    }
    let tail = (1_i64..).map(move |k| term(k).expect("positive k index is always valid"));
    sum_with_policy(policy, prefix, tail)
}

/// Evaluate the closed-form side of the identity.
pub fn genfun_rhs(p: &GenFunParams) -> Complex64 {
    let sqrt_beta = p.beta.sqrt();
    let c = Complex64::new(p.a, -p.b);
    let exponent = -p.beta * c * c / 4.0 + p.xi * c * sqrt_beta;
    let shifted = p.xi - p.a * sqrt_beta;
    let h = hermite_scaled(PolyDegree::new(p.m).expect("validated at construction"), shifted)
        .expect("shifted argument is finite");
    h.scale_log(exponent.re - log_factorial(p.m)).to_complex()
        * Complex64::new(0.0, exponent.im).exp()
}
