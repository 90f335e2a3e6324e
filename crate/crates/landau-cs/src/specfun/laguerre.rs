//! Generalized Laguerre polynomials `L_m^(k)` for integer upper index,
//! including the negative range `-m <= k < 0`.
//!
//! For `k >= 0` the standard three-term recurrence in the lower index is
//! stable and cheap. For negative `k = -p` the polynomial is *not* given
//! by that recurrence; it reduces to a non-negative-index one through
//!
//! `L_m^(-p)(x) = (-x)^p * (m-p)!/m! * L_{m-p}^(p)(x)`,   `0 < p <= m`,
//!
//! which is exactly the reduction the Landau-level eigenfunctions with
//! negative angular index rely on. Below `k = -m` the polynomial vanishes
//! identically and the index is rejected.

use num_complex::Complex64;

use super::factorial::{log_factorial, log_factorial_ratio};
use super::scaled::ScaledValue;
use crate::error::{ensure_finite, Error, Result};

/// A validated index pair `(m, k)` with `m >= 0` and `k >= -m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LaguerreIndex {
    m: usize,
    k: i64,
}

impl LaguerreIndex {
    /// Validate `k >= -m`.
    pub fn new(m: usize, k: i64) -> Result<Self> {
        if k < -(m as i64) {
            return Err(Error::IndexOutOfRange { k, neg_m: -(m as i64) });
        }
        Ok(Self { m, k })
    }

    /// Lower (degree) index `m`.
    pub fn m(self) -> usize {
        self.m
    }

    /// Upper index `k` (possibly negative).
    pub fn k(self) -> i64 {
        self.k
    }
}

/// `L_m^(k)(x)` by recurrence for `k >= 0`.
///
/// `(j+1) L_{j+1}^(k) = (2j + 1 + k - x) L_j^(k) - (j + k) L_{j-1}^(k)`.
fn laguerre_nonneg(m: usize, k: usize, x: f64) -> f64 {
    let kf = k as f64;
    if m == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + kf - x;
    for j in 1..m {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0 + kf - x) * cur - (jf + kf) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Evaluate `L_m^(k)(x)` for any validated integer index pair.
///
/// Negative upper indices go through the factorial-ratio reduction above;
/// at `x = 0` that path returns an exact `0` for `p >= 1`, matching the
/// `(-x)^p` prefactor.
pub fn laguerre_eval(idx: LaguerreIndex, x: f64) -> Result<f64> {
    ensure_finite(x, "x")?;
    let LaguerreIndex { m, k } = idx;
    if k >= 0 {
        return Ok(laguerre_nonneg(m, k as usize, x));
    }
    let p = (-k) as usize; // 1 <= p <= m by construction
    let ratio = log_factorial_ratio(m - p, m).exp(); // (m-p)!/m! <= 1
    Ok((-x).powi(p as i32) * ratio * laguerre_nonneg(m - p, p, x))
}

/// `L_m^(k)(z)` at a complex argument, `k >= 0`, by the explicit sum
///
/// `L_m^(k)(z) = sum_{j=0}^{m} (-1)^j (k+m)! / (j! (m-j)! (k+j)!) z^j`,
///
/// with every coefficient assembled in log space so large `k + m` cannot
/// overflow intermediates.
pub fn laguerre_complex(m: usize, k: usize, z: Complex64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let z_scaled = ScaledValue::from_complex(z);
    for j in 0..=m {
        let log_coeff = log_factorial(k + m)
            - log_factorial(j)
            - log_factorial(m - j)
            - log_factorial(k + j);
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let term = ScaledValue::from_parts(log_coeff, Complex64::new(sign, 0.0))
            * z_scaled.powi(j as i32);
        sum += term.to_complex();
    }
    sum
}
