//! Oscillator eigenfunctions and the coherent-state families built on
//! them.
//!
//! The normalized Hermite functions `phi_n` are evaluated through the
//! recurrence they satisfy themselves — the `(2^n n! sqrt(pi))^{-1/2}`
//! normalization never materializes, so values stay bounded at every
//! degree. On top of them:
//!
//! * [`perelomov_state`]: the Schrödinger action of a plane label on
//!   `phi_m`, in closed form;
//! * [`iwata_state`]: the same state as a superposition of Landau basis
//!   values at the label against `phi_n(xi)`;
//! * [`canonical_cs_closed`] / [`canonical_cs_series`]: the classical
//!   harmonic-oscillator coherent states, closed Gaussian form and Fock
//!   expansion.

use num_complex::Complex64;

use crate::error::{ensure_finite, Result};
use crate::landau::{basis_fn, LandauParams, PlaneLabel};
use crate::series::{sum_with_policy, SeriesResult, TruncationPolicy};
use crate::specfun::{log_factorial, PolyDegree, ScaledValue};

/// Incremental emitter of the normalized Hermite functions
/// `phi_0(xi), phi_1(xi), ...` at a fixed point.
///
/// `phi_0 = pi^{-1/4} exp(-xi^2/2)` and
/// `phi_{n+1} = xi sqrt(2/(n+1)) phi_n - sqrt(n/(n+1)) phi_{n-1}`.
#[derive(Debug, Clone)]
pub struct HermiteGaussianSeq {
    xi: f64,
    next_n: usize,
    prev: f64,
    cur: f64,
}

impl HermiteGaussianSeq {
    /// Start a sequence at a finite point.
    pub fn new(xi: f64) -> Result<Self> {
        ensure_finite(xi, "xi")?;
        Ok(Self { xi, next_n: 0, prev: 0.0, cur: 0.0 })
    }

    /// Emit `phi_n(xi)` for the next `n`, advancing the recurrence.
    pub fn next_value(&mut self) -> f64 {
        let value = match self.next_n {
            0 => {
                self.prev = 0.0;
                self.cur = std::f64::consts::PI.powf(-0.25) * (-self.xi * self.xi / 2.0).exp();
                self.cur
            }
            n => {
                let nf = n as f64;
                let next = self.xi * (2.0 / nf).sqrt() * self.cur
                    - ((nf - 1.0) / nf).sqrt() * self.prev;
                self.prev = self.cur;
                self.cur = next;
                next
            }
        };
        self.next_n += 1;
        value
    }
}

/// `phi_n(xi)` assuming a finite argument (callers validated upstream).
fn hermite_gaussian_value(n: usize, xi: f64) -> f64 {
    let mut seq = HermiteGaussianSeq { xi, next_n: 0, prev: 0.0, cur: 0.0 };
    let mut value = seq.next_value();
    for _ in 0..n {
        value = seq.next_value();
    }
    value
}

/// The normalized Hermite function
/// `phi_n(xi) = (sqrt(pi) 2^n n!)^{-1/2} exp(-xi^2/2) H_n(xi)`.
pub fn hermite_gaussian(n: PolyDegree, xi: f64) -> Result<f64> {
    ensure_finite(xi, "xi")?;
    Ok(hermite_gaussian_value(n.get(), xi))
}

/// The displaced-Fock coherent state attached to level `m` at plane label
/// `(x, y)`, evaluated at `xi`:
///
/// `exp(i(beta x y / 2 - sqrt(beta) xi y)) phi_m(xi - sqrt(beta) x)`.
///
/// This is exactly the Schrödinger action of the group element
/// `(x, y, 0)` on the reference state `phi_m`. Non-finite `xi` yields NaN.
pub fn perelomov_state(p: &LandauParams, label: &PlaneLabel, xi: f64) -> Complex64 {
    let sqrt_beta = p.beta().sqrt();
    let shifted = xi - sqrt_beta * label.x();
    if !shifted.is_finite() {
        return Complex64::new(f64::NAN, f64::NAN);
    }
    let phase = p.beta() * label.x() * label.y() / 2.0 - sqrt_beta * xi * label.y();
    Complex64::new(0.0, phase).exp() * hermite_gaussian_value(p.m(), shifted)
}

/// The same coherent state as a superposition series:
///
/// `sqrt(2 pi / beta) * sum_n conj(phi_n^{beta,m}(x, y)) phi_n(xi)`,
///
/// where `phi_n^{beta,m}` are the Landau basis functions (index
/// `k = n - m`, so the first `m` terms go through the negative-index
/// route). The coefficients are the *conjugated* basis values: they are
/// overlaps of the real `phi_n(xi)` against the state, and the direct
/// Gaussian integral produces `(x - iy)^k` monomials where the basis
/// itself carries `(x + iy)^k`. The finite `n <= m` block is summed
/// unconditionally; the stopping rule applies from `n = m + 1` on.
pub fn iwata_state(
    p: &LandauParams,
    label: &PlaneLabel,
    xi: f64,
    policy: &TruncationPolicy,
) -> Result<SeriesResult> {
    let mut seq = HermiteGaussianSeq::new(xi)?;
    let prefactor = (2.0 * std::f64::consts::PI / p.beta()).sqrt();
    let m = p.m();
    let mut prefix = Vec::with_capacity(m + 1);
    for n in 0..=m {
        let coefficient = basis_fn(p, n as i64 - m as i64, label)?.conj();
        prefix.push(coefficient * seq.next_value() * prefactor);
    }
    let p_owned = *p;
    let label_owned = *label;
    let tail = (m + 1..).map(move |n| {
        let coefficient = basis_fn(&p_owned, n as i64 - m as i64, &label_owned)
            .expect("k >= -m for n > m")
            .conj();
        coefficient * seq.next_value() * prefactor
    });
    sum_with_policy(policy, prefix, tail)
}

/// A canonical coherent-state label: a point of the complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalLabel {
    z: Complex64,
}

impl CanonicalLabel {
    /// A label with finite components.
    pub fn new(z: Complex64) -> Result<Self> {
        ensure_finite(z.re, "Re(z)")?;
        ensure_finite(z.im, "Im(z)")?;
        Ok(Self { z })
    }

    /// The label value.
    pub fn z(self) -> Complex64 {
        self.z
    }
}

/// The canonical coherent state in closed Gaussian form:
///
/// `pi^{-1/4} exp(-xi^2/2 + sqrt(2) xi z - z^2/2 - |z|^2/2)`.
///
/// The `pi^{-1/4}` prefactor is the one that makes the state unit-norm
/// and consistent with the vacuum `phi_0` at `z = 0`.
pub fn canonical_cs_closed(label: &CanonicalLabel, xi: f64) -> Complex64 {
    let z = label.z();
    let exponent = -xi * xi / 2.0 + std::f64::consts::SQRT_2 * xi * z
        - z * z / 2.0
        - z.norm_sqr() / 2.0;
    std::f64::consts::PI.powf(-0.25) * exponent.exp()
}

/// The canonical coherent state as its Fock expansion:
///
/// `exp(-|z|^2/2) sum_n z^n / sqrt(n!) phi_n(xi)`.
pub fn canonical_cs_series(
    label: &CanonicalLabel,
    xi: f64,
    policy: &TruncationPolicy,
) -> Result<SeriesResult> {
    let mut seq = HermiteGaussianSeq::new(xi)?;
    let z = label.z();
    let envelope = -z.norm_sqr() / 2.0;
    let mut term = move |n: usize| {
        let coefficient = ScaledValue::from_complex(z)
            .powi(n as i32)
            .scale_log(envelope - 0.5 * log_factorial(n));
        (coefficient * ScaledValue::from_real(seq.next_value())).to_complex()
    };
    let first = term(0);
    sum_with_policy(policy, [first], (1..).map(term))
}
