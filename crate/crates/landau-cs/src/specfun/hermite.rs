//! Hermite polynomials `H_n` (physicists' convention).
//!
//! `H_0 = 1`, `H_1(x) = 2x`, and `H_{n+1}(x) = 2x H_n(x) - 2n H_{n-1}(x)`.
//! The same three-term step drives every entry point here, so the plain
//! evaluator, the sequence evaluator and the log-scaled evaluator agree
//! bit for bit wherever they overlap.

use num_complex::Complex64;

use super::scaled::ScaledValue;
use crate::error::{ensure_finite, Error, Result};

/// Default cap on polynomial degrees. Beyond a couple of thousand the
/// double-precision recurrences lose their accuracy budget and runtimes
/// stop being interactive, so degrees are validated up front.
pub const DEFAULT_DEGREE_CAP: usize = 2000;

/// A validated polynomial degree (`0..=cap`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolyDegree(usize);

impl PolyDegree {
    /// Validate against [`DEFAULT_DEGREE_CAP`].
    pub fn new(n: usize) -> Result<Self> {
        Self::with_cap(n, DEFAULT_DEGREE_CAP)
    }

    /// Validate against a caller-chosen cap.
    pub fn with_cap(n: usize, cap: usize) -> Result<Self> {
        if n > cap {
            return Err(Error::DegreeTooLarge { degree: n, cap });
        }
        Ok(Self(n))
    }

    /// The wrapped degree.
    pub fn get(self) -> usize {
        self.0
    }
}

/// One step of the recurrence: `H_{n+1}` from `H_n` and `H_{n-1}`.
#[inline]
fn hermite_step(xi: f64, n: usize, h_prev: f64, h_cur: f64) -> f64 {
    2.0 * xi * h_cur - 2.0 * (n as f64) * h_prev
}

/// Evaluate `H_n(xi)` by the three-term recurrence.
///
/// The result overflows to `±inf` honestly once `|H_n|` leaves the `f64`
/// range (use [`hermite_scaled`] there).
pub fn hermite_eval(n: PolyDegree, xi: f64) -> Result<f64> {
    ensure_finite(xi, "xi")?;
    let n = n.get();
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * xi;
    for j in 1..n {
        let next = hermite_step(xi, j, prev, cur);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Evaluate `H_0(xi), ..., H_{n_max}(xi)` in one sweep.
///
/// Each entry is bit-identical to the corresponding [`hermite_eval`] call:
/// both run the same step in the same order.
pub fn hermite_sequence(n_max: PolyDegree, xi: f64) -> Result<Vec<f64>> {
    ensure_finite(xi, "xi")?;
    let n_max = n_max.get();
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(1.0);
    if n_max == 0 {
        return Ok(out);
    }
    out.push(2.0 * xi);
    for j in 1..n_max {
        let next = hermite_step(xi, j, out[j - 1], out[j]);
        out.push(next);
    }
    Ok(out)
}

/// Evaluate `H_n(xi)` in log-scaled form, immune to overflow.
///
/// The recurrence runs on mantissas that are renormalized by an exact
/// power of two whenever they grow past `2^512`; the accumulated binary
/// exponent is folded into the log only at the end.
pub fn hermite_scaled(n: PolyDegree, xi: f64) -> Result<ScaledValue> {
    let mut seq = ScaledHermiteSeq::new(xi)?;
    let mut value = seq.next_value();
    for _ in 0..n.get() {
        value = seq.next_value();
    }
    Ok(value)
}

/// `H_n(z)` at a complex argument, by the same recurrence.
///
/// Used for the Gaussian product integrals with shifted complex arguments;
/// degrees there are small, so no scaling is applied. The caller is
/// responsible for keeping `n` within the degree cap.
pub fn hermite_complex(n: usize, z: Complex64) -> Complex64 {
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let mut prev = Complex64::new(1.0, 0.0);
    let mut cur = 2.0 * z;
    for j in 1..n {
        let next = 2.0 * z * cur - 2.0 * (j as f64) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Mantissas are renormalized once they pass `2^512`.
const RESCALE_EXP: i64 = 512;

/// `2^e` built exactly from the bit pattern (`e` well inside the normal
/// exponent range here).
fn two_pow(e: i64) -> f64 {
    f64::from_bits(((1023 + e) as u64) << 52)
}

/// Incremental emitter of `H_0(xi), H_1(xi), H_2(xi), ...` as
/// [`ScaledValue`]s, sharing one renormalized recurrence.
///
/// Series over Hermite degrees (the generating identity, the Fock
/// expansion of canonical states) consume this instead of re-running the
/// recurrence from scratch at every order.
#[derive(Debug, Clone)]
pub struct ScaledHermiteSeq {
    xi: f64,
    next_n: usize,
    prev: f64,
    cur: f64,
    scale_exp2: i64,
}

impl ScaledHermiteSeq {
    /// Start a sequence at a finite point.
    pub fn new(xi: f64) -> Result<Self> {
        ensure_finite(xi, "xi")?;
        Ok(Self { xi, next_n: 0, prev: 0.0, cur: 1.0, scale_exp2: 0 })
    }

    /// Emit `H_n(xi)` for the next `n`, advancing the recurrence.
    pub fn next_value(&mut self) -> ScaledValue {
        let mantissa = match self.next_n {
            0 => {
                self.prev = 0.0;
                self.cur = 1.0;
                1.0
            }
            1 => {
                self.prev = 1.0;
                self.cur = 2.0 * self.xi;
                self.cur
            }
            n => {
                let next = hermite_step(self.xi, n - 1, self.prev, self.cur);
                self.prev = self.cur;
                self.cur = next;
                next
            }
        };
        self.next_n += 1;
        let log = mantissa.abs().ln() + self.scale_exp2 as f64 * std::f64::consts::LN_2;
        let value = ScaledValue::from_parts(log, Complex64::new(mantissa.signum(), 0.0));
        if self.cur.abs() > two_pow(RESCALE_EXP) {
            let factor = two_pow(-RESCALE_EXP);
            self.prev *= factor;
            self.cur *= factor;
            self.scale_exp2 += RESCALE_EXP;
        }
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn deg(n: usize) -> PolyDegree {
        PolyDegree::new(n).unwrap()
    }

    #[test]
    fn low_degrees_match_hand_values() {
        // H_0 = 1, H_1 = 2x, H_2 = 4x^2 - 2, H_3 = 8x^3 - 12x.
        assert_eq!(hermite_eval(deg(0), 0.3).unwrap(), 1.0);
        assert_eq!(hermite_eval(deg(1), 0.3).unwrap(), 0.6);
        assert_eq!(hermite_eval(deg(2), 1.0).unwrap(), 2.0);
        assert_eq!(hermite_eval(deg(3), 0.5).unwrap(), -5.0);
    }

    #[test]
    fn sequence_matches_hand_values_at_one() {
        let seq = hermite_sequence(deg(4), 1.0).unwrap();
        assert_eq!(seq, vec![1.0, 2.0, 2.0, -4.0, -20.0]);
    }

    #[test]
    fn sequence_entries_are_bitwise_equal_to_single_evaluations() {
        let xi = 0.731;
        let seq = hermite_sequence(deg(40), xi).unwrap();
        for (n, v) in seq.iter().enumerate() {
            let single = hermite_eval(deg(n), xi).unwrap();
            assert_eq!(single.to_bits(), v.to_bits(), "degree {n}");
        }
    }

    #[test]
    fn degree_cap_is_enforced() {
        assert!(matches!(
            PolyDegree::new(DEFAULT_DEGREE_CAP + 1),
            Err(Error::DegreeTooLarge { degree, cap })
                if degree == DEFAULT_DEGREE_CAP + 1 && cap == DEFAULT_DEGREE_CAP
        ));
        assert!(PolyDegree::with_cap(10, 10).is_ok());
        assert!(PolyDegree::with_cap(11, 10).is_err());
    }

    #[test]
    fn non_finite_arguments_are_rejected() {
        assert!(hermite_eval(deg(3), f64::NAN).is_err());
        assert!(hermite_eval(deg(3), f64::INFINITY).is_err());
        assert!(hermite_sequence(deg(3), f64::NEG_INFINITY).is_err());
        assert!(hermite_scaled(deg(3), f64::NAN).is_err());
    }

    #[test]
    fn two_pow_is_exact() {
        assert_eq!(two_pow(3), 8.0);
        assert_eq!(two_pow(-2), 0.25);
        assert_eq!(two_pow(RESCALE_EXP).log2(), RESCALE_EXP as f64);
    }

    #[test]
    fn scaled_matches_plain_where_plain_is_finite() {
        for &xi in &[-3.0, -0.4, 0.0, 0.25, 1.0, 3.0] {
            for n in 0..=150 {
                let plain = hermite_eval(deg(n), xi).unwrap();
                let scaled = hermite_scaled(deg(n), xi).unwrap().to_complex().re;
                let err = (scaled - plain).abs();
                assert!(
                    err <= 1e-12 * plain.abs().max(1e-300),
                    "n={n} xi={xi}: plain={plain:e} scaled={scaled:e}"
                );
            }
        }
    }

    #[test]
    fn scaled_stays_finite_at_the_degree_cap() {
        let v = hermite_scaled(deg(DEFAULT_DEGREE_CAP), 3.0).unwrap();
        assert!(v.log_magnitude().is_finite());
        // Far beyond f64 range: the plain path would have overflowed.
        assert!(v.log_magnitude() > 709.0);
        assert!((v.phase().norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn complex_argument_reduces_to_real_on_the_real_axis() {
        for n in 0..20 {
            let z = Complex64::new(0.9, 0.0);
            let via_complex = hermite_complex(n, z);
            let via_real = hermite_eval(deg(n), 0.9).unwrap();
            assert!((via_complex.re - via_real).abs() <= 1e-12 * via_real.abs().max(1.0));
            assert_eq!(via_complex.im, 0.0);
        }
    }

    proptest! {
        // H_n(-x) = (-1)^n H_n(x): the recurrence preserves parity exactly
        // because negating xi negates every odd-degree term bit for bit.
        #[test]
        fn parity_is_exact(n in 0_usize..60, xi in -5.0_f64..5.0) {
            let plus = hermite_eval(deg(n), xi).unwrap();
            let minus = hermite_eval(deg(n), -xi).unwrap();
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            prop_assert_eq!(plus.to_bits(), (sign * minus).to_bits());
        }

        // Emitting through the shared sequence equals one-shot evaluation.
        #[test]
        fn scaled_sequence_agrees_with_one_shot(n in 0_usize..120, xi in -4.0_f64..4.0) {
            let mut seq = ScaledHermiteSeq::new(xi).unwrap();
            let mut last = seq.next_value();
            for _ in 0..n {
                last = seq.next_value();
            }
            let one_shot = hermite_scaled(deg(n), xi).unwrap();
            prop_assert_eq!(last.log_magnitude().to_bits(), one_shot.log_magnitude().to_bits());
            prop_assert_eq!(last.phase(), one_shot.phase());
        }
    }
}
