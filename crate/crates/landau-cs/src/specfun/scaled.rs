//! Log-magnitude representation of huge (or tiny) complex values.
//!
//! Series terms in this crate are products like
//! `beta^(k/2) * z^k * L_m^(k)(u) * H_{k+m}(xi) / (k+m)!`
//! whose factors individually overflow `f64` long before the product
//! does. [`ScaledValue`] keeps `ln |v|` and the unit phase separately, so
//! factors combine by adding logs and multiplying phases, and only the
//! final balanced product is materialized as a `Complex64`.

use num_complex::Complex64;

/// A complex number stored as `phase * exp(log_magnitude)` with
/// `|phase| = 1` (zero is `log_magnitude = -inf`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledValue {
    log_magnitude: f64,
    phase: Complex64,
}

impl ScaledValue {
    /// The zero value.
    pub fn zero() -> Self {
        Self { log_magnitude: f64::NEG_INFINITY, phase: Complex64::new(1.0, 0.0) }
    }

    /// The value one.
    pub fn one() -> Self {
        Self { log_magnitude: 0.0, phase: Complex64::new(1.0, 0.0) }
    }

    /// Wrap a real number, keeping its sign as the phase.
    pub fn from_real(x: f64) -> Self {
        if x == 0.0 {
            return Self::zero();
        }
        Self { log_magnitude: x.abs().ln(), phase: Complex64::new(x.signum(), 0.0) }
    }

    /// Wrap a complex number.
    pub fn from_complex(z: Complex64) -> Self {
        let r = z.norm();
        if r == 0.0 {
            return Self::zero();
        }
        Self { log_magnitude: r.ln(), phase: z / r }
    }

    /// A positive real value given directly by its log.
    pub fn from_log(log_magnitude: f64) -> Self {
        Self { log_magnitude, phase: Complex64::new(1.0, 0.0) }
    }

    /// Assemble from a log-magnitude and an arbitrary nonzero phase factor
    /// (normalized here, so callers may pass e.g. a raw sign).
    pub fn from_parts(log_magnitude: f64, phase: Complex64) -> Self {
        let r = phase.norm();
        if r == 0.0 || log_magnitude == f64::NEG_INFINITY {
            return Self::zero();
        }
        Self { log_magnitude, phase: phase / r }
    }

    /// `ln |v|` (`-inf` for zero).
    pub fn log_magnitude(&self) -> f64 {
        self.log_magnitude
    }

    /// The unit phase (`1` for zero, by convention).
    pub fn phase(&self) -> Complex64 {
        self.phase
    }

    /// Multiply by `exp(delta)` without touching the phase.
    pub fn scale_log(self, delta: f64) -> Self {
        Self { log_magnitude: self.log_magnitude + delta, ..self }
    }

    /// Integer power, exact on both components. Follows `f64::powi`
    /// conventions at zero: `0^0 = 1` and `0^(-n)` is infinite.
    pub fn powi(self, n: i32) -> Self {
        if self.log_magnitude == f64::NEG_INFINITY {
            return match n.cmp(&0) {
                std::cmp::Ordering::Equal => Self::one(),
                std::cmp::Ordering::Greater => Self::zero(),
                std::cmp::Ordering::Less => Self::from_log(f64::INFINITY),
            };
        }
        Self {
            log_magnitude: self.log_magnitude * n as f64,
            phase: self.phase.powi(n),
        }
    }

    /// Materialize as a `Complex64`; overflows to infinity and underflows
    /// to zero exactly as the represented value would.
    pub fn to_complex(self) -> Complex64 {
        self.phase * self.log_magnitude.exp()
    }

    /// Materialize the magnitude alone.
    pub fn magnitude(self) -> f64 {
        self.log_magnitude.exp()
    }
}

impl std::ops::Mul for ScaledValue {
    type Output = ScaledValue;

    fn mul(self, rhs: ScaledValue) -> ScaledValue {
        // Plain log addition gives the right answer in every edge case:
        // zero * finite keeps -inf, and zero * infinite yields a NaN
        // magnitude rather than inventing a value.
        ScaledValue {
            log_magnitude: self.log_magnitude + rhs.log_magnitude,
            phase: self.phase * rhs.phase,
        }
    }
}

impl std::ops::Div for ScaledValue {
    type Output = ScaledValue;

    fn div(self, rhs: ScaledValue) -> ScaledValue {
        ScaledValue {
            log_magnitude: self.log_magnitude - rhs.log_magnitude,
            phase: self.phase / rhs.phase,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_round_trips() {
        assert_eq!(ScaledValue::zero().to_complex(), Complex64::new(0.0, 0.0));
        assert_eq!(ScaledValue::from_real(0.0).to_complex(), Complex64::new(0.0, 0.0));
        assert_eq!(ScaledValue::from_complex(Complex64::new(0.0, 0.0)).log_magnitude(), f64::NEG_INFINITY);
    }

    #[test]
    fn negative_reals_keep_their_sign() {
        let v = ScaledValue::from_real(-3.5);
        assert_eq!(v.phase(), Complex64::new(-1.0, 0.0));
        assert!((v.to_complex().re + 3.5).abs() < 1e-15);
    }

    #[test]
    fn zero_powers_follow_f64_conventions() {
        assert_eq!(ScaledValue::zero().powi(0).to_complex(), Complex64::new(1.0, 0.0));
        assert_eq!(ScaledValue::zero().powi(3).to_complex(), Complex64::new(0.0, 0.0));
        assert_eq!(ScaledValue::zero().powi(-2).log_magnitude(), f64::INFINITY);
        let scaled_product = (ScaledValue::zero() * ScaledValue::from_real(7.0)).to_complex();
        assert_eq!(scaled_product, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn products_beyond_f64_range_balance_out() {
        // 1e200 * 1e200 * 1e-300 = 1e100: each factor representable, the
        // intermediate product is not, the scaled product is.
        let v = ScaledValue::from_real(1e200)
            * ScaledValue::from_real(1e200)
            * ScaledValue::from_real(1e-300);
        let got = v.to_complex().re;
        assert!((got - 1e100).abs() / 1e100 < 1e-12);
    }

    proptest! {
        // Representation invariant: wrapping and unwrapping reproduces the
        // value to 1e-12 relative over many orders of magnitude.
        #[test]
        fn round_trip_is_faithful(
            mag in -250.0_f64..250.0,
            arg in -std::f64::consts::PI..std::f64::consts::PI,
        ) {
            let z = Complex64::from_polar(mag.exp2(), arg);
            let back = ScaledValue::from_complex(z).to_complex();
            prop_assert!((back - z).norm() <= 1e-12 * z.norm());
        }

        #[test]
        fn multiplication_matches_direct_product(
            a in -30.0_f64..30.0,
            b in -30.0_f64..30.0,
            arg_a in -3.0_f64..3.0,
            arg_b in -3.0_f64..3.0,
        ) {
            let za = Complex64::from_polar(a.exp2(), arg_a);
            let zb = Complex64::from_polar(b.exp2(), arg_b);
            let got = (ScaledValue::from_complex(za) * ScaledValue::from_complex(zb)).to_complex();
            let want = za * zb;
            prop_assert!((got - want).norm() <= 1e-12 * want.norm());
        }

        #[test]
        fn integer_powers_match_repeated_multiplication(
            mag in -8.0_f64..8.0,
            arg in -3.0_f64..3.0,
            n in 0_i32..12,
        ) {
            let z = Complex64::from_polar(mag.exp2(), arg);
            let got = ScaledValue::from_complex(z).powi(n).to_complex();
            let want = z.powi(n as u32 as i32);
            prop_assert!((got - want).norm() <= 1e-10 * want.norm().max(1e-300));
        }
    }
}
