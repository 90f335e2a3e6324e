//! Gaussian-weighted integrals of shifted Hermite products.
//!
//! For degrees `s <= l` and complex shifts `alpha`, `gamma`:
//!
//! `int_R exp(-u^2) H_s(u + alpha) H_l(u + gamma) du
//!     = 2^l sqrt(pi) s! gamma^(l-s) L_s^(l-s)(-2 alpha gamma)`.
//!
//! This is the closed form behind every overlap of displaced oscillator
//! states in the crate; with `alpha = -(sqrt(beta)/2)(x - iy)` and
//! `gamma = (sqrt(beta)/2)(x + iy)` it produces the Landau basis values
//! of the level-`m` coherent states. [`hermite_product_integral_quad`]
//! evaluates the same integral by Gauss–Hermite quadrature — exact for
//! the polynomial part once the rule order exceeds half the total degree
//! — giving an independent cross-check of the closed form.

use num_complex::Complex64;

use crate::error::{ensure_finite, Error, Result};
use crate::specfun::{
    hermite_complex, laguerre_complex, log_factorial, PolyDegree, QuadratureRule, RuleKind,
    ScaledValue,
};

/// Degrees and shifts for one product integral. Construction validates
/// finiteness and the degree cap only; the `s <= l` requirement belongs
/// to the closed form, not to the integral itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermiteIntegralArgs {
    s: usize,
    l: usize,
    alpha: Complex64,
    gamma: Complex64,
}

impl HermiteIntegralArgs {
    /// Validate degrees and shift components.
    pub fn new(s: usize, l: usize, alpha: Complex64, gamma: Complex64) -> Result<Self> {
        PolyDegree::new(s)?;
        PolyDegree::new(l)?;
        ensure_finite(alpha.re, "Re(alpha)")?;
        ensure_finite(alpha.im, "Im(alpha)")?;
        ensure_finite(gamma.re, "Re(gamma)")?;
        ensure_finite(gamma.im, "Im(gamma)")?;
        Ok(Self { s, l, alpha, gamma })
    }

    /// Degree attached to the `alpha` shift.
    pub fn s(self) -> usize {
        self.s
    }

    /// Degree attached to the `gamma` shift.
    pub fn l(self) -> usize {
        self.l
    }

    /// Shift of the degree-`s` factor.
    pub fn alpha(self) -> Complex64 {
        self.alpha
    }

    /// Shift of the degree-`l` factor.
    pub fn gamma(self) -> Complex64 {
        self.gamma
    }
}

/// The closed form `2^l sqrt(pi) s! gamma^(l-s) L_s^(l-s)(-2 alpha gamma)`.
///
/// Requires `s <= l` (swap the roles of `(s, alpha)` and `(l, gamma)`
/// first if not — the integral itself is symmetric under that exchange);
/// returns [`Error::OrderViolation`] otherwise.
pub fn hermite_product_integral_closed(args: &HermiteIntegralArgs) -> Result<Complex64> {
    let HermiteIntegralArgs { s, l, alpha, gamma } = *args;
    if s > l {
        return Err(Error::OrderViolation { s, l });
    }
    let log_prefactor =
        l as f64 * std::f64::consts::LN_2 + 0.5 * std::f64::consts::PI.ln() + log_factorial(s);
    let laguerre = laguerre_complex(s, l - s, -2.0 * alpha * gamma);
    let value = ScaledValue::from_log(log_prefactor)
        * ScaledValue::from_complex(gamma).powi((l - s) as i32)
        * ScaledValue::from_complex(laguerre);
    Ok(value.to_complex())
}

/// The same integral by Gauss–Hermite quadrature.
///
/// The integrand without its Gaussian weight is a polynomial of degree
/// `s + l`, so any line rule of order at least `(s+l)/2 + 1` is exact up
/// to rounding. Rules of other kinds are rejected as
/// [`Error::InvalidInput`]; under-resolved orders as
/// [`Error::InsufficientQuadratureOrder`].
pub fn hermite_product_integral_quad(
    args: &HermiteIntegralArgs,
    rule: &QuadratureRule,
) -> Result<Complex64> {
    if rule.kind() != RuleKind::GaussHermite1d {
        return Err(Error::InvalidInput(format!(
            "Hermite product integrals need a line Gauss-Hermite rule, got {:?}",
            rule.kind()
        )));
    }
    let required = (args.s + args.l) / 2 + 1;
    if rule.order() < required {
        return Err(Error::InsufficientQuadratureOrder { required, actual: rule.order() });
    }
    rule.integrate(|u| {
        hermite_complex(args.s, args.alpha + u) * hermite_complex(args.l, args.gamma + u)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn args(s: usize, l: usize, alpha: Complex64, gamma: Complex64) -> HermiteIntegralArgs {
        HermiteIntegralArgs::new(s, l, alpha, gamma).unwrap()
    }

    #[test]
    fn degree_zero_pair_integrates_the_bare_gaussian() {
        let a = args(0, 0, c(0.3, -0.2), c(1.1, 0.4));
        let closed = hermite_product_integral_closed(&a).unwrap();
        assert!((closed - c(PI.sqrt(), 0.0)).norm() < 1e-15);
        let rule = QuadratureRule::gauss_hermite(4).unwrap();
        let quad = hermite_product_integral_quad(&a, &rule).unwrap();
        assert!((quad - closed).norm() < 1e-14);
    }

    #[test]
    fn first_moment_pair_matches_hand_value() {
        // int e^{-u^2} H_1(u + gamma) du = 2 gamma sqrt(pi).
        let gamma = c(0.7, -1.3);
        let a = args(0, 1, c(0.0, 0.0), gamma);
        let closed = hermite_product_integral_closed(&a).unwrap();
        let want = 2.0 * PI.sqrt() * gamma;
        assert!((closed - want).norm() < 1e-14 * want.norm());
    }

    #[test]
    fn equal_degree_pair_at_zero_shift_matches_the_norm_integral() {
        // int e^{-u^2} H_1(u)^2 du = 2 sqrt(pi).
        let a = args(1, 1, c(0.0, 0.0), c(0.0, 0.0));
        let closed = hermite_product_integral_closed(&a).unwrap();
        assert!((closed - c(2.0 * PI.sqrt(), 0.0)).norm() < 1e-14);
        let rule = QuadratureRule::gauss_hermite(2).unwrap();
        let quad = hermite_product_integral_quad(&a, &rule).unwrap();
        assert!((quad - closed).norm() < 1e-13);
    }

    #[test]
    fn closed_form_matches_quadrature_at_generic_complex_shifts() {
        let rule = QuadratureRule::gauss_hermite(24).unwrap();
        let shifts =
            [c(0.3, 0.0), c(-0.5, 0.8), c(1.2, -0.4), c(0.0, 1.0)];
        for s in 0..=6_usize {
            for l in s..=6 {
                for &alpha in &shifts {
                    for &gamma in &shifts {
                        let a = args(s, l, alpha, gamma);
                        let closed = hermite_product_integral_closed(&a).unwrap();
                        let quad = hermite_product_integral_quad(&a, &rule).unwrap();
                        let scale = closed.norm().max(1.0);
                        assert!(
                            (closed - quad).norm() <= 1e-10 * scale,
                            "s={s} l={l} alpha={alpha} gamma={gamma}: {closed} vs {quad}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn swapping_roles_preserves_the_integral() {
        // The integral is symmetric under (s, alpha) <-> (l, gamma); the
        // closed form demands the smaller degree first, and the swapped
        // call gives the same value.
        let rule = QuadratureRule::gauss_hermite(16).unwrap();
        let fwd = args(2, 5, c(0.4, 0.3), c(-0.7, 0.1));
        let swapped = args(5, 2, c(-0.7, 0.1), c(0.4, 0.3));
        let closed = hermite_product_integral_closed(&fwd).unwrap();
        let quad_fwd = hermite_product_integral_quad(&fwd, &rule).unwrap();
        let quad_swapped = hermite_product_integral_quad(&swapped, &rule).unwrap();
        assert!((quad_fwd - quad_swapped).norm() <= 1e-12 * closed.norm().max(1.0));
        assert!((closed - quad_fwd).norm() <= 1e-11 * closed.norm().max(1.0));
    }

    #[test]
    fn descending_degrees_are_rejected_by_the_closed_form() {
        let a = args(5, 2, c(0.0, 0.0), c(0.0, 0.0));
        assert!(matches!(
            hermite_product_integral_closed(&a).unwrap_err(),
            Error::OrderViolation { s: 5, l: 2 }
        ));
    }

    #[test]
    fn vanishing_gamma_annihilates_strictly_ordered_pairs() {
        // gamma^(l-s) = 0 while the Laguerre factor stays finite.
        let a = args(1, 4, c(0.9, -0.2), c(0.0, 0.0));
        let closed = hermite_product_integral_closed(&a).unwrap();
        assert_eq!(closed, c(0.0, 0.0));
        let rule = QuadratureRule::gauss_hermite(8).unwrap();
        let quad = hermite_product_integral_quad(&a, &rule).unwrap();
        assert!((quad - closed).norm() < 1e-11);
    }

    #[test]
    fn under_resolved_rules_are_rejected_with_the_required_order() {
        let a = args(3, 3, c(0.1, 0.0), c(0.2, 0.0));
        let rule = QuadratureRule::gauss_hermite(2).unwrap();
        assert!(matches!(
            hermite_product_integral_quad(&a, &rule).unwrap_err(),
            Error::InsufficientQuadratureOrder { required: 4, actual: 2 }
        ));
        // The boundary order is accepted and already exact.
        let boundary = QuadratureRule::gauss_hermite(4).unwrap();
        let closed = hermite_product_integral_closed(&a).unwrap();
        let quad = hermite_product_integral_quad(&a, &boundary).unwrap();
        assert!((quad - closed).norm() <= 1e-12 * closed.norm().max(1.0));
    }

    #[test]
    fn plane_rules_are_rejected() {
        let a = args(1, 1, c(0.0, 0.0), c(0.0, 0.0));
        let rule = QuadratureRule::tensor_gauss_hermite(4).unwrap();
        assert!(matches!(
            hermite_product_integral_quad(&a, &rule).unwrap_err(),
            Error::InvalidInput(_)
        ));
    }
}
