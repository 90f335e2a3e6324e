//! Landau levels on the plane: energies, eigenbasis, reproducing kernel.
//!
//! A particle in a uniform perpendicular magnetic field of strength
//! `beta > 0` has energy levels `(m + 1/2) beta` of infinite multiplicity.
//! The `m`-th eigenspace carries the orthonormal basis
//!
//! `phi_k(x, y) = c_{beta,m,k} (sqrt(beta/2) z)^k e^{-beta r^2/4} L_m^(k)(beta r^2/2)`
//!
//! indexed by integers `k >= -m`, with `z = x + iy` and normalization
//! `c_{beta,m,k} = sqrt(m! beta / (2 pi (k+m)!))`. Summing
//! `phi_k(r) conj(phi_k(r'))` over all `k` gives the reproducing kernel,
//! which also has a closed form — a Gaussian times `L_m^(0)` of the
//! squared distance, twisted by a phase in the wedge product `r ∧ r'`.
//! Both routes are implemented here and checked against each other by the
//! verification layer.

use num_complex::Complex64;

use crate::error::{ensure_finite, Error, Result};
use crate::series::{sum_with_policy, SeriesResult, TruncationPolicy};
use crate::specfun::{
    laguerre_eval, log_factorial_ratio, LaguerreIndex, ScaledValue, DEFAULT_DEGREE_CAP,
};

/// Field strength and level index, validated once at the boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LandauParams {
    beta: f64,
    m: usize,
}

impl LandauParams {
    /// Validate `beta > 0` (finite) and `m` within the degree cap (the
    /// level index feeds polynomial degrees everywhere downstream).
    pub fn new(beta: f64, m: usize) -> Result<Self> {
        ensure_finite(beta, "beta")?;
        if beta <= 0.0 {
            return Err(Error::InvalidInput(format!("beta must be positive, got {beta}")));
        }
        if m > DEFAULT_DEGREE_CAP {
            return Err(Error::DegreeTooLarge { degree: m, cap: DEFAULT_DEGREE_CAP });
        }
        Ok(Self { beta, m })
    }

    /// Field strength `beta`.
    pub fn beta(self) -> f64 {
        self.beta
    }

    /// Level index `m`.
    pub fn m(self) -> usize {
        self.m
    }
}

/// A point `r = (x, y)` of the plane, used as a label for basis functions
/// and coherent states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneLabel {
    x: f64,
    y: f64,
}

impl PlaneLabel {
    /// A label with finite coordinates.
    pub fn new(x: f64, y: f64) -> Result<Self> {
        ensure_finite(x, "x")?;
        ensure_finite(y, "y")?;
        Ok(Self { x, y })
    }

    /// First coordinate.
    pub fn x(self) -> f64 {
        self.x
    }

    /// Second coordinate.
    pub fn y(self) -> f64 {
        self.y
    }

    /// The complex coordinate `z = x + iy`.
    pub fn z(self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    /// `|r|^2 = x^2 + y^2`.
    pub fn r_squared(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    /// The wedge product `r ∧ r' = x y' - x' y` (antisymmetric).
    pub fn wedge(self, other: PlaneLabel) -> f64 {
        self.x * other.y - other.x * self.y
    }

    /// `|r - r'|^2`.
    pub fn distance_squared(self, other: PlaneLabel) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }
}

/// The Landau level energy `(m + 1/2) beta`.
pub fn landau_energy(p: &LandauParams) -> f64 {
    (p.m as f64 + 0.5) * p.beta
}

/// The eigenbasis member `phi_k^{beta,m}` at a point of the plane.
///
/// Negative `k = -p` is rewritten through the Laguerre index transform
/// into `c * (-1)^p (beta/2)^{p/2} conj(z)^p ((m-p)!/m!) e^{-beta r^2/4}
/// L_{m-p}^(p)(beta r^2/2)`, so only non-negative upper indices are ever
/// evaluated. All magnitude factors are combined in log space; `k` of
/// several hundred is routine.
pub fn basis_fn(p: &LandauParams, k: i64, pt: &PlaneLabel) -> Result<Complex64> {
    let m = p.m;
    if k < -(m as i64) {
        return Err(Error::IndexOutOfRange { k, neg_m: -(m as i64) });
    }
    let beta = p.beta;
    let u = beta * pt.r_squared() / 2.0;
    let half_log_beta_2pi = 0.5 * (beta / (2.0 * std::f64::consts::PI)).ln();
    let log_half_beta = (beta / 2.0).ln();

    let value = if k >= 0 {
        let k = k as usize;
        // c = sqrt(m! beta / (2 pi (k+m)!))
        let c_log = 0.5 * log_factorial_ratio(m, k + m) + half_log_beta_2pi;
        let laguerre = laguerre_eval(LaguerreIndex::new(m, k as i64)?, u)?;
        ScaledValue::from_log(c_log + 0.5 * k as f64 * log_half_beta - u / 2.0)
            * ScaledValue::from_complex(pt.z()).powi(k as i32)
            * ScaledValue::from_real(laguerre)
    } else {
        let p_idx = (-k) as usize; // 1 <= p <= m
        // (k+m)! = (m-p)! here, both in c and in the index transform.
        let c_log = 0.5 * log_factorial_ratio(m, m - p_idx) + half_log_beta_2pi;
        let transform_log = log_factorial_ratio(m - p_idx, m);
        let laguerre = laguerre_eval(LaguerreIndex::new(m - p_idx, p_idx as i64)?, u)?;
        let sign = if p_idx.is_multiple_of(2) { 1.0 } else { -1.0 };
        ScaledValue::from_log(
            c_log + 0.5 * p_idx as f64 * log_half_beta + transform_log - u / 2.0,
        ) * ScaledValue::from_complex(pt.z().conj()).powi(p_idx as i32)
            * ScaledValue::from_real(sign * laguerre)
    };
    Ok(value.to_complex())
}

/// The reproducing kernel in closed form:
/// `(beta/2pi) exp(-i beta/2 r∧r' - beta/4 |r-r'|^2) L_m^(0)(beta/2 |r-r'|^2)`.
pub fn kernel_closed(p: &LandauParams, r: &PlaneLabel, r2: &PlaneLabel) -> Complex64 {
    let beta = p.beta;
    let wedge = r.wedge(*r2);
    let d2 = r.distance_squared(*r2);
    let laguerre = laguerre_eval(
        LaguerreIndex::new(p.m, 0).expect("k = 0 is always valid"),
        beta * d2 / 2.0,
    )
    .expect("finite by construction");
    let magnitude = beta / (2.0 * std::f64::consts::PI) * (-beta * d2 / 4.0).exp() * laguerre;
    magnitude * Complex64::new(0.0, -beta * wedge / 2.0).exp()
}

/// The reproducing kernel as its eigenfunction series
/// `sum_k phi_k(r) conj(phi_k(r'))`, truncated under the policy.
///
/// The finite `k <= 0` block is summed unconditionally; the stopping rule
/// applies to the `k >= 1` tail only.
pub fn kernel_series(
    p: &LandauParams,
    r: &PlaneLabel,
    r2: &PlaneLabel,
    policy: &TruncationPolicy,
) -> Result<SeriesResult> {
    let term = |k: i64| {
        let a = basis_fn(p, k, r).expect("k >= -m by construction");
        let b = basis_fn(p, k, r2).expect("k >= -m by construction");
        a * b.conj()
    };
    let m = p.m as i64;
    sum_with_policy(policy, (-m..=0).map(term), (1..).map(term))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn params(beta: f64, m: usize) -> LandauParams {
        LandauParams::new(beta, m).unwrap()
    }

    fn label(x: f64, y: f64) -> PlaneLabel {
        PlaneLabel::new(x, y).unwrap()
    }

    #[test]
    fn params_are_validated() {
        assert!(LandauParams::new(0.0, 1).is_err());
        assert!(LandauParams::new(-1.0, 1).is_err());
        assert!(LandauParams::new(f64::NAN, 1).is_err());
        assert!(LandauParams::new(1.0, DEFAULT_DEGREE_CAP + 1).is_err());
        assert!(PlaneLabel::new(f64::INFINITY, 0.0).is_err());
    }

    #[test]
    fn energies_are_half_integer_multiples_of_beta() {
        assert_eq!(landau_energy(&params(1.0, 0)), 0.5);
        assert_eq!(landau_energy(&params(2.0, 3)), 7.0);
        let eps = 1e-9;
        assert!((landau_energy(&params(eps, 0)) - eps / 2.0).abs() < 1e-24);
    }

    #[test]
    fn basis_index_below_negative_m_is_rejected() {
        let p = params(1.0, 2);
        let err = basis_fn(&p, -3, &label(0.3, 0.4)).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange { k: -3, neg_m: -2 }));
        assert!(basis_fn(&p, -2, &label(0.3, 0.4)).is_ok());
    }

    #[test]
    fn ground_state_normalization_at_origin() {
        // k = 0, any m: c_{beta,m,0} L_m^{(0)}(0) = sqrt(beta/2pi).
        for &beta in &[0.5, 2.0] {
            for m in [0, 3] {
                let got = basis_fn(&params(beta, m), 0, &label(0.0, 0.0)).unwrap();
                let want = (beta / (2.0 * PI)).sqrt();
                assert!((got.re - want).abs() < 1e-14 * want, "beta={beta} m={m}");
                assert_eq!(got.im, 0.0);
            }
        }
    }

    #[test]
    fn nonzero_angular_index_vanishes_at_origin() {
        let p = params(1.0, 2);
        for k in [-2_i64, -1, 1, 2, 7] {
            let v = basis_fn(&p, k, &label(0.0, 0.0)).unwrap();
            assert_eq!(v, Complex64::new(0.0, 0.0), "k={k}");
        }
    }

    #[test]
    fn hand_evaluated_point_for_the_lowest_level() {
        // beta=1, m=0, k=2 at (1,1): c = (2 pi 2!)^{-1/2}, (z/sqrt(2))^2 = i,
        // envelope e^{-1/2}, L_0^{(2)} = 1.
        let got = basis_fn(&params(1.0, 0), 2, &label(1.0, 1.0)).unwrap();
        let want = Complex64::new(0.0, (1.0 / (4.0 * PI)).sqrt() * (-0.5_f64).exp());
        assert!((got - want).norm() < 1e-15, "got {got}, want {want}");
    }

    #[test]
    fn negative_index_assembly_agrees_with_raw_laguerre_transform() {
        // Independent route: evaluate the defining formula directly with
        // the negative-index Laguerre values (fine at desk scale).
        for m in 1..=6_usize {
            for k in (-(m as i64))..0 {
                for &(x, y) in &[(0.7, -0.4), (1.3, 0.9), (0.05, 2.0)] {
                    let p = params(1.7, m);
                    let pt = label(x, y);
                    let got = basis_fn(&p, k, &pt).unwrap();
                    let u = p.beta() * pt.r_squared() / 2.0;
                    let c = (0.5 * log_factorial_ratio(m, (k + m as i64) as usize)
                        + 0.5 * (p.beta() / (2.0 * PI)).ln())
                    .exp();
                    let lag = laguerre_eval(LaguerreIndex::new(m, k).unwrap(), u).unwrap();
                    let zk = (pt.z() * (p.beta() / 2.0).sqrt()).powi(k as i32);
                    let want = c * zk * (-u / 2.0).exp() * lag;
                    assert!(
                        (got - want).norm() <= 1e-12 * want.norm().max(1e-30),
                        "m={m} k={k} at ({x},{y}): got {got}, want {want}"
                    );
                }
            }
        }
    }

    #[test]
    fn kernel_diagonal_is_beta_over_two_pi() {
        for &beta in &[0.5, 1.0, 2.0] {
            for m in [0, 2, 5] {
                let p = params(beta, m);
                let r = label(0.37, -1.2);
                let got = kernel_closed(&p, &r, &r);
                let want = beta / (2.0 * PI);
                assert!((got.re - want).abs() <= 2.0 * f64::EPSILON * want);
                assert_eq!(got.im, 0.0);
            }
        }
    }

    #[test]
    fn kernel_hand_value_off_diagonal() {
        // beta=1, m=0, r=(0,0), r2=(2,0): (1/2pi) e^{-1}, no phase.
        let p = params(1.0, 0);
        let got = kernel_closed(&p, &label(0.0, 0.0), &label(2.0, 0.0));
        let want = (1.0 / (2.0 * PI)) * (-1.0_f64).exp();
        assert!((got.re - want).abs() < 1e-16);
        assert_eq!(got.im, 0.0);
    }

    #[test]
    fn kernel_series_at_origin_needs_only_the_prefix() {
        let p = params(2.0, 0);
        let origin = label(0.0, 0.0);
        let policy = TruncationPolicy::default();
        let result = kernel_series(&p, &origin, &origin, &policy).unwrap();
        let want = 2.0 / (2.0 * PI);
        assert!((result.value.re - want).abs() < 1e-14);
        // Prefix (k=0) plus the vanishing tail run that stops the sum.
        assert_eq!(result.terms_used, 1 + policy.consecutive_small);
    }

    #[test]
    fn kernel_series_matches_closed_form_at_desk_points() {
        let policy = TruncationPolicy::default();
        for &(beta, m) in &[(0.5, 0_usize), (1.0, 2), (2.0, 5)] {
            let p = params(beta, m);
            let r = label(0.9, -0.3);
            let r2 = label(0.2, 0.8);
            let series = kernel_series(&p, &r, &r2, &policy).unwrap();
            let closed = kernel_closed(&p, &r, &r2);
            assert!(
                (series.value - closed).norm() <= 1e-12 * closed.norm().max(1e-3),
                "beta={beta} m={m}: series {:?} vs closed {closed}",
                series.value
            );
        }
    }

    #[test]
    fn kernel_series_budget_exhaustion_is_reported() {
        let p = params(1.0, 0);
        // Far-separated labels need many terms; a budget of 8 cannot do it.
        let policy = TruncationPolicy::with_max_terms(8);
        let err = kernel_series(&p, &label(3.0, 0.0), &label(0.0, 3.0), &policy).unwrap_err();
        assert!(matches!(err, Error::NonConvergence { terms_used: 8, .. }));
    }

    proptest! {
        #[test]
        fn wedge_is_antisymmetric(
            x1 in -5.0_f64..5.0, y1 in -5.0_f64..5.0,
            x2 in -5.0_f64..5.0, y2 in -5.0_f64..5.0,
        ) {
            let a = label(x1, y1);
            let b = label(x2, y2);
            prop_assert_eq!(a.wedge(b), -b.wedge(a));
            prop_assert_eq!(a.wedge(a), 0.0);
        }

        // K(r, r') = conj(K(r', r)): Hermitian symmetry of the closed form.
        #[test]
        fn kernel_is_hermitian(
            x1 in -2.0_f64..2.0, y1 in -2.0_f64..2.0,
            x2 in -2.0_f64..2.0, y2 in -2.0_f64..2.0,
            m in 0_usize..4,
        ) {
            let p = params(1.3, m);
            let a = label(x1, y1);
            let b = label(x2, y2);
            let forward = kernel_closed(&p, &a, &b);
            let backward = kernel_closed(&p, &b, &a).conj();
            prop_assert!((forward - backward).norm() <= 1e-15 * forward.norm().max(1e-300));
        }
    }
}
