//! The Heisenberg group and its Schrödinger representation.
//!
//! Group elements are triples `(x, y, t)` with the law
//! `(x, y, t) · (x', y', s) = (x + x', y + y', t + s + (x y' - x' y)/2)`;
//! the central coordinate `t` picks up half the wedge product. The
//! Schrödinger representation at field strength `beta` acts on
//! wavefunctions over the line by a shift and a unit-modulus multiplier.

use num_complex::Complex64;

/// An element `(x, y, t)` of the Heisenberg group.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    pub x: f64,
    pub y: f64,
    pub t: f64,
}

impl GroupElement {
    /// A new element; coordinates are expected finite.
    pub fn new(x: f64, y: f64, t: f64) -> Self {
        Self { x, y, t }
    }

    /// The group identity `(0, 0, 0)`.
    pub fn identity() -> Self {
        Self { x: 0.0, y: 0.0, t: 0.0 }
    }

    /// The group inverse `(-x, -y, -t)` (the wedge term cancels itself).
    pub fn inverse(self) -> Self {
        Self { x: -self.x, y: -self.y, t: -self.t }
    }
}

/// The group law.
pub fn heisenberg_mul(a: &GroupElement, b: &GroupElement) -> GroupElement {
    GroupElement {
        x: a.x + b.x,
        y: a.y + b.y,
        t: a.t + b.t + 0.5 * (a.x * b.y - b.x * a.y),
    }
}

/// The Schrödinger representation applied to a wavefunction at one point:
///
/// `T_beta(x, y, t)[psi](xi) = exp(i(beta t - sqrt(beta) y xi + beta x y / 2)) psi(xi - sqrt(beta) x)`.
///
/// `beta` must be positive; `psi` is any callable. The prefactor has unit
/// modulus, so the action is pointwise norm-preserving in `psi`'s shifted
/// argument.
pub fn schrodinger_action(
    beta: f64,
    g: &GroupElement,
    psi: impl Fn(f64) -> Complex64,
    xi: f64,
) -> Complex64 {
    debug_assert!(beta > 0.0, "beta must be positive");
    let sqrt_beta = beta.sqrt();
    let phase = beta * g.t - sqrt_beta * g.y * xi + beta * g.x * g.y / 2.0;
    Complex64::new(0.0, phase).exp() * psi(xi - sqrt_beta * g.x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn group_law_hand_value() {
        let g = heisenberg_mul(&GroupElement::new(1.0, 2.0, 3.0), &GroupElement::new(4.0, 5.0, 6.0));
        assert_eq!(g, GroupElement::new(5.0, 7.0, 7.5));
    }

    #[test]
    fn identity_acts_trivially_in_the_representation() {
        let psi = |xi: f64| Complex64::new((-xi * xi / 2.0).exp(), 0.3 * xi);
        for &xi in &[-1.7, 0.0, 2.2] {
            let acted = schrodinger_action(1.3, &GroupElement::identity(), psi, xi);
            assert_eq!(acted, psi(xi));
        }
    }

    #[test]
    fn central_elements_act_by_a_character() {
        // (0, 0, t) multiplies by exp(i beta t) and shifts nothing.
        let beta = 0.7;
        let t = 1.9;
        let psi = |xi: f64| Complex64::new(xi.cos(), xi.sin());
        for &xi in &[-0.5, 1.25] {
            let acted = schrodinger_action(beta, &GroupElement::new(0.0, 0.0, t), psi, xi);
            let want = Complex64::new(0.0, beta * t).exp() * psi(xi);
            assert!((acted - want).norm() < 1e-15);
        }
    }

    #[test]
    fn the_multiplier_has_unit_modulus() {
        let psi = |xi: f64| Complex64::new((-xi * xi / 2.0).exp(), 0.0);
        let g = GroupElement::new(0.8, -1.3, 0.4);
        let beta = 2.0;
        for &xi in &[-2.0, 0.1, 1.6] {
            let acted = schrodinger_action(beta, &g, psi, xi);
            let shifted = psi(xi - beta.sqrt() * g.x);
            assert!((acted.norm() - shifted.norm()).abs() <= 1e-15 * shifted.norm().max(1e-300));
        }
    }

    proptest! {
        #[test]
        fn identity_and_inverse_behave(
            x in -4.0_f64..4.0, y in -4.0_f64..4.0, t in -4.0_f64..4.0,
        ) {
            let g = GroupElement::new(x, y, t);
            prop_assert_eq!(heisenberg_mul(&g, &GroupElement::identity()), g);
            prop_assert_eq!(heisenberg_mul(&GroupElement::identity(), &g), g);
            let e = heisenberg_mul(&g, &g.inverse());
            prop_assert_eq!(e.x, 0.0);
            prop_assert_eq!(e.y, 0.0);
            prop_assert_eq!(e.t, 0.0);
        }

        #[test]
        fn group_law_is_associative(
            x1 in -3.0_f64..3.0, y1 in -3.0_f64..3.0, t1 in -3.0_f64..3.0,
            x2 in -3.0_f64..3.0, y2 in -3.0_f64..3.0, t2 in -3.0_f64..3.0,
            x3 in -3.0_f64..3.0, y3 in -3.0_f64..3.0, t3 in -3.0_f64..3.0,
        ) {
            let (a, b, c) = (
                GroupElement::new(x1, y1, t1),
                GroupElement::new(x2, y2, t2),
                GroupElement::new(x3, y3, t3),
            );
            let left = heisenberg_mul(&heisenberg_mul(&a, &b), &c);
            let right = heisenberg_mul(&a, &heisenberg_mul(&b, &c));
            prop_assert!((left.x - right.x).abs() < 1e-12);
            prop_assert!((left.y - right.y).abs() < 1e-12);
            prop_assert!((left.t - right.t).abs() < 1e-12);
        }

        // T(g1) T(g2) = T(g1 g2): the defining property of a representation,
        // including the central phase produced by the wedge term.
        #[test]
        fn action_composes_through_the_group_law(
            x1 in -2.0_f64..2.0, y1 in -2.0_f64..2.0, t1 in -1.0_f64..1.0,
            x2 in -2.0_f64..2.0, y2 in -2.0_f64..2.0, t2 in -1.0_f64..1.0,
            xi in -3.0_f64..3.0,
        ) {
            let beta = 1.7;
            let psi = |s: f64| Complex64::new((-s * s / 2.0).exp(), 0.2 * s);
            let g1 = GroupElement::new(x1, y1, t1);
            let g2 = GroupElement::new(x2, y2, t2);
            let nested = schrodinger_action(
                beta,
                &g1,
                |s| schrodinger_action(beta, &g2, psi, s),
                xi,
            );
            let direct = schrodinger_action(beta, &heisenberg_mul(&g1, &g2), psi, xi);
            prop_assert!(
                (nested - direct).norm() <= 1e-12 * direct.norm().max(1e-6),
                "nested {} vs direct {}", nested, direct
            );
        }
    }
}
