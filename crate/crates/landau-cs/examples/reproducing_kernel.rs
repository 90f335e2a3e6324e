//! The reproducing kernel of one Landau level, two ways: the closed
//! Gaussian–Laguerre expression and the eigenfunction series, plus the
//! two properties that make it "reproducing".
//!
//! The closed form is exact and cheap; the series is the definition. They
//! must agree wherever the series converges, the diagonal must be the
//! constant `beta / (2 pi)` (the flat density of states), and integrating
//! the kernel against any basis function must return that basis function
//! unchanged.

use std::f64::consts::PI;

use landau_cs::landau::{basis_fn, kernel_closed, kernel_series, LandauParams, PlaneLabel};
use landau_cs::series::TruncationPolicy;
use landau_cs::specfun::QuadratureRule;

fn main() -> landau_cs::Result<()> {
    let level = LandauParams::new(2.0, 1)?;
    let policy = TruncationPolicy::default();

    println!("closed form vs eigenfunction series, beta = 2, m = 1:");
    println!("{:>22}  {:>13}  {:>9}  {:>5}", "points", "closed (re)", "|diff|", "terms");
    let pairs = [
        ((0.0, 0.0), (0.3, 0.4)),
        ((0.5, -0.2), (0.5, -0.2)),
        ((1.0, 1.0), (-0.7, 0.3)),
        ((2.0, 0.0), (0.0, 2.0)),
    ];
    for ((x1, y1), (x2, y2)) in pairs {
        let r = PlaneLabel::new(x1, y1)?;
        let r2 = PlaneLabel::new(x2, y2)?;
        let closed = kernel_closed(&level, &r, &r2);
        let series = kernel_series(&level, &r, &r2, &policy)?;
        println!(
            "({x1:>4.1},{y1:>4.1})-({x2:>4.1},{y2:>4.1})  {:>13.6e}  {:>9.2e}  {:>5}",
            closed.re,
            (series.value - closed).norm(),
            series.terms_used,
        );
    }

    println!();
    println!("the diagonal is position-independent: K(r, r) = beta/(2 pi) = {:.16}", 2.0 / (2.0 * PI));
    for (x, y) in [(0.0, 0.0), (0.7, -0.3), (2.5, 1.1)] {
        let r = PlaneLabel::new(x, y)?;
        let k = kernel_closed(&level, &r, &r);
        println!("  K(({x:>4.1},{y:>4.1}), same) = {:.16} + {:e} i", k.re, k.im);
    }

    println!();
    println!("reproducing property: int K(r, r') phi_k(r') dr' = phi_k(r)");
    let rule = QuadratureRule::polar_gaussian(level.beta(), 64, 48)?;
    let r = PlaneLabel::new(0.35, -0.2)?;
    for k in [-1_i64, 0, 2] {
        let reproduced = rule.integrate_2d(|x, y| {
            let r2 = PlaneLabel::new(x, y).expect("finite node");
            kernel_closed(&level, &r, &r2) * basis_fn(&level, k, &r2).expect("k >= -m")
        })?;
        let direct = basis_fn(&level, k, &r)?;
        println!(
            "  k = {k:>2}: integral = {:+.12e} {:+.12e} i,  |err| = {:.2e}",
            reproduced.re,
            reproduced.im,
            (reproduced - direct).norm()
        );
    }
    Ok(())
}
