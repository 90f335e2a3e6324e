//! Gaussian-weighted overlaps of two shifted Hermite polynomials,
//! `int exp(-x^2) H_s(x + alpha) H_l(x + gamma) dx`, with complex shifts.
//!
//! These integrals are the computational engine behind the coherent-state
//! expansions: every basis coefficient is one of them. The closed form is
//! a single finite sum but only valid for `s <= l`; asking for the other
//! ordering is an error by construction, and the integral's symmetry
//! (swap the roles of `(s, alpha)` and `(l, gamma)`) is the caller-side
//! fix. A tensor Gauss–Hermite rule provides the independent cross-check.

use landau_cs::coherent::{
    hermite_product_integral_closed, hermite_product_integral_quad, HermiteIntegralArgs,
};
use landau_cs::specfun::QuadratureRule;
use landau_cs::{Complex64, Error};

fn main() -> landau_cs::Result<()> {
    let rule = QuadratureRule::gauss_hermite(32)?;
    println!("closed form vs quadrature (order 32):");
    println!(
        "{:>6}  {:>22}  {:>26}  {:>9}",
        "(s,l)", "shifts", "closed (re, im)", "|diff|"
    );
    let cases = [
        (0, 0, Complex64::new(0.5, 0.0), Complex64::new(-0.25, 0.0)),
        (1, 3, Complex64::new(0.5, 0.0), Complex64::new(-0.25, 0.0)),
        (2, 2, Complex64::new(0.0, 0.8), Complex64::new(0.3, -0.4)),
        (3, 5, Complex64::new(-0.7, 0.2), Complex64::new(0.1, 0.6)),
    ];
    for (s, l, alpha, gamma) in cases {
        let args = HermiteIntegralArgs::new(s, l, alpha, gamma)?;
        let closed = hermite_product_integral_closed(&args)?;
        let quad = hermite_product_integral_quad(&args, &rule)?;
        println!(
            "({s},{l})    a=({:>5.2},{:>5.2}) g=({:>5.2},{:>5.2})  {:>12.5e} {:>12.5e}  {:>9.2e}",
            alpha.re,
            alpha.im,
            gamma.re,
            gamma.im,
            closed.re,
            closed.im,
            (closed - quad).norm()
        );
    }

    println!();
    println!("the closed form requires s <= l; the reversed order is rejected:");
    let backwards = HermiteIntegralArgs::new(4, 1, Complex64::new(0.5, 0.0), Complex64::new(0.0, 0.0))?;
    match hermite_product_integral_closed(&backwards) {
        Err(Error::OrderViolation { .. }) => println!("  (4, 1) -> OrderViolation, as designed"),
        other => println!("  unexpected outcome: {other:?}"),
    }
    // The integral itself is symmetric under swapping (s, alpha) with
    // (l, gamma), so the caller reorders and loses nothing:
    let swapped = HermiteIntegralArgs::new(1, 4, Complex64::new(0.0, 0.0), Complex64::new(0.5, 0.0))?;
    let value = hermite_product_integral_closed(&swapped)?;
    println!("  swapped to (1, 4): {:+.12e} {:+.12e} i", value.re, value.im);
    Ok(())
}
