//! The normalized Hermite functions — the harmonic-oscillator basis that
//! the coherent-state expansions are built on — and the exponentially
//! scaled arithmetic that keeps them finite at any order.
//!
//! `phi_n(xi) = (sqrt(pi) 2^n n!)^{-1/2} exp(-xi^2/2) H_n(xi)` combines a
//! polynomial that grows like `2^n n!` with a normalizer that shrinks just
//! as fast; evaluating the pieces separately overflows near `n = 150`.
//! The crate tracks log-magnitude and phase separately (`hermite_scaled`,
//! `ScaledValue`) so the balanced product is computed directly.

use landau_cs::coherent::hermite_gaussian;
use landau_cs::specfun::{hermite_scaled, PolyDegree, QuadratureRule};

fn main() -> landau_cs::Result<()> {
    println!("phi_n(0.7) for the first few orders:");
    for n in 0..6 {
        println!("  phi_{n}(0.7) = {:+.16}", hermite_gaussian(PolyDegree::new(n)?, 0.7)?);
    }

    println!();
    println!("orthonormality <phi_j, phi_k> by Gauss–Hermite quadrature (order 40):");
    let rule = QuadratureRule::gauss_hermite(40)?;
    for (j, k) in [(0, 0), (7, 7), (12, 12), (0, 2), (5, 11)] {
        // The rule owns the exp(-xi^2) weight; phi_j phi_k carries
        // exp(-xi^2) of its own, so hand the rule the weight-free factor.
        let overlap = rule.integrate(|xi| {
            let a = hermite_gaussian(PolyDegree::new(j).unwrap(), xi).unwrap();
            let b = hermite_gaussian(PolyDegree::new(k).unwrap(), xi).unwrap();
            a * b * (xi * xi).exp()
        })?;
        println!("  <phi_{j:>2}, phi_{k:>2}> = {overlap:>22.16}");
    }

    println!();
    println!("large orders stay finite (the raw Hermite value alone would overflow):");
    for n in [100, 250, 500] {
        let scaled = hermite_scaled(PolyDegree::new(n)?, 3.0)?;
        let phi = hermite_gaussian(PolyDegree::new(n)?, 3.0)?;
        println!(
            "  n = {n:>3}: ln|H_n(3.0)| = {:>9.3} (sign {:+.0}),  phi_n(3.0) = {phi:+.12e}",
            scaled.log_magnitude(),
            scaled.phase().re,
        );
    }
    println!("(ln|H_500(3)| is ~1482, far past the ~709 overflow line of f64 exp)");
    Ok(())
}
