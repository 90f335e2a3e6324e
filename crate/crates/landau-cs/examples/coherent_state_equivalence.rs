//! Two constructions of the same coherent-state wavefunction, evaluated
//! independently and compared pointwise.
//!
//! The displacement-operator route (`perelomov_state`) moves a Hermite
//! function with a Heisenberg group element and is entirely closed-form.
//! The superposition route (`iwata_state`) expands the state over the
//! oscillator basis with Landau-level coefficients and sums the series
//! under the truncation policy. Their agreement is the nontrivial content:
//! every series term mixes a Laguerre value, a Gaussian envelope, and a
//! Hermite function, yet the sum collapses to one displaced wave packet.

use landau_cs::coherent::{iwata_state, perelomov_state};
use landau_cs::landau::{LandauParams, PlaneLabel};
use landau_cs::series::TruncationPolicy;

fn main() -> landau_cs::Result<()> {
    let policy = TruncationPolicy::default();

    println!(
        "{:>4}  {:>3}  {:>12}  {:>5}  {:>26}  {:>9}  {:>5}",
        "beta", "m", "label", "xi", "displaced value (re, im)", "|diff|", "terms"
    );
    for (beta, m) in [(1.0, 0), (1.0, 2), (2.5, 1)] {
        let level = LandauParams::new(beta, m)?;
        for (x, y) in [(0.0, 0.0), (0.8, -0.6), (-1.2, 0.4)] {
            let label = PlaneLabel::new(x, y)?;
            for xi in [-1.0, 0.5, 2.0] {
                let closed = perelomov_state(&level, &label, xi);
                let series = iwata_state(&level, &label, xi, &policy)?;
                println!(
                    "{beta:>4.1}  {m:>3}  ({x:>4.1},{y:>4.1})  {xi:>5.2}  {:>12.5e} {:>12.5e}  {:>9.2e}  {:>5}",
                    closed.re,
                    closed.im,
                    (series.value - closed).norm(),
                    series.terms_used,
                );
            }
        }
    }

    println!();
    println!("the label's distance from the origin sets how many terms the series needs:");
    let level = LandauParams::new(1.0, 0)?;
    for rho in [0.5, 1.0, 2.0, 3.0, 4.0] {
        let label = PlaneLabel::new(rho, 0.0)?;
        let series = iwata_state(&level, &label, 0.3, &policy)?;
        println!("  |label| = {rho:>3.1}: {:>3} terms, tail estimate {:.2e}", series.terms_used, series.tail_estimate);
    }
    Ok(())
}
