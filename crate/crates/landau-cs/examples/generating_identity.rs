//! The headline identity: a bilateral Hermite–Laguerre series that sums,
//! for every level `m`, to a closed Gaussian-type expression.
//!
//! The left side stacks weighted Hermite values over all basis indices of
//! one Landau level; the right side is a single exponential times one
//! Hermite polynomial of a shifted complex argument. This example sweeps
//! the spectral variable and prints both sides, their distance, and the
//! number of series terms the stop rule consumed. It closes with the
//! sanity limit: at `m = 0` with a purely real label the identity
//! collapses to the classical generating function `exp(2 xi tau - tau^2)`.

use landau_cs::coherent::{genfun_lhs, genfun_rhs, GenFunParams};
use landau_cs::series::TruncationPolicy;
use landau_cs::Complex64;

fn main() -> landau_cs::Result<()> {
    let policy = TruncationPolicy::default();
    let (beta, m, a, b) = (1.0, 2, 0.8, -0.6);

    println!("two sides of the identity at beta = {beta}, m = {m}, label = ({a}, {b})");
    println!(
        "{:>5}  {:>24}  {:>24}  {:>9}  {:>5}",
        "xi", "series (re, im)", "closed (re, im)", "|diff|", "terms"
    );
    for xi in [-3.0, -1.5, 0.0, 0.7, 1.5, 3.0] {
        let params = GenFunParams::new(beta, m, a, b, xi)?;
        let series = genfun_lhs(&params, &policy)?;
        let closed = genfun_rhs(&params);
        println!(
            "{xi:>5.2}  {:>11.4e} {:>11.4e}  {:>11.4e} {:>11.4e}  {:>9.2e}  {:>5}",
            series.value.re,
            series.value.im,
            closed.re,
            closed.im,
            (series.value - closed).norm(),
            series.terms_used,
        );
    }

    println!();
    println!("classical limit: m = 0, b = 0, so the sum must equal exp(2 xi tau - tau^2)");
    println!("{:>5}  {:>5}  {:>22}  {:>22}  {:>9}", "tau", "xi", "series", "classical", "|diff|");
    for tau in [-1.0, 0.25, 1.0] {
        for xi in [-2.0, 0.7] {
            // tau = a sqrt(beta) / 2, so this label hits the requested tau.
            let a = 2.0 * tau / f64::sqrt(beta);
            let params = GenFunParams::new(beta, 0, a, 0.0, xi)?;
            let series = genfun_lhs(&params, &policy)?;
            let classical = (2.0 * xi * tau - tau * tau).exp();
            println!(
                "{tau:>5.2}  {xi:>5.2}  {:>22.16}  {:>22.16}  {:>9.2e}",
                series.value.re,
                classical,
                (series.value - Complex64::new(classical, 0.0)).norm(),
            );
        }
    }
    Ok(())
}
