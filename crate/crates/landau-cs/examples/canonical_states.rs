//! Canonical (harmonic-oscillator) coherent states: the closed Gaussian
//! wave packet against its Fock-space expansion, and the moments that make
//! "coherent" precise.
//!
//! The closed form is a displaced ground-state Gaussian; the series sums
//! `exp(-|z|^2/2) z^n / sqrt(n!)` against the oscillator eigenfunctions.
//! Position statistics are computed by Gauss–Hermite quadrature: the mean
//! tracks `sqrt(2) Re z` while the variance stays pinned at the vacuum
//! value `1/2` — coherent states displace without spreading.

use std::f64::consts::SQRT_2;

use landau_cs::coherent::{canonical_cs_closed, canonical_cs_series, CanonicalLabel};
use landau_cs::series::TruncationPolicy;
use landau_cs::specfun::QuadratureRule;
use landau_cs::Complex64;

fn main() -> landau_cs::Result<()> {
    let policy = TruncationPolicy::default();

    println!("closed Gaussian vs Fock series at a grid of labels:");
    println!("{:>12}  {:>5}  {:>26}  {:>9}  {:>5}", "z", "xi", "closed (re, im)", "|diff|", "terms");
    for (re, im) in [(0.0, 0.0), (1.0, 0.0), (0.6, -0.8), (-1.5, 1.2)] {
        let label = CanonicalLabel::new(Complex64::new(re, im))?;
        for xi in [-1.0, 0.0, 1.4] {
            let closed = canonical_cs_closed(&label, xi);
            let series = canonical_cs_series(&label, xi, &policy)?;
            println!(
                "({re:>4.1},{im:>4.1})  {xi:>5.2}  {:>12.5e} {:>12.5e}  {:>9.2e}  {:>5}",
                closed.re,
                closed.im,
                (series.value - closed).norm(),
                series.terms_used,
            );
        }
    }

    println!();
    println!("position statistics under |psi|^2 (Gauss–Hermite, order 48):");
    println!("{:>12}  {:>10}  {:>20}  {:>20}", "z", "norm", "mean (vs sqrt(2) Re z)", "variance (vs 1/2)");
    let rule = QuadratureRule::gauss_hermite(48)?;
    for (re, im) in [(0.0, 0.0), (1.0, 0.0), (0.6, -0.8), (-1.5, 1.2)] {
        let label = CanonicalLabel::new(Complex64::new(re, im))?;
        // The rule supplies the exp(-xi^2) weight itself, and the state's
        // density is |psi|^2 = density(xi); divide the weight back out.
        let density = |xi: f64| canonical_cs_closed(&label, xi).norm_sqr() * (xi * xi).exp();
        let norm = rule.integrate(density)?;
        let mean = rule.integrate(|xi| xi * density(xi))? / norm;
        let var = rule.integrate(|xi| xi * xi * density(xi))? / norm - mean * mean;
        println!(
            "({re:>4.1},{im:>4.1})  {norm:>10.6}  {mean:>9.6} ({:>9.6})  {var:>9.6} (0.500000)",
            SQRT_2 * re
        );
    }
    println!("(unit norm, displaced mean, vacuum variance: the defining coherences)");
    Ok(())
}
