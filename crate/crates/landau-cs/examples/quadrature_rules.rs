//! The quadrature toolbox: Gauss–Hermite rules on the line and plane, and
//! polar rules for plain Lebesgue integrals over the plane or a disc.
//!
//! Each rule is checked against an integral with a known closed form so
//! the weight conventions are visible in running code:
//!
//! * `gauss_hermite(n)` integrates `f` against the implicit weight
//!   `exp(-x^2)`, exactly for polynomials up to degree `2n - 1`;
//! * `tensor_gauss_hermite(n)` does the same against `exp(-x^2 - y^2)`;
//! * `polar_gaussian(beta, ..)` integrates the *full* integrand (its own
//!   Gaussian decay included) over the whole plane;
//! * `polar_disc(radius, ..)` integrates over a finite disc.

use std::f64::consts::PI;

use landau_cs::specfun::QuadratureRule;

fn main() -> landau_cs::Result<()> {
    let line = QuadratureRule::gauss_hermite(12)?;
    println!("Gauss–Hermite, order 12 ({} nodes):", line.len());
    let moment4 = line.integrate(|x| x.powi(4))?;
    let moment6 = line.integrate(|x| x.powi(6))?;
    println!("  int x^4 exp(-x^2) dx = {moment4:.16}  (exact 3 sqrt(pi)/4 = {:.16})", 3.0 * PI.sqrt() / 4.0);
    println!("  int x^6 exp(-x^2) dx = {moment6:.16}  (exact 15 sqrt(pi)/8 = {:.16})", 15.0 * PI.sqrt() / 8.0);
    let first = line.nodes_1d().expect("line rule has 1-d nodes")[0];
    println!("  leftmost node {first:.12}, weights sum to {:.16} (= sqrt(pi))", line.weights().iter().sum::<f64>());

    println!();
    let plane = QuadratureRule::tensor_gauss_hermite(16)?;
    let mixed = plane.integrate_2d(|x, y| x * x * y * y)?;
    println!("tensor Gauss–Hermite, order 16 ({} nodes):", plane.len());
    println!("  int x^2 y^2 exp(-x^2-y^2) dA = {mixed:.16}  (exact pi/4 = {:.16})", PI / 4.0);

    println!();
    let beta = 2.0;
    let polar = QuadratureRule::polar_gaussian(beta, 32, 24)?;
    let gaussian_mass = polar.integrate_2d(|x, y| (-beta * (x * x + y * y) / 2.0).exp())?;
    println!("polar rule tuned to exp(-beta r^2/2) decay, beta = {beta} ({} nodes):", polar.len());
    println!("  int exp(-beta r^2/2) dA = {gaussian_mass:.16}  (exact 2 pi/beta = {:.16})", 2.0 * PI / beta);

    println!();
    let disc = QuadratureRule::polar_disc(1.5, 32, 24)?;
    let area = disc.integrate_2d(|_, _| 1.0)?;
    let second_moment = disc.integrate_2d(|x, y| x * x + y * y)?;
    println!("disc rule, radius 1.5 ({} nodes):", disc.len());
    println!("  area            = {area:.16}  (exact pi (3/2)^2 = {:.16})", PI * 2.25);
    println!("  int r^2 dA      = {second_moment:.16}  (exact pi (3/2)^4/2 = {:.16})", PI * 1.5_f64.powi(4) / 2.0);
    Ok(())
}
