//! The polarized Heisenberg group and its Schrödinger representation:
//! the algebra that turns "displace a wave packet" into a group action.
//!
//! Elements are triples `(x, y, t)` with a twisted product whose center
//! coordinate picks up `(x y' - y x') / 2`. The representation acts on
//! wavefunctions by a unit-modulus phase and an argument shift; being a
//! representation means acting twice equals acting once with the product
//! element, which is checked numerically at the end.

use landau_cs::coherent::{heisenberg_mul, schrodinger_action, GroupElement};
use landau_cs::Complex64;

fn main() {
    let g = GroupElement::new(1.0, 2.0, 3.0);
    let h = GroupElement::new(4.0, 5.0, 6.0);

    let gh = heisenberg_mul(&g, &h);
    let hg = heisenberg_mul(&h, &g);
    println!("g  = ({}, {}, {})", g.x, g.y, g.t);
    println!("h  = ({}, {}, {})", h.x, h.y, h.t);
    println!("gh = ({}, {}, {})   (note the twisted center)", gh.x, gh.y, gh.t);
    println!("hg = ({}, {}, {})   (noncommutative: centers differ)", hg.x, hg.y, hg.t);

    let ginv = g.inverse();
    let e = heisenberg_mul(&g, &ginv);
    println!("g g^-1 = ({}, {}, {})   (identity)", e.x, e.y, e.t);

    let assoc_l = heisenberg_mul(&heisenberg_mul(&g, &h), &GroupElement::new(-0.5, 0.25, 1.0));
    let assoc_r = heisenberg_mul(&g, &heisenberg_mul(&h, &GroupElement::new(-0.5, 0.25, 1.0)));
    println!(
        "associativity: (gh)k = ({}, {}, {}), g(hk) = ({}, {}, {})",
        assoc_l.x, assoc_l.y, assoc_l.t, assoc_r.x, assoc_r.y, assoc_r.t
    );

    println!();
    println!("Schrödinger representation on a Gaussian, beta = 1.3:");
    let beta = 1.3;
    let psi = |xi: f64| Complex64::new((-xi * xi / 2.0).exp(), 0.0);
    let a = GroupElement::new(0.7, -0.3, 0.2);
    let b = GroupElement::new(-0.4, 0.9, -1.0);
    println!("{:>5}  {:>26}  {:>9}", "xi", "T(a)[T(b) psi] (re, im)", "|diff|");
    for xi in [-2.0, -0.5, 0.0, 1.0, 2.5] {
        // Act twice...
        let nested = schrodinger_action(beta, &a, |u| schrodinger_action(beta, &b, psi, u), xi);
        // ...and once with the group product; the results must coincide.
        let composed = schrodinger_action(beta, &heisenberg_mul(&a, &b), psi, xi);
        println!(
            "{xi:>5.2}  {:>12.5e} {:>12.5e}  {:>9.2e}",
            nested.re,
            nested.im,
            (nested - composed).norm()
        );
    }
    println!("(diff at rounding level: acting twice is acting by the product)");
}
