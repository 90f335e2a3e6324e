//! Euclidean Landau levels: the energy ladder, the explicit eigenfunction
//! basis of one level, and a numerical look at its orthonormality.
//!
//! A level is fixed by a field strength `beta > 0` and a level number `m`.
//! Its eigenspace is spanned by functions indexed by every integer
//! `k >= -m`; each combines a Gaussian envelope, a power of `x + iy`, and
//! a generalized Laguerre polynomial in `beta r^2 / 2`. The level energy
//! does not depend on `k` — that flat direction is the infinite degeneracy.

use landau_cs::landau::{basis_fn, landau_energy, LandauParams, PlaneLabel};
use landau_cs::specfun::QuadratureRule;
use landau_cs::Complex64;

fn main() -> landau_cs::Result<()> {
    let beta = 1.5;

    println!("energy ladder at beta = {beta} (linear in the level number):");
    for m in 0..5 {
        let level = LandauParams::new(beta, m)?;
        println!("  E_{m} = {}", landau_energy(&level));
    }

    println!();
    let level = LandauParams::new(beta, 1)?;
    let point = PlaneLabel::new(0.8, -0.4)?;
    println!("basis functions of the m = 1 level at (x, y) = (0.8, -0.4):");
    println!("(k starts at -m; below that the functions are identically zero)");
    for k in -1..4 {
        let value = basis_fn(&level, k, &point)?;
        println!("  phi_(k={k:>2}) = {:+.12e} {:+.12e} i", value.re, value.im);
    }

    println!();
    println!("orthonormality over the plane, via a quadrature rule matched to the");
    println!("basis Gaussian decay: <phi_j, phi_k> should be the identity matrix");
    let rule = QuadratureRule::polar_gaussian(beta, 48, 40)?;
    print!("       ");
    for k in -1..3_i64 {
        print!("  k = {k:>2}      ");
    }
    println!();
    for j in -1..3_i64 {
        print!("  j = {j:>2}");
        for k in -1..3_i64 {
            let overlap = rule.integrate_2d(|x, y| {
                let pt = PlaneLabel::new(x, y).expect("finite node");
                let a = basis_fn(&level, j, &pt).expect("k >= -m");
                let b = basis_fn(&level, k, &pt).expect("k >= -m");
                a * b.conj()
            })?;
            print!("  {:>10.3e}", amplitude(overlap));
        }
        println!();
    }
    println!("(diagonal 1, off-diagonal ~1e-16: the rule resolves the level exactly)");
    Ok(())
}

/// Collapse a numerically-real overlap to a signed magnitude for display.
fn amplitude(z: Complex64) -> f64 {
    if z.im.abs() > 1e-12 {
        return f64::NAN;
    }
    z.re
}
