//! The special-function layer: Hermite and generalized Laguerre
//! polynomials, plus the overflow-safe factorial-ratio helper they lean on.
//!
//! Shows single evaluations, whole sequences from one recurrence pass, the
//! exact parity of Hermite values, Laguerre polynomials with negative upper
//! index (valid down to `k = -m`) together with the reduction identity that
//! explains them, and `log_factorial_ratio` staying finite where naive
//! factorial quotients would overflow.

use landau_cs::specfun::{
    hermite_eval, hermite_sequence, laguerre_eval, log_factorial_ratio, LaguerreIndex, PolyDegree,
};

fn main() -> landau_cs::Result<()> {
    println!("Hermite H_n(0.7) for n = 0..=8, one recurrence pass:");
    let degree = PolyDegree::new(8)?;
    for (n, value) in hermite_sequence(degree, 0.7)?.iter().enumerate() {
        println!("  H_{n}(0.7) = {value}");
    }

    println!();
    println!("parity is exact, not approximate: H_n(-x) == (-1)^n H_n(x) bit for bit");
    for n in [3, 6] {
        let d = PolyDegree::new(n)?;
        let plus = hermite_eval(d, 1.3)?;
        let minus = hermite_eval(d, -1.3)?;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        println!("  n = {n}: H({:+}) = {minus:>20}, (-1)^n H(+1.3) = {:>20}", -1.3, sign * plus);
        assert_eq!(minus, sign * plus);
    }

    println!();
    println!("generalized Laguerre L_m^(k), the upper index running negative to -m:");
    for k in [-2_i64, -1, 0, 1, 3] {
        let idx = LaguerreIndex::new(2, k)?;
        println!("  L_2^({k:>2})(2.0) = {}", laguerre_eval(idx, 2.0)?);
    }

    println!();
    println!("negative upper index reduces to a positive one:");
    println!("  L_m^(-p)(x) = (-x)^p (m-p)!/m! L_(m-p)^(p)(x)");
    let (m, p, x) = (5_usize, 2_usize, 1.7_f64);
    let lhs = laguerre_eval(LaguerreIndex::new(m, -(p as i64))?, x)?;
    let ratio = log_factorial_ratio(m - p, m).exp();
    let rhs = (-x).powi(p as i32) * ratio * laguerre_eval(LaguerreIndex::new(m - p, p as i64)?, x)?;
    println!("  m = {m}, p = {p}, x = {x}:  lhs = {lhs},  rhs = {rhs}");

    println!();
    println!("log_factorial_ratio(p, q) = ln(p!/q!) without forming either factorial:");
    for (p, q) in [(0_usize, 170_usize), (500, 3), (1_000_000, 999_998)] {
        println!("  ln({p}!/{q}!) = {:+.6e}", log_factorial_ratio(p, q));
    }
    println!("  (170! already overflows f64; the ratio above is a finite log)");
    Ok(())
}
