//! Logarithms of factorials and their ratios.
//!
//! Factorials themselves overflow `f64` at `171!`, but every formula in
//! this crate only ever needs them inside ratios or against Gaussians, so
//! we work with `ln n!` throughout and assemble final magnitudes in log
//! space (see [`super::ScaledValue`]).

use std::sync::LazyLock;

/// `ln n!` is tabulated exactly below this bound and handled by the
/// Stirling series above it.
const TABLE_LEN: usize = 171;

/// `ln n!` for `n < 171`, each entry computed as the log of the exactly
/// accumulated `f64` factorial (which stays finite precisely up to `170!`).
/// The product picks up at most ~`n` half-ulps of relative error, and a
/// relative error of the argument is an *absolute* error of its log, so
/// every entry is correct to ~2e-14 absolute, far below `ln 170! ~ 706`.
static LN_FACTORIAL: LazyLock<[f64; TABLE_LEN]> = LazyLock::new(|| {
    let mut table = [0.0_f64; TABLE_LEN];
    let mut product = 1.0_f64;
    for (n, entry) in table.iter_mut().enumerate().skip(1) {
        product *= n as f64;
        *entry = product.ln();
    }
    table
});

/// Natural log of `n!`, accurate to ~1e-14 relative for every `n`.
///
/// Small arguments come from an exact table; larger ones from the Stirling
/// series with Bernoulli corrections through `n^-7`, whose truncation error
/// at the crossover (`n = 171`) is below `1e-22`.
pub fn log_factorial(n: usize) -> f64 {
    if n < TABLE_LEN {
        return LN_FACTORIAL[n];
    }
    let x = n as f64;
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    // ln n! = (n + 1/2) ln n - n + ln(2 pi)/2 + 1/(12 n) - 1/(360 n^3) + ...
    let correction = inv / 12.0 - inv * inv2 / 360.0 + inv * inv2 * inv2 / 1260.0
        - inv * inv2 * inv2 * inv2 / 1680.0;
    (x + 0.5) * x.ln() - x + 0.5 * (2.0 * std::f64::consts::PI).ln() + correction
}

/// `ln(p! / q!)`, accurate to ~1e-14 **relative** even when `p` and `q`
/// are huge and close together.
///
/// Subtracting two large `ln n!` values cancels catastrophically when the
/// arguments are near each other (e.g. `ln(1000001!/1000000!)`), so for
/// gaps up to 64 the ratio is summed directly as `ln(q+1) + ... + ln(p)`;
/// wider gaps make the difference of logs large enough that the absolute
/// table/Stirling error is negligible in relative terms.
pub fn log_factorial_ratio(p: usize, q: usize) -> f64 {
    if p == q {
        return 0.0;
    }
    let (lo, hi, sign) = if p > q { (q, p, 1.0) } else { (p, q, -1.0) };
    if hi - lo <= 64 {
        let mut sum = 0.0;
        for k in (lo + 1)..=hi {
            sum += (k as f64).ln();
        }
        sign * sum
    } else {
        sign * (log_factorial(hi) - log_factorial(lo))
    }
}
