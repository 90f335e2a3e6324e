//! The series engine: every infinite sum in the crate runs through one
//! policy-driven stop rule, and this example pokes at it directly.
//!
//! A policy carries a hard term budget (`max_terms`), a relative tail
//! tolerance (`tail_tol`), and how many consecutive small terms must be
//! seen before stopping (`consecutive_small` — symmetric series produce
//! deceptive lone zero terms, so one small term proves nothing). Sums that
//! exhaust the budget return a `NonConvergence` error carrying diagnostics
//! instead of a silently wrong value.

use landau_cs::series::{sum_with_policy, TruncationPolicy};
use landau_cs::{Complex64, Error};

fn main() -> landau_cs::Result<()> {
    // A geometric series with known sum: sum 0.8^n = 5.
    let geometric = |n: usize| Complex64::new(0.8_f64.powi(n as i32), 0.0);

    println!("geometric series sum 0.8^n (exact value 5) under tightening tolerances:");
    println!("{:>9}  {:>22}  {:>5}  {:>12}", "tail_tol", "value", "terms", "tail estimate");
    for tail_tol in [1e-6, 1e-10, 1e-14] {
        let policy = TruncationPolicy { tail_tol, ..TruncationPolicy::default() };
        let sum = sum_with_policy(&policy, [geometric(0)], (1..).map(geometric))?;
        println!("{tail_tol:>9.0e}  {:>22.16}  {:>5}  {:>12.3e}", sum.value.re, sum.terms_used, sum.tail_estimate);
    }

    println!();
    println!("why `consecutive_small` exists: an even series is zero at every odd");
    println!("term, and a stop rule that trusts one small term would quit instantly.");
    let spiky = |n: usize| {
        if n % 2 == 1 {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::new(0.5_f64.powi(n as i32 / 2), 0.0)
        }
    };
    for consecutive_small in [1, 6] {
        let policy = TruncationPolicy { consecutive_small, ..TruncationPolicy::default() };
        let sum = sum_with_policy(&policy, [spiky(0)], (1..).map(spiky))?;
        println!(
            "  consecutive_small = {consecutive_small}: value {:.6} after {} terms (exact 2)",
            sum.value.re, sum.terms_used
        );
    }

    println!();
    println!("a starved budget fails loudly, with diagnostics in the error:");
    let policy = TruncationPolicy::with_max_terms(8);
    match sum_with_policy(&policy, [geometric(0)], (1..).map(geometric)) {
        Err(Error::NonConvergence { terms_used, tail_estimate }) => {
            println!("  NonConvergence after {terms_used} terms, last term magnitude {tail_estimate:.3e}");
        }
        other => println!("  unexpected outcome: {other:?}"),
    }
    println!("(the CLI exposes the same budget as --max-terms / LANDAU_CS_MAX_TERMS)");
    Ok(())
}
