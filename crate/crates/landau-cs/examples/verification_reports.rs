//! The verification layer as a library: run the built-in identity checks
//! programmatically and work with their structured reports.
//!
//! Each check sweeps one mathematical claim over a deterministic parameter
//! grid (seeded, so reruns are bit-identical apart from the timing field)
//! and reports the worst deviation it saw, where it saw it, and a
//! pass/fail verdict against the check's tolerance. The same reports back
//! the command-line `verify` subcommand; here they are consumed directly,
//! ending with one serialized to JSON.

use landau_cs::verify::{all_check_names, default_spec, run_check};

fn main() -> landau_cs::Result<()> {
    let seed = 42;

    println!("running every built-in check at its default grid and tolerance:");
    println!(
        "{:<22} {:>7} {:>11} {:>11} {:>10} {:>7}",
        "check", "points", "worst abs", "worst rel", "tolerance", "result"
    );
    for name in all_check_names() {
        let spec = default_spec(name, seed)?;
        let report = run_check(&spec)?;
        println!(
            "{:<22} {:>7} {:>11.3e} {:>11.3e} {:>10.0e} {:>7}",
            report.check_name,
            report.parameter_grid.len(),
            report.worst_abs_err,
            report.worst_rel_err,
            report.tolerance,
            if report.passed { "pass" } else { "FAIL" },
        );
    }

    println!();
    println!("tightening a tolerance turns a pass into a diagnosable failure:");
    let mut spec = default_spec("genfun", seed)?;
    spec.tolerance = 1e-16;
    let report = run_check(&spec)?;
    println!(
        "  genfun at tolerance 1e-16: passed = {}, worst case at {:?}",
        report.passed, report.worst_case_params
    );

    println!();
    println!("reports serialize to JSON for machines (shown truncated):");
    let spec = default_spec("kernel", seed)?;
    let json = serde_json::to_string_pretty(&run_check(&spec)?)
        .expect("reports always serialize");
    for line in json.lines().take(10) {
        println!("  {line}");
    }
    println!("  ...");
    Ok(())
}
