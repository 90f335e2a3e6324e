//! Command-line front end: `eval`, `verify`, `sweep`, and `--list`.
//!
//! ```text
//! landau-cs eval   <target> --key value ...   evaluate one quantity once
//! landau-cs verify <check|all> [options]      run a verification suite
//! landau-cs sweep  <target> --key a:b:c ...   evaluate over a grid, emit CSV
//! landau-cs --list                            enumerate targets and checks
//! ```
//!
//! # Exit codes
//!
//! * `0` — success (for `verify`: every check passed).
//! * `1` — a verification check ran to completion and failed.
//! * `2` — usage or evaluation error; the message names the offending
//!   flag and the expected schema where applicable.
//!
//! # Parameters
//!
//! All parameters are `--key value` (or `--key=value`) after the target
//! name. Each target declares a typed schema, shown by `--list`; unknown
//! keys are rejected. Points in the plane and complex labels are two
//! comma-separated reals (`--r 0.5,-1`), Heisenberg group elements three
//! (`--g x,y,t`).
//!
//! In `sweep`, any numeric component may instead be a range
//! `start:stop:step`, inclusive of `stop` when it lands within half a
//! step. The grid is the product of all ranged components; rows come out
//! in lexicographic order of the ranged columns (sorted by column label,
//! last label varying fastest). The CSV holds one column per ranged
//! component plus the target's output columns. A sweep aborts only if
//! its first point fails — the output shape is taken from it; later
//! failing points emit `NaN` cells so the grid stays rectangular.
//!
//! # Output formats
//!
//! `--output json|csv|pretty`. Defaults: `eval` → pretty, `verify` →
//! json, `sweep` → csv (and only csv). Complex numbers are
//! `{"re": r, "im": i}` in JSON and paired `re`,`im` columns in CSV.
//!
//! # Determinism
//!
//! Identical argument vectors (including `--seed`, default `0`) produce
//! byte-identical documents, with one exception: the `runtime_ms` field
//! of verification reports is wall-clock time. Everything else —
//! grids, randomized spot-check points, row order, number formatting —
//! is a pure function of the configuration.
//!
//! # Environment
//!
//! `LANDAU_CS_MAX_TERMS` overrides the default series term budget for
//! every command; an explicit `--max-terms` beats it. A set but
//! unparsable value is reported as a usage error rather than ignored.

mod output;
mod targets;

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::series::TruncationPolicy;
use crate::verify::{all_check_names, default_spec, run_check, VerificationReport};

use output::csv_document;
use targets::{find, registry, ParamKind, ParamValue, ResolvedParams, TargetDef};

/// Environment variable overriding the default series term budget.
pub const MAX_TERMS_ENV: &str = "LANDAU_CS_MAX_TERMS";

/// Hard cap on points produced by a single range expression.
const MAX_RANGE_POINTS: usize = 1_000_000;

#[derive(Parser)]
#[command(
    name = "landau-cs",
    about = "Euclidean Landau levels, coherent states, and the Hermite generating identity",
    disable_help_subcommand = true
)]
struct Cli {
    /// List every eval/sweep target and verification check, then exit.
    #[arg(long)]
    list: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one target at one parameter point.
    Eval(RawArgs),
    /// Run a named verification check (or `all`) and emit its report.
    Verify(RawArgs),
    /// Evaluate a target over a parameter grid and emit CSV.
    Sweep(RawArgs),
}

#[derive(Args)]
struct RawArgs {
    /// Target or check name (see --list).
    target: String,
    /// `--key value` parameters, validated against the target's schema.
    #[arg(trailing_var_arg = true, allow_hyphen_values = true, num_args = 0..)]
    rest: Vec<String>,
}

/// Which subcommand an invocation resolved to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Eval,
    Verify,
    Sweep,
}

/// Requested document format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Pretty,
}

impl OutputFormat {
    fn parse(raw: &str) -> Result<Self, CliError> {
        match raw {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "pretty" => Ok(Self::Pretty),
            other => Err(CliError(format!(
                "--output must be json, csv, or pretty, got `{other}`"
            ))),
        }
    }
}

/// Everything one invocation does, resolved from the command line.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    /// Operation name for eval/sweep, check name (or `all`) for verify.
    pub target: String,
    /// Raw target parameters as written, reserved flags already removed.
    pub params: BTreeMap<String, String>,
    pub output: OutputFormat,
    pub seed: u64,
    /// Tolerance override for verification checks.
    pub tolerance: Option<f64>,
    /// Series term budget; already merged with [`MAX_TERMS_ENV`].
    pub max_terms: Option<usize>,
    /// Quadrature order override for verification checks.
    pub quadrature_order: Option<usize>,
    /// Whether `--default-grid` was written out explicitly.
    pub default_grid: bool,
}

/// What an invocation printed and how it exited.
#[derive(Debug)]
pub struct CliOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A usage or evaluation failure; always exits with code 2.
#[derive(Debug)]
struct CliError(String);

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError(e.to_string())
    }
}

/// Run the CLI on an explicit argument vector (first element is the
/// program name) with an explicit value for [`MAX_TERMS_ENV`]. This is
/// the whole CLI as a pure function; [`main_from_env`] merely feeds it
/// the real process environment.
pub fn run_with<I, T>(argv: I, env_max_terms: Option<&str>) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let is_info = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            return if is_info {
                CliOutcome { exit_code: 0, stdout: rendered, stderr: String::new() }
            } else {
                CliOutcome { exit_code: 2, stdout: String::new(), stderr: rendered }
            };
        }
    };
    match build_and_execute(cli, env_max_terms) {
        Ok((stdout, exit_code)) => CliOutcome { exit_code, stdout, stderr: String::new() },
        Err(CliError(message)) => CliOutcome {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        },
    }
}

/// Run on the real `std::env` arguments and environment, printing the
/// documents and returning the process exit code.
///
/// A consumer that stops reading early (`landau-cs sweep ... | head`)
/// closes the pipe mid-write; that is truncation on the reader's side,
/// not a failure here, so the computed exit code stands and the partial
/// write is simply abandoned.
pub fn main_from_env() -> std::process::ExitCode {
    use std::io::Write;

    let env = std::env::var(MAX_TERMS_ENV).ok();
    let outcome = run_with(std::env::args(), env.as_deref());
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::ExitCode::from(outcome.exit_code.clamp(0, 2) as u8)
}

fn build_and_execute(cli: Cli, env_max_terms: Option<&str>) -> Result<(String, i32), CliError> {
    let env_cap = match env_max_terms {
        Some(raw) => Some(raw.parse::<usize>().ok().filter(|&v| v >= 1).ok_or_else(|| {
            CliError(format!(
                "{MAX_TERMS_ENV} must be a positive integer, got `{raw}`"
            ))
        })?),
        None => None,
    };
    if cli.list {
        return Ok((list_document(), 0));
    }
    let Some(command) = cli.command else {
        return Err(CliError(
            "missing subcommand: expected `eval <target>`, `verify <check|all>`, \
             `sweep <target>`, or `--list`"
                .to_string(),
        ));
    };
    let (kind, raw) = match command {
        Command::Eval(raw) => (CommandKind::Eval, raw),
        Command::Verify(raw) => (CommandKind::Verify, raw),
        Command::Sweep(raw) => (CommandKind::Sweep, raw),
    };
    let config = RunConfig::from_raw(kind, raw, env_cap)?;
    execute(&config)
}

/// Execute a fully resolved configuration. Returns the document for
/// standard output and the exit code (0 or 1; usage problems are `Err`).
fn execute(config: &RunConfig) -> Result<(String, i32), CliError> {
    match config.command {
        CommandKind::Eval => execute_eval(config),
        CommandKind::Verify => execute_verify(config),
        CommandKind::Sweep => execute_sweep(config),
    }
}

impl RunConfig {
    fn from_raw(
        command: CommandKind,
        raw: RawArgs,
        env_cap: Option<usize>,
    ) -> Result<Self, CliError> {
        let mut params = split_pairs(&raw.rest)?;

        let output_raw = params.remove("output");
        let seed = match params.remove("seed") {
            Some(s) => s.parse::<u64>().map_err(|_| {
                CliError(format!("--seed must be a non-negative integer, got `{s}`"))
            })?,
            None => 0,
        };
        let tolerance = match params.remove("tolerance") {
            Some(s) => {
                let t = s.parse::<f64>().ok().filter(|t| t.is_finite() && *t > 0.0);
                Some(t.ok_or_else(|| {
                    CliError(format!("--tolerance must be a positive real, got `{s}`"))
                })?)
            }
            None => None,
        };
        let max_terms_flag = match params.remove("max-terms") {
            Some(s) => Some(s.parse::<usize>().ok().filter(|&v| v >= 1).ok_or_else(|| {
                CliError(format!("--max-terms must be a positive integer, got `{s}`"))
            })?),
            None => None,
        };
        let quadrature_order = match params.remove("quadrature-order") {
            Some(s) => Some(s.parse::<usize>().ok().filter(|&v| v >= 1).ok_or_else(|| {
                CliError(format!(
                    "--quadrature-order must be a positive integer, got `{s}`"
                ))
            })?),
            None => None,
        };
        let default_grid = params.remove("default-grid").is_some();

        match command {
            CommandKind::Verify => {
                if let Some(key) = params.keys().next() {
                    return Err(CliError(format!(
                        "unknown flag --{key} for verify; valid flags: --default-grid \
                         --tolerance <real> --seed <uint> --max-terms <uint> \
                         --quadrature-order <uint> --output json|pretty"
                    )));
                }
            }
            CommandKind::Eval | CommandKind::Sweep => {
                let cmd = if command == CommandKind::Eval { "eval" } else { "sweep" };
                if tolerance.is_some() {
                    return Err(CliError(format!("--tolerance is only valid for verify, not {cmd}")));
                }
                if quadrature_order.is_some() {
                    return Err(CliError(format!(
                        "--quadrature-order is only valid for verify, not {cmd}"
                    )));
                }
                if default_grid {
                    return Err(CliError(format!("--default-grid is only valid for verify, not {cmd}")));
                }
            }
        }

        let output = match output_raw {
            Some(s) => OutputFormat::parse(&s)?,
            None => match command {
                CommandKind::Eval => OutputFormat::Pretty,
                CommandKind::Verify => OutputFormat::Json,
                CommandKind::Sweep => OutputFormat::Csv,
            },
        };
        if command == CommandKind::Sweep && output != OutputFormat::Csv {
            return Err(CliError("sweep emits CSV; --output must be csv".to_string()));
        }
        if command == CommandKind::Verify && output == OutputFormat::Csv {
            return Err(CliError(
                "verify emits reports; --output must be json or pretty".to_string(),
            ));
        }

        Ok(RunConfig {
            command,
            target: raw.target,
            params,
            output,
            seed,
            tolerance,
            max_terms: max_terms_flag.or(env_cap),
            quadrature_order,
            default_grid,
        })
    }

    fn policy(&self) -> TruncationPolicy {
        match self.max_terms {
            Some(cap) => TruncationPolicy::with_max_terms(cap),
            None => TruncationPolicy::default(),
        }
    }
}

/// Split raw trailing tokens into a `key -> value` map. Accepts
/// `--key value` and `--key=value`; `--default-grid` is a bare flag.
fn split_pairs(rest: &[String]) -> Result<BTreeMap<String, String>, CliError> {
    const BARE_FLAGS: &[&str] = &["default-grid"];
    let mut map = BTreeMap::new();
    let mut iter = rest.iter();
    while let Some(token) = iter.next() {
        let Some(key) = token.strip_prefix("--") else {
            return Err(CliError(format!(
                "expected `--key value`, got stray token `{token}`"
            )));
        };
        if key.is_empty() {
            return Err(CliError("empty flag name `--`".to_string()));
        }
        let (key, inline) = match key.split_once('=') {
            Some((k, v)) => (k, Some(v.to_string())),
            None => (key, None),
        };
        let value = if let Some(v) = inline {
            v
        } else if BARE_FLAGS.contains(&key) {
            "true".to_string()
        } else {
            match iter.next() {
                Some(v) => v.clone(),
                None => return Err(CliError(format!("flag --{key} needs a value"))),
            }
        };
        if map.insert(key.to_string(), value).is_some() {
            return Err(CliError(format!("flag --{key} given twice")));
        }
    }
    Ok(map)
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

fn lookup_target(name: &str) -> Result<&'static TargetDef, CliError> {
    find(name).ok_or_else(|| {
        CliError(format!(
            "unknown target `{name}`; run `landau-cs --list` to see every target"
        ))
    })
}

fn execute_eval(config: &RunConfig) -> Result<(String, i32), CliError> {
    let def = lookup_target(&config.target)?;
    let slots = resolve_slots(def, &config.params, false)?;
    let mut values = BTreeMap::new();
    for slot in &slots {
        let comps: Vec<f64> = slot.comps.iter().map(|c| c.values[0]).collect();
        values.insert(slot.key.to_string(), assemble(slot.kind, &comps));
    }
    let resolved = ResolvedParams::new(values, config.policy());
    let value = (def.eval)(&resolved)
        .map_err(|e| CliError(format!("{} failed: {e}", def.name)))?;
    let doc = match config.output {
        OutputFormat::Pretty => value.to_pretty(),
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&value.to_json())
                .expect("JSON value serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => value.to_csv(),
    };
    Ok((doc, 0))
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn execute_verify(config: &RunConfig) -> Result<(String, i32), CliError> {
    let names: Vec<&str> = if config.target == "all" {
        all_check_names().to_vec()
    } else {
        vec![config.target.as_str()]
    };
    let mut reports = Vec::with_capacity(names.len());
    for name in names {
        let mut spec = default_spec(name, config.seed).map_err(CliError::from)?;
        if let Some(t) = config.tolerance {
            spec.tolerance = t;
        }
        if let Some(cap) = config.max_terms {
            spec.max_terms = cap;
        }
        if let Some(order) = config.quadrature_order {
            spec.quadrature_order = Some(order);
        }
        reports.push(run_check(&spec).map_err(CliError::from)?);
    }
    let all_passed = reports.iter().all(|r| r.passed);
    let doc = match config.output {
        OutputFormat::Json => {
            let mut s = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0])
            } else {
                serde_json::to_string_pretty(&reports)
            }
            .expect("reports serialize");
            s.push('\n');
            s
        }
        OutputFormat::Pretty => reports.iter().map(pretty_report_line).collect(),
        OutputFormat::Csv => unreachable!("rejected while building the config"),
    };
    Ok((doc, if all_passed { 0 } else { 1 }))
}

fn pretty_report_line(report: &VerificationReport) -> String {
    format!(
        "{}: {} (worst_abs {:e}, worst_rel {:e}, tolerance {:e}, {} points)\n",
        report.check_name,
        if report.passed { "pass" } else { "FAIL" },
        report.worst_abs_err,
        report.worst_rel_err,
        report.tolerance,
        report.parameter_grid.len()
    )
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

/// One parsed component of one parameter: either a fixed scalar or an
/// expanded range.
struct CompSpec {
    values: Vec<f64>,
    ranged: bool,
}

/// One parameter of the target with all its components parsed.
struct Slot {
    key: &'static str,
    kind: ParamKind,
    comps: Vec<CompSpec>,
}

fn resolve_slots(
    def: &TargetDef,
    params: &BTreeMap<String, String>,
    allow_ranges: bool,
) -> Result<Vec<Slot>, CliError> {
    for key in params.keys() {
        if !def.params.iter().any(|p| p.key == key) {
            return Err(CliError(format!(
                "unknown parameter --{key} for target {}; expected: {}",
                def.name,
                def.schema()
            )));
        }
    }
    let mut slots = Vec::with_capacity(def.params.len());
    for p in def.params {
        let raw = match params.get(p.key) {
            Some(v) => v.as_str(),
            None => p.default.ok_or_else(|| {
                CliError(format!(
                    "missing --{} for target {}; expected: {}",
                    p.key,
                    def.name,
                    def.schema()
                ))
            })?,
        };
        let n_comps = p.kind.component_labels().len();
        let pieces: Vec<&str> = raw.split(',').collect();
        if pieces.len() != n_comps {
            return Err(CliError(format!(
                "--{} expects {}, got `{raw}`",
                p.key,
                p.kind.placeholder()
            )));
        }
        let mut comps = Vec::with_capacity(n_comps);
        for piece in pieces {
            if piece.contains(':') {
                if !allow_ranges {
                    return Err(CliError(format!(
                        "--{}: ranges (start:stop:step) are only valid in sweep, got `{raw}`",
                        p.key
                    )));
                }
                let values = expand_range(piece, p.key)?;
                validate_components(p.kind, &values, p.key)?;
                comps.push(CompSpec { values, ranged: true });
            } else {
                let v = piece.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(|| {
                    CliError(format!(
                        "--{} expects {}, got `{raw}`",
                        p.key,
                        p.kind.placeholder()
                    ))
                })?;
                validate_components(p.kind, &[v], p.key)?;
                comps.push(CompSpec { values: vec![v], ranged: false });
            }
        }
        slots.push(Slot { key: p.key, kind: p.kind, comps });
    }
    Ok(slots)
}

fn validate_components(kind: ParamKind, values: &[f64], key: &str) -> Result<(), CliError> {
    match kind {
        ParamKind::Real | ParamKind::Pair | ParamKind::Triple => Ok(()),
        ParamKind::UInt => {
            for &v in values {
                if v.fract() != 0.0 || !(0.0..=1e9).contains(&v) {
                    return Err(CliError(format!(
                        "--{key} must be a non-negative integer, got {v}"
                    )));
                }
            }
            Ok(())
        }
        ParamKind::Int => {
            for &v in values {
                if v.fract() != 0.0 || v.abs() > 9e15 {
                    return Err(CliError(format!("--{key} must be an integer, got {v}")));
                }
            }
            Ok(())
        }
    }
}

fn assemble(kind: ParamKind, comps: &[f64]) -> ParamValue {
    match kind {
        ParamKind::Real => ParamValue::Real(comps[0]),
        ParamKind::UInt => ParamValue::UInt(comps[0] as usize),
        ParamKind::Int => ParamValue::Int(comps[0] as i64),
        ParamKind::Pair => ParamValue::Pair(comps[0], comps[1]),
        ParamKind::Triple => ParamValue::Triple(comps[0], comps[1], comps[2]),
    }
}

/// Expand `start:stop:step`, inclusive of `stop` when it lands within
/// half a step. Values are `start + i*step` (no accumulated drift).
fn expand_range(text: &str, key: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    let bad = |what: &str| {
        CliError(format!(
            "--{key}: range must be start:stop:step with finite reals and step != 0, \
             got `{text}` ({what})"
        ))
    };
    if parts.len() != 3 {
        return Err(bad("wrong number of `:` separators"));
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|p| p.parse::<f64>().ok().filter(|v| v.is_finite()))
        .collect::<Option<Vec<f64>>>()
        .ok_or_else(|| bad("unparsable endpoint"))?;
    let (start, stop, step) = (nums[0], nums[1], nums[2]);
    if step == 0.0 {
        return Err(bad("zero step"));
    }
    let direction = step.signum();
    let mut values = Vec::new();
    loop {
        let v = start + (values.len() as f64) * step;
        if (v - stop) * direction > step.abs() / 2.0 {
            break;
        }
        values.push(v);
        if values.len() > MAX_RANGE_POINTS {
            return Err(CliError(format!(
                "--{key}: range `{text}` produces more than {MAX_RANGE_POINTS} points"
            )));
        }
    }
    if values.is_empty() {
        return Err(CliError(format!(
            "--{key}: range `{text}` produces an empty grid"
        )));
    }
    Ok(values)
}

struct SweepAxis {
    label: String,
    slot: usize,
    comp: usize,
    values: Vec<f64>,
}

fn execute_sweep(config: &RunConfig) -> Result<(String, i32), CliError> {
    let def = lookup_target(&config.target)?;
    let slots = resolve_slots(def, &config.params, true)?;

    let mut axes = Vec::new();
    for (si, slot) in slots.iter().enumerate() {
        let suffixes = slot.kind.component_labels();
        for (ci, comp) in slot.comps.iter().enumerate() {
            if comp.ranged {
                axes.push(SweepAxis {
                    label: format!("{}{}", slot.key, suffixes[ci]),
                    slot: si,
                    comp: ci,
                    values: comp.values.clone(),
                });
            }
        }
    }
    if axes.is_empty() {
        return Err(CliError(
            "sweep needs at least one ranged parameter (start:stop:step syntax)".to_string(),
        ));
    }
    axes.sort_by(|a, b| a.label.cmp(&b.label));

    let policy = config.policy();
    let mut counters = vec![0usize; axes.len()];
    let mut value_columns: Option<Vec<&'static str>> = None;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut done = false;
    while !done {
        let mut current: Vec<Vec<f64>> = slots
            .iter()
            .map(|s| s.comps.iter().map(|c| c.values[0]).collect())
            .collect();
        for (ai, axis) in axes.iter().enumerate() {
            current[axis.slot][axis.comp] = axis.values[counters[ai]];
        }
        let mut values = BTreeMap::new();
        for (si, slot) in slots.iter().enumerate() {
            values.insert(slot.key.to_string(), assemble(slot.kind, &current[si]));
        }
        let resolved = ResolvedParams::new(values, policy);

        let mut row: Vec<f64> = axes
            .iter()
            .enumerate()
            .map(|(ai, axis)| axis.values[counters[ai]])
            .collect();
        match (def.eval)(&resolved) {
            Ok(value) => {
                let cells = value.row().ok_or_else(|| {
                    CliError(format!(
                        "target {} emits a table; sweep needs a fixed-width output",
                        def.name
                    ))
                })?;
                if value_columns.is_none() {
                    value_columns = Some(value.columns().expect("row implies columns"));
                }
                row.extend(cells);
            }
            Err(e) => match &value_columns {
                Some(cols) => row.extend(std::iter::repeat_n(f64::NAN, cols.len())),
                None => {
                    return Err(CliError(format!(
                        "sweep target {} failed at the first grid point: {e}",
                        def.name
                    )));
                }
            },
        }
        rows.push(row);

        done = true;
        for k in (0..axes.len()).rev() {
            counters[k] += 1;
            if counters[k] < axes[k].values.len() {
                done = false;
                break;
            }
            counters[k] = 0;
        }
    }

    let mut columns: Vec<String> = axes.iter().map(|a| a.label.clone()).collect();
    columns.extend(
        value_columns
            .expect("at least one row evaluated")
            .iter()
            .map(|c| (*c).to_string()),
    );
    let doc = csv_document(&columns, rows.iter().map(|r| r.as_slice()));
    Ok((doc, 0))
}

// ---------------------------------------------------------------------------
// --list
// ---------------------------------------------------------------------------

fn check_summary(name: &str) -> &'static str {
    match name {
        "genfun" => "generating identity: truncated series against the closed form",
        "state-equivalence" => "displaced-Fock state against the superposition state",
        "kernel" => "reproducing kernel: basis series against the closed form",
        "orthonormality" => "eigenbasis Gram matrix against the identity, by quadrature",
        "resolution-identity" => "squared basis overlaps integrate to one over the plane",
        "canonical-moments" => "canonical-state position/momentum means and variances",
        "canonical-series" => "canonical state: Fock sum against the Gaussian closed form",
        "hermite-integral" => "Gaussian Hermite-product integrals: closed form against quadrature",
        _ => "",
    }
}

fn list_document() -> String {
    let mut out = String::from("targets (eval, sweep):\n");
    for t in registry() {
        out.push_str(&format!("  {} {}\n      {}\n", t.name, t.schema(), t.summary));
    }
    out.push_str("checks (verify):\n");
    for name in all_check_names() {
        out.push_str(&format!("  {}\n      {}\n", name, check_summary(name)));
    }
    out.push_str("  all\n      every check above in sequence\n");
    out
}
