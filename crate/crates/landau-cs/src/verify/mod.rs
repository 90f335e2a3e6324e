//! Quadrature- and oracle-backed self-checks with machine-readable reports.
//!
//! Every analytic claim the crate implements twice — a series and a closed
//! form, a symmetry, a normalization, an operator identity — is covered by
//! a named *check*. A check walks a parameter grid, measures the
//! discrepancy between the two independent routes at every grid point, and
//! aggregates the worst case into a [`VerificationReport`] that serializes
//! to JSON.
//!
//! The registered checks (see [`all_check_names`]):
//!
//! | name | claim |
//! |------|-------|
//! | `genfun` | Laguerre-weighted Hermite series equals its single-Hermite closed form |
//! | `state-equivalence` | superposition route equals displaced-Fock route, pointwise in `xi` |
//! | `kernel` | reproducing-kernel series equals its Gaussian closed form |
//! | `orthonormality` | Gram matrix of ten Landau basis functions is the identity |
//! | `resolution-identity` | coherent-state overlaps integrate to the squared norm |
//! | `canonical-moments` | canonical states have the advertised means and variances |
//! | `canonical-series` | canonical Fock series equals the Gaussian closed form |
//! | `hermite-integral` | Gaussian Hermite-product integral equals its Laguerre closed form |
//!
//! # Report contract
//!
//! * `passed` is exactly `worst error under the declared metric <= tolerance`.
//! * `worst_case_params` is a member of `grid`.
//! * Reports are deterministic given the spec (any randomized grid points
//!   are drawn while *building* the default spec, from its recorded seed);
//!   only `runtime_ms` varies between runs.
//! * A failing grid point never aborts the sweep: evaluation errors are
//!   recorded as infinite-error points and the sweep continues. Errors
//!   that invalidate the whole check (a quadrature rule too coarse for
//!   the requested degrees, a malformed spec) are returned as `Err`.
//!
//! ```
//! use landau_cs::verify::{default_spec, run_check};
//!
//! let spec = default_spec("canonical-series", 7).unwrap();
//! let report = run_check(&spec).unwrap();
//! assert!(report.passed);
//! ```

mod checks;

pub use checks::{all_check_names, default_spec, run_check};

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One named parameter point: parameter name to value.
///
/// All parameters are carried as `f64`; integer parameters (degrees,
/// level indices) are stored exactly since they are tiny. The ordered map
/// makes serialized bundles key-sorted and therefore byte-stable.
pub type ParamBundle = BTreeMap<String, f64>;

/// A named list of values for one parameter.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    /// Parameter name as it appears in bundles and reports.
    pub name: String,
    /// The values this parameter takes.
    pub values: Vec<f64>,
}

impl Axis {
    /// Convenience constructor.
    pub fn new(name: &str, values: &[f64]) -> Self {
        Self { name: name.to_string(), values: values.to_vec() }
    }
}

/// A parameter grid: the cartesian product of some axes, plus explicit
/// extra bundles (stress points, randomized draws) appended afterwards.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Grid {
    /// Axes whose cartesian product forms the regular part of the grid.
    pub axes: Vec<Axis>,
    /// Bundles appended verbatim after the cartesian part.
    pub extras: Vec<ParamBundle>,
}

impl Grid {
    /// Grid from axes only.
    pub fn cartesian(axes: Vec<Axis>) -> Self {
        Self { axes, extras: Vec::new() }
    }

    /// Number of bundles the grid expands to.
    pub fn len(&self) -> usize {
        let cart: usize = if self.axes.is_empty() {
            0
        } else {
            self.axes.iter().map(|a| a.values.len()).product()
        };
        cart + self.extras.len()
    }

    /// Whether the grid expands to no bundles at all.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Expand to the full bundle list.
    ///
    /// The cartesian part is emitted in lexicographic order: the last
    /// axis varies fastest. Extras follow in their stored order. The
    /// expansion order is part of the determinism contract — the
    /// worst-case tie-break ("first bundle wins") depends on it.
    pub fn bundles(&self) -> Vec<ParamBundle> {
        let mut out = Vec::with_capacity(self.len());
        if !self.axes.is_empty() && self.axes.iter().all(|a| !a.values.is_empty()) {
            let mut idx = vec![0usize; self.axes.len()];
            loop {
                let bundle: ParamBundle = self
                    .axes
                    .iter()
                    .zip(&idx)
                    .map(|(a, &i)| (a.name.clone(), a.values[i]))
                    .collect();
                out.push(bundle);
                // Odometer increment, last axis fastest.
                let mut pos = self.axes.len();
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < self.axes[pos].values.len() {
                        break;
                    }
                    idx[pos] = 0;
                }
                if idx.iter().all(|&i| i == 0) {
                    break;
                }
            }
        }
        out.extend(self.extras.iter().cloned());
        out
    }
}

/// How a point discrepancy is normalized before the tolerance comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    /// Raw `|lhs - rhs|`.
    Abs,
    /// `|lhs - rhs| / |rhs|`; infinite at zeros of the reference, so only
    /// suitable when the reference is bounded away from zero.
    Rel,
    /// `|lhs - rhs| / max(1, |rhs|)`: relative for large references,
    /// absolute near zero, defined everywhere. The default for identity
    /// checks, which pass through zeros of the polynomials involved.
    Mixed,
}

/// What to check, where, and how strictly.
///
/// Construct via [`default_spec`] and tweak fields as needed; `tolerance`
/// and `metric` are data here, never hard-coded inside check logic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckSpec {
    /// Registered check name (see [`all_check_names`]).
    pub name: String,
    /// Parameter grid to sweep.
    pub grid: Grid,
    /// Pass threshold for the worst error under `metric`.
    pub tolerance: f64,
    /// Normalization applied to each point discrepancy.
    pub metric: Metric,
    /// Seed recorded in the report; the randomized extra points of a
    /// default grid are drawn from it at spec-construction time.
    pub seed: u64,
    /// Term budget for every series evaluated by the check.
    pub max_terms: usize,
    /// Optional override of the check's internal quadrature order
    /// (angular order for `orthonormality`, inner Gauss-Hermite order for
    /// `resolution-identity`, rule order for `hermite-integral`). `None`
    /// picks an order sufficient for the grid; an explicit value below
    /// the sufficient one fails with `InsufficientQuadratureOrder`.
    pub quadrature_order: Option<usize>,
}

impl CheckSpec {
    /// Reject empty grids and non-positive tolerances.
    pub fn validate(&self) -> Result<()> {
        if self.grid.is_empty() {
            return Err(Error::InvalidInput(format!(
                "check '{}' has an empty parameter grid",
                self.name
            )));
        }
        if self.tolerance <= 0.0 || !self.tolerance.is_finite() {
            return Err(Error::InvalidInput(format!(
                "tolerance must be positive and finite, got {}",
                self.tolerance
            )));
        }
        if self.max_terms == 0 {
            return Err(Error::InvalidInput("max_terms must be at least 1".into()));
        }
        Ok(())
    }
}

/// Outcome of sweeping one check over its grid.
///
/// Serializes to the JSON schema emitted by the command-line front end:
/// `{check_name, grid, worst_abs_err, worst_rel_err, worst_case_params,
/// tolerance, passed, runtime_ms, seed}` (plus `domain_truncation_bound`
/// for the one check that truncates an unbounded integration domain).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    /// Which check produced this report.
    pub check_name: String,
    /// Every parameter bundle that was evaluated, in sweep order.
    #[serde(rename = "grid")]
    pub parameter_grid: Vec<ParamBundle>,
    /// Largest raw discrepancy `|lhs - rhs|` over the grid.
    pub worst_abs_err: f64,
    /// Largest guarded relative discrepancy `|lhs - rhs| / max(1, |rhs|)`
    /// over the grid (the [`Metric::Mixed`] normalization, which stays
    /// defined at zeros of the reference).
    pub worst_rel_err: f64,
    /// The bundle that maximized the declared metric (first on ties).
    pub worst_case_params: ParamBundle,
    /// The threshold the worst declared-metric error was compared against.
    pub tolerance: f64,
    /// Whether the worst error under the declared metric was finite and
    /// within tolerance.
    pub passed: bool,
    /// Wall-clock time for the sweep. Excluded from determinism claims.
    pub runtime_ms: f64,
    /// Seed recorded from the spec.
    pub seed: u64,
    /// For checks integrating over a truncated unbounded domain: the
    /// envelope bound on the discarded mass. Omitted elsewhere.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domain_truncation_bound: Option<f64>,
}

/// One evaluated grid point: raw discrepancy plus the reference magnitude
/// used for normalization.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PointEval {
    pub abs_err: f64,
    pub reference: f64,
}

/// Walk the grid, evaluate every bundle, and aggregate worst cases.
///
/// Evaluation errors (non-convergent series, domain violations at a
/// particular point) are recorded as infinite-error points so the sweep
/// always completes; `passed` is then necessarily false and the failing
/// bundle shows up as `worst_case_params`.
pub(crate) fn sweep_grid(
    spec: &CheckSpec,
    mut eval: impl FnMut(&ParamBundle) -> Result<PointEval>,
) -> VerificationReport {
    let started = Instant::now();
    let bundles = spec.grid.bundles();
    let mut worst_abs = 0.0_f64;
    let mut worst_guarded = 0.0_f64;
    let mut worst_declared = f64::NEG_INFINITY;
    let mut worst_index = 0usize;
    for (i, bundle) in bundles.iter().enumerate() {
        let (abs, guarded, strict) = match eval(bundle) {
            Ok(point) if point.abs_err.is_finite() => {
                let abs = point.abs_err;
                let denom = point.reference.abs();
                let guarded = abs / denom.max(1.0);
                let strict = if abs == 0.0 { 0.0 } else { abs / denom };
                (abs, guarded, strict)
            }
            // A non-finite discrepancy and an outright error are the same
            // thing to the aggregate: an unverified point.
            _ => (f64::INFINITY, f64::INFINITY, f64::INFINITY),
        };
        worst_abs = worst_abs.max(abs);
        worst_guarded = worst_guarded.max(guarded);
        let declared = match spec.metric {
            Metric::Abs => abs,
            Metric::Rel => strict,
            Metric::Mixed => guarded,
        };
        if declared > worst_declared {
            worst_declared = declared;
            worst_index = i;
        }
    }
    let passed = worst_declared.is_finite() && worst_declared <= spec.tolerance;
    let worst_case_params = bundles.get(worst_index).cloned().unwrap_or_default();
    VerificationReport {
        check_name: spec.name.clone(),
        parameter_grid: bundles,
        worst_abs_err: worst_abs,
        worst_rel_err: worst_guarded,
        worst_case_params,
        tolerance: spec.tolerance,
        passed,
        runtime_ms: started.elapsed().as_secs_f64() * 1e3,
        seed: spec.seed,
        domain_truncation_bound: None,
    }
}

/// Fetch a parameter from a bundle or explain which one is missing.
pub(crate) fn need(bundle: &ParamBundle, key: &str) -> Result<f64> {
    bundle
        .get(key)
        .copied()
        .ok_or_else(|| Error::InvalidInput(format!("parameter bundle is missing '{key}'")))
}

/// Fetch a small non-negative integer parameter (degree, level index).
pub(crate) fn need_usize(bundle: &ParamBundle, key: &str) -> Result<usize> {
    let v = need(bundle, key)?;
    if v < 0.0 || v.fract() != 0.0 || v > 1e9 {
        return Err(Error::InvalidInput(format!(
            "parameter '{key}' must be a small non-negative integer, got {v}"
        )));
    }
    Ok(v as usize)
}
