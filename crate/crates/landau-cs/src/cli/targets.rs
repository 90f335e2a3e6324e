//! The `eval` / `sweep` target registry: every quantity the library
//! computes, addressable by name with `--key value` parameters.
//!
//! Each target declares a typed parameter schema. The CLI front end
//! resolves raw strings against that schema (rejecting unknown keys and
//! reporting the expected form on mismatch) and hands the typed bundle to
//! the target's evaluation function.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::coherent::{
    canonical_cs_closed, canonical_cs_series, genfun_lhs, genfun_rhs, heisenberg_mul,
    hermite_gaussian, hermite_product_integral_closed, hermite_product_integral_quad,
    iwata_state, perelomov_state, schrodinger_action, CanonicalLabel, GenFunParams,
    GroupElement, HermiteIntegralArgs,
};
use crate::error::{Error, Result};
use crate::landau::{
    basis_fn, kernel_closed, kernel_series, landau_energy, LandauParams, PlaneLabel,
};
use crate::series::{SeriesResult, TruncationPolicy};
use crate::specfun::{
    hermite_eval, hermite_sequence, laguerre_eval, log_factorial_ratio, LaguerreIndex,
    PolyDegree, QuadratureRule,
};

use super::output::EvalValue;

/// How one parameter is written on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    /// One finite real, e.g. `--xi 1.5`.
    Real,
    /// One non-negative integer, e.g. `--n 4`.
    UInt,
    /// One integer of either sign, e.g. `--k -2`.
    Int,
    /// Two comma-separated reals, e.g. `--r 0.5,-1`.
    Pair,
    /// Three comma-separated reals `x,y,t`, e.g. `--g 1,0,0.5`.
    Triple,
}

impl ParamKind {
    /// The placeholder used in schema lines and usage errors.
    pub fn placeholder(self) -> &'static str {
        match self {
            ParamKind::Real => "<real>",
            ParamKind::UInt => "<uint>",
            ParamKind::Int => "<int>",
            ParamKind::Pair => "<x,y>",
            ParamKind::Triple => "<x,y,t>",
        }
    }

    /// Component suffixes for sweep column labels (`r_x`, `g_t`, ...).
    pub fn component_labels(self) -> &'static [&'static str] {
        match self {
            ParamKind::Real | ParamKind::UInt | ParamKind::Int => &[""],
            ParamKind::Pair => &["_x", "_y"],
            ParamKind::Triple => &["_x", "_y", "_t"],
        }
    }
}

/// One named parameter of a target.
#[derive(Debug, Clone, Copy)]
pub struct ParamDef {
    pub key: &'static str,
    pub kind: ParamKind,
    /// `None` means required; `Some(text)` is parsed exactly like user
    /// input when the flag is absent.
    pub default: Option<&'static str>,
}

const fn req(key: &'static str, kind: ParamKind) -> ParamDef {
    ParamDef { key, kind, default: None }
}

const fn opt(key: &'static str, kind: ParamKind, default: &'static str) -> ParamDef {
    ParamDef { key, kind, default: Some(default) }
}

/// A parameter value after typed resolution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParamValue {
    Real(f64),
    UInt(usize),
    Int(i64),
    Pair(f64, f64),
    Triple(f64, f64, f64),
}

/// Typed parameters plus the truncation policy in force, ready to evaluate.
#[derive(Debug, Clone)]
pub struct ResolvedParams {
    values: BTreeMap<String, ParamValue>,
    policy: TruncationPolicy,
}

impl ResolvedParams {
    pub fn new(values: BTreeMap<String, ParamValue>, policy: TruncationPolicy) -> Self {
        Self { values, policy }
    }

    pub fn policy(&self) -> &TruncationPolicy {
        &self.policy
    }

    fn get(&self, key: &str) -> ParamValue {
        *self
            .values
            .get(key)
            .unwrap_or_else(|| panic!("target schema bug: parameter `{key}` not resolved"))
    }

    fn real(&self, key: &str) -> f64 {
        match self.get(key) {
            ParamValue::Real(v) => v,
            other => panic!("target schema bug: `{key}` resolved as {other:?}, wanted Real"),
        }
    }

    fn uint(&self, key: &str) -> usize {
        match self.get(key) {
            ParamValue::UInt(v) => v,
            other => panic!("target schema bug: `{key}` resolved as {other:?}, wanted UInt"),
        }
    }

    fn int(&self, key: &str) -> i64 {
        match self.get(key) {
            ParamValue::Int(v) => v,
            other => panic!("target schema bug: `{key}` resolved as {other:?}, wanted Int"),
        }
    }

    fn pair(&self, key: &str) -> (f64, f64) {
        match self.get(key) {
            ParamValue::Pair(x, y) => (x, y),
            other => panic!("target schema bug: `{key}` resolved as {other:?}, wanted Pair"),
        }
    }

    fn triple(&self, key: &str) -> (f64, f64, f64) {
        match self.get(key) {
            ParamValue::Triple(x, y, t) => (x, y, t),
            other => panic!("target schema bug: `{key}` resolved as {other:?}, wanted Triple"),
        }
    }
}

/// One addressable computation.
pub struct TargetDef {
    pub name: &'static str,
    pub summary: &'static str,
    pub params: &'static [ParamDef],
    pub eval: fn(&ResolvedParams) -> Result<EvalValue>,
}

impl TargetDef {
    /// `--key <kind>` schema line, brackets around defaulted parameters.
    pub fn schema(&self) -> String {
        let mut parts = Vec::with_capacity(self.params.len());
        for p in self.params {
            let core = format!("--{} {}", p.key, p.kind.placeholder());
            match p.default {
                Some(d) => parts.push(format!("[{core} = {d}]")),
                None => parts.push(core),
            }
        }
        parts.join(" ")
    }
}

/// Every eval/sweep target, in display order.
pub fn registry() -> &'static [TargetDef] {
    &TARGETS
}

/// Look a target up by its exact name.
pub fn find(name: &str) -> Option<&'static TargetDef> {
    TARGETS.iter().find(|t| t.name == name)
}

fn series_value(s: SeriesResult) -> EvalValue {
    EvalValue::Series {
        value: s.value,
        terms_used: s.terms_used,
        tail_estimate: s.tail_estimate,
    }
}

fn finite_positive(name: &str, v: f64) -> Result<f64> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(Error::InvalidInput(format!(
            "{name} must be positive and finite, got {v}"
        )))
    }
}

fn eval_hermite(p: &ResolvedParams) -> Result<EvalValue> {
    let n = PolyDegree::new(p.uint("n"))?;
    Ok(EvalValue::Real(hermite_eval(n, p.real("xi"))?))
}

fn eval_hermite_sequence(p: &ResolvedParams) -> Result<EvalValue> {
    let n = PolyDegree::new(p.uint("n"))?;
    let values = hermite_sequence(n, p.real("xi"))?;
    let rows = values
        .iter()
        .enumerate()
        .map(|(i, v)| vec![i as f64, *v])
        .collect();
    Ok(EvalValue::Table { columns: vec!["n", "value"], rows })
}

fn eval_hermite_gaussian(p: &ResolvedParams) -> Result<EvalValue> {
    let n = PolyDegree::new(p.uint("n"))?;
    Ok(EvalValue::Real(hermite_gaussian(n, p.real("xi"))?))
}

fn eval_laguerre(p: &ResolvedParams) -> Result<EvalValue> {
    let idx = LaguerreIndex::new(p.uint("m"), p.int("k"))?;
    Ok(EvalValue::Real(laguerre_eval(idx, p.real("x"))?))
}

fn eval_log_factorial_ratio(p: &ResolvedParams) -> Result<EvalValue> {
    Ok(EvalValue::Real(log_factorial_ratio(p.uint("p"), p.uint("q"))))
}

fn eval_gauss_hermite_rule(p: &ResolvedParams) -> Result<EvalValue> {
    let rule = QuadratureRule::gauss_hermite(p.uint("order"))?;
    let nodes = rule.nodes_1d().expect("line rule has 1-d nodes");
    let rows = nodes
        .iter()
        .zip(rule.weights())
        .map(|(n, w)| vec![*n, *w])
        .collect();
    Ok(EvalValue::Table { columns: vec!["node", "weight"], rows })
}

fn eval_landau_energy(p: &ResolvedParams) -> Result<EvalValue> {
    let params = LandauParams::new(p.real("beta"), p.uint("m"))?;
    Ok(EvalValue::Real(landau_energy(&params)))
}

fn eval_basis_fn(p: &ResolvedParams) -> Result<EvalValue> {
    let params = LandauParams::new(p.real("beta"), p.uint("m"))?;
    let (x, y) = p.pair("r");
    let pt = PlaneLabel::new(x, y)?;
    Ok(EvalValue::Complex(basis_fn(&params, p.int("k"), &pt)?))
}

fn eval_kernel_closed(p: &ResolvedParams) -> Result<EvalValue> {
    let params = LandauParams::new(p.real("beta"), p.uint("m"))?;
    let (x, y) = p.pair("r");
    let (x2, y2) = p.pair("r2");
    let r = PlaneLabel::new(x, y)?;
    let r2 = PlaneLabel::new(x2, y2)?;
    Ok(EvalValue::Complex(kernel_closed(&params, &r, &r2)))
}

fn eval_kernel_series(p: &ResolvedParams) -> Result<EvalValue> {
    let params = LandauParams::new(p.real("beta"), p.uint("m"))?;
    let (x, y) = p.pair("r");
    let (x2, y2) = p.pair("r2");
    let r = PlaneLabel::new(x, y)?;
    let r2 = PlaneLabel::new(x2, y2)?;
    Ok(series_value(kernel_series(&params, &r, &r2, p.policy())?))
}

fn eval_heisenberg_mul(p: &ResolvedParams) -> Result<EvalValue> {
    let (gx, gy, gt) = p.triple("g");
    let (hx, hy, ht) = p.triple("h");
    let prod = heisenberg_mul(&GroupElement::new(gx, gy, gt), &GroupElement::new(hx, hy, ht));
    Ok(EvalValue::Record(vec![
        ("x", prod.x),
        ("y", prod.y),
        ("t", prod.t),
    ]))
}

fn eval_schrodinger(p: &ResolvedParams) -> Result<EvalValue> {
    let beta = finite_positive("beta", p.real("beta"))?;
    let (x, y, t) = p.triple("g");
    let n = PolyDegree::new(p.uint("n"))?;
    let g = GroupElement::new(x, y, t);
    let psi = move |xi: f64| {
        Complex64::new(
            hermite_gaussian(n, xi).expect("finite shift of a finite argument"),
            0.0,
        )
    };
    Ok(EvalValue::Complex(schrodinger_action(beta, &g, psi, p.real("xi"))))
}

fn eval_perelomov(p: &ResolvedParams) -> Result<EvalValue> {
    let params = LandauParams::new(p.real("beta"), p.uint("m"))?;
    let label = PlaneLabel::new(p.real("x"), p.real("y"))?;
    Ok(EvalValue::Complex(perelomov_state(&params, &label, p.real("xi"))))
}

fn eval_iwata(p: &ResolvedParams) -> Result<EvalValue> {
    let params = LandauParams::new(p.real("beta"), p.uint("m"))?;
    let label = PlaneLabel::new(p.real("x"), p.real("y"))?;
    Ok(series_value(iwata_state(&params, &label, p.real("xi"), p.policy())?))
}

fn eval_canonical_closed(p: &ResolvedParams) -> Result<EvalValue> {
    let (re, im) = p.pair("z");
    let label = CanonicalLabel::new(Complex64::new(re, im))?;
    Ok(EvalValue::Complex(canonical_cs_closed(&label, p.real("xi"))))
}

fn eval_canonical_series(p: &ResolvedParams) -> Result<EvalValue> {
    let (re, im) = p.pair("z");
    let label = CanonicalLabel::new(Complex64::new(re, im))?;
    Ok(series_value(canonical_cs_series(&label, p.real("xi"), p.policy())?))
}

fn genfun_params(p: &ResolvedParams) -> Result<GenFunParams> {
    GenFunParams::new(
        p.real("beta"),
        p.uint("m"),
        p.real("a"),
        p.real("b"),
        p.real("xi"),
    )
}

fn eval_genfun_lhs(p: &ResolvedParams) -> Result<EvalValue> {
    Ok(series_value(genfun_lhs(&genfun_params(p)?, p.policy())?))
}

fn eval_genfun_rhs(p: &ResolvedParams) -> Result<EvalValue> {
    Ok(EvalValue::Complex(genfun_rhs(&genfun_params(p)?)))
}

fn eval_genfun(p: &ResolvedParams) -> Result<EvalValue> {
    let params = genfun_params(p)?;
    let lhs = genfun_lhs(&params, p.policy())?.value;
    let rhs = genfun_rhs(&params);
    Ok(EvalValue::Record(vec![
        ("lhs_re", lhs.re),
        ("lhs_im", lhs.im),
        ("rhs_re", rhs.re),
        ("rhs_im", rhs.im),
        ("abs_err", (lhs - rhs).norm()),
    ]))
}

fn hermite_integral_args(p: &ResolvedParams) -> Result<HermiteIntegralArgs> {
    let (ar, ai) = p.pair("alpha");
    let (gr, gi) = p.pair("gamma");
    HermiteIntegralArgs::new(
        p.uint("s"),
        p.uint("l"),
        Complex64::new(ar, ai),
        Complex64::new(gr, gi),
    )
}

fn eval_hermite_integral_closed(p: &ResolvedParams) -> Result<EvalValue> {
    Ok(EvalValue::Complex(hermite_product_integral_closed(
        &hermite_integral_args(p)?,
    )?))
}

fn eval_hermite_integral_quad(p: &ResolvedParams) -> Result<EvalValue> {
    let rule = QuadratureRule::gauss_hermite(p.uint("order"))?;
    Ok(EvalValue::Complex(hermite_product_integral_quad(
        &hermite_integral_args(p)?,
        &rule,
    )?))
}

static TARGETS: [TargetDef; 21] = [
    TargetDef {
        name: "hermite",
        summary: "Hermite polynomial H_n at a real argument",
        params: &[req("n", ParamKind::UInt), req("xi", ParamKind::Real)],
        eval: eval_hermite,
    },
    TargetDef {
        name: "hermite-sequence",
        summary: "H_0..H_n at one argument, one row per degree",
        params: &[req("n", ParamKind::UInt), req("xi", ParamKind::Real)],
        eval: eval_hermite_sequence,
    },
    TargetDef {
        name: "hermite-gaussian",
        summary: "Normalized oscillator eigenfunction phi_n(xi)",
        params: &[req("n", ParamKind::UInt), req("xi", ParamKind::Real)],
        eval: eval_hermite_gaussian,
    },
    TargetDef {
        name: "laguerre",
        summary: "Generalized Laguerre L_m^(k) at x; k may be negative down to -m",
        params: &[
            req("m", ParamKind::UInt),
            req("k", ParamKind::Int),
            req("x", ParamKind::Real),
        ],
        eval: eval_laguerre,
    },
    TargetDef {
        name: "log-factorial-ratio",
        summary: "ln(p!/q!) without overflow",
        params: &[req("p", ParamKind::UInt), req("q", ParamKind::UInt)],
        eval: eval_log_factorial_ratio,
    },
    TargetDef {
        name: "gauss-hermite-rule",
        summary: "Gauss-Hermite nodes and weights of the given order",
        params: &[req("order", ParamKind::UInt)],
        eval: eval_gauss_hermite_rule,
    },
    TargetDef {
        name: "landau-energy",
        summary: "Landau level energy (m + 1/2) * beta",
        params: &[req("beta", ParamKind::Real), req("m", ParamKind::UInt)],
        eval: eval_landau_energy,
    },
    TargetDef {
        name: "basis-fn",
        summary: "Level-m eigenbasis function Phi_k at a point of the plane",
        params: &[
            req("beta", ParamKind::Real),
            req("m", ParamKind::UInt),
            req("k", ParamKind::Int),
            req("r", ParamKind::Pair),
        ],
        eval: eval_basis_fn,
    },
    TargetDef {
        name: "kernel-closed",
        summary: "Reproducing kernel of level m, closed form",
        params: &[
            req("beta", ParamKind::Real),
            req("m", ParamKind::UInt),
            req("r", ParamKind::Pair),
            req("r2", ParamKind::Pair),
        ],
        eval: eval_kernel_closed,
    },
    TargetDef {
        name: "kernel-series",
        summary: "Reproducing kernel of level m, truncated basis sum",
        params: &[
            req("beta", ParamKind::Real),
            req("m", ParamKind::UInt),
            req("r", ParamKind::Pair),
            req("r2", ParamKind::Pair),
        ],
        eval: eval_kernel_series,
    },
    TargetDef {
        name: "heisenberg-mul",
        summary: "Heisenberg group product of two elements (x,y,t)",
        params: &[req("g", ParamKind::Triple), req("h", ParamKind::Triple)],
        eval: eval_heisenberg_mul,
    },
    TargetDef {
        name: "schrodinger",
        summary: "Schroedinger action of a group element on phi_n, at xi",
        params: &[
            req("beta", ParamKind::Real),
            req("g", ParamKind::Triple),
            req("n", ParamKind::UInt),
            req("xi", ParamKind::Real),
        ],
        eval: eval_schrodinger,
    },
    TargetDef {
        name: "perelomov",
        summary: "Displaced-Fock coherent state at xi, closed form",
        params: &[
            req("beta", ParamKind::Real),
            req("m", ParamKind::UInt),
            req("x", ParamKind::Real),
            req("y", ParamKind::Real),
            req("xi", ParamKind::Real),
        ],
        eval: eval_perelomov,
    },
    TargetDef {
        name: "iwata",
        summary: "Superposition coherent state at xi, truncated series",
        params: &[
            req("beta", ParamKind::Real),
            req("m", ParamKind::UInt),
            req("x", ParamKind::Real),
            req("y", ParamKind::Real),
            req("xi", ParamKind::Real),
        ],
        eval: eval_iwata,
    },
    TargetDef {
        name: "canonical-closed",
        summary: "Canonical coherent state at xi, closed Gaussian form",
        params: &[req("z", ParamKind::Pair), req("xi", ParamKind::Real)],
        eval: eval_canonical_closed,
    },
    TargetDef {
        name: "canonical-series",
        summary: "Canonical coherent state at xi, truncated Fock sum",
        params: &[req("z", ParamKind::Pair), req("xi", ParamKind::Real)],
        eval: eval_canonical_series,
    },
    TargetDef {
        name: "genfun-lhs",
        summary: "Laguerre-weighted Hermite series side of the generating identity",
        params: &[
            req("beta", ParamKind::Real),
            req("m", ParamKind::UInt),
            req("a", ParamKind::Real),
            req("b", ParamKind::Real),
            req("xi", ParamKind::Real),
        ],
        eval: eval_genfun_lhs,
    },
    TargetDef {
        name: "genfun-rhs",
        summary: "Single-Hermite closed side of the generating identity",
        params: &[
            req("beta", ParamKind::Real),
            req("m", ParamKind::UInt),
            req("a", ParamKind::Real),
            req("b", ParamKind::Real),
            req("xi", ParamKind::Real),
        ],
        eval: eval_genfun_rhs,
    },
    TargetDef {
        name: "genfun",
        summary: "Both sides of the generating identity and their distance",
        params: &[
            req("beta", ParamKind::Real),
            req("m", ParamKind::UInt),
            req("a", ParamKind::Real),
            req("b", ParamKind::Real),
            req("xi", ParamKind::Real),
        ],
        eval: eval_genfun,
    },
    TargetDef {
        name: "hermite-integral-closed",
        summary: "Gaussian integral of H_s(x+alpha) H_l(x+gamma), closed form",
        params: &[
            req("s", ParamKind::UInt),
            req("l", ParamKind::UInt),
            req("alpha", ParamKind::Pair),
            req("gamma", ParamKind::Pair),
        ],
        eval: eval_hermite_integral_closed,
    },
    TargetDef {
        name: "hermite-integral-quad",
        summary: "Same Gaussian Hermite-product integral by quadrature",
        params: &[
            req("s", ParamKind::UInt),
            req("l", ParamKind::UInt),
            req("alpha", ParamKind::Pair),
            req("gamma", ParamKind::Pair),
            opt("order", ParamKind::UInt, "24"),
        ],
        eval: eval_hermite_integral_quad,
    },
];

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn resolved(pairs: &[(&str, ParamValue)]) -> ResolvedParams {
        let map = pairs
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect::<BTreeMap<_, _>>();
        ResolvedParams::new(map, TruncationPolicy::default())
    }

    #[test]
    fn registry_names_are_unique_and_kebab_case() {
        let mut seen = std::collections::BTreeSet::new();
        for t in registry() {
            assert!(seen.insert(t.name), "duplicate target name {}", t.name);
            assert!(
                t.name
                    .chars()
                    .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '-'),
                "target name {} is not kebab-case",
                t.name
            );
            assert!(!t.summary.is_empty());
            assert!(!t.params.is_empty());
        }
    }

    #[test]
    fn parameter_keys_are_unique_within_each_target() {
        for t in registry() {
            let mut seen = std::collections::BTreeSet::new();
            for p in t.params {
                assert!(
                    seen.insert(p.key),
                    "target {} declares --{} twice",
                    t.name,
                    p.key
                );
            }
        }
    }

    #[test]
    fn schema_lines_show_placeholders_and_defaults() {
        let t = find("hermite-integral-quad").unwrap();
        assert_eq!(
            t.schema(),
            "--s <uint> --l <uint> --alpha <x,y> --gamma <x,y> [--order <uint> = 24]"
        );
    }

    #[test]
    fn every_target_evaluates_at_a_benign_point() {
        // One valid parameter set per target; the loop panics if a new
        // target is added here without a matching entry.
        use ParamValue::{Int, Pair, Real, Triple, UInt};
        let points: &[(&str, Vec<(&str, ParamValue)>)] = &[
            ("hermite", vec![("n", UInt(2)), ("xi", Real(1.0))]),
            ("hermite-sequence", vec![("n", UInt(4)), ("xi", Real(0.5))]),
            ("hermite-gaussian", vec![("n", UInt(3)), ("xi", Real(-0.5))]),
            ("laguerre", vec![("m", UInt(3)), ("k", Int(-2)), ("x", Real(0.7))]),
            ("log-factorial-ratio", vec![("p", UInt(10)), ("q", UInt(7))]),
            ("gauss-hermite-rule", vec![("order", UInt(5))]),
            ("landau-energy", vec![("beta", Real(2.0)), ("m", UInt(3))]),
            (
                "basis-fn",
                vec![
                    ("beta", Real(1.0)),
                    ("m", UInt(2)),
                    ("k", Int(-1)),
                    ("r", Pair(0.5, -0.25)),
                ],
            ),
            (
                "kernel-closed",
                vec![
                    ("beta", Real(1.0)),
                    ("m", UInt(3)),
                    ("r", Pair(0.0, 0.0)),
                    ("r2", Pair(0.0, 0.0)),
                ],
            ),
            (
                "kernel-series",
                vec![
                    ("beta", Real(1.0)),
                    ("m", UInt(1)),
                    ("r", Pair(0.3, 0.1)),
                    ("r2", Pair(-0.2, 0.4)),
                ],
            ),
            (
                "heisenberg-mul",
                vec![("g", Triple(1.0, 0.0, 0.5)), ("h", Triple(0.0, 1.0, 0.0))],
            ),
            (
                "schrodinger",
                vec![
                    ("beta", Real(1.5)),
                    ("g", Triple(0.5, -0.5, 0.25)),
                    ("n", UInt(2)),
                    ("xi", Real(0.75)),
                ],
            ),
            (
                "perelomov",
                vec![
                    ("beta", Real(1.0)),
                    ("m", UInt(2)),
                    ("x", Real(0.5)),
                    ("y", Real(-0.5)),
                    ("xi", Real(1.0)),
                ],
            ),
            (
                "iwata",
                vec![
                    ("beta", Real(1.0)),
                    ("m", UInt(2)),
                    ("x", Real(0.5)),
                    ("y", Real(-0.5)),
                    ("xi", Real(1.0)),
                ],
            ),
            (
                "canonical-closed",
                vec![("z", Pair(0.5, 0.25)), ("xi", Real(0.0))],
            ),
            (
                "canonical-series",
                vec![("z", Pair(0.5, 0.25)), ("xi", Real(0.0))],
            ),
            (
                "genfun-lhs",
                vec![
                    ("beta", Real(1.0)),
                    ("m", UInt(1)),
                    ("a", Real(0.5)),
                    ("b", Real(-0.25)),
                    ("xi", Real(1.0)),
                ],
            ),
            (
                "genfun-rhs",
                vec![
                    ("beta", Real(1.0)),
                    ("m", UInt(1)),
                    ("a", Real(0.5)),
                    ("b", Real(-0.25)),
                    ("xi", Real(1.0)),
                ],
            ),
            (
                "genfun",
                vec![
                    ("beta", Real(1.0)),
                    ("m", UInt(1)),
                    ("a", Real(0.5)),
                    ("b", Real(-0.25)),
                    ("xi", Real(1.0)),
                ],
            ),
            (
                "hermite-integral-closed",
                vec![
                    ("s", UInt(2)),
                    ("l", UInt(3)),
                    ("alpha", Pair(0.5, 0.0)),
                    ("gamma", Pair(-0.25, 0.0)),
                ],
            ),
            (
                "hermite-integral-quad",
                vec![
                    ("s", UInt(2)),
                    ("l", UInt(3)),
                    ("alpha", Pair(0.5, 0.0)),
                    ("gamma", Pair(-0.25, 0.0)),
                    ("order", UInt(24)),
                ],
            ),
        ];
        assert_eq!(points.len(), registry().len());
        for (name, pairs) in points {
            let def = find(name).unwrap_or_else(|| panic!("no target {name}"));
            let value = (def.eval)(&resolved(pairs))
                .unwrap_or_else(|e| panic!("target {name} failed: {e}"));
            if let Some(row) = value.row() {
                assert!(
                    row.iter().all(|v| v.is_finite()),
                    "target {name} produced a non-finite output"
                );
            }
        }
    }

    #[test]
    fn spec_point_values_match_the_library() {
        // H_2(1) = 4 - 2 = 2 and the level-3 kernel diagonal beta/(2 pi).
        let h = (find("hermite").unwrap().eval)(&resolved(&[
            ("n", ParamValue::UInt(2)),
            ("xi", ParamValue::Real(1.0)),
        ]))
        .unwrap();
        assert_eq!(h, EvalValue::Real(2.0));

        let k = (find("kernel-closed").unwrap().eval)(&resolved(&[
            ("beta", ParamValue::Real(1.0)),
            ("m", ParamValue::UInt(3)),
            ("r", ParamValue::Pair(0.0, 0.0)),
            ("r2", ParamValue::Pair(0.0, 0.0)),
        ]))
        .unwrap();
        match k {
            EvalValue::Complex(c) => {
                assert_relative_eq!(
                    c.re,
                    1.0 / (2.0 * std::f64::consts::PI),
                    max_relative = 1e-15
                );
                assert_eq!(c.im, 0.0);
            }
            other => panic!("kernel-closed returned {other:?}"),
        }
    }

    #[test]
    fn series_targets_honor_the_injected_policy() {
        let def = find("kernel-series").unwrap();
        let map = [
            ("beta", ParamValue::Real(1.0)),
            ("m", ParamValue::UInt(0)),
            ("r", ParamValue::Pair(1.5, 0.5)),
            ("r2", ParamValue::Pair(-1.0, 0.25)),
        ]
        .iter()
        .map(|(k, v)| (k.to_string(), *v))
        .collect::<BTreeMap<_, _>>();
        let starved = ResolvedParams::new(map, TruncationPolicy::with_max_terms(2));
        match (def.eval)(&starved) {
            Err(Error::NonConvergence { terms_used, .. }) => assert_eq!(terms_used, 2),
            other => panic!("expected NonConvergence, got {other:?}"),
        }
    }
}
