//! The registered verification checks and their default grids.
//!
//! Each check compares two independent routes to the same quantity over a
//! parameter grid (see the module docs for the catalogue). Default grids
//! are deliberately dense around the origin of parameter space, include
//! degenerate points (zero labels, zero shifts), and — for the two main
//! identity checks — append a handful of randomized stress points drawn
//! from the recorded seed.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coherent::{
    canonical_cs_closed, canonical_cs_series, genfun_lhs, genfun_rhs,
    hermite_gaussian, hermite_product_integral_closed, hermite_product_integral_quad,
    iwata_state, perelomov_state, CanonicalLabel, GenFunParams, HermiteIntegralArgs,
};
use crate::error::{Error, Result};
use crate::landau::{basis_fn, kernel_closed, kernel_series, LandauParams, PlaneLabel};
use crate::series::TruncationPolicy;
use crate::specfun::{PolyDegree, QuadratureRule};
use crate::verify::{
    need, need_usize, sweep_grid, Axis, CheckSpec, Grid, Metric, ParamBundle, PointEval,
    VerificationReport,
};

/// Names accepted by [`default_spec`] and [`run_check`], in display order.
const CHECK_NAMES: [&str; 8] = [
    "genfun",
    "state-equivalence",
    "kernel",
    "orthonormality",
    "resolution-identity",
    "canonical-moments",
    "canonical-series",
    "hermite-integral",
];

/// Fixed radial order of the polar rule behind the Gram-matrix check.
/// The radial integrand is a polynomial times the Gaussian the rule is
/// built for, of degree far below `2 * 48 - 1`.
const GRAM_RADIAL_ORDER: usize = 48;

/// Angular safety factor for Gauss-Legendre on the circle: harmonics up
/// to `h` are resolved comfortably once the order reaches `3h + 12`.
fn required_angular_order(max_harmonic: usize) -> usize {
    3 * max_harmonic + 12
}

/// Orders of the polar rule over the truncated label-plane disc.
const DISC_ANGULAR_ORDER: usize = 16;
const DISC_RADIAL_ORDER: usize = 64;

/// Order of the line rule behind the canonical-moment integrals; the
/// integrands are quadratics once the exact Gaussian weight is absorbed.
const MOMENT_ORDER: usize = 24;

/// Every registered check name.
pub fn all_check_names() -> &'static [&'static str] {
    &CHECK_NAMES
}

/// Run a check described by `spec` and stamp the total wall time.
pub fn run_check(spec: &CheckSpec) -> Result<VerificationReport> {
    let started = std::time::Instant::now();
    spec.validate()?;
    let mut report = match spec.name.as_str() {
        "genfun" => check_genfun(spec),
        "state-equivalence" => check_state_equivalence(spec),
        "kernel" => check_kernel(spec),
        "orthonormality" => check_orthonormality(spec),
        "resolution-identity" => check_resolution_identity(spec),
        "canonical-moments" => check_canonical_moments(spec),
        "canonical-series" => check_canonical_series(spec),
        "hermite-integral" => check_hermite_integral(spec),
        other => Err(Error::InvalidInput(format!(
            "unknown check '{other}'; available: {}",
            CHECK_NAMES.join(", ")
        ))),
    }?;
    report.runtime_ms = started.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

/// The stock spec for a named check: grid, tolerance, and metric.
///
/// `seed` is recorded in the spec and report; the randomized extra grid
/// points of `genfun` and `state-equivalence` are drawn from it here, so
/// a spec fully determines its report.
pub fn default_spec(name: &str, seed: u64) -> Result<CheckSpec> {
    let levels: Vec<f64> = (0..=5).map(f64::from).collect();
    let betas = [0.5, 1.0, 2.0];
    let labels = [-1.0, -0.3, 0.0, 0.4, 1.2];
    let xis = [-2.0, 0.0, 0.7, 3.0];
    let degrees: Vec<f64> = (0..=8).map(f64::from).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let (grid, tolerance, metric) = match name {
        "genfun" => {
            let mut grid = Grid::cartesian(vec![
                Axis::new("m", &levels),
                Axis::new("beta", &betas),
                Axis::new("a", &labels),
                Axis::new("b", &labels),
                Axis::new("xi", &xis),
            ]);
            for _ in 0..8 {
                grid.extras.push(bundle(&[
                    ("m", rng.random_range(0..=5) as f64),
                    ("beta", rng.random_range(0.5..=2.0)),
                    ("a", rng.random_range(-1.2..=1.2)),
                    ("b", rng.random_range(-1.2..=1.2)),
                    ("xi", rng.random_range(-3.0..=3.0)),
                ]));
            }
            (grid, 1e-8, Metric::Mixed)
        }
        "state-equivalence" => {
            let mut grid = Grid::cartesian(vec![
                Axis::new("m", &levels),
                Axis::new("beta", &betas),
                Axis::new("x", &labels),
                Axis::new("y", &labels),
                Axis::new("xi", &xis),
            ]);
            // Far-label stress point: the superposition needs many terms
            // but must still land on the displaced closed form.
            grid.extras.push(bundle(&[
                ("m", 2.0),
                ("beta", 1.0),
                ("x", 5.0),
                ("y", 0.0),
                ("xi", 0.7),
            ]));
            for _ in 0..6 {
                grid.extras.push(bundle(&[
                    ("m", rng.random_range(0..=5) as f64),
                    ("beta", rng.random_range(0.5..=2.0)),
                    ("x", rng.random_range(-1.5..=1.5)),
                    ("y", rng.random_range(-1.5..=1.5)),
                    ("xi", rng.random_range(-3.0..=3.0)),
                ]));
            }
            (grid, 1e-8, Metric::Mixed)
        }
        "kernel" => {
            // Offsets are capped so the Gaussian argument beta*|r-r'|^2
            // stays within 10 even at the largest beta.
            let grid = Grid::cartesian(vec![
                Axis::new("beta", &betas),
                Axis::new("m", &levels),
                Axis::new("x", &[0.0, 0.6]),
                Axis::new("y", &[0.0, -0.4]),
                Axis::new("dx", &[0.0, 0.7, -2.0]),
                Axis::new("dy", &[0.0, -0.6, 1.0]),
            ]);
            (grid, 1e-10, Metric::Mixed)
        }
        "orthonormality" => {
            let grid = Grid::cartesian(vec![
                Axis::new("beta", &betas),
                Axis::new("m", &[0.0, 1.0, 2.0, 3.0, 4.0]),
            ]);
            (grid, 1e-8, Metric::Abs)
        }
        "resolution-identity" => {
            let grid = Grid::cartesian(vec![
                Axis::new("beta", &betas),
                Axis::new("m", &[0.0, 1.0, 2.0]),
                Axis::new("n", &levels),
            ]);
            (grid, 1e-4, Metric::Rel)
        }
        "canonical-moments" => {
            let grid = Grid::cartesian(vec![
                Axis::new("z_re", &[-1.2, 0.0, 0.7, 1.0]),
                Axis::new("z_im", &[-0.3, 0.0, 0.8, 1.0]),
            ]);
            (grid, 1e-8, Metric::Abs)
        }
        "canonical-series" => {
            let grid = Grid::cartesian(vec![
                Axis::new("z_re", &[-1.2, 0.0, 0.7, 1.0]),
                Axis::new("z_im", &[-0.3, 0.0, 0.8, 1.0]),
                Axis::new("xi", &[-2.0, -0.5, 0.0, 0.7, 1.3, 3.0]),
            ]);
            (grid, 1e-10, Metric::Mixed)
        }
        "hermite-integral" => {
            // Real shifts as a cartesian block ...
            let mut grid = Grid::cartesian(vec![
                Axis::new("s", &degrees),
                Axis::new("l", &degrees),
                Axis::new("alpha_re", &[0.0, 0.6, -0.8]),
                Axis::new("alpha_im", &[0.0]),
                Axis::new("gamma_re", &[0.3, -0.5, 0.0]),
                Axis::new("gamma_im", &[0.0]),
            ]);
            // ... plus the conjugate-pair complex family the Landau basis
            // actually feeds in: alpha = -(sqrt(beta)/2)(x - iy),
            // gamma = (sqrt(beta)/2)(x + iy).
            for &(beta, x, y) in
                &[(1.0, 0.7, 0.4), (1.0, -0.5, 1.0), (2.0, 0.7, 0.4), (2.0, -0.5, 1.0)]
            {
                let half = f64::sqrt(beta) / 2.0;
                for s in 0..=8 {
                    for l in 0..=8 {
                        grid.extras.push(bundle(&[
                            ("s", f64::from(s)),
                            ("l", f64::from(l)),
                            ("alpha_re", -half * x),
                            ("alpha_im", half * y),
                            ("gamma_re", half * x),
                            ("gamma_im", half * y),
                        ]));
                    }
                }
            }
            (grid, 1e-8, Metric::Mixed)
        }
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown check '{other}'; available: {}",
                CHECK_NAMES.join(", ")
            )))
        }
    };

    Ok(CheckSpec {
        name: name.to_string(),
        grid,
        tolerance,
        metric,
        seed,
        max_terms: TruncationPolicy::default().max_terms,
        quadrature_order: None,
    })
}

fn bundle(entries: &[(&str, f64)]) -> ParamBundle {
    entries.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

fn policy_for(spec: &CheckSpec) -> TruncationPolicy {
    TruncationPolicy { max_terms: spec.max_terms, ..TruncationPolicy::default() }
}

/// Laguerre-weighted Hermite series against the single-Hermite closed form.
fn check_genfun(spec: &CheckSpec) -> Result<VerificationReport> {
    let policy = policy_for(spec);
    Ok(sweep_grid(spec, |b| {
        let p = GenFunParams::new(
            need(b, "beta")?,
            need_usize(b, "m")?,
            need(b, "a")?,
            need(b, "b")?,
            need(b, "xi")?,
        )?;
        let lhs = genfun_lhs(&p, &policy)?;
        let rhs = genfun_rhs(&p);
        Ok(PointEval { abs_err: (lhs.value - rhs).norm(), reference: rhs.norm() })
    }))
}

/// Superposition route against the displaced-Fock route, pointwise in xi.
fn check_state_equivalence(spec: &CheckSpec) -> Result<VerificationReport> {
    let policy = policy_for(spec);
    Ok(sweep_grid(spec, |b| {
        let p = LandauParams::new(need(b, "beta")?, need_usize(b, "m")?)?;
        let label = PlaneLabel::new(need(b, "x")?, need(b, "y")?)?;
        let xi = need(b, "xi")?;
        let series = iwata_state(&p, &label, xi, &policy)?;
        let closed = perelomov_state(&p, &label, xi);
        Ok(PointEval { abs_err: (series.value - closed).norm(), reference: closed.norm() })
    }))
}

/// Reproducing-kernel series against the Gaussian closed form.
fn check_kernel(spec: &CheckSpec) -> Result<VerificationReport> {
    let policy = policy_for(spec);
    Ok(sweep_grid(spec, |b| {
        let p = LandauParams::new(need(b, "beta")?, need_usize(b, "m")?)?;
        let r = PlaneLabel::new(need(b, "x")?, need(b, "y")?)?;
        let r2 =
            PlaneLabel::new(r.x() + need(b, "dx")?, r.y() + need(b, "dy")?)?;
        let series = kernel_series(&p, &r, &r2, &policy)?;
        let closed = kernel_closed(&p, &r, &r2);
        Ok(PointEval { abs_err: (series.value - closed).norm(), reference: closed.norm() })
    }))
}

/// Gram matrix of the first ten Landau basis functions per level.
///
/// The basis functions carry harmonics up to nine turns, so the angular
/// order must clear [`required_angular_order`]`(9)`; the radial direction
/// is polynomial against the rule's own Gaussian and needs no headroom.
fn check_orthonormality(spec: &CheckSpec) -> Result<VerificationReport> {
    const BASIS_COUNT: usize = 10;
    let required = required_angular_order(BASIS_COUNT - 1);
    let angular = spec.quadrature_order.unwrap_or_else(|| required.max(64));
    if angular < required {
        return Err(Error::InsufficientQuadratureOrder { required, actual: angular });
    }
    Ok(sweep_grid(spec, |b| {
        let beta = need(b, "beta")?;
        let m = need_usize(b, "m")?;
        let p = LandauParams::new(beta, m)?;
        let rule = QuadratureRule::polar_gaussian(beta, angular, GRAM_RADIAL_ORDER)?;
        let nodes = rule.nodes_2d().expect("polar rules are planar");
        let weights = rule.weights();
        // Tabulate each basis function over the nodes once, then form
        // every pairing from the table.
        let mut table = Vec::with_capacity(BASIS_COUNT);
        for i in 0..BASIS_COUNT {
            let k = i as i64 - m as i64;
            let column: Result<Vec<Complex64>> = nodes
                .iter()
                .map(|&(x, y)| basis_fn(&p, k, &PlaneLabel::new(x, y)?))
                .collect();
            table.push(column?);
        }
        let mut worst = 0.0_f64;
        for i in 0..BASIS_COUNT {
            for j in i..BASIS_COUNT {
                let gram: Complex64 = (0..nodes.len())
                    .map(|n| table[i][n].conj() * table[j][n] * weights[n])
                    .sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((gram - target).norm());
            }
        }
        Ok(PointEval { abs_err: worst, reference: 1.0 })
    }))
}

/// Coherent-state overlaps integrated over the label plane reproduce the
/// squared norm of each test vector.
///
/// The label integral runs over a disc whose radius is chosen per grid
/// point so an explicit envelope bounds the discarded mass below a tenth
/// of the tolerance; the worst such bound is recorded in the report. The
/// overlap at each disc node is a line integral evaluated by Gauss-Hermite
/// after centering the shared Gaussian of the two states.
fn check_resolution_identity(spec: &CheckSpec) -> Result<VerificationReport> {
    // Pre-scan the grid for the truncation radii and the degree the inner
    // line rule must resolve: the overlap integrand carries polynomial
    // degree n + m and an oscillation whose Gauss-Hermite coefficients
    // decay only past degree beta*y^2/2 <= T.
    let mut worst_bound = 0.0_f64;
    let mut required = 1usize;
    for b in spec.grid.bundles() {
        let n = need_usize(&b, "n")?;
        let m = need_usize(&b, "m")?;
        let (t, bound) = disc_truncation(n, m, spec.tolerance)?;
        worst_bound = worst_bound.max(bound);
        let degree = n + m + t.ceil() as usize + 10;
        required = required.max(degree / 2 + 1);
    }
    let inner_order = spec.quadrature_order.unwrap_or_else(|| required.max(64));
    if inner_order < required {
        return Err(Error::InsufficientQuadratureOrder { required, actual: inner_order });
    }
    let gh = QuadratureRule::gauss_hermite(inner_order)?;
    let tolerance = spec.tolerance;
    let mut report = sweep_grid(spec, |b| {
        let beta = need(b, "beta")?;
        let m = need_usize(b, "m")?;
        let n = need_usize(b, "n")?;
        let p = LandauParams::new(beta, m)?;
        let deg_n = PolyDegree::new(n)?;
        let (t, _) = disc_truncation(n, m, tolerance)?;
        let radius = (2.0 * t / beta).sqrt();
        let disc = QuadratureRule::polar_disc(radius, DISC_ANGULAR_ORDER, DISC_RADIAL_ORDER)?;
        let total = disc.integrate_2d(|x, y| {
            let label = PlaneLabel::new(x, y).expect("finite quadrature node");
            // Both states share the Gaussian e^{-(xi - c)^2 - beta x^2/4}
            // up to phases; centering the rule on c keeps the reweighting
            // factor e^{u^2} matched against the product's own decay.
            let c = beta.sqrt() * x / 2.0;
            let overlap = gh
                .integrate(|u| {
                    let xi = u + c;
                    let psi = hermite_gaussian(deg_n, xi).expect("finite argument");
                    perelomov_state(&p, &label, xi).conj() * psi * (u * u).exp()
                })
                .expect("line rule applied to a line integrand");
            overlap.norm_sqr() * beta / (2.0 * PI)
        })?;
        Ok(PointEval { abs_err: (total - 1.0).abs(), reference: 1.0 })
    });
    report.domain_truncation_bound = Some(worst_bound);
    Ok(report)
}

/// Smallest integer `T` such that the squared-basis mass beyond the disc
/// `beta * r^2 / 2 > T` is provably below a tenth of `tolerance`,
/// together with that bound.
///
/// In the radial variable `u = beta r^2 / 2` the squared overlap profile
/// is `(mu! / (mu+kappa)!) u^kappa L_mu^(kappa)(u)^2 e^{-u}` with
/// `mu = min(n, m)`, `kappa = |n - m|` (negative-index profiles reduce to
/// this form). Bounding every Laguerre coefficient by its magnitude and
/// `u^j` by `u^mu` for `u >= 1` gives
///
/// ```text
/// tail(T) <= (mu!/(mu+kappa)!) * S^2 * integral_T^inf u^D e^-u du,
/// S = sum_j C(mu+kappa, mu-j)/j!,  D = n + m,
/// ```
///
/// and the incomplete-gamma integral is evaluated exactly.
fn disc_truncation(n: usize, m: usize, tolerance: f64) -> Result<(f64, f64)> {
    let mu = n.min(m);
    let kappa = n.abs_diff(m);
    let d = n + m;
    let mut coeff_sum = 0.0_f64;
    let mut j_factorial = 1.0_f64;
    for j in 0..=mu {
        if j > 0 {
            j_factorial *= j as f64;
        }
        coeff_sum += binomial(mu + kappa, mu - j) / j_factorial;
    }
    let mut prefactor = coeff_sum * coeff_sum;
    for i in 1..=kappa {
        prefactor /= (mu + i) as f64;
    }
    let target = tolerance / 10.0;
    for t_int in 5..=400 {
        let t = f64::from(t_int);
        let bound = prefactor * upper_gamma_integral(d, t);
        if bound <= target {
            return Ok((t, bound));
        }
    }
    Err(Error::InvalidInput(format!(
        "no truncation radius within range bounds the discarded mass below {target:.3e} \
         for degrees n={n}, m={m}"
    )))
}

/// `integral_t^inf u^d e^-u du = d! e^-t sum_{i<=d} t^i/i!`, exactly.
fn upper_gamma_integral(d: usize, t: f64) -> f64 {
    let mut series = 1.0_f64;
    let mut term = 1.0_f64;
    let mut d_factorial = 1.0_f64;
    for i in 1..=d {
        term *= t / i as f64;
        series += term;
        d_factorial *= i as f64;
    }
    d_factorial * (-t).exp() * series
}

fn binomial(n: usize, k: usize) -> f64 {
    let k = k.min(n - k);
    let mut out = 1.0_f64;
    for i in 0..k {
        out *= (n - i) as f64 / (i + 1) as f64;
    }
    out
}

/// Means and variances of position and momentum in a canonical state.
///
/// Position moments integrate the closed-form state directly; momentum
/// moments integrate its Fourier transform, which is again a Gaussian
/// (computed analytically — no numerical differentiation).
fn check_canonical_moments(spec: &CheckSpec) -> Result<VerificationReport> {
    let gh = QuadratureRule::gauss_hermite(spec.quadrature_order.unwrap_or(MOMENT_ORDER))?;
    Ok(sweep_grid(spec, |b| {
        let z = Complex64::new(need(b, "z_re")?, need(b, "z_im")?);
        let label = CanonicalLabel::new(z)?;
        let moments = |center: f64, density: &dyn Fn(f64) -> f64| -> Result<[f64; 3]> {
            let mut out = [0.0; 3];
            for (k, slot) in out.iter_mut().enumerate() {
                *slot = gh.integrate(|u| {
                    let x = u + center;
                    density(x) * (u * u).exp() * x.powi(k as i32)
                })?;
            }
            Ok(out)
        };
        let [_, x_mean, x_sq] =
            moments(SQRT_2 * z.re, &|x| canonical_cs_closed(&label, x).norm_sqr())?;
        let [_, p_mean, p_sq] =
            moments(SQRT_2 * z.im, &|p| momentum_space_canonical(z, p).norm_sqr())?;
        let x_var = x_sq - x_mean * x_mean;
        let p_var = p_sq - p_mean * p_mean;
        let abs_err = (x_mean - SQRT_2 * z.re)
            .abs()
            .max((p_mean - SQRT_2 * z.im).abs())
            .max((x_var - 0.5).abs())
            .max((p_var - 0.5).abs());
        Ok(PointEval { abs_err, reference: 1.0 })
    }))
}

/// Momentum-space wavefunction of the canonical state: the Fourier
/// transform of the Gaussian closed form, computed in closed form.
fn momentum_space_canonical(z: Complex64, p: f64) -> Complex64 {
    let exponent = z * z / 2.0
        - Complex64::new(z.norm_sqr() / 2.0 + p * p / 2.0, 0.0)
        - Complex64::i() * SQRT_2 * z * p;
    PI.powf(-0.25) * exponent.exp()
}

/// Canonical Fock-series state against the Gaussian closed form.
fn check_canonical_series(spec: &CheckSpec) -> Result<VerificationReport> {
    let policy = policy_for(spec);
    Ok(sweep_grid(spec, |b| {
        let label = CanonicalLabel::new(Complex64::new(need(b, "z_re")?, need(b, "z_im")?))?;
        let xi = need(b, "xi")?;
        let series = canonical_cs_series(&label, xi, &policy)?;
        let closed = canonical_cs_closed(&label, xi);
        Ok(PointEval { abs_err: (series.value - closed).norm(), reference: closed.norm() })
    }))
}

/// Gaussian Hermite-product integral: Laguerre closed form vs quadrature.
fn check_hermite_integral(spec: &CheckSpec) -> Result<VerificationReport> {
    // Exactness needs order (s + l)/2 + 1 at the largest degrees on the grid.
    let mut required = 1usize;
    for b in spec.grid.bundles() {
        required = required.max((need_usize(&b, "s")? + need_usize(&b, "l")?) / 2 + 1);
    }
    let order = spec.quadrature_order.unwrap_or_else(|| required.max(24));
    if order < required {
        return Err(Error::InsufficientQuadratureOrder { required, actual: order });
    }
    let rule = QuadratureRule::gauss_hermite(order)?;
    Ok(sweep_grid(spec, |b| {
        let s = need_usize(b, "s")?;
        let l = need_usize(b, "l")?;
        let alpha = Complex64::new(need(b, "alpha_re")?, need(b, "alpha_im")?);
        let gamma = Complex64::new(need(b, "gamma_re")?, need(b, "gamma_im")?);
        let args = HermiteIntegralArgs::new(s, l, alpha, gamma)?;
        let quad = hermite_product_integral_quad(&args, &rule)?;
        // The closed form wants the smaller degree first; the integral is
        // symmetric under swapping the factors, so reorder when needed.
        let closed = if s <= l {
            hermite_product_integral_closed(&args)?
        } else {
            hermite_product_integral_closed(&HermiteIntegralArgs::new(l, s, gamma, alpha)?)?
        };
        Ok(PointEval { abs_err: (closed - quad).norm(), reference: quad.norm() })
    }))
}
