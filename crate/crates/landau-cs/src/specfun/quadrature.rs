//! Gaussian quadrature rules used by the verification layer.
//!
//! Hermite and Laguerre nodes come from the Golub–Welsch observation:
//! they are the eigenvalues of the recurrence's symmetric tridiagonal
//! Jacobi matrix, which a QL sweep finds reliably at every supported
//! order. (Chained asymptotic warm starts for a bare Newton search — the
//! textbook approach — quietly converge to *wrong* roots past order
//! ~200.) Each eigenvalue then gets a short Newton polish on the
//! classical three-term recurrence, and the weights fall out of the same
//! recurrence values:
//!
//! * **Gauss–Hermite** on the line, weight `exp(-x^2)` *implicit*: the
//!   rule applies to the smooth factor only.
//! * **Tensor Gauss–Hermite** on the plane, weight `exp(-x^2-y^2)`
//!   implicit.
//! * **Polar rules** on the plane for plain Lebesgue integrals: a
//!   Gauss–Legendre circle crossed with either a Gauss–Laguerre radial
//!   rule in `u = beta r^2 / 2` (for integrands that die like a Landau
//!   ground state) or a Gauss–Legendre radial rule on `[0, R]` (for
//!   integrals over a disc).
//!
//! The Laguerre radial weights carry their `exp(+u)` factor *embedded*,
//! computed entirely from exponentially scaled recurrence values so that
//! neither the weight nor any intermediate ever overflows; the integrand's
//! own Gaussian decay cancels it at evaluation time.

use std::f64::consts::PI;

use crate::error::{ensure_finite, Error, Result};

/// Hard per-axis cap on quadrature orders. Newton-based node generation
/// is rock solid well beyond this, but node spacing near the edges
/// approaches the `f64` resolution limit and runtimes grow quadratically,
/// so there is no value in allowing more.
pub const MAX_QUADRATURE_ORDER: usize = 256;

/// What a rule integrates against; see the module docs for the exact
/// weight conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleKind {
    /// One-dimensional, weight `exp(-x^2)` implicit.
    GaussHermite1d,
    /// Plane tensor square of the above, weight `exp(-x^2-y^2)` implicit.
    Tensor2d,
    /// Plane rule in polar coordinates, plain Lebesgue measure.
    Polar2d,
}

/// Node storage: a line rule or a plane rule.
#[derive(Debug, Clone, PartialEq)]
pub enum RuleNodes {
    Line(Vec<f64>),
    Plane(Vec<(f64, f64)>),
}

/// An immutable quadrature rule: nodes, weights, and the defining order.
///
/// For [`RuleKind::GaussHermite1d`] and [`RuleKind::Tensor2d`] the order
/// is the per-axis point count; a line rule of order `q` integrates
/// polynomials through degree `2q - 1` exactly against its weight. For
/// [`RuleKind::Polar2d`] the stored order is the *radial* order, which is
/// what limits polynomial exactness in `r^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    kind: RuleKind,
    nodes: RuleNodes,
    weights: Vec<f64>,
    order: usize,
}

impl QuadratureRule {
    /// Gauss–Hermite rule of the given order on the line.
    pub fn gauss_hermite(order: usize) -> Result<Self> {
        check_order(order)?;
        let (nodes, weights) = gauss_hermite_nodes(order)?;
        Ok(Self { kind: RuleKind::GaussHermite1d, nodes: RuleNodes::Line(nodes), weights, order })
    }

    /// Tensor square of a Gauss–Hermite rule on the plane.
    pub fn tensor_gauss_hermite(order: usize) -> Result<Self> {
        check_order(order)?;
        let (xs, ws) = gauss_hermite_nodes(order)?;
        let mut nodes = Vec::with_capacity(order * order);
        let mut weights = Vec::with_capacity(order * order);
        for (&x, &wx) in xs.iter().zip(&ws) {
            for (&y, &wy) in xs.iter().zip(&ws) {
                nodes.push((x, y));
                weights.push(wx * wy);
            }
        }
        Ok(Self { kind: RuleKind::Tensor2d, nodes: RuleNodes::Plane(nodes), weights, order })
    }

    /// Polar rule over the whole plane, tuned to integrands that decay at
    /// least like `exp(-beta r^2 / 2)` times polynomial growth.
    ///
    /// Radial nodes are Gauss–Laguerre points of `u = beta r^2 / 2`; the
    /// weights absorb the change of variables, so the rule approximates
    /// the plain Lebesgue integral of the full integrand (its Gaussian
    /// decay included).
    pub fn polar_gaussian(beta: f64, angular_order: usize, radial_order: usize) -> Result<Self> {
        ensure_finite(beta, "beta")?;
        if beta <= 0.0 {
            return Err(Error::InvalidInput(format!("beta must be positive, got {beta}")));
        }
        check_order(angular_order)?;
        check_order(radial_order)?;
        let (thetas, wt) = gauss_legendre_mapped(angular_order, 0.0, 2.0 * PI)?;
        let (us, wu) = gauss_laguerre_scaled(radial_order)?;
        let mut nodes = Vec::with_capacity(angular_order * radial_order);
        let mut weights = Vec::with_capacity(angular_order * radial_order);
        for (&u, &wui) in us.iter().zip(&wu) {
            let r = (2.0 * u / beta).sqrt();
            for (&t, &wtj) in thetas.iter().zip(&wt) {
                nodes.push((r * t.cos(), r * t.sin()));
                weights.push(wtj * wui / beta);
            }
        }
        Ok(Self {
            kind: RuleKind::Polar2d,
            nodes: RuleNodes::Plane(nodes),
            weights,
            order: radial_order,
        })
    }

    /// Polar rule over the disc of the given radius, plain Lebesgue
    /// measure (the Jacobian `r` is folded into the weights).
    pub fn polar_disc(radius: f64, angular_order: usize, radial_order: usize) -> Result<Self> {
        ensure_finite(radius, "radius")?;
        if radius <= 0.0 {
            return Err(Error::InvalidInput(format!("radius must be positive, got {radius}")));
        }
        check_order(angular_order)?;
        check_order(radial_order)?;
        let (thetas, wt) = gauss_legendre_mapped(angular_order, 0.0, 2.0 * PI)?;
        let (rs, wr) = gauss_legendre_mapped(radial_order, 0.0, radius)?;
        let mut nodes = Vec::with_capacity(angular_order * radial_order);
        let mut weights = Vec::with_capacity(angular_order * radial_order);
        for (&r, &wri) in rs.iter().zip(&wr) {
            for (&t, &wtj) in thetas.iter().zip(&wt) {
                nodes.push((r * t.cos(), r * t.sin()));
                weights.push(wtj * wri * r);
            }
        }
        Ok(Self {
            kind: RuleKind::Polar2d,
            nodes: RuleNodes::Plane(nodes),
            weights,
            order: radial_order,
        })
    }

    /// The rule's kind.
    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    /// The defining order (see the type docs for what that means per kind).
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of nodes.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    /// Whether the rule is empty (never true for constructed rules).
    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Line nodes, if this is a one-dimensional rule.
    pub fn nodes_1d(&self) -> Option<&[f64]> {
        match &self.nodes {
            RuleNodes::Line(xs) => Some(xs),
            RuleNodes::Plane(_) => None,
        }
    }

    /// Plane nodes, if this is a two-dimensional rule.
    pub fn nodes_2d(&self) -> Option<&[(f64, f64)]> {
        match &self.nodes {
            RuleNodes::Plane(xys) => Some(xys),
            RuleNodes::Line(_) => None,
        }
    }

    /// The weights, aligned with the nodes.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Apply a one-dimensional rule to `f` (works for real and complex
    /// integrands alike).
    pub fn integrate<T>(&self, f: impl Fn(f64) -> T) -> Result<T>
    where
        T: std::iter::Sum + std::ops::Mul<f64, Output = T>,
    {
        match &self.nodes {
            RuleNodes::Line(xs) => {
                Ok(xs.iter().zip(&self.weights).map(|(&x, &w)| f(x) * w).sum())
            }
            RuleNodes::Plane(_) => Err(Error::InvalidInput(
                "this rule is two-dimensional; use integrate_2d".into(),
            )),
        }
    }

    /// Apply a two-dimensional rule to `f(x, y)`.
    pub fn integrate_2d<T>(&self, f: impl Fn(f64, f64) -> T) -> Result<T>
    where
        T: std::iter::Sum + std::ops::Mul<f64, Output = T>,
    {
        match &self.nodes {
            RuleNodes::Plane(xys) => {
                Ok(xys.iter().zip(&self.weights).map(|(&(x, y), &w)| f(x, y) * w).sum())
            }
            RuleNodes::Line(_) => Err(Error::InvalidInput(
                "this rule is one-dimensional; use integrate".into(),
            )),
        }
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 || order > MAX_QUADRATURE_ORDER {
        return Err(Error::InvalidOrder { order, max: MAX_QUADRATURE_ORDER });
    }
    Ok(())
}

const NEWTON_MAX_ITER: usize = 100;

/// Newton steps applied to each eigenvalue guess. The guesses are already
/// accurate to ~1e-10 absolute and root spacings are orders of magnitude
/// larger, so a fixed short polish converges quadratically with no risk
/// of jumping roots.
const POLISH_STEPS: usize = 3;

/// Eigenvalues of a symmetric tridiagonal matrix, in place in `diag`,
/// by QL iteration with implicit shifts. `off[j]` couples rows `j` and
/// `j + 1`; it is clobbered. Eigenvalues come out unordered.
fn symmetric_tridiagonal_eigenvalues(diag: &mut [f64], off: &mut Vec<f64>) -> Result<()> {
    let n = diag.len();
    off.push(0.0);
    for l in 0..n {
        let mut sweeps = 0;
        loop {
            // Find the first negligible off-diagonal at or after l.
            let mut m = l;
            while m < n - 1 {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > 50 {
                return Err(Error::InvalidInput(
                    "tridiagonal eigenvalue iteration failed to converge".into(),
                ));
            }
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + off[l] / (g + r.copysign(g));
            let (mut s, mut c) = (1.0_f64, 1.0_f64);
            let mut p = 0.0_f64;
            let mut underflowed = false;
            for i in (l..m).rev() {
                let f = s * off[i];
                let b = c * off[i];
                r = f.hypot(g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    underflowed = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
            }
            if underflowed {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
    Ok(())
}

/// Gauss–Hermite nodes and weights (weight `exp(-x^2)`), ascending.
///
/// Eigenvalues of the Jacobi matrix (zero diagonal, off-diagonal
/// `sqrt(j/2)`) seed a Newton polish on the *orthonormal* Hermite
/// recurrence; weights come from the derivative value at the polished
/// root, and the node set is symmetrized exactly at the end.
fn gauss_hermite_nodes(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let nf = n as f64;
    let pim4 = PI.powf(-0.25);
    let mut diag = vec![0.0; n];
    let mut off: Vec<f64> = (1..n).map(|j| (j as f64 / 2.0).sqrt()).collect();
    symmetric_tridiagonal_eigenvalues(&mut diag, &mut off)?;
    diag.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));
    let mut nodes = diag;
    let mut weights = vec![0.0; n];

    // Evaluates the orthonormal polynomials; returns (h_n(z), h_{n-1}(z)).
    let eval = |z: f64| -> (f64, f64) {
        let mut p1 = pim4;
        let mut p2 = 0.0;
        for j in 0..n {
            let jf = j as f64;
            let p3 = p2;
            p2 = p1;
            p1 = z * (2.0 / (jf + 1.0)).sqrt() * p2 - (jf / (jf + 1.0)).sqrt() * p3;
        }
        (p1, p2)
    };

    for i in 0..n {
        let mut z = nodes[i];
        for _ in 0..POLISH_STEPS {
            let (p1, p2) = eval(z);
            let pp = (2.0 * nf).sqrt() * p2;
            z -= p1 / pp;
        }
        let (_, p2) = eval(z);
        let pp = (2.0 * nf).sqrt() * p2;
        nodes[i] = z;
        weights[i] = 2.0 / (pp * pp);
    }

    // The rule is symmetric by construction; enforce it exactly so that
    // odd integrands cancel to the last bit.
    for i in 0..n / 2 {
        let x = 0.5 * (nodes[n - 1 - i] - nodes[i]);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 0.5 * (weights[i] + weights[n - 1 - i]);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0; // the middle root is exactly zero by symmetry
    }
    Ok((nodes, weights))
}

/// Gauss–Legendre nodes and weights mapped affinely onto `[a, b]`.
fn gauss_legendre_mapped(n: usize, a: f64, b: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    let half = n.div_ceil(2);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;

    // (P_n(z), P_{n-1}(z)) by the Legendre recurrence.
    let eval = |z: f64| -> (f64, f64) {
        let mut p1 = 1.0;
        let mut p2 = 0.0;
        for j in 0..n {
            let jf = j as f64;
            let p3 = p2;
            p2 = p1;
            p1 = ((2.0 * jf + 1.0) * z * p2 - jf * p3) / (jf + 1.0);
        }
        (p1, p2)
    };

    for i in 0..half {
        let mut z = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut converged = false;
        for _ in 0..NEWTON_MAX_ITER {
            let (p1, p2) = eval(z);
            let pp = nf * (z * p1 - p2) / (z * z - 1.0);
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 1e-15 {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::InvalidInput(format!(
                "Gauss-Legendre root search failed to settle at order {n}"
            )));
        }
        let (p1, p2) = eval(z);
        let pp = nf * (z * p1 - p2) / (z * z - 1.0);
        let w = 2.0 / ((1.0 - z * z) * pp * pp);
        // i = 0 is the cosine closest to +1; store ascending on [-1, 1].
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    let mid = 0.5 * (a + b);
    let scale = 0.5 * (b - a);
    for i in 0..n {
        nodes[i] = mid + scale * nodes[i];
        weights[i] *= scale;
    }
    Ok((nodes, weights))
}

/// Gauss–Laguerre nodes (weight `exp(-u)`, order `n`) with the weights
/// returned as `w_i * exp(+u_i)`, ready for integrands that carry their
/// own exponential decay.
///
/// Nodes are Jacobi-matrix eigenvalues (diagonal `2j + 1`, off-diagonal
/// `j`) polished by Newton on `l_j(u) = L_j(u) exp(-u/2)` instead of
/// `L_j`; those stay within `f64` range for every node of every supported
/// order, and the embedded weight is exactly `-1 / (n * l'_n * l_{n-1})`
/// with no exponential factor left to overflow.
fn gauss_laguerre_scaled(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let nf = n as f64;
    let mut diag: Vec<f64> = (0..n).map(|j| 2.0 * j as f64 + 1.0).collect();
    let mut off: Vec<f64> = (1..n).map(|j| j as f64).collect();
    symmetric_tridiagonal_eigenvalues(&mut diag, &mut off)?;
    diag.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));
    let mut nodes = diag;
    let mut weights = vec![0.0; n];

    // (l_n(z), l_{n-1}(z)) with the exp(-z/2) scaling built in.
    let eval = |z: f64| -> (f64, f64) {
        let mut p1 = (-0.5 * z).exp();
        let mut p2 = 0.0;
        for j in 0..n {
            let jf = j as f64;
            let p3 = p2;
            p2 = p1;
            p1 = ((2.0 * jf + 1.0 - z) * p2 - jf * p3) / (jf + 1.0);
        }
        (p1, p2)
    };

    for i in 0..n {
        let mut z = nodes[i];
        for _ in 0..POLISH_STEPS {
            let (p1, p2) = eval(z);
            let pp = nf * (p1 - p2) / z;
            z -= p1 / pp;
        }
        let (p1, p2) = eval(z);
        let pp = nf * (p1 - p2) / z;
        nodes[i] = z;
        weights[i] = -1.0 / (pp * nf * p2);
    }
    Ok((nodes, weights))
}
