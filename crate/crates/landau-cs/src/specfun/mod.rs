//! Special functions and quadrature primitives.
//!
//! Everything downstream (Landau bases, coherent states, the generating
//! identity) reduces to three ingredients implemented here:
//!
//! * Hermite polynomials `H_n` — plain, log-scaled, and as normalized
//!   oscillator eigenfunctions;
//! * generalized Laguerre polynomials `L_m^(k)` for every integer upper
//!   index `k >= -m`, real or complex argument;
//! * factorial log-ratios accurate to relative `1e-14` across the full
//!   `f64` exponent range.
//!
//! plus the Gaussian quadrature rules ([`QuadratureRule`]) used by the
//! verification layer: Gauss–Hermite on the line, its tensor square, and
//! polar rules over the plane and the disc.

mod factorial;
mod hermite;
mod laguerre;
mod quadrature;
mod scaled;

pub use factorial::{log_factorial, log_factorial_ratio};
pub use hermite::{
    hermite_complex, hermite_eval, hermite_scaled, hermite_sequence, PolyDegree, ScaledHermiteSeq,
    DEFAULT_DEGREE_CAP,
};
pub use laguerre::{laguerre_complex, laguerre_eval, LaguerreIndex};
pub use quadrature::{QuadratureRule, RuleKind, RuleNodes, MAX_QUADRATURE_ORDER};
pub use scaled::ScaledValue;
