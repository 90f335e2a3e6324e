//! Coherent states over the Landau levels and the generating identity
//! they encode.
//!
//! Two constructions of the same family of states are implemented:
//!
//! * the **displaced-Fock route** ([`perelomov_state`]): act on the `m`-th
//!   oscillator eigenfunction with the Schrödinger representation of a
//!   Heisenberg group element `(x, y, 0)`;
//! * the **superposition route** ([`iwata_state`]): sum Landau basis
//!   functions evaluated at the label against oscillator eigenfunctions.
//!
//! Their equality, read coefficient by coefficient, is the generating
//! function implemented by [`genfun_lhs`] (Laguerre-weighted Hermite
//! series) and [`genfun_rhs`] (single-Hermite closed form). The classical
//! canonical coherent states and the Gaussian Hermite-product integral
//! that powers the proof round out the module.

mod genfun;
mod heisenberg;
mod hermite_integral;
mod states;

pub use genfun::{genfun_lhs, genfun_rhs, GenFunParams};
pub use heisenberg::{heisenberg_mul, schrodinger_action, GroupElement};
pub use hermite_integral::{
    hermite_product_integral_closed, hermite_product_integral_quad, HermiteIntegralArgs,
};
pub use states::{
    canonical_cs_closed, canonical_cs_series, hermite_gaussian, iwata_state, perelomov_state,
    CanonicalLabel, HermiteGaussianSeq,
};
