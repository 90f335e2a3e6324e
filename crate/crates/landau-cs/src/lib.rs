//! Euclidean Landau levels, their coherent states, and the Hermite
//! generating function they encode.
//!
//! A charged particle moving in the plane under a uniform perpendicular
//! magnetic field of strength `beta` has the Landau Hamiltonian with pure
//! point spectrum `(m + 1/2) * beta`. Each Landau level `m` carries an
//! explicit orthonormal basis built from generalized Laguerre polynomials
//! (including *negative* upper index), a reproducing kernel with both a
//! series and a closed form, and two coherent-state families:
//!
//! * **Displaced-Fock states** obtained by acting on the `m`-th Hermite
//!   function with the Schrödinger representation of the Heisenberg group.
//! * **Superposition states** summing the Landau basis against the
//!   oscillator eigenfunctions.
//!
//! Equality of those two families, expanded coefficient by coefficient,
//! yields a two-parameter generating function for Hermite polynomials with
//! Laguerre coefficients — the central identity of this crate, available
//! as a truncated series ([`coherent::genfun_lhs`]) and a closed form
//! ([`coherent::genfun_rhs`]). Setting the level to zero and the label to
//! a real multiple recovers the classical `exp(2*xi*tau - tau^2)`
//! generating function.
//!
//! # Module map
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`specfun`] | Hermite & generalized Laguerre polynomials, factorial ratios, log-scaled magnitudes, Gaussian quadrature rules |
//! | [`series`] | Truncation policy and stopping rule shared by every infinite sum |
//! | [`landau`] | Level parameters, energies, eigenbasis, reproducing kernel |
//! | [`coherent`] | Heisenberg group, Schrödinger action, the two coherent-state families, canonical coherent states, the generating identity |
//! | [`verify`] | Self-checks comparing independent routes to the same quantity, with JSON-serializable reports |
//! | [`cli`] | `eval` / `verify` / `sweep` front end used by the `landau-cs` binary |
//!
//! # Quick taste
//!
//! ```
//! use landau_cs::coherent::{genfun_lhs, genfun_rhs, GenFunParams};
//! use landau_cs::series::TruncationPolicy;
//!
//! // Sum over all Laguerre-weighted Hermite terms at a desk-scale point...
//! let p = GenFunParams::new(1.0, 2, 0.7, -0.4, 1.5).unwrap();
//! let lhs = genfun_lhs(&p, &TruncationPolicy::default()).unwrap();
//! // ...and compare with the single-Hermite closed form.
//! let rhs = genfun_rhs(&p);
//! assert!((lhs.value - rhs).norm() <= 1e-10 * rhs.norm().max(1.0));
//! ```
//!
//! The `examples/` directory exercises every capability end to end; start
//! with `cargo run --example generating_identity`.

pub mod cli;
pub mod coherent;
pub mod error;
pub mod landau;
pub mod series;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};

/// Complex double, re-exported so downstream code need not name the
/// underlying crate.
pub use num_complex::Complex64;
