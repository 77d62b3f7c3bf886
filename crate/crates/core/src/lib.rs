//! Numerical toolkit for the correspondence between the elastic membrane
//! shape equation and the stationary Schrödinger equation on a curved
//! surface.
//!
//! Both problems share the operator `Δ_S + α (H² − K)`: with `α = 2` it
//! acts on the mean curvature `H` of an equilibrium membrane, with `α = 1`
//! it is the surface Hamiltonian including the geometric potential
//! `−ħ²/(2m*) (H² − K)`. On translationally-invariant surfaces (`K = 0`)
//! the shape equation collapses to `H'' + α H³ = ε² H` in arclength, whose
//! localized solution is a `sech` soliton.
//!
//! Modules:
//!
//! - [`geometry`]: grids, Monge patches, curvature, Laplace–Beltrami,
//!   arclength and profile-curve reconstruction.
//! - [`shape`]: Helfrich energy, shape-equation residuals, the reduced ODE,
//!   the soliton and a Newton boundary-value solver.
//! - [`quantum`]: geometric potential, the 1D surface operator, bound
//!   states and the `ψ ∼ H` correspondence metric.
//! - [`symmetry`]: characteristics of the rigid-motion generators.

pub mod error;
pub mod geometry;
pub mod quantum;
pub mod shape;
pub mod symmetry;
pub mod tolerances;
pub(crate) mod tridiag;

pub use error::{Error, Result};
pub use tolerances::Tolerances;
