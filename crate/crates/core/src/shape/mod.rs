//! Elastic side: Helfrich energy, shape-equation residuals, and the reduced
//! equation `H'' + α H³ = ε² H` for translationally-invariant membranes.

mod bvp;
mod energy;
mod params;
mod reduced;

pub use bvp::{solve_reduced_bvp, BvpSolution};
pub use energy::{helfrich_energy, shape_residual_general, HelfrichEnergy};
pub use params::{MembraneParams, ReducedProblem};
pub use reduced::{
    constant_amplitude, reduced_ode_residual, sech_profile, soliton_amplitude, soliton_profile,
};
