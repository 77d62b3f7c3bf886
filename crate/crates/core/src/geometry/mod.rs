//! Discrete differential geometry on uniform grids and Monge patches.

mod curvature;
mod grid;
mod laplace;
mod patch;
mod profile;

pub use curvature::{curvature_fields, principal_curvatures, CurvatureField};
pub use grid::Grid1D;
pub use laplace::laplace_beltrami_apply;
pub use patch::{Axis, MongePatch};
pub use profile::{arclength_table, reconstruct_profile, ProfileCurve};
