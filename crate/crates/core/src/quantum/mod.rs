//! Quantum side: the geometric potential, the surface operator on a
//! generalized cylinder, its bound states, and the `ψ ∼ H` comparison.

mod correspondence;
mod eigen;
mod hamiltonian;
mod potential;

pub use correspondence::{correspondence_metric, peak_index};
pub use eigen::{bound_states, top_modes, SpectrumDiagnostics, SpectrumResult};
pub use hamiltonian::{build_hamiltonian_1d, build_operator_1d, TridiagonalOperator};
pub use potential::{geometric_potential, QuantumParams};
