use crate::error::{invalid, Result};
use crate::geometry::Grid1D;

/// Symmetric tridiagonal operator on a 1D grid, with homogeneous Dirichlet
/// conditions just outside the first and last node.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
    grid: Grid1D,
    continuum_edge: f64,
}

impl TridiagonalOperator {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>, grid: Grid1D, continuum_edge: f64) -> Result<Self> {
        if diag.len() != grid.len() || offdiag.len() + 1 != diag.len() {
            return Err(invalid(format!(
                "operator shape mismatch: {} diagonal, {} off-diagonal, {} grid nodes",
                diag.len(),
                offdiag.len(),
                grid.len()
            )));
        }
        if diag.iter().chain(&offdiag).any(|v| !v.is_finite()) {
            return Err(invalid("operator entries must be finite"));
        }
        Ok(Self {
            diag,
            offdiag,
            grid,
            continuum_edge,
        })
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    pub fn grid(&self) -> &Grid1D {
        &self.grid
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Bottom of the continuum: the potential at the ends of the domain.
    pub fn continuum_edge(&self) -> f64 {
        self.continuum_edge
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut v = self.diag[i] * x[i];
                if i > 0 {
                    v += self.offdiag[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    v += self.offdiag[i] * x[i + 1];
                }
                v
            })
            .collect()
    }

    /// Gershgorin interval containing the spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.offdiag[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.offdiag[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// Infinity-norm bound `max(|lo|, |hi|)` of the spectrum.
    pub fn norm_bound(&self) -> f64 {
        let (lo, hi) = self.gershgorin();
        lo.abs().max(hi.abs())
    }
}

/// `D₂ + coupling · diag(H²)`: the reduced operator `d²/ds² + α H²` of a
/// generalized cylinder (`K = 0`).
pub fn build_operator_1d(h_vals: &[f64], s: &Grid1D, coupling: f64) -> Result<TridiagonalOperator> {
    if h_vals.len() != s.len() {
        return Err(invalid(format!(
            "profile has {} samples, grid has {}",
            h_vals.len(),
            s.len()
        )));
    }
    if !coupling.is_finite() {
        return Err(invalid("coupling must be finite"));
    }
    let inv_h2 = 1.0 / (s.spacing() * s.spacing());
    let diag = h_vals
        .iter()
        .map(|&h| -2.0 * inv_h2 + coupling * h * h)
        .collect();
    let n = h_vals.len();
    let edge = coupling * (h_vals[0] * h_vals[0]).max(h_vals[n - 1] * h_vals[n - 1]);
    TridiagonalOperator::new(diag, vec![inv_h2; n - 1], s.clone(), edge)
}

/// Surface Hamiltonian `d²/ds² + H²` of a generalized cylinder; bound
/// states solve `L ψ = ε² ψ` with `ε² > 0`.
pub fn build_hamiltonian_1d(h_vals: &[f64], s: &Grid1D) -> Result<TridiagonalOperator> {
    build_operator_1d(h_vals, s, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assembly() {
        let s = Grid1D::linspace(0.0, 1.0, 11).unwrap();
        let op = build_hamiltonian_1d(&[0.5; 11], &s).unwrap();
        assert!((op.diag()[3] - (-200.0 + 0.25)).abs() < 1e-9);
        assert!((op.offdiag()[0] - 100.0).abs() < 1e-9);
        assert_eq!(op.continuum_edge(), 0.25);
        let op2 = build_operator_1d(&[0.5; 11], &s, 2.0).unwrap();
        assert_eq!(op2.continuum_edge(), 0.5);
        assert!(build_hamiltonian_1d(&[0.5; 10], &s).is_err());
    }
}
