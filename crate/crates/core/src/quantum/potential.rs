use crate::error::{invalid, Result};
use crate::geometry::CurvatureField;

/// Reduced Planck constant and effective mass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumParams {
    pub hbar: f64,
    pub mass: f64,
}

impl QuantumParams {
    pub fn new(hbar: f64, mass: f64) -> Result<Self> {
        if !(hbar.is_finite() && hbar > 0.0 && mass.is_finite() && mass > 0.0) {
            return Err(invalid(format!(
                "hbar and mass must be positive, got hbar={hbar}, mass={mass}"
            )));
        }
        Ok(Self { hbar, mass })
    }

    /// `ħ² / (2m*)`.
    pub fn kinetic_scale(&self) -> f64 {
        self.hbar * self.hbar / (2.0 * self.mass)
    }

    /// Energy `E = ħ² ε² / (2m*)` of a dimensionless eigenvalue `ε²`.
    pub fn energy(&self, eps2: f64) -> f64 {
        self.kinetic_scale() * eps2
    }
}

impl Default for QuantumParams {
    fn default() -> Self {
        Self {
            hbar: 1.0,
            mass: 1.0,
        }
    }
}

/// Geometric potential `V = −ħ²/(2m*) (H² − K)` at valid nodes, `NaN`
/// elsewhere.
pub fn geometric_potential(field: &CurvatureField, params: &QuantumParams) -> Vec<f64> {
    let scale = params.kinetic_scale();
    let mut v = vec![f64::NAN; field.len()];
    for k in field.valid_indices() {
        let h = field.h[k];
        v[k] = -scale * (h * h - field.k[k]);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cylinder_and_umbilic() {
        let p = QuantumParams::new(1.0, 1.0).unwrap();
        let f = CurvatureField::from_parts(
            1,
            3,
            vec![0.5, 0.5, f64::NAN],
            vec![0.0, 0.25, f64::NAN],
            vec![1.0; 3],
            vec![true, true, false],
        )
        .unwrap();
        let v = geometric_potential(&f, &p);
        assert_eq!(v[0], -0.125);
        assert_eq!(v[1], 0.0);
        assert!(v[2].is_nan());
    }

    #[test]
    fn params_validation() {
        assert!(QuantumParams::new(0.0, 1.0).is_err());
        assert!(QuantumParams::new(1.0, -1.0).is_err());
        assert_eq!(QuantumParams::new(2.0, 0.5).unwrap().energy(3.0), 12.0);
    }
}
