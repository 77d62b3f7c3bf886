use super::params::MembraneParams;
use crate::error::{invalid, Result};
use crate::geometry::{curvature_fields, laplace_beltrami_apply, MongePatch};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HelfrichEnergy {
    pub bending: f64,
    pub tension: f64,
    pub total: f64,
}

/// Bending and tension parts of the Helfrich energy of an open patch,
/// `½ k_c ∫ (2H − c₀)² dS + λ ∫ dS`, summed over valid curvature nodes
/// with area element `√g hx hy`. The pressure-volume term is not included.
pub fn helfrich_energy(patch: &MongePatch, params: &MembraneParams) -> Result<HelfrichEnergy> {
    params.validate()?;
    let field = curvature_fields(patch)?;
    let cell = patch.x_axis().spacing * patch.y_axis().spacing;
    let (mut bend, mut area) = (0.0, 0.0);
    for k in field.valid_indices() {
        let da = field.sqrt_g[k] * cell;
        bend += (2.0 * field.h[k] - params.c0).powi(2) * da;
        area += da;
    }
    let bending = 0.5 * params.k_c * bend;
    let tension = params.lambda * area;
    Ok(HelfrichEnergy {
        bending,
        tension,
        total: bending + tension,
    })
}

/// Pointwise residual of the general shape equation
/// `2λH − Δp − 2k_c Δ_S H − k_c (2H² − 2K − c₀H)(2H + c₀)`.
///
/// `Δ_S H` differences the curvature field again, so the two outer rings are
/// `NaN`.
pub fn shape_residual_general(patch: &MongePatch, params: &MembraneParams) -> Result<Vec<f64>> {
    params.validate()?;
    if patch.nx() < 5 || patch.ny() < 5 {
        return Err(invalid("shape residual needs at least 5 x 5 nodes"));
    }
    let field = curvature_fields(patch)?;
    let lap_h = laplace_beltrami_apply(patch, &field.h)?;
    let MembraneParams {
        k_c,
        lambda,
        delta_p,
        c0,
    } = *params;
    let mut out = vec![f64::NAN; patch.len()];
    for i in 2..patch.nx() - 2 {
        for j in 2..patch.ny() - 2 {
            let idx = patch.index(i, j);
            let (h, k) = (field.h[idx], field.k[idx]);
            out[idx] = 2.0 * lambda * h
                - delta_p
                - 2.0 * k_c * lap_h[idx]
                - k_c * (2.0 * h * h - 2.0 * k - c0 * h) * (2.0 * h + c0);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Axis;

    fn flat_unit() -> MongePatch {
        // valid nodes are the inner 10 x 10 at spacing 0.1
        let ax = Axis::new(-0.05, 0.1, 12);
        MongePatch::from_fn(ax, ax, |_, _| 0.7).unwrap()
    }

    #[test]
    fn flat_tension_only() {
        let e = helfrich_energy(&flat_unit(), &MembraneParams::new(1.0, 3.0, 0.0, 0.0).unwrap())
            .unwrap();
        assert_eq!(e.bending, 0.0);
        assert!((e.tension - 3.0).abs() < 1e-12);
        assert_eq!(e.total, e.bending + e.tension);
    }

    #[test]
    fn flat_spontaneous_curvature() {
        let e = helfrich_energy(&flat_unit(), &MembraneParams::new(2.0, 0.0, 0.0, 0.5).unwrap())
            .unwrap();
        assert!((e.bending - 0.25).abs() < 1e-12);
        assert_eq!(e.tension, 0.0);
    }

    #[test]
    fn flat_residual_vanishes() {
        let p = flat_unit();
        let r = shape_residual_general(&p, &MembraneParams::new(1.3, 4.0, 0.0, 0.0).unwrap())
            .unwrap();
        for i in 0..12 {
            for j in 0..12 {
                let v = r[p.index(i, j)];
                if p.is_interior_to(i, j, 2) {
                    assert_eq!(v, 0.0);
                } else {
                    assert!(v.is_nan());
                }
            }
        }
    }
}
