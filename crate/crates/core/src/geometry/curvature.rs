use super::patch::MongePatch;
use crate::error::{invalid, Error, Result};

/// Per-node mean curvature, Gaussian curvature and area element of a patch.
///
/// `h` and `k` are `NaN` on nodes where `valid` is false (the outermost
/// ring of a sampled patch). `sqrt_g` is defined everywhere.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureField {
    nx: usize,
    ny: usize,
    pub h: Vec<f64>,
    pub k: Vec<f64>,
    pub sqrt_g: Vec<f64>,
    pub valid: Vec<bool>,
}

impl CurvatureField {
    /// Assemble a field from precomputed samples (e.g. analytic curvatures).
    pub fn from_parts(
        nx: usize,
        ny: usize,
        h: Vec<f64>,
        k: Vec<f64>,
        sqrt_g: Vec<f64>,
        valid: Vec<bool>,
    ) -> Result<Self> {
        let n = nx * ny;
        if h.len() != n || k.len() != n || sqrt_g.len() != n || valid.len() != n {
            return Err(invalid(format!("curvature field arrays must all have {n} entries")));
        }
        Ok(Self {
            nx,
            ny,
            h,
            k,
            sqrt_g,
            valid,
        })
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn len(&self) -> usize {
        self.h.len()
    }

    pub fn is_empty(&self) -> bool {
        self.h.is_empty()
    }

    /// Indices of valid nodes.
    pub fn valid_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.valid
            .iter()
            .enumerate()
            .filter_map(|(k, &v)| v.then_some(k))
    }

    pub fn max_abs_h(&self) -> f64 {
        self.valid_indices().fold(0.0, |m, k| m.max(self.h[k].abs()))
    }
}

/// Mean and Gaussian curvature of a Monge patch by centred differences.
///
/// The sign of `H` is fixed so that a cap bulging towards `+z` (for example
/// the upper hemisphere `z = sqrt(R² − x² − y²)`) has `H = +1/R`.
pub fn curvature_fields(patch: &MongePatch) -> Result<CurvatureField> {
    let (nx, ny) = (patch.nx(), patch.ny());
    let hx = patch.x_axis().spacing;
    let hy = patch.y_axis().spacing;
    let n = nx * ny;
    let mut h = vec![f64::NAN; n];
    let mut k = vec![f64::NAN; n];
    let mut sqrt_g = vec![1.0; n];
    let mut valid = vec![false; n];

    for i in 0..nx {
        for j in 0..ny {
            let idx = patch.index(i, j);
            let (zx, zy) = patch.gradient(i, j);
            let g = 1.0 + zx * zx + zy * zy;
            if !g.is_finite() {
                return Err(Error::NonFiniteDerivative { i, j });
            }
            sqrt_g[idx] = g.sqrt();
            if !patch.is_interior(i, j) {
                continue;
            }
            let z = |a: usize, b: usize| patch.z(a, b);
            let zxx = (z(i + 1, j) - 2.0 * z(i, j) + z(i - 1, j)) / (hx * hx);
            let zyy = (z(i, j + 1) - 2.0 * z(i, j) + z(i, j - 1)) / (hy * hy);
            let zxy = (z(i + 1, j + 1) - z(i + 1, j - 1) - z(i - 1, j + 1) + z(i - 1, j - 1))
                / (4.0 * hx * hy);
            if !(zxx.is_finite() && zyy.is_finite() && zxy.is_finite()) {
                return Err(Error::NonFiniteDerivative { i, j });
            }
            let num = (1.0 + zy * zy) * zxx - 2.0 * zx * zy * zxy + (1.0 + zx * zx) * zyy;
            h[idx] = -num / (2.0 * g * sqrt_g[idx]);
            k[idx] = (zxx * zyy - zxy * zxy) / (g * g);
            valid[idx] = true;
        }
    }
    Ok(CurvatureField {
        nx,
        ny,
        h,
        k,
        sqrt_g,
        valid,
    })
}

/// Principal curvatures `κ₁ ≥ κ₂` from `H ± sqrt(max(H² − K, 0))`.
///
/// A valid node with `H² − K < −tol_geom · max|H|²` is rejected.
/// Invalid nodes come back as `NaN`.
pub fn principal_curvatures(
    field: &CurvatureField,
    tol_geom: f64,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let threshold = tol_geom * field.max_abs_h().powi(2);
    let mut k1 = vec![f64::NAN; field.len()];
    let mut k2 = vec![f64::NAN; field.len()];
    for idx in field.valid_indices() {
        let (h, k) = (field.h[idx], field.k[idx]);
        let disc = h * h - k;
        if disc < -threshold {
            return Err(Error::InconsistentCurvature {
                i: idx / field.ny,
                j: idx % field.ny,
                discriminant: disc,
            });
        }
        let root = disc.max(0.0).sqrt();
        k1[idx] = h + root;
        k2[idx] = h - root;
    }
    Ok((k1, k2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Axis;

    fn single(h: f64, k: f64) -> CurvatureField {
        CurvatureField::from_parts(1, 1, vec![h], vec![k], vec![1.0], vec![true]).unwrap()
    }

    #[test]
    fn principal_examples() {
        let cases = [
            ((0.5, 0.25), (0.5, 0.5)),
            ((0.5, 0.0), (1.0, 0.0)),
            ((0.0, -1.0), (1.0, -1.0)),
        ];
        for ((h, k), (e1, e2)) in cases {
            let (k1, k2) = principal_curvatures(&single(h, k), 1e-8).unwrap();
            assert_eq!((k1[0], k2[0]), (e1, e2));
        }
    }

    #[test]
    fn principal_rejects_complex_roots() {
        let err = principal_curvatures(&single(0.5, 0.3), 1e-8).unwrap_err();
        assert!(matches!(err, Error::InconsistentCurvature { i: 0, j: 0, .. }));
        // within the relative tolerance
        assert!(principal_curvatures(&single(0.5, 0.25 + 1e-10), 1e-8).is_ok());
    }

    #[test]
    fn plane_is_flat() {
        let ax = Axis::span(-1.0, 1.0, 7);
        let f = curvature_fields(&MongePatch::from_fn(ax, ax, |_, _| 3.5).unwrap()).unwrap();
        for idx in f.valid_indices() {
            assert_eq!((f.h[idx], f.k[idx]), (0.0, 0.0));
        }
        assert!(f.sqrt_g.iter().all(|&s| s == 1.0));
        assert_eq!(f.valid_indices().count(), 25);
    }

    #[test]
    fn overflowing_heights_are_reported() {
        let ax = Axis::span(-1.0, 1.0, 6);
        let p = MongePatch::from_fn(ax, ax, |x, _| if x > 0.5 { 1e300 } else { -1e300 }).unwrap();
        assert!(matches!(
            curvature_fields(&p),
            Err(Error::NonFiniteDerivative { .. })
        ));
    }
}
