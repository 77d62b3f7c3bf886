use super::patch::MongePatch;
use crate::error::{invalid, Result};

/// Discrete Laplace–Beltrami operator of the induced Monge metric applied to
/// `field` (same x-major layout as the patch).
///
/// Uses the flux form `(1/√g) ∂_i (√g g^{ij} ∂_j f)`: diagonal fluxes are
/// differenced across half nodes, mixed fluxes with centred differences. On a
/// flat patch this reduces to the 5-point Laplacian. The outermost ring is
/// `NaN`.
pub fn laplace_beltrami_apply(patch: &MongePatch, field: &[f64]) -> Result<Vec<f64>> {
    if field.len() != patch.len() {
        return Err(invalid(format!(
            "field has {} samples, patch has {}",
            field.len(),
            patch.len()
        )));
    }
    let (nx, ny) = (patch.nx(), patch.ny());
    let hx = patch.x_axis().spacing;
    let hy = patch.y_axis().spacing;
    let f = |i: usize, j: usize| field[patch.index(i, j)];

    let grad: Vec<(f64, f64)> = (0..nx)
        .flat_map(|i| (0..ny).map(move |j| (i, j)))
        .map(|(i, j)| patch.gradient(i, j))
        .collect();
    let gr = |i: usize, j: usize| grad[patch.index(i, j)];
    // √g g^{-1} entries from a surface gradient.
    let a11 = |zx: f64, zy: f64| (1.0 + zy * zy) / (1.0 + zx * zx + zy * zy).sqrt();
    let a22 = |zx: f64, zy: f64| (1.0 + zx * zx) / (1.0 + zx * zx + zy * zy).sqrt();
    let a12 = |zx: f64, zy: f64| -zx * zy / (1.0 + zx * zx + zy * zy).sqrt();

    // x-fluxes coefficient at (i + 1/2, j)
    let ax_half = |i: usize, j: usize| {
        let zx = (patch.z(i + 1, j) - patch.z(i, j)) / hx;
        let zy = 0.5 * (gr(i, j).1 + gr(i + 1, j).1);
        a11(zx, zy)
    };
    let ay_half = |i: usize, j: usize| {
        let zy = (patch.z(i, j + 1) - patch.z(i, j)) / hy;
        let zx = 0.5 * (gr(i, j).0 + gr(i, j + 1).0);
        a22(zx, zy)
    };

    let mut out = vec![f64::NAN; patch.len()];
    for i in 1..nx - 1 {
        for j in 1..ny - 1 {
            let fc = f(i, j);
            let (ar, al) = (ax_half(i, j), ax_half(i - 1, j));
            let dxx = (ar * f(i + 1, j) + al * f(i - 1, j) - (ar + al) * fc) / (hx * hx);
            let (au, ad) = (ay_half(i, j), ay_half(i, j - 1));
            let dyy = (au * f(i, j + 1) + ad * f(i, j - 1) - (au + ad) * fc) / (hy * hy);

            let flux_xy = |a: usize| {
                let (zx, zy) = gr(a, j);
                a12(zx, zy) * (f(a, j + 1) - f(a, j - 1)) / (2.0 * hy)
            };
            let flux_yx = |b: usize| {
                let (zx, zy) = gr(i, b);
                a12(zx, zy) * (f(i + 1, b) - f(i - 1, b)) / (2.0 * hx)
            };
            let mixed = (flux_xy(i + 1) - flux_xy(i - 1)) / (2.0 * hx)
                + (flux_yx(j + 1) - flux_yx(j - 1)) / (2.0 * hy);

            let (zx, zy) = gr(i, j);
            let sqrt_g = (1.0 + zx * zx + zy * zy).sqrt();
            out[patch.index(i, j)] = (dxx + dyy + mixed) / sqrt_g;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Axis;

    fn flat(n: usize) -> MongePatch {
        let ax = Axis::span(-1.0, 1.0, n);
        MongePatch::from_fn(ax, ax, |_, _| 0.0).unwrap()
    }

    #[test]
    fn constants_are_in_the_kernel() {
        let p = flat(9);
        let out = laplace_beltrami_apply(&p, &vec![2.5; p.len()]).unwrap();
        for i in 1..8 {
            for j in 1..8 {
                assert_eq!(out[p.index(i, j)], 0.0);
            }
        }
        assert!(out[p.index(0, 3)].is_nan());
    }

    #[test]
    fn flat_patch_paraboloid() {
        let p = flat(21);
        let field: Vec<f64> = (0..21)
            .flat_map(|i| (0..21).map(move |j| (i, j)))
            .map(|(i, j)| p.x(i).powi(2) + p.y(j).powi(2))
            .collect();
        let out = laplace_beltrami_apply(&p, &field).unwrap();
        for i in 1..20 {
            for j in 1..20 {
                assert!((out[p.index(i, j)] - 4.0).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn dimension_mismatch() {
        let p = flat(6);
        assert!(laplace_beltrami_apply(&p, &[0.0; 10]).is_err());
    }
}
