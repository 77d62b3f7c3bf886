//! Characteristics of the rigid-motion generators acting on a Monge patch.
//!
//! | generator            | characteristic    |
//! |----------------------|-------------------|
//! | `∂_x`                | `−z_x`            |
//! | `∂_y`                | `−z_y`            |
//! | `∂_z`                | `1`               |
//! | `x∂_y − y∂_x`        | `y z_x − x z_y`   |
//! | `x∂_z − z∂_x`        | `x − z z_x`       |
//! | `y∂_z − z∂_y`        | `y − z z_y`       |
//!
//! A surface is invariant under a generator exactly when its
//! characteristic vanishes.

use crate::error::{invalid, Result};
use crate::geometry::MongePatch;

#[derive(Debug, Clone, PartialEq)]
pub struct CharacteristicSet {
    /// `q[j - 1]` holds `Q_j`, x-major like the patch. Entries off the
    /// interior are `NaN`, except `Q₃` which is `1` everywhere.
    pub q: [Vec<f64>; 6],
    pub valid: Vec<bool>,
}

impl CharacteristicSet {
    /// Field of generator `j` in `1..=6`.
    pub fn get(&self, j: usize) -> Option<&[f64]> {
        (1..=6).contains(&j).then(|| self.q[j - 1].as_slice())
    }
}

/// Evaluates `Q₁ … Q₆` with centred differences for `z_x`, `z_y`.
pub fn characteristics(patch: &MongePatch) -> CharacteristicSet {
    let n = patch.len();
    let mut q: [Vec<f64>; 6] = std::array::from_fn(|_| vec![f64::NAN; n]);
    q[2] = vec![1.0; n];
    let mut valid = vec![false; n];
    for i in 1..patch.nx() - 1 {
        for j in 1..patch.ny() - 1 {
            let k = patch.index(i, j);
            let (x, y, z) = (patch.x(i), patch.y(j), patch.z(i, j));
            let (zx, zy) = patch.gradient(i, j);
            q[0][k] = -zx;
            q[1][k] = -zy;
            q[3][k] = y * zx - x * zy;
            q[4][k] = x - z * zx;
            q[5][k] = y - z * zy;
            valid[k] = true;
        }
    }
    CharacteristicSet { q, valid }
}

/// True when `max |Q_j| ≤ tol · (1 + scale)` over the interior, with
/// `scale = max(|x|, |y|, |z|)` over the patch. Vertical translation
/// (`j = 3`, `Q₃ = 1`) never leaves a surface invariant.
pub fn invariance_test(patch: &MongePatch, generator: usize, tol: f64) -> Result<bool> {
    if !(1..=6).contains(&generator) {
        return Err(invalid(format!("generator index must be 1..=6, got {generator}")));
    }
    if generator == 3 {
        return Ok(false);
    }
    Ok(max_characteristic(patch, generator) <= tol * (1.0 + patch.scale()))
}

/// `max |Q_j|` over the interior nodes.
pub fn max_characteristic(patch: &MongePatch, generator: usize) -> f64 {
    let set = characteristics(patch);
    set.q[generator - 1]
        .iter()
        .zip(&set.valid)
        .filter(|(_, &v)| v)
        .fold(0.0, |m, (q, _)| m.max(q.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Axis;

    #[test]
    fn plane_characteristics() {
        let ax = Axis::span(-1.0, 1.0, 9);
        let p = MongePatch::from_fn(ax, ax, |_, _| 0.0).unwrap();
        let c = characteristics(&p);
        for i in 1..8 {
            for j in 1..8 {
                let k = p.index(i, j);
                assert_eq!(c.q[0][k], 0.0);
                assert_eq!(c.q[1][k], 0.0);
                assert_eq!(c.q[3][k], 0.0);
                assert_eq!(c.q[4][k], p.x(i));
                assert_eq!(c.q[5][k], p.y(j));
            }
        }
        assert!(c.q[2].iter().all(|&v| v == 1.0));
        assert!(c.get(0).is_none() && c.get(7).is_none());
    }

    #[test]
    fn generator_index_checked() {
        let ax = Axis::span(-1.0, 1.0, 5);
        let p = MongePatch::from_fn(ax, ax, |_, _| 0.0).unwrap();
        assert!(invariance_test(&p, 0, 1e-8).is_err());
        assert!(invariance_test(&p, 7, 1e-8).is_err());
        assert!(!invariance_test(&p, 3, 1e300).unwrap());
    }
}
