#![allow(dead_code)]

use conformon::geometry::{Axis, MongePatch};

/// Upper cap of the sphere of radius `r` over `[-half, half]²`.
pub fn sphere_cap(r: f64, half: f64, n: usize) -> MongePatch {
    let ax = Axis::span(-half, half, n);
    MongePatch::from_fn(ax, ax, |x, y| (r * r - x * x - y * y).sqrt()).unwrap()
}

/// Circular cylinder `z = sqrt(ρ² − x²)` with axis along y.
pub fn cylinder_sheet(rho: f64, half_x: f64, half_y: f64, n: usize) -> MongePatch {
    MongePatch::from_fn(
        Axis::span(-half_x, half_x, n),
        Axis::span(-half_y, half_y, n),
        |x, _| (rho * rho - x * x).sqrt(),
    )
    .unwrap()
}

pub fn flat(n: usize, h: f64) -> MongePatch {
    let ax = Axis::new(-0.5 * h * (n - 1) as f64, h, n);
    MongePatch::from_fn(ax, ax, |_, _| 0.0).unwrap()
}

/// Max of `|f(k)|` over indices where `mask` holds.
pub fn max_masked(mask: &[bool], f: impl Fn(usize) -> f64) -> f64 {
    mask.iter()
        .enumerate()
        .filter(|(_, &m)| m)
        .fold(0.0, |acc, (k, _)| acc.max(f(k).abs()))
}

/// Max |values| ignoring NaN sentinels.
pub fn max_finite(values: &[f64]) -> f64 {
    values
        .iter()
        .filter(|v| !v.is_nan())
        .fold(0.0, |m, v| m.max(v.abs()))
}
