use crate::error::{invalid, Result};
use crate::geometry::Grid1D;

/// Distance between the shapes of `psi` and `H`:
/// `min_σ ‖σ ψ̂ − Ĥ‖` over `σ = ±1`, where hats denote copies of unit
/// trapezoid-weighted L² norm. Zero means `ψ ∝ H`.
pub fn correspondence_metric(psi: &[f64], h_vals: &[f64], s: &Grid1D) -> Result<f64> {
    if psi.len() != s.len() || h_vals.len() != s.len() {
        return Err(invalid(format!(
            "fields have {} and {} samples, grid has {}",
            psi.len(),
            h_vals.len(),
            s.len()
        )));
    }
    let h_norm = s.norm(h_vals);
    if !(h_norm > 0.0 && h_norm.is_finite()) {
        return Err(invalid("correspondence is undefined for a vanishing mean curvature"));
    }
    let psi_norm = s.norm(psi);
    if !(psi_norm > 0.0 && psi_norm.is_finite()) {
        return Err(invalid("wavefunction must be nonzero and finite"));
    }
    let overlap = s.inner(psi, h_vals) / (psi_norm * h_norm);
    // ‖σψ̂ − Ĥ‖² = 2 − 2σ⟨ψ̂, Ĥ⟩, minimized by σ = sign(overlap)
    let dist2 = 2.0 - 2.0 * overlap.abs();
    if dist2 > 1e-12 {
        return Ok(dist2.sqrt());
    }
    // near-parallel: evaluate the difference directly to avoid cancellation
    let sigma = if overlap < 0.0 { -1.0 } else { 1.0 };
    let diff: Vec<f64> = psi
        .iter()
        .zip(h_vals)
        .map(|(p, h)| sigma * p / psi_norm - h / h_norm)
        .collect();
    Ok(s.norm(&diff))
}

/// Index of the largest value of `f(v)` (first one on ties).
pub fn peak_index(values: &[f64], f: impl Fn(f64) -> f64) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (i, &v) in values.iter().enumerate() {
        let y = f(v);
        if best.is_none_or(|(_, b)| y > b) {
            best = Some((i, y));
        }
    }
    best.map(|(i, _)| i)
}
