use super::hamiltonian::TridiagonalOperator;
use crate::error::{invalid, Error, Result};
use crate::tridiag::solve_pivoted;

const MAX_BISECTION_STEPS: usize = 200;
const MAX_INVERSE_ITERATIONS: usize = 12;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpectrumDiagnostics {
    pub bisection_steps: usize,
    pub inverse_iterations: usize,
    /// Set when two returned eigenvalues could not be separated by bisection.
    pub degenerate: bool,
}

/// Eigenvalues of the top of the spectrum, descending, with eigenvectors of
/// unit trapezoid-weighted L² norm. The sign of each eigenvector is chosen
/// so that its largest-magnitude sample is positive.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumResult {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<Vec<f64>>,
    pub continuum_edge: f64,
    pub diagnostics: SpectrumDiagnostics,
}

impl SpectrumResult {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Whether eigenvalue `i` lies above the continuum edge.
    pub fn is_bound(&self, i: usize) -> bool {
        self.eigenvalues[i] > self.continuum_edge
    }
}

/// Number of eigenvalues strictly below `x` (negative pivots of the LDLᵀ
/// factorization of `L − x I`).
fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let guard = f64::MIN_POSITIVE.sqrt();
    let mut count = 0;
    let mut q = diag[0] - x;
    for i in 0..diag.len() {
        if i > 0 {
            let prev = if q.abs() < guard { guard.copysign(q) } else { q };
            q = diag[i] - x - off[i - 1] * off[i - 1] / prev;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Bisects for the eigenvalue with ascending index `idx`.
fn bisect(diag: &[f64], off: &[f64], idx: usize, mut lo: f64, mut hi: f64) -> (f64, usize) {
    let mut steps = 0;
    while steps < MAX_BISECTION_STEPS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= 2.0 * f64::EPSILON * lo.abs().max(hi.abs()) {
            break;
        }
        if sturm_count(diag, off, mid) > idx {
            hi = mid;
        } else {
            lo = mid;
        }
        steps += 1;
    }
    (0.5 * (lo + hi), steps)
}

/// The `k` largest eigenpairs of `op`, whether or not they are bound.
pub fn top_modes(op: &TridiagonalOperator, k: usize) -> Result<SpectrumResult> {
    top_modes_with(op, k.min(op.len()), 1e-9)
}

/// All eigenpairs above the continuum edge, at most `kmax` of them.
///
/// Eigenvalues come from Sturm-sequence bisection, eigenvectors from
/// inverse iteration. Each pair satisfies
/// `‖Lψ − λψ‖ ≤ 1e-9 ‖L‖` for unit `ψ`. An operator without bound states
/// gives an empty result.
pub fn bound_states(op: &TridiagonalOperator, kmax: usize) -> Result<SpectrumResult> {
    if kmax == 0 {
        return Err(invalid("kmax must be at least 1"));
    }
    let n = op.len();
    let above = n - sturm_count(op.diag(), op.offdiag(), op.continuum_edge());
    let mut out = top_modes_with(op, above.min(kmax), 1e-9)?;
    // an eigenvalue sitting exactly on the edge is not bound
    while out.eigenvalues.last().is_some_and(|&l| l <= out.continuum_edge) {
        out.eigenvalues.pop();
        out.eigenvectors.pop();
    }
    Ok(out)
}

fn top_modes_with(op: &TridiagonalOperator, k: usize, rel_tol: f64) -> Result<SpectrumResult> {
    let n = op.len();
    let (diag, off) = (op.diag(), op.offdiag());
    let (glo, ghi) = op.gershgorin();
    let pad = 1e-12 * glo.abs().max(ghi.abs()).max(1.0);
    let (lo, hi) = (glo - pad, ghi + pad);
    let norm = op.norm_bound().max(f64::MIN_POSITIVE);
    let weights = op.grid().trapezoid_weights();

    let mut diagnostics = SpectrumDiagnostics::default();
    let mut eigenvalues = Vec::with_capacity(k);
    let mut eigenvectors: Vec<Vec<f64>> = Vec::with_capacity(k);
    for j in 0..k {
        let idx = n - 1 - j;
        let (lambda, steps) = bisect(diag, off, idx, lo, hi);
        diagnostics.bisection_steps += steps;
        if let Some(&prev) = eigenvalues.last() {
            let prev: f64 = prev;
            if (prev - lambda).abs() <= 4.0 * f64::EPSILON * norm {
                diagnostics.degenerate = true;
            }
        }

        let (vec, iters) = inverse_iteration(op, lambda, &eigenvectors, rel_tol * norm)?;
        diagnostics.inverse_iterations += iters;
        eigenvalues.push(lambda);
        eigenvectors.push(vec);
    }

    // unit trapezoid norm, largest sample positive
    for v in &mut eigenvectors {
        let nrm = v
            .iter()
            .zip(&weights)
            .map(|(x, w)| w * x * x)
            .sum::<f64>()
            .sqrt();
        let peak = v.iter().fold(0.0f64, |m, &x| if x.abs() > m.abs() { x } else { m });
        let scale = nrm.recip().copysign(peak);
        v.iter_mut().for_each(|x| *x *= scale);
    }

    Ok(SpectrumResult {
        eigenvalues,
        eigenvectors,
        continuum_edge: op.continuum_edge(),
        diagnostics,
    })
}

fn euclid_normalize(v: &mut [f64]) -> f64 {
    let nrm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if nrm > 0.0 {
        v.iter_mut().for_each(|x| *x /= nrm);
    }
    nrm
}

fn inverse_iteration(
    op: &TridiagonalOperator,
    lambda: f64,
    previous: &[Vec<f64>],
    tol: f64,
) -> Result<(Vec<f64>, usize)> {
    let n = op.len();
    let lower = op.offdiag();
    let shifted: Vec<f64> = op.diag().iter().map(|d| d - lambda).collect();
    let tiny = f64::EPSILON * op.norm_bound().max(1.0);

    // deterministic, non-symmetric start vector
    let mut v: Vec<f64> = (0..n)
        .map(|i| 1.0 + 0.5 * ((i as f64) * 0.754_877_666).fract())
        .collect();
    euclid_normalize(&mut v);
    let mut residual = f64::INFINITY;
    for it in 1..=MAX_INVERSE_ITERATIONS {
        let mut w = solve_pivoted(lower, &shifted, lower, &v, tiny);
        for p in previous {
            let dot: f64 = w.iter().zip(p).map(|(a, b)| a * b).sum();
            let pn: f64 = p.iter().map(|b| b * b).sum();
            w.iter_mut().zip(p).for_each(|(a, b)| *a -= dot / pn * b);
        }
        if euclid_normalize(&mut w) == 0.0 || w.iter().any(|x| !x.is_finite()) {
            break;
        }
        v = w;
        let lv = op.apply(&v);
        residual = lv
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - lambda * b).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual <= tol {
            return Ok((v, it));
        }
    }
    Err(Error::Stagnation {
        eigenvalue: lambda,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Grid1D;
    use crate::quantum::build_hamiltonian_1d;
    use std::f64::consts::PI;

    #[test]
    fn sturm_count_of_diagonal() {
        let d = [1.0, -2.0, 3.0, 0.5];
        let e = [0.0; 3];
        assert_eq!(sturm_count(&d, &e, 0.0), 1);
        assert_eq!(sturm_count(&d, &e, 0.75), 2);
        assert_eq!(sturm_count(&d, &e, 10.0), 4);
    }

    #[test]
    fn flat_has_no_bound_states() {
        let s = Grid1D::linspace(-10.0, 10.0, 201).unwrap();
        let op = build_hamiltonian_1d(&[0.0; 201], &s).unwrap();
        let spec = bound_states(&op, 5).unwrap();
        assert!(spec.is_empty());
        assert_eq!(spec.continuum_edge, 0.0);
    }

    #[test]
    fn dirichlet_laplacian_spectrum() {
        let n = 50;
        let s = Grid1D::linspace(0.0, 1.0, n).unwrap();
        let h = s.spacing();
        let op = build_hamiltonian_1d(&vec![0.0; n], &s).unwrap();
        let spec = top_modes(&op, 4).unwrap();
        for (k, lam) in spec.eigenvalues.iter().enumerate() {
            let m = (k + 1) as f64;
            let exact = -(2.0 / (h * h)) * (1.0 - (m * PI / (n as f64 + 1.0)).cos());
            assert!((lam - exact).abs() < 1e-9 * op.norm_bound(), "{lam} vs {exact}");
            assert!(!spec.is_bound(k));
        }
    }

    #[test]
    fn kmax_zero_is_rejected() {
        let s = Grid1D::linspace(0.0, 1.0, 5).unwrap();
        let op = build_hamiltonian_1d(&[0.0; 5], &s).unwrap();
        assert!(bound_states(&op, 0).is_err());
    }
}
