use super::params::ReducedProblem;
use crate::error::{invalid, Result};

/// Residual `H'' + α H³ − ε² H` with centred second differences; the two
/// end samples are `NaN`.
pub fn reduced_ode_residual(h_vals: &[f64], problem: &ReducedProblem) -> Result<Vec<f64>> {
    let s = problem.grid();
    if h_vals.len() != s.len() {
        return Err(invalid(format!(
            "profile has {} samples, grid has {}",
            h_vals.len(),
            s.len()
        )));
    }
    let mut out = vec![f64::NAN; h_vals.len()];
    residual_into(h_vals, problem.alpha(), problem.eps(), s.spacing(), &mut out);
    Ok(out)
}

/// Fills `out[1..n-1]`. Written so that mirrored inputs give bit-for-bit
/// mirrored outputs.
pub(super) fn residual_into(h: &[f64], alpha: f64, eps: f64, step: f64, out: &mut [f64]) {
    let inv_h2 = 1.0 / (step * step);
    let eps2 = eps * eps;
    for i in 1..h.len() - 1 {
        let d2 = ((h[i - 1] + h[i + 1]) - 2.0 * h[i]) * inv_h2;
        out[i] = d2 + (alpha * h[i] * h[i] - eps2) * h[i];
    }
}

/// Amplitude `A` for which `A sech(εs)` solves the reduced equation:
/// substituting gives `(αA² − 2ε²) A sech³ = 0`, so `A = ε sqrt(2/α)`.
pub fn soliton_amplitude(alpha: f64, eps: f64) -> f64 {
    eps * (2.0 / alpha).sqrt()
}

/// Amplitude of the constant (uniform cylinder) solution, `ε / sqrt(α)`.
pub fn constant_amplitude(alpha: f64, eps: f64) -> f64 {
    eps / alpha.sqrt()
}

/// `amplitude · sech(ε s)` sampled on the problem grid.
pub fn sech_profile(problem: &ReducedProblem, amplitude: f64) -> Vec<f64> {
    let eps = problem.eps();
    problem
        .grid()
        .values()
        .iter()
        .map(|&s| amplitude / (eps * s).cosh())
        .collect()
}

/// The localized solution `H(s) = ε sqrt(2/α) sech(ε s)`.
pub fn soliton_profile(problem: &ReducedProblem) -> Vec<f64> {
    sech_profile(problem, soliton_amplitude(problem.alpha(), problem.eps()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Grid1D;

    fn problem(alpha: f64, eps: f64, n: usize) -> ReducedProblem {
        ReducedProblem::new(alpha, eps, Grid1D::linspace(-10.0, 10.0, n).unwrap()).unwrap()
    }

    #[test]
    fn soliton_values() {
        let p = problem(2.0, 1.0, 2001);
        let h = soliton_profile(&p);
        assert_eq!(h[1000], 1.0);
        // 1 / cosh(10)
        assert!((h[0] - 9.079_985_933_781_724e-5).abs() < 1e-18);
        assert_eq!(h[0], h[2000]);
        let p = problem(1.0, 2.0, 2001);
        assert!((soliton_profile(&p)[1000] - 2.0 * 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn zero_and_constant_solutions() {
        for (alpha, eps) in [(1.0, 0.5), (2.0, 1.0), (2.0, 3.0)] {
            let p = problem(alpha, eps, 101);
            let r = reduced_ode_residual(&[0.0; 101], &p).unwrap();
            assert!(r[1..100].iter().all(|&v| v == 0.0));
            assert!(r[0].is_nan() && r[100].is_nan());
            let c = vec![constant_amplitude(alpha, eps); 101];
            let r = reduced_ode_residual(&c, &p).unwrap();
            assert!(r[1..100].iter().all(|v| v.abs() <= 1e-12));
        }
    }

    #[test]
    fn length_mismatch() {
        assert!(reduced_ode_residual(&[0.0; 10], &problem(2.0, 1.0, 11)).is_err());
    }
}
