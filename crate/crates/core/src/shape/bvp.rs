use super::params::ReducedProblem;
use super::reduced::residual_into;
use crate::error::{invalid, Error, Result};
use crate::tridiag::solve_symmetric_twisted;

const MAX_ITERATIONS: usize = 100;
const MAX_HALVINGS: usize = 30;

#[derive(Debug, Clone, PartialEq)]
pub struct BvpSolution {
    /// Solution on the full grid, including the zero Dirichlet ends.
    pub values: Vec<f64>,
    /// Newton steps taken.
    pub iterations: usize,
    /// Final max-norm of the interior residual.
    pub residual: f64,
    /// True when the solution is identically zero.
    pub trivial: bool,
}

/// Damped Newton iteration for `H'' + α H³ = ε² H` with `H = 0` at both
/// ends of the grid.
///
/// Each step solves the tridiagonal system `J δ = −r`, with
/// `J = D₂ + diag(3αH² − ε²)`, then halves `δ` until the residual max-norm
/// decreases. Stops once that norm is at most `tol`.
///
/// A zero initial guess is an exact root and comes back as the trivial
/// solution. Converging to zero from a nonzero guess is reported as
/// [`Error::CollapsedToTrivial`].
pub fn solve_reduced_bvp(problem: &ReducedProblem, init: &[f64], tol: f64) -> Result<BvpSolution> {
    let n = problem.grid().len();
    if init.len() != n {
        return Err(invalid(format!(
            "initial guess has {} samples, grid has {n}",
            init.len()
        )));
    }
    if let Some(k) = init.iter().position(|v| !v.is_finite()) {
        return Err(invalid(format!("non-finite initial guess at sample {k}")));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(invalid(format!("Newton tolerance must be positive, got {tol}")));
    }
    let (alpha, eps) = (problem.alpha(), problem.eps());
    let step = problem.grid().spacing();
    let inv_h2 = 1.0 / (step * step);

    let mut h = init.to_vec();
    h[0] = 0.0;
    h[n - 1] = 0.0;
    let init_scale = h.iter().fold(0.0f64, |m, v| m.max(v.abs()));

    let mut res = vec![0.0; n];
    let norm = |h: &[f64], res: &mut [f64]| {
        residual_into(h, alpha, eps, step, res);
        res[1..n - 1].iter().fold(0.0f64, |m, v| m.max(v.abs()))
    };
    let mut rnorm = norm(&h, &mut res);
    let mut iterations = 0;
    let off = vec![inv_h2; n.saturating_sub(3)];
    let mut trial = h.clone();
    let mut trial_res = vec![0.0; n];

    while rnorm > tol {
        if iterations == MAX_ITERATIONS || !rnorm.is_finite() {
            return Err(Error::NoConvergence {
                iterations,
                residual: rnorm,
            });
        }
        iterations += 1;
        let diag: Vec<f64> = h[1..n - 1]
            .iter()
            .map(|&v| -2.0 * inv_h2 + 3.0 * alpha * v * v - eps * eps)
            .collect();
        let rhs: Vec<f64> = res[1..n - 1].iter().map(|v| -v).collect();
        let delta = solve_symmetric_twisted(&diag, &off, &rhs).ok_or(Error::NoConvergence {
            iterations,
            residual: rnorm,
        })?;

        let mut damping = 1.0;
        let mut accepted = false;
        for _ in 0..=MAX_HALVINGS {
            for (k, d) in delta.iter().enumerate() {
                trial[k + 1] = h[k + 1] + damping * d;
            }
            let trial_norm = norm(&trial, &mut trial_res);
            if trial_norm < rnorm {
                std::mem::swap(&mut h, &mut trial);
                std::mem::swap(&mut res, &mut trial_res);
                rnorm = trial_norm;
                accepted = true;
                break;
            }
            damping *= 0.5;
        }
        if !accepted {
            return Err(Error::NoConvergence {
                iterations,
                residual: rnorm,
            });
        }
    }

    let scale = h.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let trivial = scale <= 1e-8 * init_scale.max(f64::MIN_POSITIVE) || scale == 0.0;
    if trivial && init_scale > 0.0 {
        return Err(Error::CollapsedToTrivial { iterations });
    }
    Ok(BvpSolution {
        values: h,
        iterations,
        residual: rnorm,
        trivial,
    })
}
