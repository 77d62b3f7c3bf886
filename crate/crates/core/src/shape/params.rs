use crate::error::{invalid, Result};
use crate::geometry::Grid1D;

/// Material constants of a membrane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembraneParams {
    /// Bending rigidity `k_c > 0`.
    pub k_c: f64,
    /// Surface tension `λ ≥ 0`.
    pub lambda: f64,
    /// Pressure difference across the membrane.
    pub delta_p: f64,
    /// Spontaneous curvature.
    pub c0: f64,
}

impl MembraneParams {
    pub fn new(k_c: f64, lambda: f64, delta_p: f64, c0: f64) -> Result<Self> {
        let p = Self {
            k_c,
            lambda,
            delta_p,
            c0,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.k_c.is_finite() && self.k_c > 0.0) {
            return Err(invalid(format!("bending rigidity must be positive, got {}", self.k_c)));
        }
        if !(self.lambda.is_finite() && self.lambda >= 0.0) {
            return Err(invalid(format!("surface tension must be non-negative, got {}", self.lambda)));
        }
        if !(self.delta_p.is_finite() && self.c0.is_finite()) {
            return Err(invalid("pressure difference and spontaneous curvature must be finite"));
        }
        if !self.eps2().is_finite() {
            return Err(invalid("lambda / k_c overflows"));
        }
        Ok(())
    }

    /// `ε² = λ / k_c`.
    pub fn eps2(&self) -> f64 {
        self.lambda / self.k_c
    }
}

impl Default for MembraneParams {
    fn default() -> Self {
        Self {
            k_c: 1.0,
            lambda: 1.0,
            delta_p: 0.0,
            c0: 0.0,
        }
    }
}

/// The reduced equation `H'' + α H³ = ε² H` on an arclength grid.
///
/// `alpha = 2` is the elastic shape equation, `alpha = 1` the surface
/// Schrödinger equation with `ψ` in place of `H`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedProblem {
    alpha: f64,
    eps: f64,
    s: Grid1D,
}

impl ReducedProblem {
    pub fn new(alpha: f64, eps: f64, s: Grid1D) -> Result<Self> {
        if alpha != 1.0 && alpha != 2.0 {
            return Err(invalid(format!("alpha must be 1 or 2, got {alpha}")));
        }
        if !(eps.is_finite() && eps > 0.0) {
            return Err(invalid(format!("eps must be positive, got {eps}")));
        }
        Ok(Self { alpha, eps, s })
    }

    /// Symmetric default domain `[−10/ε, 10/ε]`.
    pub fn on_default_domain(alpha: f64, eps: f64, n: usize) -> Result<Self> {
        if !(eps.is_finite() && eps > 0.0) {
            return Err(invalid(format!("eps must be positive, got {eps}")));
        }
        let half = 10.0 / eps;
        Self::new(alpha, eps, Grid1D::linspace(-half, half, n)?)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn grid(&self) -> &Grid1D {
        &self.s
    }
}
