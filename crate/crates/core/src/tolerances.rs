/// Numerical tolerances shared across the toolkit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Allowed negative excess of `H² − K`, relative to `max |H|²`.
    pub geom: f64,
    /// Max-norm residual at which the Newton solver stops.
    pub newton: f64,
    /// Eigenpair residual `‖Lψ − λψ‖`, relative to `‖L‖`.
    pub eigen: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            geom: 1e-8,
            newton: 1e-10,
            eigen: 1e-9,
        }
    }
}
