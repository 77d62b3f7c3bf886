use super::grid::Grid1D;
use crate::error::{invalid, Result};

/// Cumulative arclength `s(x) = ∫ sqrt(1 + z'²) dx` of a graph `z(x)`.
///
/// `zx` carries `z` samples on a uniform x grid. `z'` uses centred
/// differences (second-order one-sided at the ends) and the integral the
/// composite trapezoid rule. The result lives on the same x grid with
/// `s(x₀) = 0`.
pub fn arclength_table(zx: &Grid1D) -> Result<Grid1D> {
    let z = zx.values();
    let n = z.len();
    if n < 3 {
        return Err(invalid("arclength needs at least 3 samples"));
    }
    let h = zx.spacing();
    let slope = |k: usize| {
        if k == 0 {
            (-3.0 * z[0] + 4.0 * z[1] - z[2]) / (2.0 * h)
        } else if k + 1 == n {
            (3.0 * z[n - 1] - 4.0 * z[n - 2] + z[n - 3]) / (2.0 * h)
        } else {
            (z[k + 1] - z[k - 1]) / (2.0 * h)
        }
    };
    let speed: Vec<f64> = (0..n).map(|k| slope(k).hypot(1.0)).collect();
    if let Some(k) = speed.iter().position(|v| !v.is_finite()) {
        return Err(invalid(format!("non-finite slope at sample {k}")));
    }
    let mut acc = 0.0;
    let mut s = Vec::with_capacity(n);
    s.push(0.0);
    for k in 1..n {
        acc += 0.5 * (speed[k - 1] + speed[k]);
        s.push(acc * h);
    }
    zx.with_values(s)
}

/// Planar curve `(x(s), z(s))` parametrized by arclength, with tangent
/// angle `theta` and curvature `kappa = dθ/ds`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileCurve {
    pub s: Grid1D,
    pub theta: Vec<f64>,
    pub x: Vec<f64>,
    pub z: Vec<f64>,
    pub kappa: Vec<f64>,
}

/// Integrates a curvature profile into a curve.
///
/// `θ` is the trapezoid integral of `κ`. `x` and `z` integrate `cos θ` and
/// `sin θ` with the end-corrected trapezoid rule, using the exact
/// derivatives `(cos θ)' = −κ sin θ`, `(sin θ)' = κ cos θ`; this keeps the
/// curve unit-speed to fourth order in the step.
pub fn reconstruct_profile(
    kappa: &[f64],
    s: &Grid1D,
    theta0: f64,
    x0: f64,
    z0: f64,
) -> Result<ProfileCurve> {
    let n = s.len();
    if kappa.len() != n {
        return Err(invalid(format!(
            "curvature has {} samples, arclength grid has {n}",
            kappa.len()
        )));
    }
    if let Some(k) = kappa.iter().position(|v| !v.is_finite()) {
        return Err(invalid(format!("non-finite curvature at sample {k}")));
    }
    if !(theta0.is_finite() && x0.is_finite() && z0.is_finite()) {
        return Err(invalid("initial angle and position must be finite"));
    }
    let h = s.spacing();
    let mut theta = vec![theta0; n];
    let mut x = vec![x0; n];
    let mut z = vec![z0; n];
    for k in 1..n {
        theta[k] = theta[k - 1] + 0.5 * h * (kappa[k - 1] + kappa[k]);
        let (s0, c0) = theta[k - 1].sin_cos();
        let (s1, c1) = theta[k].sin_cos();
        let correction = h * h / 12.0;
        x[k] = x[k - 1] + 0.5 * h * (c0 + c1) + correction * (-kappa[k - 1] * s0 + kappa[k] * s1);
        z[k] = z[k - 1] + 0.5 * h * (s0 + s1) + correction * (kappa[k - 1] * c0 - kappa[k] * c1);
    }
    Ok(ProfileCurve {
        s: s.clone(),
        theta,
        x,
        z,
        kappa: kappa.to_vec(),
    })
}

impl ProfileCurve {
    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    /// Curvature re-measured from centred differences of `theta`; the two end
    /// samples are `NaN`.
    pub fn measured_curvature(&self) -> Vec<f64> {
        let h = self.s.spacing();
        let n = self.len();
        let mut out = vec![f64::NAN; n];
        for (o, w) in out[1..n - 1].iter_mut().zip(self.theta.windows(3)) {
            *o = (w[2] - w[0]) / (2.0 * h);
        }
        out
    }

    /// `max |x'² + z'² − 1|` with five-point centred derivatives, over the
    /// nodes at least two samples away from either end.
    pub fn max_speed_deviation(&self) -> f64 {
        let h = self.s.spacing();
        let d = |v: &[f64], k: usize| {
            (v[k - 2] - 8.0 * v[k - 1] + 8.0 * v[k + 1] - v[k + 2]) / (12.0 * h)
        };
        (2..self.len().saturating_sub(2))
            .map(|k| (d(&self.x, k).powi(2) + d(&self.z, k).powi(2) - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// `max |x'² + z'² − 1|` with three-point centred derivatives.
    pub fn max_speed_deviation_centered(&self) -> f64 {
        let h = self.s.spacing();
        let d = |v: &[f64], k: usize| (v[k + 1] - v[k - 1]) / (2.0 * h);
        (1..self.len() - 1)
            .map(|k| (d(&self.x, k).powi(2) + d(&self.z, k).powi(2) - 1.0).abs())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn flat_line_arclength() {
        let g = Grid1D::new(0.0, 0.01, vec![0.0; 101]).unwrap();
        let s = arclength_table(&g).unwrap();
        assert_eq!(*s.values().last().unwrap(), 1.0);
    }

    #[test]
    fn slanted_line_arclength() {
        let x = Grid1D::linspace(0.0, 1.0, 101).unwrap();
        let s = arclength_table(&x.with_values(x.values().to_vec()).unwrap()).unwrap();
        assert!((s.values()[100] - 2f64.sqrt()).abs() < 1e-12);
        assert!(s.values().windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn arclength_needs_three_samples() {
        // Grid1D itself refuses short grids, so arclength never sees them.
        assert!(Grid1D::new(0.0, 0.1, vec![0.0, 1.0]).is_err());
    }

    #[test]
    fn straight_line_profile() {
        let s = Grid1D::linspace(0.0, 3.0, 31).unwrap();
        let c = reconstruct_profile(&[0.0; 31], &s, 0.0, 1.0, -2.0).unwrap();
        for k in 0..31 {
            assert!((c.x[k] - (1.0 + s.values()[k])).abs() < 1e-14);
            assert_eq!(c.z[k], -2.0);
        }
    }

    #[test]
    fn unit_circle_semicircle() {
        let s = Grid1D::linspace(0.0, PI, 1001).unwrap();
        let c = reconstruct_profile(&[1.0; 1001], &s, 0.0, 0.5, 0.25).unwrap();
        assert!((c.x[1000] - 0.5).abs() < 1e-10);
        assert!((c.z[1000] - 2.25).abs() < 1e-10);
    }

    #[test]
    fn length_mismatch() {
        let s = Grid1D::linspace(0.0, 1.0, 5).unwrap();
        assert!(reconstruct_profile(&[0.0; 4], &s, 0.0, 0.0, 0.0).is_err());
        assert!(reconstruct_profile(&[0.0, 0.0, f64::NAN, 0.0, 0.0], &s, 0.0, 0.0, 0.0).is_err());
    }
}
