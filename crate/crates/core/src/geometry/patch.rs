use crate::error::{invalid, Result};

/// Uniform axis `origin + i * spacing`, `i < n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub origin: f64,
    pub spacing: f64,
    pub n: usize,
}

impl Axis {
    pub fn new(origin: f64, spacing: f64, n: usize) -> Self {
        Self { origin, spacing, n }
    }

    /// `n` nodes spanning `[min, max]`.
    pub fn span(min: f64, max: f64, n: usize) -> Self {
        Self {
            origin: min,
            spacing: (max - min) / (n.max(2) - 1) as f64,
            n,
        }
    }

    pub fn node(&self, i: usize) -> f64 {
        self.origin + i as f64 * self.spacing
    }

    fn validate(&self, name: &str) -> Result<()> {
        if !(self.origin.is_finite() && self.spacing.is_finite() && self.spacing > 0.0) {
            return Err(invalid(format!("{name}-axis needs a finite origin and positive spacing")));
        }
        if self.n < 5 {
            return Err(invalid(format!(
                "{name}-axis needs at least 5 nodes, got {}",
                self.n
            )));
        }
        Ok(())
    }
}

/// Height field `z(x, y)` on a uniform rectangular lattice (Monge patch).
///
/// Samples are stored x-major: node `(i, j)` lives at `i * ny + j`.
#[derive(Debug, Clone, PartialEq)]
pub struct MongePatch {
    x: Axis,
    y: Axis,
    z: Vec<f64>,
}

impl MongePatch {
    pub fn new(x: Axis, y: Axis, z: Vec<f64>) -> Result<Self> {
        x.validate("x")?;
        y.validate("y")?;
        if z.len() != x.n * y.n {
            return Err(invalid(format!(
                "height field has {} samples, lattice needs {}",
                z.len(),
                x.n * y.n
            )));
        }
        if let Some(k) = z.iter().position(|v| !v.is_finite()) {
            return Err(invalid(format!(
                "non-finite height at node ({}, {})",
                k / y.n,
                k % y.n
            )));
        }
        Ok(Self { x, y, z })
    }

    /// Samples `f(x, y)` on the lattice.
    pub fn from_fn(x: Axis, y: Axis, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        let mut z = Vec::with_capacity(x.n * y.n);
        for i in 0..x.n {
            for j in 0..y.n {
                z.push(f(x.node(i), y.node(j)));
            }
        }
        Self::new(x, y, z)
    }

    pub fn x_axis(&self) -> Axis {
        self.x
    }

    pub fn y_axis(&self) -> Axis {
        self.y
    }

    pub fn nx(&self) -> usize {
        self.x.n
    }

    pub fn ny(&self) -> usize {
        self.y.n
    }

    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z.is_empty()
    }

    #[inline]
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.y.n + j
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x.node(i)
    }

    pub fn y(&self, j: usize) -> f64 {
        self.y.node(j)
    }

    #[inline]
    pub fn z(&self, i: usize, j: usize) -> f64 {
        self.z[self.index(i, j)]
    }

    pub fn heights(&self) -> &[f64] {
        &self.z
    }

    /// True for nodes off the outermost ring.
    pub fn is_interior(&self, i: usize, j: usize) -> bool {
        i > 0 && j > 0 && i + 1 < self.x.n && j + 1 < self.y.n
    }

    /// True for nodes at least `depth` nodes away from the boundary.
    pub fn is_interior_to(&self, i: usize, j: usize, depth: usize) -> bool {
        i >= depth && j >= depth && i + depth < self.x.n && j + depth < self.y.n
    }

    /// The same surface sampled in a window shifted rigidly by `(dx, dy, dz)`.
    pub fn translated(&self, dx: f64, dy: f64, dz: f64) -> Self {
        Self {
            x: Axis::new(self.x.origin + dx, self.x.spacing, self.x.n),
            y: Axis::new(self.y.origin + dy, self.y.spacing, self.y.n),
            z: self.z.iter().map(|v| v + dz).collect(),
        }
    }

    /// Heights multiplied by `factor`.
    pub fn scaled_heights(&self, factor: f64) -> Result<Self> {
        Self::new(self.x, self.y, self.z.iter().map(|v| v * factor).collect())
    }

    /// Largest absolute coordinate over the lattice, `max(|x|, |y|, |z|)`.
    pub fn scale(&self) -> f64 {
        let xs = self.x.node(0).abs().max(self.x.node(self.x.n - 1).abs());
        let ys = self.y.node(0).abs().max(self.y.node(self.y.n - 1).abs());
        self.z.iter().fold(xs.max(ys), |m, v| m.max(v.abs()))
    }

    /// First derivatives `(z_x, z_y)` at node `(i, j)`.
    ///
    /// Centred differences in the interior, second-order one-sided
    /// differences on the boundary ring.
    pub fn gradient(&self, i: usize, j: usize) -> (f64, f64) {
        let zx = diff1(self.x.n, self.x.spacing, i, |k| self.z(k, j));
        let zy = diff1(self.y.n, self.y.spacing, j, |k| self.z(i, k));
        (zx, zy)
    }
}

fn diff1(n: usize, h: f64, k: usize, f: impl Fn(usize) -> f64) -> f64 {
    if k == 0 {
        (-3.0 * f(0) + 4.0 * f(1) - f(2)) / (2.0 * h)
    } else if k + 1 == n {
        (3.0 * f(n - 1) - 4.0 * f(n - 2) + f(n - 3)) / (2.0 * h)
    } else {
        (f(k + 1) - f(k - 1)) / (2.0 * h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_lattice() {
        let ax = Axis::span(0.0, 1.0, 5);
        assert!(MongePatch::new(ax, ax, vec![0.0; 25]).is_ok());
        assert!(MongePatch::new(ax, ax, vec![0.0; 24]).is_err());
        assert!(MongePatch::new(Axis::span(0.0, 1.0, 4), ax, vec![0.0; 20]).is_err());
        let mut z = vec![0.0; 25];
        z[7] = f64::NAN;
        let err = MongePatch::new(ax, ax, z).unwrap_err();
        assert!(err.to_string().contains("(1, 2)"));
    }

    #[test]
    fn gradient_exact_for_quadratics() {
        let ax = Axis::span(-1.0, 1.0, 9);
        let p = MongePatch::from_fn(ax, ax, |x, y| x * x + 3.0 * x * y - y).unwrap();
        for (i, j) in [(0, 0), (4, 4), (8, 3), (2, 8)] {
            let (x, y) = (p.x(i), p.y(j));
            let (zx, zy) = p.gradient(i, j);
            assert!((zx - (2.0 * x + 3.0 * y)).abs() < 1e-12);
            assert!((zy - (3.0 * x - 1.0)).abs() < 1e-12);
        }
    }
}
