use crate::error::{invalid, Result};

/// Values sampled on a uniform one-dimensional grid.
///
/// For coordinate grids (see [`Grid1D::linspace`]) the values are the node
/// positions themselves.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid1D {
    start: f64,
    stop: f64,
    spacing: f64,
    values: Vec<f64>,
}

impl Grid1D {
    pub fn new(start: f64, spacing: f64, values: Vec<f64>) -> Result<Self> {
        if !start.is_finite() {
            return Err(invalid("grid start must be finite"));
        }
        if !(spacing.is_finite() && spacing > 0.0) {
            return Err(invalid(format!("grid spacing must be positive, got {spacing}")));
        }
        if values.len() < 3 {
            return Err(invalid(format!(
                "grid needs at least 3 nodes, got {}",
                values.len()
            )));
        }
        Ok(Self {
            start,
            stop: start + (values.len() - 1) as f64 * spacing,
            spacing,
            values,
        })
    }

    /// Coordinate grid of `n` nodes spanning `[min, max]`.
    pub fn linspace(min: f64, max: f64, n: usize) -> Result<Self> {
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(invalid(format!("grid bounds must satisfy min < max, got [{min}, {max}]")));
        }
        if n < 3 {
            return Err(invalid(format!("grid needs at least 3 nodes, got {n}")));
        }
        let spacing = (max - min) / (n - 1) as f64;
        let mut grid = Self {
            start: min,
            stop: max,
            spacing,
            values: vec![0.0; n],
        };
        grid.values = grid.nodes();
        Ok(grid)
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Position of node `i`.
    ///
    /// The first half of the nodes is stepped from the start, the second
    /// half back from the end. The end nodes are therefore exact, and a grid
    /// symmetric about zero has `node(i) == -node(n - 1 - i)` bit for bit.
    pub fn node(&self, i: usize) -> f64 {
        let last = self.len() - 1;
        if 2 * i <= last {
            self.start + i as f64 * self.spacing
        } else {
            self.stop - (last - i) as f64 * self.spacing
        }
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.node(i)).collect()
    }

    pub fn end(&self) -> f64 {
        self.stop
    }

    /// Same layout, different samples.
    pub fn with_values(&self, values: Vec<f64>) -> Result<Self> {
        if values.len() != self.len() {
            return Err(invalid(format!(
                "expected {} values, got {}",
                self.len(),
                values.len()
            )));
        }
        Ok(Self {
            start: self.start,
            stop: self.stop,
            spacing: self.spacing,
            values,
        })
    }

    /// Composite trapezoid weights (endpoints halved).
    pub fn trapezoid_weights(&self) -> Vec<f64> {
        let n = self.len();
        let mut w = vec![self.spacing; n];
        w[0] *= 0.5;
        w[n - 1] *= 0.5;
        w
    }

    /// Trapezoid-weighted inner product of two sample vectors on this grid.
    pub fn inner(&self, a: &[f64], b: &[f64]) -> f64 {
        self.trapezoid_weights()
            .iter()
            .zip(a.iter().zip(b))
            .map(|(w, (x, y))| w * x * y)
            .sum()
    }

    pub fn norm(&self, a: &[f64]) -> f64 {
        self.inner(a, a).sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_grid_has_antisymmetric_nodes() {
        for n in [5, 101, 1001, 2001, 4001] {
            let g = Grid1D::linspace(-10.0, 10.0, n).unwrap();
            for i in 0..n {
                assert_eq!(g.node(i), -g.node(n - 1 - i));
            }
            assert_eq!(g.values()[0], -10.0);
            assert_eq!(g.values()[n - 1], 10.0);
        }
        let g = Grid1D::linspace(0.1, 0.7, 7).unwrap();
        assert_eq!((g.values()[0], g.values()[6]), (0.1, 0.7));
    }

    #[test]
    fn rejects_degenerate_grids() {
        assert!(Grid1D::linspace(0.0, 1.0, 2).is_err());
        assert!(Grid1D::linspace(1.0, 1.0, 10).is_err());
        assert!(Grid1D::new(0.0, -0.1, vec![0.0; 4]).is_err());
        assert!(Grid1D::new(0.0, 0.1, vec![0.0; 2]).is_err());
    }

    #[test]
    fn trapezoid_norm_of_constant() {
        let g = Grid1D::linspace(0.0, 2.0, 11).unwrap();
        let ones = vec![1.0; 11];
        assert!((g.inner(&ones, &ones) - 2.0).abs() < 1e-14);
    }
}
