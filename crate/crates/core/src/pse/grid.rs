use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Uniform periodic grid with `n_points` nodes on `[q_min, q_max)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpatialGrid {
    n_points: usize,
    q_min: f64,
    q_max: f64,
}

impl SpatialGrid {
    pub fn new(n_points: usize, q_min: f64, q_max: f64) -> Result<Self> {
        if n_points < 2 || !n_points.is_power_of_two() {
            return Err(Error::InvalidGrid(format!(
                "n_points must be a power of two >= 2, got {n_points}"
            )));
        }
        if !(q_min.is_finite() && q_max.is_finite() && q_max > q_min) {
            return Err(Error::InvalidGrid(format!(
                "need finite q_min < q_max, got [{q_min}, {q_max})"
            )));
        }
        Ok(Self {
            n_points,
            q_min,
            q_max,
        })
    }

    /// Grid centered on the origin with spacing `dq`.
    pub fn centered(n_points: usize, dq: f64) -> Result<Self> {
        let half = 0.5 * n_points as f64 * dq;
        Self::new(n_points, -half, half)
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn q_min(&self) -> f64 {
        self.q_min
    }

    pub fn q_max(&self) -> f64 {
        self.q_max
    }

    pub fn dq(&self) -> f64 {
        (self.q_max - self.q_min) / self.n_points as f64
    }

    pub fn length(&self) -> f64 {
        self.q_max - self.q_min
    }

    pub fn position(&self, j: usize) -> f64 {
        self.q_min + j as f64 * self.dq()
    }

    pub fn positions(&self) -> Vec<f64> {
        (0..self.n_points).map(|j| self.position(j)).collect()
    }

    /// Momentum spacing `2π h₁ / (n dq)`.
    pub fn dp(&self, h1: f64) -> f64 {
        2.0 * PI * h1 / self.length()
    }

    /// Centered momentum lattice, ascending.
    pub fn momenta(&self, h1: f64) -> Vec<f64> {
        let half = (self.n_points / 2) as i64;
        let dp = self.dp(h1);
        (-half..self.n_points as i64 - half)
            .map(|k| k as f64 * dp)
            .collect()
    }

    /// Momentum lattice in discrete-transform order (`0, 1, …, n/2−1, −n/2, …, −1`).
    pub(crate) fn momenta_transform_order(&self, h1: f64) -> Vec<f64> {
        let n = self.n_points as i64;
        let dp = self.dp(h1);
        (0..n)
            .map(|i| if i < n / 2 { i } else { i - n })
            .map(|k| k as f64 * dp)
            .collect()
    }

    /// Weight `Δp/(2πh₁) = 1/(n dq)` of one momentum node.
    pub fn momentum_measure(&self) -> f64 {
        1.0 / self.length()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_sizes() {
        assert!(SpatialGrid::new(100, -1.0, 1.0).is_err());
        assert!(SpatialGrid::new(1, -1.0, 1.0).is_err());
        assert!(SpatialGrid::new(64, 1.0, 1.0).is_err());
        assert!(SpatialGrid::new(64, 0.0, f64::NAN).is_err());
    }

    #[test]
    fn lattice_layout() {
        let g = SpatialGrid::new(8, -2.0, 2.0).unwrap();
        assert_eq!(g.dq(), 0.5);
        assert_eq!(g.positions()[0], -2.0);
        assert_eq!(g.positions()[7], 1.5);
        let p = g.momenta(1.0);
        let dp = 2.0 * PI / 4.0;
        assert_eq!(p.len(), 8);
        assert!((p[0] + 4.0 * dp).abs() < 1e-15);
        assert_eq!(p[4], 0.0);
        assert!((g.momenta(2.0)[7] - 6.0 * dp).abs() < 1e-14);
        let t = g.momenta_transform_order(1.0);
        assert_eq!(t[0], 0.0);
        assert!((t[4] + 4.0 * dp).abs() < 1e-15);
        assert_eq!(g.momentum_measure(), 0.25);
    }
}
