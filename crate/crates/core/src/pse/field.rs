use super::grid::SpatialGrid;
use crate::{Error, Result, C64};
use serde::{Deserialize, Serialize};

/// Two-component wavefunction sampled on a grid.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinorField {
    pub grid: SpatialGrid,
    pub a: Vec<C64>,
    pub b: Vec<C64>,
}

/// Gaussian wave packet with density standard deviation `width`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaussianPacket {
    pub center: f64,
    pub width: f64,
    #[serde(default)]
    pub momentum: f64,
    /// Relative weights of the `a` and `b` channels; normalized on use.
    pub weights: [C64; 2],
}

/// Plane wave `e^{ip₀q/h₁}` under the smooth window `exp(−((q − c)/w)⁸)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindowedPlaneWave {
    pub center: f64,
    pub half_width: f64,
    pub momentum: f64,
    pub weights: [C64; 2],
}

fn channel_weights(weights: [C64; 2]) -> Result<(C64, C64)> {
    let n = (weights[0].norm_sqr() + weights[1].norm_sqr()).sqrt();
    if !(n > 0.0 && n.is_finite()) {
        return Err(Error::InvalidParams("channel weights must not both vanish".into()));
    }
    Ok((weights[0] / n, weights[1] / n))
}

impl SpinorField {
    pub fn new(grid: SpatialGrid, a: Vec<C64>, b: Vec<C64>) -> Result<Self> {
        for len in [a.len(), b.len()] {
            if len != grid.n_points() {
                return Err(Error::SizeMismatch {
                    expected: grid.n_points(),
                    found: len,
                });
            }
        }
        Ok(Self { grid, a, b })
    }

    pub fn zeros(grid: SpatialGrid) -> Self {
        let n = grid.n_points();
        Self {
            grid,
            a: vec![C64::new(0.0, 0.0); n],
            b: vec![C64::new(0.0, 0.0); n],
        }
    }

    pub(crate) fn check(&self) -> Result<()> {
        let n = self.grid.n_points();
        for len in [self.a.len(), self.b.len()] {
            if len != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: len,
                });
            }
        }
        Ok(())
    }

    /// Builds `a = w_a g`, `b = w_b g` from a scalar profile `g`, normalized on the grid.
    pub fn from_profile(
        grid: SpatialGrid,
        profile: impl Fn(f64) -> C64,
        weights: [C64; 2],
    ) -> Result<Self> {
        let (wa, wb) = channel_weights(weights)?;
        let g: Vec<C64> = grid.positions().into_iter().map(profile).collect();
        let norm = (g.iter().map(|z| z.norm_sqr()).sum::<f64>() * grid.dq()).sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::InvalidParams("profile has zero norm on the grid".into()));
        }
        let a = g.iter().map(|z| z * wa / norm).collect();
        let b = g.iter().map(|z| z * wb / norm).collect();
        Self::new(grid, a, b)
    }

    pub fn gaussian(grid: SpatialGrid, packet: &GaussianPacket, h1: f64) -> Result<Self> {
        if !(packet.width > 0.0) {
            return Err(Error::InvalidParams("packet width must be positive".into()));
        }
        let GaussianPacket {
            center,
            width,
            momentum,
            ..
        } = *packet;
        Self::from_profile(
            grid,
            |q| {
                let x = q - center;
                C64::from_polar(
                    (-x * x / (4.0 * width * width)).exp(),
                    momentum * x / h1,
                )
            },
            packet.weights,
        )
    }

    pub fn windowed_plane_wave(
        grid: SpatialGrid,
        packet: &WindowedPlaneWave,
        h1: f64,
    ) -> Result<Self> {
        if !(packet.half_width > 0.0) {
            return Err(Error::InvalidParams("window half width must be positive".into()));
        }
        let WindowedPlaneWave {
            center,
            half_width,
            momentum,
            ..
        } = *packet;
        Self::from_profile(
            grid,
            |q| {
                let x = (q - center) / half_width;
                C64::from_polar((-x.powi(8)).exp(), momentum * q / h1)
            },
            packet.weights,
        )
    }

    /// Builds a field from tabulated `(q, a, b)` rows on a uniform grid.
    pub fn from_table(rows: &[(f64, C64, C64)]) -> Result<Self> {
        let n = rows.len();
        if n < 2 {
            return Err(Error::InvalidGrid("need at least two rows".into()));
        }
        let q0 = rows[0].0;
        let dq = rows[1].0 - q0;
        for (j, row) in rows.iter().enumerate() {
            let expected = q0 + j as f64 * dq;
            if (row.0 - expected).abs() > 1e-9 * dq.abs().max(1.0) {
                return Err(Error::InvalidGrid(format!(
                    "row {j}: q = {} breaks uniform spacing (expected {expected})",
                    row.0
                )));
            }
        }
        let grid = SpatialGrid::new(n, q0, q0 + n as f64 * dq)?;
        Self::new(
            grid,
            rows.iter().map(|r| r.1).collect(),
            rows.iter().map(|r| r.2).collect(),
        )
    }

    /// `Σ_j (|a_j|² + |b_j|²) dq`.
    pub fn norm_sqr(&self) -> f64 {
        self.channel_weights().iter().sum()
    }

    /// `(Σ|a_j|² dq, Σ|b_j|² dq)`.
    pub fn channel_weights(&self) -> [f64; 2] {
        let dq = self.grid.dq();
        [
            self.a.iter().map(|z| z.norm_sqr()).sum::<f64>() * dq,
            self.b.iter().map(|z| z.norm_sqr()).sum::<f64>() * dq,
        ]
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tol
    }

    pub fn normalized(&self) -> Self {
        let s = 1.0 / self.norm_sqr().sqrt();
        Self {
            grid: self.grid,
            a: self.a.iter().map(|z| z * s).collect(),
            b: self.b.iter().map(|z| z * s).collect(),
        }
    }

    pub fn density(&self) -> Vec<f64> {
        self.a
            .iter()
            .zip(&self.b)
            .map(|(a, b)| a.norm_sqr() + b.norm_sqr())
            .collect()
    }

    /// `(Σ_j (|Δa_j|² + |Δb_j|²) dq)^{1/2}`.
    pub fn l2_distance(&self, other: &SpinorField) -> f64 {
        let diff: f64 = self
            .a
            .iter()
            .zip(&other.a)
            .chain(self.b.iter().zip(&other.b))
            .map(|(x, y)| (x - y).norm_sqr())
            .sum();
        (diff * self.grid.dq()).sqrt()
    }

    /// Largest pointwise modulus of the difference in either channel.
    pub fn max_deviation(&self, other: &SpinorField) -> f64 {
        self.a
            .iter()
            .zip(&other.a)
            .chain(self.b.iter().zip(&other.b))
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }
}

/// Two-component amplitude on the centered momentum lattice.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentumField {
    pub grid: SpatialGrid,
    pub h1: f64,
    pub a: Vec<C64>,
    pub b: Vec<C64>,
}

impl MomentumField {
    pub fn new(grid: SpatialGrid, h1: f64, a: Vec<C64>, b: Vec<C64>) -> Result<Self> {
        for len in [a.len(), b.len()] {
            if len != grid.n_points() {
                return Err(Error::SizeMismatch {
                    expected: grid.n_points(),
                    found: len,
                });
            }
        }
        Ok(Self { grid, h1, a, b })
    }

    pub(crate) fn check(&self) -> Result<()> {
        let n = self.grid.n_points();
        for len in [self.a.len(), self.b.len()] {
            if len != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: len,
                });
            }
        }
        Ok(())
    }

    pub fn momenta(&self) -> Vec<f64> {
        self.grid.momenta(self.h1)
    }

    /// `Σ_k (|ã_k|² + |b̃_k|²) Δp/(2πh₁)`.
    pub fn norm_sqr(&self) -> f64 {
        let s: f64 = self
            .a
            .iter()
            .chain(&self.b)
            .map(|z| z.norm_sqr())
            .sum();
        s * self.grid.momentum_measure()
    }
}
