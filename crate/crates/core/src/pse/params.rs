use super::grid::SpatialGrid;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// External potential `V(q)`, an energy.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Potential {
    #[default]
    Free,
    /// `½ m ω² (q − center)²`.
    Harmonic { omega: f64, center: f64 },
    /// One value per grid node.
    Sampled { values: Vec<f64> },
}

impl Potential {
    pub fn is_free(&self) -> bool {
        matches!(self, Potential::Free)
    }

    pub fn sample(&self, grid: &SpatialGrid, mass: f64) -> Result<Vec<f64>> {
        match self {
            Potential::Free => Ok(vec![0.0; grid.n_points()]),
            Potential::Harmonic { omega, center } => Ok(grid
                .positions()
                .iter()
                .map(|q| 0.5 * mass * omega * omega * (q - center).powi(2))
                .collect()),
            Potential::Sampled { values } => {
                if values.len() != grid.n_points() {
                    return Err(Error::SizeMismatch {
                        expected: grid.n_points(),
                        found: values.len(),
                    });
                }
                if values.iter().any(|v| !v.is_finite()) {
                    return Err(Error::InvalidParams("potential must be finite".into()));
                }
                Ok(values.clone())
            }
        }
    }
}

/// Mass, the two action constants, the qubit coupling energy and `V(q)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhysicalParams {
    pub m: f64,
    /// Action constant multiplying `∂/∂t`.
    #[serde(default = "unit")]
    pub h0: f64,
    /// Action constant in the Fourier kernel `e^{ipq/h₁}`.
    #[serde(default = "unit")]
    pub h1: f64,
    /// Coupling energy of the `X` term (the product `ε₀ν`).
    pub eps0: f64,
    #[serde(default)]
    pub potential: Potential,
}

fn unit() -> f64 {
    1.0
}

impl Default for PhysicalParams {
    fn default() -> Self {
        Self {
            m: 1.0,
            h0: 1.0,
            h1: 1.0,
            eps0: 0.0,
            potential: Potential::Free,
        }
    }
}

impl PhysicalParams {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("m", self.m), ("h0", self.h0), ("h1", self.h1)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidParams(format!("{name} must be positive, got {v}")));
            }
        }
        if !self.eps0.is_finite() {
            return Err(Error::InvalidParams("eps0 must be finite".into()));
        }
        Ok(())
    }

    /// `T(p) = p²/2m`.
    pub fn kinetic(&self, p: f64) -> f64 {
        p * p / (2.0 * self.m)
    }
}
