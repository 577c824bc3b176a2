//! Run configuration: one JSON document plus `--set` overrides.

use crate::CliError;
use pauli_pse::dirac::DiracParams;
use pauli_pse::pauli::Qubit;
use pauli_pse::pse::{GaussianPacket, PhysicalParams, SpatialGrid, WindowedPlaneWave};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fmt;
use std::path::PathBuf;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    GroupDemo,
    ContinuumLimit,
    TwoLevel,
    PseFree,
    PsePotential,
    NuZero,
    DiracVerify,
}

impl Scenario {
    pub const ALL: [Scenario; 7] = [
        Scenario::GroupDemo,
        Scenario::ContinuumLimit,
        Scenario::TwoLevel,
        Scenario::PseFree,
        Scenario::PsePotential,
        Scenario::NuZero,
        Scenario::DiracVerify,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Scenario::GroupDemo => "group-demo",
            Scenario::ContinuumLimit => "continuum-limit",
            Scenario::TwoLevel => "two-level",
            Scenario::PseFree => "pse-free",
            Scenario::PsePotential => "pse-potential",
            Scenario::NuZero => "nu-zero",
            Scenario::DiracVerify => "dirac-verify",
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub n_points: usize,
    pub q_min: f64,
    pub q_max: f64,
}

impl GridConfig {
    pub fn build(&self) -> Result<SpatialGrid, CliError> {
        Ok(SpatialGrid::new(self.n_points, self.q_min, self.q_max)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorConfig {
    pub mu: f64,
    pub nu: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Schedule {
    pub t_final: f64,
    pub dt: f64,
    /// Steps between snapshots; `0` writes only the first and last state.
    #[serde(default)]
    pub snapshot_stride: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContinuumConfig {
    pub xi_bar: Vec<f64>,
    pub n_actions: usize,
    pub timeline_xi_bar: f64,
    #[serde(default)]
    pub residual_n: u64,
    #[serde(default = "default_samples")]
    pub samples: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupConfig {
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default = "default_max_len")]
    pub max_len: usize,
    #[serde(default = "default_sweep_points")]
    pub sweep_points: usize,
}

impl Default for GroupConfig {
    fn default() -> Self {
        Self {
            samples: default_samples(),
            max_len: default_max_len(),
            sweep_points: default_sweep_points(),
        }
    }
}

fn default_samples() -> usize {
    1000
}

fn default_max_len() -> usize {
    20
}

fn default_sweep_points() -> usize {
    64
}

/// Initial spinor for the propagation scenarios.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Initial {
    Gaussian {
        center: f64,
        width: f64,
        #[serde(default)]
        momentum: f64,
        weights: [num_complex::Complex64; 2],
    },
    PlaneWave {
        center: f64,
        half_width: f64,
        momentum: f64,
        weights: [num_complex::Complex64; 2],
    },
    /// CSV with header `q,re_a,im_a,re_b,im_b`.
    File { path: PathBuf },
}

impl Initial {
    pub fn gaussian_packet(&self) -> Option<GaussianPacket> {
        match *self {
            Initial::Gaussian {
                center,
                width,
                momentum,
                weights,
            } => Some(GaussianPacket {
                center,
                width,
                momentum,
                weights,
            }),
            _ => None,
        }
    }

    pub fn plane_wave(&self) -> Option<WindowedPlaneWave> {
        match *self {
            Initial::PlaneWave {
                center,
                half_width,
                momentum,
                weights,
            } => Some(WindowedPlaneWave {
                center,
                half_width,
                momentum,
                weights,
            }),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scenario: Option<Scenario>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub physics: Option<PhysicalParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dirac: Option<DiracParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<GeneratorConfig>,
    /// Two-level initial state, and the upper-block spinor for `dirac-verify`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qubit: Option<Qubit>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schedule: Option<Schedule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub continuum: Option<ContinuumConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<Initial>,
    // the report must not depend on where it is written
    #[serde(default, skip_serializing)]
    pub output_dir: Option<PathBuf>,
    #[serde(default)]
    pub seed: u64,
}

impl RunConfig {
    /// Parses a config document after applying `key=value` overrides.
    pub fn parse(text: &str, overrides: &[String]) -> Result<Self, CliError> {
        let mut value: Value = serde_json::from_str(text)
            .map_err(|e| CliError::Config(format!("config is not valid JSON: {e}")))?;
        for o in overrides {
            apply_override(&mut value, o)?;
        }
        serde_json::from_value(value).map_err(|e| CliError::Config(format!("invalid config: {e}")))
    }

    pub fn require<'a, T>(field: &'a Option<T>, name: &str, scenario: Scenario) -> Result<&'a T, CliError> {
        field
            .as_ref()
            .ok_or_else(|| CliError::Config(format!("scenario {scenario} needs the `{name}` section")))
    }
}

/// Sets `path` (dot separated; numeric segments index arrays) to `value`,
/// which is read as JSON when it parses and as a string otherwise.
pub fn apply_override(root: &mut Value, assignment: &str) -> Result<(), CliError> {
    let (path, raw) = assignment
        .split_once('=')
        .ok_or_else(|| CliError::Config(format!("override `{assignment}` is not key=value")))?;
    if path.is_empty() || path.split('.').any(str::is_empty) {
        return Err(CliError::Config(format!("bad override path `{path}`")));
    }
    let new = serde_json::from_str(raw).unwrap_or_else(|_| Value::String(raw.to_string()));
    let mut node = root;
    for seg in path.split('.') {
        if !node.is_object() && !node.is_array() {
            *node = Value::Object(Default::default());
        }
        node = match node {
            Value::Array(items) => {
                let len = items.len();
                let idx: usize = seg
                    .parse()
                    .ok()
                    .filter(|&i| i < len)
                    .ok_or_else(|| CliError::Config(format!("`{seg}` is not an index into an array of {len}")))?;
                &mut items[idx]
            }
            Value::Object(map) => map.entry(seg.to_string()).or_insert(Value::Null),
            _ => unreachable!(),
        };
    }
    *node = new;
    Ok(())
}
