mod continuum;
mod dirac;
mod group;
mod pse;
mod two_level;

pub use continuum::{emit_timeline, TimelineRow};

use crate::config::{RunConfig, Scenario};
use crate::output::OutputDir;
use crate::report::Outcome;
use crate::CliError;
use rand_chacha::ChaCha8Rng;

pub fn dispatch(
    scenario: Scenario,
    config: &RunConfig,
    out: &mut OutputDir,
    rng: &mut ChaCha8Rng,
) -> Result<Outcome, CliError> {
    match scenario {
        Scenario::GroupDemo => group::run(config, out, rng),
        Scenario::ContinuumLimit => continuum::run(config, out, rng),
        Scenario::TwoLevel => two_level::run(config, out),
        Scenario::PseFree => pse::run_free(config, out),
        Scenario::PsePotential => pse::run_potential(config, out),
        Scenario::NuZero => pse::run_nu_zero(config, out),
        Scenario::DiracVerify => dirac::run(config, rng),
    }
}
