use crate::config::{RunConfig, Scenario};
use crate::output::{fmt_f64, OutputDir};
use crate::report::{Assertion, Outcome};
use crate::CliError;
use pauli_pse::continuum::{exp_form, finite_difference_residual, fit_order, RotationAction};
use pauli_pse::pauli::TwoLevelOperator;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TimelineRow {
    pub index: usize,
    pub random_epoch: f64,
    pub uniform_epoch: f64,
}

/// `n` action epochs two ways: drawn at random on `(0, nξ̄)` and sorted, and
/// equally spaced at `kξ̄`.
pub fn emit_timeline(n: usize, xi_bar: f64, rng: &mut ChaCha8Rng) -> Vec<TimelineRow> {
    let span = n as f64 * xi_bar;
    let mut random: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..span)).collect();
    random.sort_by(f64::total_cmp);
    random
        .into_iter()
        .enumerate()
        .map(|(k, r)| TimelineRow {
            index: k + 1,
            random_epoch: r,
            uniform_epoch: (k + 1) as f64 * xi_bar,
        })
        .collect()
}

pub fn run(config: &RunConfig, out: &mut OutputDir, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let cfg = RunConfig::require(&config.continuum, "continuum", Scenario::ContinuumLimit)?;
    if cfg.xi_bar.is_empty() {
        return Err(CliError::Config("continuum.xi_bar is empty".into()));
    }
    if cfg.n_actions == 0 || !(cfg.timeline_xi_bar > 0.0) {
        return Err(CliError::Config(
            "continuum.n_actions must be >= 1 and timeline_xi_bar > 0".into(),
        ));
    }
    let mut outcome = Outcome::default();

    let residuals = cfg
        .xi_bar
        .iter()
        .map(|&x| finite_difference_residual(cfg.residual_n, x))
        .collect::<Result<Vec<f64>, _>>()?;
    let rows: Vec<Vec<f64>> = cfg.xi_bar.iter().zip(&residuals).map(|(x, r)| vec![*x, *r]).collect();
    out.write_csv("series_residual.csv", &["xi_bar", "residual"], &rows)?;
    outcome.put("residuals", &rows);
    if cfg.xi_bar.len() >= 2 {
        let order = fit_order(&cfg.xi_bar, &residuals);
        outcome.put("fitted_order", order);
        outcome.check(Assertion::near("residual is first order in xi_bar", order, 1.0, 0.1));
    }

    let mut law: f64 = 0.0;
    let mut unitarity: f64 = 0.0;
    let mut constraint: f64 = 0.0;
    for _ in 0..cfg.samples {
        let (p1, p2) = (rng.random_range(-10.0..10.0), rng.random_range(-10.0..10.0));
        law = law.max((exp_form(p1) * exp_form(p2)).max_deviation(&exp_form(p1 + p2)));
        let u = RotationAction::new(p1);
        unitarity = unitarity.max(u.operator().unitarity_defect());
        let (a, b) = u.coefficients();
        constraint = constraint
            .max((a.norm_sqr() + b.norm_sqr() - 1.0).abs())
            .max((a * a - b * b - 1.0).norm());
    }
    outcome.check(Assertion::at_most("exp(-i p1 X) exp(-i p2 X) = exp(-i (p1 + p2) X)", law, 1e-12));
    outcome.check(Assertion::at_most("rotation actions are unitary", unitarity, 1e-12));
    outcome.check(Assertion::at_most(
        "|alpha|^2 + |beta|^2 = 1 and alpha^2 - beta^2 = 1",
        constraint,
        1e-12,
    ));
    let id_dev = exp_form(0.0).max_deviation(&TwoLevelOperator::identity());
    outcome.check(Assertion::at_most("exp form at zero is the identity", id_dev, 0.0));

    let timeline = emit_timeline(cfg.n_actions, cfg.timeline_xi_bar, rng);
    let sorted = timeline.windows(2).all(|w| w[0].random_epoch <= w[1].random_epoch);
    outcome.check(Assertion::holds("random epochs are ascending", sorted));
    let rows: Vec<Vec<String>> = timeline
        .iter()
        .map(|r| vec![r.index.to_string(), fmt_f64(r.random_epoch), fmt_f64(r.uniform_epoch)])
        .collect();
    out.write_table("series_timeline.csv", &["index", "random_epoch", "uniform_epoch"], &rows)?;
    Ok(outcome)
}
