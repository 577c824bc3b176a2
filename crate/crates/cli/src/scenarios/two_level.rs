use crate::config::{RunConfig, Scenario};
use crate::output::OutputDir;
use crate::report::{Assertion, Outcome};
use crate::CliError;
use pauli_pse::continuum::{evolve_two_level, exp_form, mean_generator, Generator};
use pauli_pse::pse::step_count;
use pauli_pse::C64;

pub fn run(config: &RunConfig, out: &mut OutputDir) -> Result<Outcome, CliError> {
    let scenario = Scenario::TwoLevel;
    let gen = RunConfig::require(&config.generator, "generator", scenario)?;
    let psi0 = *RunConfig::require(&config.qubit, "qubit", scenario)?;
    let schedule = RunConfig::require(&config.schedule, "schedule", scenario)?;
    if !psi0.is_normalized() {
        return Err(CliError::Config(format!(
            "qubit must be normalized, has norm {}",
            psi0.norm()
        )));
    }
    let g = Generator::new(gen.mu, gen.nu);
    let n = step_count(schedule.t_final, schedule.dt)?;
    let mut outcome = Outcome::default();

    let spectrum = g.spectrum();
    let op = g.operator();
    let eig_residual = spectrum
        .iter()
        .map(|pair| (op.apply(&pair.state) - pair.state.scale(C64::new(pair.value, 0.0))).norm())
        .fold(0.0, f64::max);
    outcome.put("spectrum", spectrum);
    outcome.check(Assertion::at_most("generator eigen-residual", eig_residual, 1e-12));

    let e0 = mean_generator(&psi0, &g);
    let direct = psi0.inner(&op.apply(&psi0)).re;
    outcome.check(Assertion::near("mean generator equals <psi|G|psi>", e0, direct, 1e-12));

    let mut rows = Vec::with_capacity(n + 1);
    let (mut norm_drift, mut energy_drift, mut oracle_dev) = (0.0f64, 0.0f64, 0.0f64);
    for k in 0..=n {
        let tau = k as f64 * schedule.dt;
        let psi = evolve_two_level(&psi0, &g, tau);
        let oracle = exp_form(g.nu * tau)
            .apply(&psi0)
            .scale(C64::from_polar(1.0, -g.mu * tau));
        let e = mean_generator(&psi, &g);
        norm_drift = norm_drift.max((psi.norm() - 1.0).abs());
        energy_drift = energy_drift.max((e - e0).abs());
        oracle_dev = oracle_dev.max(psi.max_deviation(&oracle));
        rows.push(vec![tau, psi.a.re, psi.a.im, psi.b.re, psi.b.im, psi.a.norm_sqr(), e]);
    }
    out.write_csv(
        "series_two_level.csv",
        &["tau", "re_a", "im_a", "re_b", "im_b", "p_a", "mean_generator"],
        &rows,
    )?;
    outcome.put("mean_generator", e0);
    outcome.put("norm_drift", norm_drift);
    outcome.put("energy_drift", energy_drift);
    outcome.check(Assertion::at_most("norm preserved", norm_drift, 1e-12));
    outcome.check(Assertion::at_most("mean generator conserved", energy_drift, 1e-11));
    outcome.check(Assertion::at_most(
        "matches e^{-i mu tau} exp(-i nu tau X)",
        oracle_dev,
        1e-12,
    ));
    Ok(outcome)
}
