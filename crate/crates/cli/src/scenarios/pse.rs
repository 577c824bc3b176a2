use crate::config::{Initial, RunConfig, Scenario, Schedule};
use crate::output::OutputDir;
use crate::report::{Assertion, Comparison, Outcome};
use crate::CliError;
use pauli_pse::pse::{
    evolve_free_exact, observables, propagate_split_step, reduce_nu_zero, step_count,
    PhysicalParams, SpatialGrid, SpinorField, SplitStepPropagator,
};
use pauli_pse::C64;
use pauli_pse_reference as reference;
use serde::Deserialize;
use std::path::Path;

/// Largest grid the dense oracle is built for (a `2n × 2n` eigenproblem).
const DENSE_LIMIT: usize = 512;

#[derive(Deserialize)]
struct TableRow {
    q: f64,
    re_a: f64,
    im_a: f64,
    re_b: f64,
    im_b: f64,
}

/// Reads a `q,re_a,im_a,re_b,im_b` table.
pub fn read_table(path: &Path) -> Result<SpinorField, CliError> {
    let mut reader = csv::Reader::from_path(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let rows = reader
        .deserialize::<TableRow>()
        .map(|r| {
            r.map(|r| (r.q, C64::new(r.re_a, r.im_a), C64::new(r.re_b, r.im_b)))
                .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SpinorField::from_table(&rows)?)
}

struct Setup<'a> {
    params: &'a PhysicalParams,
    schedule: &'a Schedule,
    psi0: SpinorField,
}

fn setup(config: &RunConfig, scenario: Scenario) -> Result<Setup<'_>, CliError> {
    let params = RunConfig::require(&config.physics, "physics", scenario)?;
    let schedule = RunConfig::require(&config.schedule, "schedule", scenario)?;
    let initial = RunConfig::require(&config.initial, "initial", scenario)?;
    params.validate()?;
    let psi0 = match initial {
        Initial::File { path } => {
            let psi = read_table(path)?;
            if let Some(g) = &config.grid {
                if g.build()? != psi.grid {
                    return Err(CliError::Config(format!(
                        "grid section disagrees with the grid of {}",
                        path.display()
                    )));
                }
            }
            psi
        }
        other => {
            let grid = RunConfig::require(&config.grid, "grid", scenario)?.build()?;
            match (other.gaussian_packet(), other.plane_wave()) {
                (Some(p), _) => SpinorField::gaussian(grid, &p, params.h1)?,
                (_, Some(w)) => SpinorField::windowed_plane_wave(grid, &w, params.h1)?,
                _ => unreachable!(),
            }
        }
    };
    if !psi0.is_normalized(1e-10) {
        return Err(CliError::Config(format!(
            "initial state has norm^2 {}, expected 1",
            psi0.norm_sqr()
        )));
    }
    Ok(Setup {
        params,
        schedule,
        psi0,
    })
}

/// What a split-step run recorded.
struct Run {
    final_state: SpinorField,
    norm_drift: f64,
    energy_drift: f64,
    max_b: f64,
    max_a_minus_b: f64,
    /// `(t, p_x0)` at every recorded step.
    p_x0: Vec<(f64, f64)>,
}

/// Steps to `t_final`, writing observables and snapshots at every
/// `snapshot_stride` steps and at both ends.
fn propagate(setup: &Setup, out: &mut OutputDir, dt: f64) -> Result<Run, CliError> {
    let Setup {
        params,
        schedule,
        psi0,
    } = setup;
    let n = step_count(schedule.t_final, dt)?;
    let stride = schedule.snapshot_stride;
    let recorded = |k: usize| k == 0 || k == n || (stride > 0 && k.is_multiple_of(stride));
    let mut prop = SplitStepPropagator::new(psi0.grid, params, dt)?;
    let norm0 = psi0.norm_sqr();
    let e0 = observables(psi0, params)?.mean_energy;
    let mut rows = Vec::new();
    let mut snapshots = Vec::new();
    let mut run = Run {
        final_state: psi0.clone(),
        norm_drift: 0.0,
        energy_drift: 0.0,
        max_b: 0.0,
        max_a_minus_b: 0.0,
        p_x0: Vec::new(),
    };
    let mut failure = None;
    let final_state = prop.run(psi0, n, 1, |k, psi| {
        run.norm_drift = run.norm_drift.max((psi.norm_sqr() - norm0).abs());
        for (a, b) in psi.a.iter().zip(&psi.b) {
            run.max_b = run.max_b.max(b.norm());
            run.max_a_minus_b = run.max_a_minus_b.max((a - b).norm());
        }
        if recorded(k) {
            let t = k as f64 * dt;
            match observables(psi, params) {
                Ok(obs) => {
                    run.energy_drift = run.energy_drift.max((obs.mean_energy - e0).abs());
                    run.p_x0.push((t, obs.p_x0));
                    rows.push(vec![
                        k as f64,
                        t,
                        psi.norm_sqr(),
                        obs.p_x0,
                        obs.p_x0bar,
                        obs.mean_q,
                        obs.kinetic_energy,
                        obs.coupling_energy,
                        obs.potential_energy,
                        obs.mean_energy,
                    ]);
                }
                Err(e) => failure = Some(e),
            }
            snapshots.push((k, psi.clone()));
        }
    })?;
    if let Some(e) = failure {
        return Err(e.into());
    }
    run.final_state = final_state;
    out.write_csv(
        "series_observables.csv",
        &[
            "step",
            "t",
            "norm",
            "p_x0",
            "p_x0bar",
            "mean_q",
            "kinetic_energy",
            "coupling_energy",
            "potential_energy",
            "mean_energy",
        ],
        &rows,
    )?;
    for (k, psi) in &snapshots {
        out.write_snapshot(&format!("series_snapshot_{k:07}.csv"), psi)?;
    }
    Ok(run)
}

fn record_common(outcome: &mut Outcome, run: &Run) {
    outcome.put("norm_drift", run.norm_drift);
    outcome.put("energy_drift", run.energy_drift);
    outcome.put("p_x0", &run.p_x0);
    outcome.check(Assertion::new(
        "norm drift over the run",
        run.norm_drift,
        Comparison::Below,
        1e-10,
    ));
}

pub fn run_free(config: &RunConfig, out: &mut OutputDir) -> Result<Outcome, CliError> {
    let setup = setup(config, Scenario::PseFree)?;
    if !setup.params.potential.is_free() {
        return Err(CliError::Config(
            "pse-free needs physics.potential to be free; use pse-potential".into(),
        ));
    }
    let mut outcome = Outcome::default();
    let dt = setup.schedule.dt;
    let run = propagate(&setup, out, dt)?;
    record_common(&mut outcome, &run);

    let exact = evolve_free_exact(&setup.psi0, setup.params, setup.schedule.t_final)?;
    out.write_snapshot("series_exact_final.csv", &exact)?;
    let err = run.final_state.l2_distance(&exact);
    outcome.put("l2_error", err);
    outcome.check(Assertion::at_most("split-step vs exact spectral pipeline (L2)", err, 1e-8));
    outcome.check(Assertion::at_most("mean energy conserved", run.energy_drift, 1e-9));

    let half = propagate_split_step(&setup.psi0, setup.params, setup.schedule.t_final, 0.5 * dt)?;
    let err_half = half.l2_distance(&exact);
    outcome.put(
        "dt_halving",
        serde_json::json!({
            "dt": dt,
            "error": err,
            "error_half_dt": err_half,
            "ratio": err / err_half,
        }),
    );

    if setup.psi0.b.iter().all(|b| *b == C64::new(0.0, 0.0)) {
        let theta = |t: f64| setup.params.eps0 * t / setup.params.h0;
        let dev = run
            .p_x0
            .iter()
            .map(|&(t, p)| (p - theta(t).cos().powi(2)).abs())
            .fold(0.0, f64::max);
        outcome.check(Assertion::at_most("p_x0(t) = cos^2(eps0 t / h0)", dev, 1e-9));
    }
    Ok(outcome)
}

pub fn run_potential(config: &RunConfig, out: &mut OutputDir) -> Result<Outcome, CliError> {
    let setup = setup(config, Scenario::PsePotential)?;
    let grid: SpatialGrid = setup.psi0.grid;
    let n = grid.n_points();
    if n > DENSE_LIMIT {
        return Err(CliError::Config(format!(
            "pse-potential builds a dense oracle and allows at most {DENSE_LIMIT} points, got {n}"
        )));
    }
    let mut outcome = Outcome::default();
    let run = propagate(&setup, out, setup.schedule.dt)?;
    record_common(&mut outcome, &run);

    let params = setup.params;
    let v = params.potential.sample(&grid, params.m)?;
    let h = reference::dense_spinor_hamiltonian(n, grid.dq(), params.h1, params.m, &v, params.eps0);
    let stacked: Vec<C64> = setup.psi0.a.iter().chain(&setup.psi0.b).copied().collect();
    let dense = reference::propagate_dense(&h, &stacked, setup.schedule.t_final, params.h0);
    let oracle = SpinorField::new(grid, dense[..n].to_vec(), dense[n..].to_vec())?;
    out.write_snapshot("series_dense_final.csv", &oracle)?;
    let err = run.final_state.l2_distance(&oracle);
    outcome.put("l2_error", err);
    outcome.put("max_error", run.final_state.max_deviation(&oracle));
    outcome.check(Assertion::at_most("split-step vs dense matrix exponential (L2)", err, 1e-6));
    Ok(outcome)
}

pub fn run_nu_zero(config: &RunConfig, out: &mut OutputDir) -> Result<Outcome, CliError> {
    let setup = setup(config, Scenario::NuZero)?;
    if setup.params.eps0 != 0.0 {
        return Err(CliError::Config(format!(
            "nu-zero needs physics.eps0 = 0, got {}",
            setup.params.eps0
        )));
    }
    let mut outcome = Outcome::default();
    let run = propagate(&setup, out, setup.schedule.dt)?;
    record_common(&mut outcome, &run);

    let reduced = reduce_nu_zero(&setup.psi0, setup.params, setup.schedule.t_final, setup.schedule.dt)?;
    outcome.check(Assertion::new(
        "decoupled scalar runs equal the spinor run",
        reduced.max_deviation(&run.final_state),
        Comparison::Equal,
        0.0,
    ));
    outcome.put("max_abs_b", run.max_b);
    let zero = C64::new(0.0, 0.0);
    if setup.psi0.b.iter().all(|b| *b == zero) {
        outcome.check(Assertion::new("max |b_t| over the run", run.max_b, Comparison::Equal, 0.0));
    }
    if setup.psi0.a == setup.psi0.b {
        outcome.check(Assertion::new(
            "max |a_t - b_t| over the run",
            run.max_a_minus_b,
            Comparison::Equal,
            0.0,
        ));
    }
    Ok(outcome)
}
