use crate::config::{RunConfig, Scenario};
use crate::report::{Assertion, Outcome};
use crate::CliError;
use pauli_pse::dirac::{
    build_hamiltonian, plane_wave_solution, square_check, verify_alpha_beta_algebra,
    verify_clifford, DiracParams,
};
use pauli_pse::pauli::Qubit;
use pauli_pse::{Error, C64};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

const SQUARE_DRAWS: usize = 100;
const PLANE_WAVE_DRAWS: usize = 20;

#[derive(Serialize)]
struct BranchResult {
    lambda: i8,
    eigen_residual: Option<f64>,
    normalization: Option<f64>,
    lower_block_norm: Option<f64>,
    singular: bool,
}

fn random_params(rng: &mut ChaCha8Rng) -> DiracParams {
    DiracParams::new(
        rng.random_range(0.1..3.0),
        rng.random_range(0.5..3.0),
        std::array::from_fn(|_| rng.random_range(-5.0..5.0)),
    )
}

fn random_qubit(rng: &mut ChaCha8Rng) -> Qubit {
    let mut z = || C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    Qubit::new(z(), z()).normalized()
}

pub fn run(config: &RunConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let params = *RunConfig::require(&config.dirac, "dirac", Scenario::DiracVerify)?;
    if !(params.m > 0.0 && params.c > 0.0 && params.hbar > 0.0) {
        return Err(CliError::Config("dirac.m, dirac.c and dirac.hbar must be positive".into()));
    }
    let phi = config.qubit.unwrap_or(Qubit::cbit(1)?);
    let mut outcome = Outcome::default();
    let e = params.energy();
    let e2 = params.energy_sqr();
    let scale = e.max(1.0);

    let h = build_hamiltonian(&params);
    outcome.put("energy", e);
    outcome.put("hamiltonian", h.entries);
    let sq = square_check(&params);
    outcome.put("square_check", sq);
    outcome.check(Assertion::at_most("H_D^2 = E_p^2 I", sq, 1e-12 * e2));
    outcome.check(Assertion::at_most("H_D is Hermitian", h.hermiticity_defect(), 1e-13 * scale));
    outcome.check(Assertion::at_most("trace H_D = 0", h.trace().norm(), 1e-12 * scale));

    let spectrum = h.hermitian_eigenvalues();
    let spec_dev = spectrum
        .iter()
        .zip([-e, -e, e, e])
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    outcome.put("spectrum", spectrum);
    outcome.check(Assertion::at_most(
        "spectrum is +-E_p, each twice (relative)",
        spec_dev / e,
        1e-10,
    ));

    let ab = verify_alpha_beta_algebra();
    outcome.check(Assertion::holds("alpha/beta anticommutators", ab.all_passed));
    outcome.put("alpha_beta_algebra", &ab);
    let cl = verify_clifford();
    outcome.check(Assertion::holds("Clifford relations for gamma^mu", cl.all_passed));
    outcome.put("clifford", &cl);

    let mut branches = Vec::new();
    for lambda in [1i8, -1] {
        match plane_wave_solution(lambda, &params, &phi, 0.0) {
            Ok(psi) => {
                let res = psi.eigen_residual(&params);
                outcome.check(Assertion::at_most(
                    format!("plane wave lambda = {lambda:+} eigen-residual"),
                    res,
                    1e-10 * scale,
                ));
                let selected = psi.project_qubit1(1)?;
                outcome.check(Assertion::at_most(
                    format!("plane wave lambda = {lambda:+} selector keeps the upper block"),
                    selected.upper().max_deviation(&psi.upper()) + selected.lower().norm(),
                    0.0,
                ));
                branches.push(BranchResult {
                    lambda,
                    eigen_residual: Some(res),
                    normalization: Some(psi.upper().norm()),
                    lower_block_norm: Some(psi.lower().norm()),
                    singular: false,
                });
            }
            Err(Error::SingularBranch { .. }) => branches.push(BranchResult {
                lambda,
                eigen_residual: None,
                normalization: None,
                lower_block_norm: None,
                singular: true,
            }),
            Err(other) => return Err(other.into()),
        }
    }
    outcome.put("plane_waves", &branches);

    let pn: f64 = params.p.iter().map(|x| x * x).sum::<f64>().sqrt();
    let dir = if pn > 0.0 { params.p.map(|x| x / pn) } else { [0.0, 0.0, 1.0] };
    let slow = DiracParams {
        p: dir.map(|x| 0.01 * params.m * params.c * x),
        ..params
    };
    let lower = plane_wave_solution(1, &slow, &phi, 0.0)?.lower().norm();
    outcome.put("nonrelativistic_lower_block_norm", lower);
    outcome.check(Assertion::at_most(
        "lower block at |p| = 0.01 mc",
        lower,
        0.005 + 1e-6,
    ));

    let mut worst_square: f64 = 0.0;
    for _ in 0..SQUARE_DRAWS {
        let p = random_params(rng);
        worst_square = worst_square.max(square_check(&p) / p.energy_sqr());
    }
    outcome.check(Assertion::at_most(
        "H_D^2 = E_p^2 I on random draws (relative)",
        worst_square,
        1e-12,
    ));
    let mut worst_residual: f64 = 0.0;
    for _ in 0..PLANE_WAVE_DRAWS {
        let p = random_params(rng);
        let phi = random_qubit(rng);
        for lambda in [1, -1] {
            let psi = plane_wave_solution(lambda, &p, &phi, 0.0)?;
            worst_residual = worst_residual.max(psi.eigen_residual(&p) / p.energy().max(1.0));
        }
    }
    outcome.check(Assertion::at_most(
        "plane-wave eigen-residual on random draws (relative)",
        worst_residual,
        1e-10,
    ));
    Ok(outcome)
}
