use pauli_pse::dirac::{
    alpha, beta, build_hamiltonian, gamma_matrices, metric, plane_wave_solution, square_check,
    verify_alpha_beta_algebra, verify_clifford, DiracOperator, DiracParams,
};
use pauli_pse::pauli::Qubit;
use pauli_pse::{Error, C64};
use pauli_pse_reference as reference;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_params(rng: &mut ChaCha8Rng) -> DiracParams {
    DiracParams::new(
        rng.random_range(0.1..3.0),
        rng.random_range(0.5..3.0),
        [
            rng.random_range(-5.0..5.0),
            rng.random_range(-5.0..5.0),
            rng.random_range(-5.0..5.0),
        ],
    )
}

fn random_qubit(rng: &mut ChaCha8Rng) -> Qubit {
    let mut z = || C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    Qubit::new(z(), z()).normalized()
}

fn rows(op: &DiracOperator) -> Vec<Vec<C64>> {
    op.entries.iter().map(|r| r.to_vec()).collect()
}

#[test]
fn square_is_energy_squared_by_direct_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..100 {
        let p = random_params(&mut rng);
        let h = rows(&build_hamiltonian(&p));
        let h2 = reference::matmul(&h, &h);
        let e2 = p.energy_sqr();
        for (i, row) in h2.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let expected = if i == j { e2 } else { 0.0 };
                assert!((v - expected).norm() <= 1e-12 * e2);
            }
        }
        assert!(square_check(&p) <= 1e-12 * e2);
    }
    let p = DiracParams::new(1.0, 1.0, [1.0, 2.0, 3.0]);
    assert!(square_check(&p) <= 1e-12 * 15.0);
    let p = DiracParams::new(1.0, 1.0, [3.0, 0.0, 4.0]);
    assert_eq!(p.energy_sqr(), 26.0);
    assert!(square_check(&p) <= 1e-12 * 26.0);
}

#[test]
fn spectrum_is_plus_minus_energy_doubly_degenerate() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..100 {
        let p = random_params(&mut rng);
        let h = build_hamiltonian(&p);
        let e = p.energy();
        let oracle = reference::hermitian_eigenvalues(&rows(&h));
        let ours = h.hermitian_eigenvalues();
        for (k, expected) in [-e, -e, e, e].iter().enumerate() {
            assert!((oracle[k] - expected).abs() <= 1e-10 * e);
            assert!((ours[k] - expected).abs() <= 1e-10 * e);
        }
        assert!(h.trace().norm() < 1e-12 * e);
        assert!(h.hermiticity_defect() <= 1e-13 * e);
    }
}

#[test]
fn algebra_reports_pass_exactly() {
    let ab = verify_alpha_beta_algebra();
    assert!(ab.all_passed);
    assert_eq!(ab.max_deviation, 0.0);
    assert_eq!(ab.errata[0].deviation_from_printed, 1.0);

    let cl = verify_clifford();
    assert_eq!(cl.checks.len(), 13);
    assert!(cl.all_passed);
    assert_eq!(cl.max_deviation, 0.0);
    assert_eq!(cl.errata[0].deviation_from_printed, 4.0);
    assert_eq!(cl.errata[0].deviation_from_used, 0.0);

    let g = gamma_matrices();
    let id = DiracOperator::identity();
    for mu in 0..4 {
        for nu in 0..4 {
            let a = reference::matmul(&rows(&g[mu]), &rows(&g[nu]));
            let b = reference::matmul(&rows(&g[nu]), &rows(&g[mu]));
            for i in 0..4 {
                for j in 0..4 {
                    let expected = 2.0 * metric(mu, nu) * id.entries[i][j].re;
                    assert_eq!(a[i][j] + b[i][j], C64::new(expected, 0.0));
                }
            }
        }
    }
    for k in 0..3 {
        assert_eq!(alpha(k).hermiticity_defect(), 0.0);
    }
    assert_eq!(beta().hermiticity_defect(), 0.0);
}

#[test]
fn plane_waves_are_eigenstates_on_both_branches() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..20 {
        let p = random_params(&mut rng);
        let phi = random_qubit(&mut rng);
        let t = rng.random_range(-5.0..5.0);
        for lambda in [1, -1] {
            let psi = plane_wave_solution(lambda, &p, &phi, t).unwrap();
            assert!((psi.norm_sqr() - 1.0).abs() < 1e-12);
            assert!(psi.eigen_residual(&p) <= 1e-10 * p.energy().max(1.0));
        }
    }
    let p = DiracParams::new(1.0, 1.0, [0.0, 0.0, 3.0]);
    let up = Qubit::cbit(1).unwrap();
    let psi = plane_wave_solution(1, &p, &up, 0.0).unwrap();
    assert!(psi.eigen_residual(&p) <= 1e-10);
}

#[test]
fn rest_frame_branches() {
    let p = DiracParams::new(1.5, 2.0, [0.0; 3]);
    let phi = Qubit::new(C64::new(0.6, 0.0), C64::new(0.0, 0.8));
    let psi = plane_wave_solution(1, &p, &phi, 0.0).unwrap();
    assert_eq!(psi.upper(), phi);
    assert_eq!(psi.lower().norm_sqr(), 0.0);
    assert!(matches!(
        plane_wave_solution(-1, &p, &phi, 0.0),
        Err(Error::SingularBranch { .. })
    ));
    assert!(matches!(
        plane_wave_solution(0, &p, &phi, 0.0),
        Err(Error::InvalidBranch(0))
    ));
}

#[test]
fn nonrelativistic_block_dominates_at_small_momentum() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..50 {
        let m = rng.random_range(0.5..2.0);
        let c = rng.random_range(0.5..2.0);
        let dir: [f64; 3] = std::array::from_fn(|_| rng.random_range(-1.0..1.0));
        let len = dir.iter().map(|x| x * x).sum::<f64>().sqrt();
        let p = DiracParams::new(m, c, dir.map(|x| 0.01 * m * c * x / len));
        let psi = plane_wave_solution(1, &p, &random_qubit(&mut rng), 0.0).unwrap();
        let lower = psi.lower().norm();
        assert!(lower <= 0.005 + 1e-6, "{lower}");
        let selected = psi.project_qubit1(1).unwrap();
        assert_eq!(selected.upper(), psi.upper());
        assert_eq!(selected.lower().norm_sqr(), 0.0);
    }
}
