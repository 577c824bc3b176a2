use nalgebra::DMatrix;
use pauli_pse::action::{
    circle_compose_defect, circle_inverse, circle_inverse_norm, measured_inverse_norm,
    predicted_defect, run_history, CbitAction, CircleAction, History,
};
use pauli_pse::continuum::{
    evolve_two_level, exp_form, finite_difference_residual, fit_order, mean_generator, Generator,
};
use pauli_pse::pauli::{Qubit, TwoLevelOperator};
use pauli_pse::C64;
use pauli_pse_reference as reference;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn dense(op: &TwoLevelOperator) -> DMatrix<C64> {
    DMatrix::from_fn(2, 2, |i, j| op.get(i, j))
}

fn random_qubit(rng: &mut ChaCha8Rng) -> Qubit {
    let mut z = || C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    Qubit::new(z(), z()).normalized()
}

#[test]
fn exp_form_matches_taylor_exponential() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let phi = rng.random_range(-20.0..20.0);
        let m = dense(&TwoLevelOperator::x()) * C64::new(0.0, -phi);
        let oracle = reference::expm_taylor(&m);
        let ours = exp_form(phi);
        for i in 0..2 {
            for j in 0..2 {
                assert!((ours.get(i, j) - oracle[(i, j)]).norm() < 1e-12, "phi = {phi}");
            }
        }
    }
}

#[test]
fn two_level_evolution_matches_taylor_exponential() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let g = Generator::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
        let tau = rng.random_range(0.0..10.0);
        let psi = random_qubit(&mut rng);
        let u = reference::expm_taylor(&(dense(&g.operator()) * C64::new(0.0, -tau)));
        let oracle = Qubit::new(
            u[(0, 0)] * psi.a + u[(0, 1)] * psi.b,
            u[(1, 0)] * psi.a + u[(1, 1)] * psi.b,
        );
        let ours = evolve_two_level(&psi, &g, tau);
        assert!(ours.max_deviation(&oracle) < 1e-11, "{g:?} tau = {tau}");
        assert!((ours.norm() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn mean_generator_matches_quadratic_form_and_is_conserved() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let g = Generator::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
        let psi = random_qubit(&mut rng);
        let direct = psi.inner(&g.operator().apply(&psi)).re;
        let e0 = mean_generator(&psi, &g);
        assert!((e0 - direct).abs() < 1e-12);
        for k in 1..=100 {
            let e = mean_generator(&evolve_two_level(&psi, &g, k as f64), &g);
            assert!((e - e0).abs() < 1e-11);
        }
    }
}

#[test]
fn residual_is_first_order() {
    let xs = [1e-1, 1e-2, 1e-3, 1e-4, 1e-5];
    let ys: Vec<f64> = xs
        .iter()
        .map(|&x| finite_difference_residual(7, x).unwrap())
        .collect();
    let order = fit_order(&xs, &ys);
    assert!((order - 1.0).abs() < 0.1, "order {order}");
    let ratio = ys[1] / ys[2];
    assert!((ratio - 10.0).abs() < 0.5, "ratio {ratio}");
    assert!(finite_difference_residual(3, 1e-8).unwrap() < 1e-8);
}

#[test]
fn cbit_histories_compose_like_their_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..1000 {
        let len1 = rng.random_range(0..=20);
        let len2 = rng.random_range(0..=20);
        let h1: Vec<u8> = (0..len1).map(|_| rng.random_range(0..2)).collect();
        let h2: Vec<u8> = (0..len2).map(|_| rng.random_range(0..2)).collect();
        let (h1, h2) = (
            History::from_labels(&h1).unwrap(),
            History::from_labels(&h2).unwrap(),
        );
        let joined = h1.then(&h2);
        assert_eq!(joined.product(), h2.product().compose(&h1.product()));
        assert_eq!(joined.operator(), joined.product().operator());
        for x0 in 0..2 {
            let direct = run_history(&joined, x0).unwrap().final_state;
            assert_eq!(direct, joined.product().apply(x0).unwrap());
            let state = joined.operator().apply(&Qubit::cbit(x0).unwrap());
            assert_eq!(state.as_cbit(), Some(direct));
        }
    }
    assert_eq!(CbitAction::NOT.compose(&CbitAction::NOT), CbitAction::IDENTITY);
}

#[test]
fn circle_products_and_inverses() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..1000 {
        let u1 = CircleAction::from_angle(rng.random_range(0.0..std::f64::consts::TAU));
        let u2 = CircleAction::from_angle(rng.random_range(0.0..std::f64::consts::TAU));
        let prod = circle_compose_defect(&u2, &u1);
        assert!((prod.defect - predicted_defect(&u2, &u1)).abs() < 1e-12);
        if (u1.alpha * u1.beta).abs() > 1e-3 {
            assert!(u1.unitarity_defect() > 1e-6);
        }
        if let Ok((a, b)) = circle_inverse(&u1) {
            let inv = TwoLevelOperator::action(C64::new(a, 0.0), C64::new(b, 0.0));
            let gap = (u1.alpha * u1.alpha - u1.beta * u1.beta).abs();
            let defect = inv.compose(&u1.operator()).max_deviation(&TwoLevelOperator::identity());
            assert!(defect < 1e-13 / gap);
            let predicted = circle_inverse_norm(&u1).unwrap();
            let measured = measured_inverse_norm(&u1, 1).unwrap();
            assert!((predicted - measured).abs() <= 1e-10 * predicted.max(1.0));
        }
    }
}
