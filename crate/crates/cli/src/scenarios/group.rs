use crate::config::RunConfig;
use crate::output::OutputDir;
use crate::report::{Assertion, Comparison, Outcome};
use crate::CliError;
use pauli_pse::action::{
    cayley_table, circle_compose_defect, circle_inverse_norm, measured_inverse_norm,
    predicted_defect, run_history, CbitAction, CircleAction, History,
};
use pauli_pse::pauli::TwoLevelOperator;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

pub fn run(config: &RunConfig, out: &mut OutputDir, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let cfg = config.group.unwrap_or_default();
    let mut outcome = Outcome::default();

    let table = cayley_table();
    let elems = [CbitAction::NOT, CbitAction::IDENTITY];
    let mut table_ok = true;
    for (i, row) in table.iter().enumerate() {
        for (j, prod) in row.iter().enumerate() {
            table_ok &= prod.operator() == elems[i].operator() * elems[j].operator();
        }
    }
    let identity_ok = elems
        .iter()
        .all(|e| e.compose(&CbitAction::IDENTITY) == *e && CbitAction::IDENTITY.compose(e) == *e)
        && CbitAction::IDENTITY.operator() == TwoLevelOperator::identity();
    let inverse_ok = elems
        .iter()
        .all(|e| e.compose(&e.inverse()) == CbitAction::IDENTITY);
    let mut assoc_ok = true;
    for a in elems {
        for b in elems {
            for c in elems {
                assoc_ok &= a.compose(&b.compose(&c)) == a.compose(&b).compose(&c);
            }
        }
    }
    let labels: Vec<Vec<u8>> = table.iter().map(|r| r.iter().map(CbitAction::alpha).collect()).collect();
    outcome.put("cayley_table", &labels);
    outcome.check(Assertion::holds("cayley table equals matrix products", table_ok));
    outcome.check(Assertion::holds("U_1 is the identity", identity_ok));
    outcome.check(Assertion::holds("every U_alpha is its own inverse", inverse_ok));
    outcome.check(Assertion::holds("composition is associative", assoc_ok));

    let mut failures = 0usize;
    for _ in 0..cfg.samples {
        let h1 = random_history(rng, cfg.max_len);
        let h2 = random_history(rng, cfg.max_len);
        let joined = h1.then(&h2);
        let expected = h2.product().compose(&h1.product());
        let mut ok = joined.product() == expected && joined.operator() == expected.operator();
        for x in 0..2 {
            let direct = run_history(&joined, x)?.final_state;
            ok &= direct == expected.apply(x)?;
            let back = run_history(&joined.reversed(), direct)?.final_state;
            ok &= back == x;
        }
        failures += usize::from(!ok);
    }
    outcome.put("history_pairs", cfg.samples);
    outcome.check(Assertion::new(
        "composition law on random history pairs (failures)",
        failures as f64,
        Comparison::Equal,
        0.0,
    ));

    let mut defect_err: f64 = 0.0;
    let mut min_nonunitarity = f64::INFINITY;
    let mut inverse_err: f64 = 0.0;
    for _ in 0..cfg.samples {
        let u1 = CircleAction::from_angle(rng.random_range(0.0..TAU));
        let u2 = CircleAction::from_angle(rng.random_range(0.0..TAU));
        let prod = circle_compose_defect(&u2, &u1);
        defect_err = defect_err.max((prod.defect - predicted_defect(&u2, &u1)).abs());
        if (u1.alpha * u1.beta).abs() > 1e-3 {
            min_nonunitarity = min_nonunitarity.min(u1.unitarity_defect());
        }
        if let Ok(predicted) = circle_inverse_norm(&u1) {
            let measured = measured_inverse_norm(&u1, 1)?;
            inverse_err = inverse_err.max((predicted - measured).abs());
        }
    }
    outcome.check(Assertion::at_most("circle product defect matches 1 + 4 a2 a1 b2 b1", defect_err, 1e-12));
    if min_nonunitarity.is_finite() {
        outcome.check(Assertion::new(
            "circle actions with |alpha beta| > 1e-3 are not unitary",
            min_nonunitarity,
            Comparison::Above,
            1e-6,
        ));
    }
    outcome.check(Assertion::at_most(
        "inverse norm equals 1/|alpha^2 - beta^2|",
        inverse_err,
        1e-10,
    ));

    let n = cfg.sweep_points.max(1);
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|k| {
            let theta = TAU * k as f64 / n as f64;
            let u = CircleAction::from_angle(theta);
            let squared = circle_compose_defect(&u, &u).defect;
            let inv = circle_inverse_norm(&u).unwrap_or(f64::NAN);
            vec![theta, u.alpha, u.beta, u.unitarity_defect(), squared, inv]
        })
        .collect();
    out.write_csv(
        "series_circle.csv",
        &["theta", "alpha", "beta", "unitarity_defect", "square_radius_sq", "inverse_norm"],
        &rows,
    )?;
    Ok(outcome)
}

fn random_history(rng: &mut ChaCha8Rng, max_len: usize) -> History<CbitAction> {
    let len = rng.random_range(0..=max_len);
    History::new(
        (0..len)
            .map(|_| if rng.random_bool(0.5) { CbitAction::IDENTITY } else { CbitAction::NOT })
            .collect(),
    )
}
