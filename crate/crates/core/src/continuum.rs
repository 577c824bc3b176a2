//! Unitary rotation actions and the continuum limit.
//!
//! Invertible, normalized actions `αI + βX` force `α = cos ξ`, `β = −i sin ξ`.
//! A sequence of them collapses to `exp(−iφX)` with `φ = Σξ`, and the
//! composition law pins `φ_n = nξ̄`. Letting `ξ̄ → 0` at fixed `τ = nξ̄` gives
//! `i dU/dτ = XU`, generalized to `i dψ/dτ = Gψ` with `G = μI + νX`.

use crate::pauli::{Qubit, TwoLevelOperator};
use crate::{Error, Result, C64};
use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_1_SQRT_2;

/// `U(ξ) = cos ξ I − i sin ξ X`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RotationAction {
    pub xi: f64,
}

impl RotationAction {
    pub fn new(xi: f64) -> Self {
        Self { xi }
    }

    pub fn operator(&self) -> TwoLevelOperator {
        exp_form(self.xi)
    }

    /// The coefficient pair `(α, β) = (cos ξ, −i sin ξ)`.
    pub fn coefficients(&self) -> (C64, C64) {
        (C64::new(self.xi.cos(), 0.0), C64::new(0.0, -self.xi.sin()))
    }
}

/// Applies `Π_j U(ξ_j)` (first entry acts first) to a Cbit and returns the
/// amplitudes `(A, B)` of `|x₀⟩` and `|x̄₀⟩`.
///
/// The product is formed factor by factor; [`sequence_closed_form`] gives the
/// summed-angle form it must agree with.
pub fn compose_sequence(xis: &[f64]) -> (C64, C64) {
    let product = xis.iter().fold(TwoLevelOperator::identity(), |acc, &xi| {
        RotationAction::new(xi).operator().compose(&acc)
    });
    // U = A I + B X, so the first column is (A, B)
    (product.get(0, 0), product.get(1, 0))
}

/// `A = cos(Σξ)`, `B = −i sin(Σξ)`.
pub fn sequence_closed_form(xis: &[f64]) -> (C64, C64) {
    let phi: f64 = xis.iter().sum();
    (C64::new(phi.cos(), 0.0), C64::new(0.0, -phi.sin()))
}

/// `exp(−iφX) = cos φ I − i sin φ X`.
pub fn exp_form(phi: f64) -> TwoLevelOperator {
    TwoLevelOperator::action(C64::new(phi.cos(), 0.0), C64::new(0.0, -phi.sin()))
}

/// Max-entry norm of `[U((n+1)ξ̄) − U(nξ̄)]/ξ̄ + iX U(nξ̄)`.
///
/// The difference is formed as `(e^{−iξ̄X} − I) U(nξ̄)` with
/// `cos ξ̄ − 1 = −2 sin²(ξ̄/2)`, which avoids cancellation for tiny `ξ̄`.
pub fn finite_difference_residual(n: u64, xi_bar: f64) -> Result<f64> {
    if !(xi_bar > 0.0 && xi_bar.is_finite()) {
        return Err(Error::InvalidStep(format!("xi_bar must be positive, got {xi_bar}")));
    }
    let half = (0.5 * xi_bar).sin();
    let step_minus_identity = TwoLevelOperator::action(
        C64::new(-2.0 * half * half, 0.0),
        C64::new(0.0, -xi_bar.sin()),
    );
    let u_n = exp_form(n as f64 * xi_bar);
    let quotient = step_minus_identity.compose(&u_n) * (1.0 / xi_bar);
    let generator_term = (TwoLevelOperator::x() * C64::new(0.0, 1.0)).compose(&u_n);
    Ok((quotient + generator_term).max_deviation(&TwoLevelOperator::zero()))
}

/// Least-squares slope of `log y` against `log x`.
pub fn fit_order(xs: &[f64], ys: &[f64]) -> f64 {
    let pts: Vec<(f64, f64)> = xs.iter().zip(ys).map(|(x, y)| (x.ln(), y.ln())).collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// `G = μI + νX`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Generator {
    pub mu: f64,
    pub nu: f64,
}

/// One eigenpair of a [`Generator`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Eigenpair {
    pub sigma: i8,
    pub value: f64,
    pub state: Qubit,
}

impl Generator {
    pub fn new(mu: f64, nu: f64) -> Self {
        Self { mu, nu }
    }

    pub fn operator(&self) -> TwoLevelOperator {
        TwoLevelOperator::action(C64::new(self.mu, 0.0), C64::new(self.nu, 0.0))
    }

    /// `G_σ = μ + σν` with `|x_σ⟩ = (|0⟩ + σ|1⟩)/√2`, ordered `σ = +1, −1`.
    /// For `ν = 0` the pair is `|0⟩, |1⟩`.
    pub fn spectrum(&self) -> [Eigenpair; 2] {
        let zero = C64::new(0.0, 0.0);
        let r = C64::new(FRAC_1_SQRT_2, 0.0);
        let (plus, minus) = if self.nu == 0.0 {
            (Qubit::new(zero, C64::new(1.0, 0.0)), Qubit::new(C64::new(1.0, 0.0), zero))
        } else {
            // |1⟩ is the first column, |0⟩ the second
            (Qubit::new(r, r), Qubit::new(-r, r))
        };
        [
            Eigenpair {
                sigma: 1,
                value: self.mu + self.nu,
                state: plus,
            },
            Eigenpair {
                sigma: -1,
                value: self.mu - self.nu,
                state: minus,
            },
        ]
    }

    /// `c_σ = ⟨x_σ|ψ⟩` in the order of [`Generator::spectrum`].
    pub fn eigen_components(&self, psi: &Qubit) -> [C64; 2] {
        let [p, m] = self.spectrum();
        [p.state.inner(psi), m.state.inner(psi)]
    }
}

pub fn generator_spectrum(g: &Generator) -> [Eigenpair; 2] {
    g.spectrum()
}

/// `|ψ_τ⟩ = Σ_σ e^{−iG_σ τ} c_σ |x_σ⟩`. The global phase `e^{−iμτ}` is kept.
pub fn evolve_two_level(psi0: &Qubit, g: &Generator, tau: f64) -> Qubit {
    let comps = g.eigen_components(psi0);
    g.spectrum()
        .iter()
        .zip(comps)
        .map(|(pair, c)| pair.state.scale(c * C64::from_polar(1.0, -pair.value * tau)))
        .fold(Qubit::new(C64::new(0.0, 0.0), C64::new(0.0, 0.0)), |acc, q| acc + q)
}

/// `⟨ψ|G|ψ⟩ = μ + ν(|c₊|² − |c₋|²)`.
pub fn mean_generator(psi: &Qubit, g: &Generator) -> f64 {
    let [cp, cm] = g.eigen_components(psi);
    g.mu + g.nu * (cp.norm_sqr() - cm.norm_sqr())
}
