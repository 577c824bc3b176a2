use super::field::SpinorField;
use super::fourier::fourier_analyze;
use super::params::PhysicalParams;
use crate::Result;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Observables {
    /// `|a_j|² + |b_j|²` per node.
    pub density: Vec<f64>,
    /// Probability of the `a` Cbit, `Σ|a_j|² dq`.
    pub p_x0: f64,
    /// Probability of the `b` Cbit, `Σ|b_j|² dq`.
    pub p_x0bar: f64,
    pub mean_q: f64,
    /// `⟨T(p)⟩`, evaluated on the momentum lattice.
    pub kinetic_energy: f64,
    /// `2ε₀ Re Σ ã* b̃` with the momentum measure.
    pub coupling_energy: f64,
    /// `Σ V(q_j) (|a_j|² + |b_j|²) dq`.
    pub potential_energy: f64,
    pub mean_energy: f64,
}

pub fn observables(psi: &SpinorField, params: &PhysicalParams) -> Result<Observables> {
    psi.check()?;
    params.validate()?;
    let grid = psi.grid;
    let dq = grid.dq();
    let density = psi.density();
    let [p_x0, p_x0bar] = psi.channel_weights();
    let mean_q = density
        .iter()
        .zip(grid.positions())
        .map(|(d, q)| d * q)
        .sum::<f64>()
        * dq;

    let tilde = fourier_analyze(psi, params.h1)?;
    let measure = grid.momentum_measure();
    let p = tilde.momenta();
    let kinetic_energy = tilde
        .a
        .iter()
        .zip(&tilde.b)
        .zip(&p)
        .map(|((a, b), &pk)| (a.norm_sqr() + b.norm_sqr()) * params.kinetic(pk))
        .sum::<f64>()
        * measure;
    let cross = tilde
        .a
        .iter()
        .zip(&tilde.b)
        .map(|(a, b)| (a.conj() * b).re)
        .sum::<f64>()
        * measure;
    let coupling_energy = 2.0 * params.eps0 * cross;

    let potential_energy = if params.potential.is_free() {
        0.0
    } else {
        params
            .potential
            .sample(&grid, params.m)?
            .iter()
            .zip(&density)
            .map(|(v, d)| v * d)
            .sum::<f64>()
            * dq
    };

    Ok(Observables {
        density,
        p_x0,
        p_x0bar,
        mean_q,
        kinetic_energy,
        coupling_energy,
        potential_energy,
        mean_energy: kinetic_energy + coupling_energy + potential_energy,
    })
}
