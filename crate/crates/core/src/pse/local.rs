use super::field::{MomentumField, SpinorField};
use super::params::PhysicalParams;
use crate::{Result, C64};

/// Node-wise `e^{−iτ(μ(q)I + νX)}`:
/// `a_τ = e^{−iτμ}(a₀ cos ντ − i b₀ sin ντ)`, `b_τ = e^{−iτμ}(−i a₀ sin ντ + b₀ cos ντ)`.
pub fn local_evolve(
    psi0: &SpinorField,
    mu_of_q: impl Fn(f64) -> f64,
    nu: f64,
    tau: f64,
) -> Result<SpinorField> {
    psi0.check()?;
    let (s, c) = (nu * tau).sin_cos();
    let mut out = psi0.clone();
    for (j, q) in psi0.grid.positions().into_iter().enumerate() {
        let phase = C64::from_polar(1.0, -tau * mu_of_q(q));
        let (a0, b0) = (psi0.a[j], psi0.b[j]);
        out.a[j] = phase * (a0 * c - C64::new(0.0, s) * b0);
        out.b[j] = phase * (b0 * c - C64::new(0.0, s) * a0);
    }
    Ok(out)
}

/// Exact solution of `ih₀ dψ̃/dt = [T(p)I + ε₀X]ψ̃` at every momentum node.
///
/// Only the kinetic energy and `ε₀` enter; `params.potential` is ignored since
/// `V(q)` is not diagonal in momentum.
pub fn momentum_evolve(
    psi0: &MomentumField,
    params: &PhysicalParams,
    t: f64,
) -> Result<MomentumField> {
    psi0.check()?;
    params.validate()?;
    let (s, c) = (params.eps0 * t / params.h0).sin_cos();
    let mut out = psi0.clone();
    for (k, p) in psi0.momenta().into_iter().enumerate() {
        let phase = C64::from_polar(1.0, -t * params.kinetic(p) / params.h0);
        let (a0, b0) = (psi0.a[k], psi0.b[k]);
        out.a[k] = phase * (a0 * c - C64::new(0.0, s) * b0);
        out.b[k] = phase * (b0 * c - C64::new(0.0, s) * a0);
    }
    Ok(out)
}
