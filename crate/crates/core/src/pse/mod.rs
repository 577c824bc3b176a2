//! A particle carrying one qubit on a periodic 1-D grid.
//!
//! The state is a pair of amplitude arrays `a(q)`, `b(q)` over the Cbit basis.
//! Dynamics follow `ih₀ ∂ψ/∂t = [(−ih₁∂_q)²/2m + V(q)] I ψ + ε₀ X ψ`, where
//! `ε₀` already absorbs the coupling `ν`.
//!
//! Conventions:
//!
//! * `q_j = q_min + j dq`, `dq = (q_max − q_min)/n`, `n` a power of two;
//!   boundaries are periodic.
//! * `p_k = 2π h₁ k / (n dq)` for `k = −n/2 … n/2 − 1`.
//! * `ã(p) = Σ_j dq e^{−ipq_j/h₁} a(q_j)` and
//!   `a(q) = Σ_k Δp/(2πh₁) e^{ip_kq/h₁} ã(p_k)`, so the momentum-space norm is
//!   `Σ_k |ã_k|² / (n dq)`.

mod field;
mod fourier;
mod grid;
mod local;
mod observables;
mod params;
mod propagate;

pub use field::{GaussianPacket, MomentumField, SpinorField, WindowedPlaneWave};
pub use fourier::{fourier_analyze, fourier_synthesize};
pub use grid::SpatialGrid;
pub use local::{local_evolve, momentum_evolve};
pub use observables::{observables, Observables};
pub use params::{PhysicalParams, Potential};
pub use propagate::{
    evolve_free_exact, propagate_scalar, propagate_split_step, reduce_nu_zero, step_count,
    SplitStepPropagator,
};
