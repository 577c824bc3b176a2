use super::field::{MomentumField, SpinorField};
use crate::{Result, C64};
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

/// Forward/inverse plans for one grid size.
#[derive(Clone)]
pub(crate) struct Plans {
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl Plans {
    pub(crate) fn new(n: usize) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            forward: planner.plan_fft_forward(n),
            inverse: planner.plan_fft_inverse(n),
        }
    }

    /// In place `x_k ← Σ_j e^{−2πi kj/n} x_j`.
    pub(crate) fn forward(&self, buf: &mut [C64]) {
        self.forward.process(buf);
    }

    /// In place `x_j ← Σ_k e^{2πi kj/n} x_k`, unnormalized.
    pub(crate) fn inverse(&self, buf: &mut [C64]) {
        self.inverse.process(buf);
    }
}

/// Position in transform order of centered index `i`.
fn transform_index(i: usize, n: usize) -> usize {
    (i + n / 2) % n
}

/// `ã(p_k) = Σ_j dq e^{−ip_kq_j/h₁} a(q_j)` for both channels, on the centered lattice.
pub fn fourier_analyze(psi: &SpinorField, h1: f64) -> Result<MomentumField> {
    psi.check()?;
    let grid = psi.grid;
    let n = grid.n_points();
    let plans = Plans::new(n);
    let dq = grid.dq();
    let p = grid.momenta(h1);
    // q_j = q_min + j dq contributes the offset phase e^{−ip q_min/h₁}
    let offset: Vec<C64> = p
        .iter()
        .map(|pk| C64::from_polar(dq, -pk * grid.q_min() / h1))
        .collect();
    let channel = |src: &[C64]| {
        let mut buf = src.to_vec();
        plans.forward(&mut buf);
        (0..n)
            .map(|i| buf[transform_index(i, n)] * offset[i])
            .collect::<Vec<_>>()
    };
    MomentumField::new(grid, h1, channel(&psi.a), channel(&psi.b))
}

/// `a(q_j) = Σ_k Δp/(2πh₁) e^{ip_kq_j/h₁} ã(p_k)` for both channels.
pub fn fourier_synthesize(psi: &MomentumField) -> Result<SpinorField> {
    psi.check()?;
    let grid = psi.grid;
    let n = grid.n_points();
    let plans = Plans::new(n);
    let measure = grid.momentum_measure();
    let p = grid.momenta(psi.h1);
    let offset: Vec<C64> = p
        .iter()
        .map(|pk| C64::from_polar(measure, pk * grid.q_min() / psi.h1))
        .collect();
    let channel = |src: &[C64]| {
        let mut buf = vec![C64::new(0.0, 0.0); n];
        for i in 0..n {
            buf[transform_index(i, n)] = src[i] * offset[i];
        }
        plans.inverse(&mut buf);
        buf
    };
    SpinorField::new(grid, channel(&psi.a), channel(&psi.b))
}
