use super::field::SpinorField;
use super::fourier::{fourier_analyze, fourier_synthesize, Plans};
use super::grid::SpatialGrid;
use super::local::momentum_evolve;
use super::params::PhysicalParams;
use crate::{Error, Result, C64};

/// Number of whole steps of size `dt` in `t_final`. Partial steps are rejected.
pub fn step_count(t_final: f64, dt: f64) -> Result<usize> {
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::InvalidStep(format!("dt must be positive, got {dt}")));
    }
    if !(t_final >= 0.0 && t_final.is_finite()) {
        return Err(Error::InvalidStep(format!(
            "t_final must be non-negative, got {t_final}"
        )));
    }
    let n = (t_final / dt).round();
    if (n * dt - t_final).abs() > 1e-9 * t_final.max(dt) {
        return Err(Error::InvalidStep(format!(
            "t_final = {t_final} is not a whole multiple of dt = {dt}"
        )));
    }
    Ok(n as usize)
}

/// Strang splitting of `H = [T(p) + V(q)] I + ε₀X`:
/// half step of `V(q)I + ε₀X` (exact, node-wise), full kinetic step in
/// momentum space, half step of `V(q)I + ε₀X`.
#[derive(Clone)]
pub struct SplitStepPropagator {
    grid: SpatialGrid,
    dt: f64,
    plans: Plans,
    /// `e^{−iV(q)dt/(2h₀)}` per node.
    potential_half: Vec<C64>,
    /// `cos θ`, `sin θ` with `θ = ε₀ dt/(2h₀)`.
    mix_half: (f64, f64),
    /// `e^{−iT(p)dt/h₀}/n` in transform order.
    kinetic: Vec<C64>,
    scratch: Vec<C64>,
}

impl SplitStepPropagator {
    pub fn new(grid: SpatialGrid, params: &PhysicalParams, dt: f64) -> Result<Self> {
        params.validate()?;
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(Error::InvalidStep(format!("dt must be positive, got {dt}")));
        }
        let n = grid.n_points();
        let h0 = params.h0;
        let potential_half = params
            .potential
            .sample(&grid, params.m)?
            .into_iter()
            .map(|v| C64::from_polar(1.0, -v * dt / (2.0 * h0)))
            .collect();
        let theta = params.eps0 * dt / (2.0 * h0);
        let inv_n = 1.0 / n as f64;
        let kinetic = grid
            .momenta_transform_order(params.h1)
            .into_iter()
            .map(|p| C64::from_polar(inv_n, -params.kinetic(p) * dt / h0))
            .collect();
        Ok(Self {
            grid,
            dt,
            plans: Plans::new(n),
            potential_half,
            mix_half: (theta.cos(), theta.sin()),
            kinetic,
            scratch: Vec::with_capacity(n),
        })
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn grid(&self) -> &SpatialGrid {
        &self.grid
    }

    fn half_diagonal(&self, a: &mut [C64], b: &mut [C64]) {
        let (c, s) = self.mix_half;
        let mis = C64::new(0.0, -s);
        for ((a, b), ph) in a.iter_mut().zip(b.iter_mut()).zip(&self.potential_half) {
            let (a0, b0) = (*a, *b);
            *a = ph * (a0 * c + mis * b0);
            *b = ph * (b0 * c + mis * a0);
        }
    }

    fn half_potential(&self, chan: &mut [C64]) {
        for (z, ph) in chan.iter_mut().zip(&self.potential_half) {
            *z = ph * (*z * self.mix_half.0);
        }
    }

    fn kinetic(&mut self, chan: &mut [C64]) {
        self.scratch.clear();
        self.scratch.extend_from_slice(chan);
        self.plans.forward(&mut self.scratch);
        for (z, k) in self.scratch.iter_mut().zip(&self.kinetic) {
            *z *= k;
        }
        self.plans.inverse(&mut self.scratch);
        chan.copy_from_slice(&self.scratch);
    }

    /// Advances the spinor by one `dt`.
    pub fn step(&mut self, psi: &mut SpinorField) -> Result<()> {
        psi.check()?;
        if psi.grid != self.grid {
            return Err(Error::InvalidGrid("field and propagator grids differ".into()));
        }
        self.half_diagonal(&mut psi.a, &mut psi.b);
        self.kinetic(&mut psi.a);
        self.kinetic(&mut psi.b);
        self.half_diagonal(&mut psi.a, &mut psi.b);
        Ok(())
    }

    /// Advances a single channel under `[T(p) + V(q)]` alone. Requires `ε₀ = 0`.
    pub fn step_scalar(&mut self, chan: &mut [C64]) -> Result<()> {
        if self.mix_half.1 != 0.0 {
            return Err(Error::InvalidParams(
                "scalar propagation needs eps0 = 0".into(),
            ));
        }
        if chan.len() != self.grid.n_points() {
            return Err(Error::SizeMismatch {
                expected: self.grid.n_points(),
                found: chan.len(),
            });
        }
        self.half_potential(chan);
        self.kinetic(chan);
        self.half_potential(chan);
        Ok(())
    }

    /// Takes `n_steps` steps, calling `observer(step, field)` before the first
    /// step and after every `stride`-th step.
    pub fn run(
        &mut self,
        psi0: &SpinorField,
        n_steps: usize,
        stride: usize,
        mut observer: impl FnMut(usize, &SpinorField),
    ) -> Result<SpinorField> {
        let stride = stride.max(1);
        let mut psi = psi0.clone();
        observer(0, &psi);
        for k in 1..=n_steps {
            self.step(&mut psi)?;
            if k % stride == 0 {
                observer(k, &psi);
            }
        }
        Ok(psi)
    }
}

/// Strang split-step propagation from `0` to `t_final` in steps of `dt`.
pub fn propagate_split_step(
    psi0: &SpinorField,
    params: &PhysicalParams,
    t_final: f64,
    dt: f64,
) -> Result<SpinorField> {
    psi0.check()?;
    let n = step_count(t_final, dt)?;
    let mut prop = SplitStepPropagator::new(psi0.grid, params, dt)?;
    prop.run(psi0, n, usize::MAX, |_, _| {})
}

/// Scalar Schrödinger propagation of one channel under `T(p) + V(q)`.
pub fn propagate_scalar(
    chan: &[C64],
    grid: SpatialGrid,
    params: &PhysicalParams,
    t_final: f64,
    dt: f64,
) -> Result<Vec<C64>> {
    let n = step_count(t_final, dt)?;
    let scalar_params = PhysicalParams {
        eps0: 0.0,
        ..params.clone()
    };
    let mut prop = SplitStepPropagator::new(grid, &scalar_params, dt)?;
    let mut out = chan.to_vec();
    for _ in 0..n {
        prop.step_scalar(&mut out)?;
    }
    Ok(out)
}

/// With `ε₀ = 0` the two channels decouple into identical scalar equations;
/// each is propagated on its own.
pub fn reduce_nu_zero(
    psi0: &SpinorField,
    params: &PhysicalParams,
    t_final: f64,
    dt: f64,
) -> Result<SpinorField> {
    psi0.check()?;
    if params.eps0 != 0.0 {
        return Err(Error::InvalidParams(format!(
            "decoupled reduction requires eps0 = 0, got {}",
            params.eps0
        )));
    }
    let a = propagate_scalar(&psi0.a, psi0.grid, params, t_final, dt)?;
    let b = propagate_scalar(&psi0.b, psi0.grid, params, t_final, dt)?;
    SpinorField::new(psi0.grid, a, b)
}

/// Time-step-free free evolution: analyze, evolve every momentum node exactly,
/// synthesize.
pub fn evolve_free_exact(psi0: &SpinorField, params: &PhysicalParams, t: f64) -> Result<SpinorField> {
    if !params.potential.is_free() {
        return Err(Error::InvalidParams(
            "exact momentum-space evolution needs V = 0".into(),
        ));
    }
    let tilde = fourier_analyze(psi0, params.h1)?;
    fourier_synthesize(&momentum_evolve(&tilde, params, t)?)
}
