//! The Dirac Hamiltonian as a two-qubit operator.
//!
//! `H_D = Z₁⊗(mc² I₂) + X₁⊗(c p⃗·σ⃗₂)`, with `α_k = X⊗σ_k` and `β = Z⊗I`.
//! Qubit 1 is the outer Kronecker factor. Its `|1⟩` block (first two
//! components) holds the nonrelativistic part of a positive-energy solution
//! and its `|0⟩` block the relativistic complement.
//!
//! Two printed relations are not used as-is:
//!
//! * `β² = 0`: `(Z⊗I)² = I₄`, and `H_D² = E_p² I₄` needs `β² = I₄`.
//! * `γ² = −Y₁⊗Y₂`: that matrix squares to `+I₄`. The Clifford-consistent form
//!   `γ² = βα₂ = iY₁⊗Y₂` is used. [`printed_gamma2`] keeps the printed
//!   matrix so reports can show how far it is from the Clifford relations.

use crate::pauli::{Qubit, TwoLevelOperator};
use crate::{Error, Result, C64};
use nalgebra::Matrix4;
use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};

const ZERO: C64 = C64::new(0.0, 0.0);

/// Guard on `|mc² + λE_p|` relative to `E_p`.
pub const BRANCH_GUARD: f64 = 1e-10;

/// 4×4 complex operator, optionally remembering a tensor factorization `A⊗B`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiracOperator {
    pub entries: [[C64; 4]; 4],
    pub factors: Option<(TwoLevelOperator, TwoLevelOperator)>,
}

impl DiracOperator {
    pub fn from_entries(entries: [[C64; 4]; 4]) -> Self {
        Self {
            entries,
            factors: None,
        }
    }

    /// `outer ⊗ inner`, entry `(2i + k, 2j + l) = outer_ij · inner_kl`.
    pub fn kron(outer: &TwoLevelOperator, inner: &TwoLevelOperator) -> Self {
        let mut entries = [[ZERO; 4]; 4];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        entries[2 * i + k][2 * j + l] = outer.get(i, j) * inner.get(k, l);
                    }
                }
            }
        }
        Self {
            entries,
            factors: Some((*outer, *inner)),
        }
    }

    pub fn identity() -> Self {
        Self::kron(&TwoLevelOperator::identity(), &TwoLevelOperator::identity())
    }

    pub fn zero() -> Self {
        Self::from_entries([[ZERO; 4]; 4])
    }

    pub fn scale(&self, z: C64) -> Self {
        let mut entries = self.entries;
        entries.iter_mut().flatten().for_each(|v| *v *= z);
        Self {
            entries,
            factors: self.factors.map(|(a, b)| (a * z, b)),
        }
    }

    pub fn adjoint(&self) -> Self {
        let mut entries = [[ZERO; 4]; 4];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.entries[j][i].conj();
            }
        }
        Self {
            entries,
            factors: self.factors.map(|(a, b)| (a.adjoint(), b.adjoint())),
        }
    }

    pub fn trace(&self) -> C64 {
        (0..4).map(|i| self.entries[i][i]).sum()
    }

    pub fn anticommutator(&self, other: &DiracOperator) -> DiracOperator {
        *self * *other + *other * *self
    }

    pub fn max_deviation(&self, other: &DiracOperator) -> f64 {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    /// `max |entry|`.
    pub fn max_norm(&self) -> f64 {
        self.max_deviation(&Self::zero())
    }

    pub fn hermiticity_defect(&self) -> f64 {
        self.max_deviation(&self.adjoint())
    }

    pub fn apply(&self, v: &[C64; 4]) -> [C64; 4] {
        let mut out = [ZERO; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|j| self.entries[i][j] * v[j]).sum();
        }
        out
    }

    /// Eigenvalues (ascending) of the Hermitian part `(M + M†)/2`.
    pub fn hermitian_eigenvalues(&self) -> [f64; 4] {
        let m = Matrix4::from_fn(|i, j| self.entries[i][j]);
        let herm = (m + m.adjoint()) * C64::new(0.5, 0.0);
        let eig = herm.symmetric_eigen();
        let mut out = [0.0; 4];
        for (o, v) in out.iter_mut().zip(eig.eigenvalues.iter()) {
            *o = *v;
        }
        out.sort_by(f64::total_cmp);
        out
    }
}

impl Add for DiracOperator {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut entries = self.entries;
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v += rhs.entries[i][j];
            }
        }
        Self::from_entries(entries)
    }
}

impl Neg for DiracOperator {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl Sub for DiracOperator {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for DiracOperator {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut entries = [[ZERO; 4]; 4];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..4).map(|k| self.entries[i][k] * rhs.entries[k][j]).sum();
            }
        }
        let factors = match (self.factors, rhs.factors) {
            (Some((a1, b1)), Some((a2, b2))) => Some((a1 * a2, b1 * b2)),
            _ => None,
        };
        Self { entries, factors }
    }
}

/// Mass, speed of light, momentum and the action constant of the time phase.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiracParams {
    pub m: f64,
    pub c: f64,
    pub p: [f64; 3],
    #[serde(default = "one")]
    pub hbar: f64,
}

fn one() -> f64 {
    1.0
}

impl DiracParams {
    pub fn new(m: f64, c: f64, p: [f64; 3]) -> Self {
        Self { m, c, p, hbar: 1.0 }
    }

    pub fn rest_energy(&self) -> f64 {
        self.m * self.c * self.c
    }

    /// `E_p² = m²c⁴ + c²|p|²`.
    pub fn energy_sqr(&self) -> f64 {
        let p2: f64 = self.p.iter().map(|x| x * x).sum();
        self.rest_energy().powi(2) + self.c * self.c * p2
    }

    pub fn energy(&self) -> f64 {
        self.energy_sqr().sqrt()
    }
}

/// `σ_k` for `k = 0, 1, 2` (x, y, z).
pub fn sigma(k: usize) -> TwoLevelOperator {
    match k {
        0 => TwoLevelOperator::x(),
        1 => TwoLevelOperator::y(),
        2 => TwoLevelOperator::z(),
        _ => panic!("sigma index {k} out of range"),
    }
}

/// `c p⃗·σ⃗`.
pub fn momentum_coupling(params: &DiracParams) -> TwoLevelOperator {
    (0..3).fold(TwoLevelOperator::zero(), |acc, k| {
        acc + sigma(k) * (params.c * params.p[k])
    })
}

/// `α_k = X⊗σ_k`.
pub fn alpha(k: usize) -> DiracOperator {
    DiracOperator::kron(&TwoLevelOperator::x(), &sigma(k))
}

/// `β = Z⊗I`.
pub fn beta() -> DiracOperator {
    DiracOperator::kron(&TwoLevelOperator::z(), &TwoLevelOperator::identity())
}

pub fn build_hamiltonian(params: &DiracParams) -> DiracOperator {
    let mass = DiracOperator::kron(
        &TwoLevelOperator::z(),
        &(TwoLevelOperator::identity() * params.rest_energy()),
    );
    let kinetic = DiracOperator::kron(&TwoLevelOperator::x(), &momentum_coupling(params));
    mass + kinetic
}

/// `‖H_D² − E_p² I₄‖_max`.
pub fn square_check(params: &DiracParams) -> f64 {
    let h = build_hamiltonian(params);
    (h * h).max_deviation(&DiracOperator::identity().scale(C64::new(params.energy_sqr(), 0.0)))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub relation: String,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl RelationCheck {
    fn new(relation: impl Into<String>, max_deviation: f64, tolerance: f64) -> Self {
        Self {
            relation: relation.into(),
            max_deviation,
            tolerance,
            passed: max_deviation <= tolerance,
        }
    }
}

/// A printed relation that is not satisfied, with its measured deviation and
/// the form that is used instead.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Erratum {
    pub printed: String,
    pub deviation_from_printed: f64,
    pub used_instead: String,
    pub deviation_from_used: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraReport {
    pub checks: Vec<RelationCheck>,
    pub errata: Vec<Erratum>,
    pub max_deviation: f64,
    pub all_passed: bool,
}

impl AlgebraReport {
    fn new(checks: Vec<RelationCheck>, errata: Vec<Erratum>) -> Self {
        let max_deviation = checks.iter().map(|c| c.max_deviation).fold(0.0, f64::max);
        let all_passed = checks.iter().all(|c| c.passed);
        Self {
            checks,
            errata,
            max_deviation,
            all_passed,
        }
    }
}

const AXES: [&str; 3] = ["x", "y", "z"];

/// `{α_k, α_l} = 2δ_kl I₄`, `{α_k, β} = 0`, `β² = I₄`. All entries are small
/// integers times units, so the comparison is exact.
pub fn verify_alpha_beta_algebra() -> AlgebraReport {
    let id = DiracOperator::identity();
    let b = beta();
    let mut checks = Vec::new();
    for k in 0..3 {
        for l in k..3 {
            let expected = if k == l { id.scale(C64::new(2.0, 0.0)) } else { DiracOperator::zero() };
            checks.push(RelationCheck::new(
                format!("{{alpha_{}, alpha_{}}} = {}", AXES[k], AXES[l], if k == l { "2I" } else { "0" }),
                alpha(k).anticommutator(&alpha(l)).max_deviation(&expected),
                0.0,
            ));
        }
    }
    for (k, axis) in AXES.iter().enumerate() {
        checks.push(RelationCheck::new(
            format!("{{alpha_{axis}, beta}} = 0"),
            alpha(k).anticommutator(&b).max_norm(),
            0.0,
        ));
    }
    let beta_sq = b * b;
    checks.push(RelationCheck::new("beta^2 = I", beta_sq.max_deviation(&id), 0.0));
    let errata = vec![Erratum {
        printed: "beta^2 = 0".into(),
        deviation_from_printed: beta_sq.max_norm(),
        used_instead: "beta^2 = I".into(),
        deviation_from_used: beta_sq.max_deviation(&id),
    }];
    AlgebraReport::new(checks, errata)
}

/// `γ⁰ = Z⊗I`, `γ¹ = iY⊗X`, `γ² = iY⊗Y`, `γ³ = iY⊗Z`.
pub fn gamma_matrices() -> [DiracOperator; 4] {
    let iy = TwoLevelOperator::y() * C64::new(0.0, 1.0);
    [
        DiracOperator::kron(&TwoLevelOperator::z(), &TwoLevelOperator::identity()),
        DiracOperator::kron(&iy, &TwoLevelOperator::x()),
        DiracOperator::kron(&iy, &TwoLevelOperator::y()),
        DiracOperator::kron(&iy, &TwoLevelOperator::z()),
    ]
}

/// The printed `γ² = −Y⊗Y`.
pub fn printed_gamma2() -> DiracOperator {
    DiracOperator::kron(&(-TwoLevelOperator::y()), &TwoLevelOperator::y())
}

/// Minkowski metric `diag(+, −, −, −)`.
pub fn metric(mu: usize, nu: usize) -> f64 {
    match (mu, nu) {
        (0, 0) => 1.0,
        (a, b) if a == b => -1.0,
        _ => 0.0,
    }
}

/// All ten relations `{γ^μ, γ^ν} = 2η^{μν} I₄`, plus `γ^k = βα_k`.
pub fn verify_clifford() -> AlgebraReport {
    let g = gamma_matrices();
    let id = DiracOperator::identity();
    let mut checks = Vec::new();
    for mu in 0..4 {
        for nu in mu..4 {
            let expected = id.scale(C64::new(2.0 * metric(mu, nu), 0.0));
            checks.push(RelationCheck::new(
                format!("{{gamma^{mu}, gamma^{nu}}} = {}I", 2.0 * metric(mu, nu)),
                g[mu].anticommutator(&g[nu]).max_deviation(&expected),
                0.0,
            ));
        }
    }
    for k in 0..3 {
        checks.push(RelationCheck::new(
            format!("gamma^{} = beta alpha_{}", k + 1, AXES[k]),
            g[k + 1].max_deviation(&(beta() * alpha(k))),
            0.0,
        ));
    }
    let printed = printed_gamma2();
    let minus_id = id.scale(C64::new(-2.0, 0.0));
    let errata = vec![Erratum {
        printed: "gamma^2 = -Y1 (x) Y2 with {gamma^2, gamma^2} = -2I".into(),
        deviation_from_printed: printed.anticommutator(&printed).max_deviation(&minus_id),
        used_instead: "gamma^2 = i Y1 (x) Y2".into(),
        deviation_from_used: g[2].anticommutator(&g[2]).max_deviation(&minus_id),
    }];
    AlgebraReport::new(checks, errata)
}

/// Four amplitudes over `|qubit₁⟩⊗|qubit₂⟩` and the energy branch label.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiracState {
    pub components: [C64; 4],
    pub lambda: i8,
}

impl DiracState {
    pub fn norm_sqr(&self) -> f64 {
        self.components.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Amplitudes of qubit 2 in the qubit-1 `|1⟩` block.
    pub fn upper(&self) -> Qubit {
        Qubit::new(self.components[0], self.components[1])
    }

    /// Amplitudes of qubit 2 in the qubit-1 `|0⟩` block.
    pub fn lower(&self) -> Qubit {
        Qubit::new(self.components[2], self.components[3])
    }

    /// `(|x⟩⟨x|)₁ ⊗ I₂` applied to the state.
    pub fn project_qubit1(&self, x: u8) -> Result<DiracState> {
        let projector = match x {
            1 => TwoLevelOperator::from_real([[1.0, 0.0], [0.0, 0.0]]),
            0 => TwoLevelOperator::from_real([[0.0, 0.0], [0.0, 1.0]]),
            other => return Err(Error::InvalidCbit(other)),
        };
        let op = DiracOperator::kron(&projector, &TwoLevelOperator::identity());
        Ok(DiracState {
            components: op.apply(&self.components),
            lambda: self.lambda,
        })
    }

    /// `‖H Ψ − λE_p Ψ‖`.
    pub fn eigen_residual(&self, params: &DiracParams) -> f64 {
        let h = build_hamiltonian(params);
        let e = f64::from(self.lambda) * params.energy();
        h.apply(&self.components)
            .iter()
            .zip(&self.components)
            .map(|(hv, v)| (hv - v * e).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

/// Normalization `N_λ = [1 + ‖(cp⃗·σ⃗)φ/(mc² + λE_p)‖²]^{−1/2}` for normalized `φ`.
pub fn normalization(lambda: i8, params: &DiracParams, phi: &Qubit) -> Result<f64> {
    let chi = lower_block(lambda, params, &phi.normalized())?;
    Ok((1.0 + chi.norm_sqr()).powf(-0.5))
}

fn lower_block(lambda: i8, params: &DiracParams, phi: &Qubit) -> Result<Qubit> {
    if lambda != 1 && lambda != -1 {
        return Err(Error::InvalidBranch(lambda));
    }
    let e = params.energy();
    let denominator = params.rest_energy() + f64::from(lambda) * e;
    if denominator.abs() <= BRANCH_GUARD * e {
        return Err(Error::SingularBranch {
            denominator: denominator.abs(),
        });
    }
    Ok(momentum_coupling(params)
        .apply(phi)
        .scale(C64::new(1.0 / denominator, 0.0)))
}

/// `|Ψ^λ⟩ = N_λ e^{−iλtE_p/ħ} [|1⟩₁|φ⟩₂ + |0⟩₁ (cp⃗·σ⃗₂)/(mc² + λE_p) |φ⟩₂]`.
pub fn plane_wave_solution(
    lambda: i8,
    params: &DiracParams,
    phi: &Qubit,
    t: f64,
) -> Result<DiracState> {
    let phi = phi.normalized();
    let chi = lower_block(lambda, params, &phi)?;
    let n = (1.0 + chi.norm_sqr()).powf(-0.5);
    let phase = C64::from_polar(n, -f64::from(lambda) * t * params.energy() / params.hbar);
    Ok(DiracState {
        components: [phi.a * phase, phi.b * phase, chi.a * phase, chi.b * phase],
        lambda,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn kron_layout() {
        let x = TwoLevelOperator::x();
        let z = TwoLevelOperator::z();
        let k = DiracOperator::kron(&z, &x);
        assert_eq!(k.entries[0][1], c(1.0));
        assert_eq!(k.entries[2][3], c(-1.0));
        assert_eq!(k.entries[0][2], c(0.0));
        assert_eq!(k.factors, Some((z, x)));
        let prod = k * k;
        assert_eq!(prod.factors, Some((z * z, x * x)));
        assert_eq!(prod, DiracOperator::identity());
    }

    #[test]
    fn rest_frame_hamiltonian() {
        let p = DiracParams::new(2.0, 3.0, [0.0; 3]);
        let h = build_hamiltonian(&p);
        assert!(h.max_deviation(&beta().scale(c(18.0))) == 0.0);
        assert_eq!(square_check(&p), 0.0);
    }

    #[test]
    fn square_examples() {
        let p = DiracParams::new(1.0, 1.0, [1.0, 2.0, 3.0]);
        assert_eq!(p.energy_sqr(), 15.0);
        let h = build_hamiltonian(&p);
        assert!((h * h).max_deviation(&DiracOperator::identity().scale(c(15.0))) <= 1e-12 * 15.0);
        assert!(h.trace().norm() == 0.0);
        assert!(h.hermiticity_defect() <= 1e-13);

        let p = DiracParams::new(1.0, 1.0, [3.0, 0.0, 4.0]);
        assert_eq!(p.energy_sqr(), 26.0);
        assert!(square_check(&p) <= 1e-12 * 26.0);
    }

    #[test]
    fn alpha_beta_algebra_exact() {
        let report = verify_alpha_beta_algebra();
        assert!(report.all_passed, "{report:?}");
        assert_eq!(report.checks.len(), 10);
        assert_eq!(report.max_deviation, 0.0);
        assert_eq!(report.errata[0].deviation_from_printed, 1.0);
        assert!(alpha(0).anticommutator(&alpha(1)).max_norm() == 0.0);
        let two = DiracOperator::identity().scale(c(2.0));
        assert_eq!(alpha(2).anticommutator(&alpha(2)).max_deviation(&two), 0.0);
        for k in 0..3 {
            assert_eq!(alpha(k).hermiticity_defect(), 0.0);
        }
        assert_eq!(beta().hermiticity_defect(), 0.0);
    }

    #[test]
    fn clifford_relations() {
        let report = verify_clifford();
        assert!(report.all_passed, "{report:?}");
        assert_eq!(report.checks.iter().filter(|c| c.relation.starts_with('{')).count(), 10);
        let g = gamma_matrices();
        assert_eq!(g[0] * g[0], DiracOperator::identity());
        assert_eq!((g[0].anticommutator(&g[1])).max_norm(), 0.0);
        for k in 1..4 {
            assert_eq!((g[k] * g[k]).max_deviation(&DiracOperator::identity().scale(c(-1.0))), 0.0);
        }
        // the printed gamma^2 squares to +I
        let printed = printed_gamma2();
        assert_eq!((printed * printed).max_deviation(&DiracOperator::identity()), 0.0);
        assert_eq!(report.errata[0].deviation_from_printed, 4.0);
    }

    #[test]
    fn plane_wave_examples() {
        let rest = DiracParams::new(1.5, 2.0, [0.0; 3]);
        let phi = Qubit::new(c(0.6), C64::new(0.0, 0.8));
        let s = plane_wave_solution(1, &rest, &phi, 0.0).unwrap();
        assert_eq!(s.upper(), phi);
        assert_eq!(s.lower(), Qubit::new(c(0.0), c(0.0)));
        assert!(s.eigen_residual(&rest) <= 1e-12);
        assert_eq!(normalization(1, &rest, &phi), Ok(1.0));

        let p = DiracParams::new(1.0, 1.0, [0.0, 0.0, 3.0]);
        let up = Qubit::cbit(1).unwrap();
        let s = plane_wave_solution(1, &p, &up, 0.7).unwrap();
        assert!((s.norm_sqr() - 1.0).abs() <= 1e-12);
        assert!(s.eigen_residual(&p) <= 1e-10);

        assert!(matches!(
            plane_wave_solution(-1, &rest, &phi, 0.0),
            Err(Error::SingularBranch { .. })
        ));
        assert!(matches!(
            plane_wave_solution(0, &p, &phi, 0.0),
            Err(Error::InvalidBranch(0))
        ));
    }

    #[test]
    fn selector_projection() {
        let p = DiracParams::new(1.0, 1.0, [0.3, -0.2, 0.5]);
        let phi = Qubit::new(c(0.6), C64::new(0.0, 0.8));
        let s = plane_wave_solution(1, &p, &phi, 0.0).unwrap();
        let n = normalization(1, &p, &phi).unwrap();
        let upper = s.project_qubit1(1).unwrap();
        assert!((upper.components[0] - phi.a * n).norm() <= 1e-15);
        assert!((upper.components[1] - phi.b * n).norm() <= 1e-15);
        assert_eq!(upper.lower(), Qubit::new(c(0.0), c(0.0)));
        let lower = s.project_qubit1(0).unwrap();
        assert_eq!(lower.lower(), s.lower());
        assert!(s.project_qubit1(2).is_err());
    }
}
