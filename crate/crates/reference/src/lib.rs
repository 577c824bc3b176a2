//! Brute-force reference computations.
//!
//! Nothing here shares code with the `pauli-pse` solvers: transforms are
//! explicit double sums, propagators are dense matrix exponentials and
//! spectra come from a dense Hermitian eigensolver. The routines are slow
//! on purpose and meant for small grids only.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;
use std::f64::consts::PI;

/// Centered momentum lattice `p_k = 2π h1 k / (n dq)`, `k = -n/2 .. n/2 - 1`.
pub fn centered_momenta(n: usize, dq: f64, h1: f64) -> Vec<f64> {
    let half = (n / 2) as i64;
    (-half..(n as i64 - half))
        .map(|k| 2.0 * PI * h1 * k as f64 / (n as f64 * dq))
        .collect()
}

/// `f̃(p) = Σ_j dq e^{-i p q_j / h1} f(q_j)` evaluated by direct summation.
pub fn direct_forward(q: &[f64], f: &[C64], p: &[f64], dq: f64, h1: f64) -> Vec<C64> {
    p.iter()
        .map(|&pk| {
            q.iter()
                .zip(f)
                .map(|(&qj, &fj)| C64::from_polar(1.0, -pk * qj / h1) * fj * dq)
                .sum()
        })
        .collect()
}

/// `f(q) = Σ_k measure e^{i p_k q / h1} f̃(p_k)` evaluated by direct summation.
pub fn direct_inverse(p: &[f64], ft: &[C64], q: &[f64], measure: f64, h1: f64) -> Vec<C64> {
    q.iter()
        .map(|&qj| {
            p.iter()
                .zip(ft)
                .map(|(&pk, &fk)| C64::from_polar(1.0, pk * qj / h1) * fk * measure)
                .sum()
        })
        .collect()
}

/// Dense kinetic matrix `K_jl = (1/n) Σ_k T(p_k) e^{i p_k (q_j - q_l)/h1}` with
/// `T(p) = p²/2m`, i.e. the spectral second derivative written out entry by entry.
pub fn dense_kinetic(n: usize, dq: f64, h1: f64, mass: f64) -> DMatrix<C64> {
    let p = centered_momenta(n, dq, h1);
    DMatrix::from_fn(n, n, |j, l| {
        let d = (j as f64 - l as f64) * dq;
        p.iter()
            .map(|&pk| C64::from_polar(pk * pk / (2.0 * mass), pk * d / h1))
            .sum::<C64>()
            / n as f64
    })
}

/// Dense `2n × 2n` spinor Hamiltonian acting on the stacked vector `[a; b]`:
/// `(K + V) ⊕ (K + V)` on the diagonal blocks and `eps0` on the off-diagonal ones.
pub fn dense_spinor_hamiltonian(
    n: usize,
    dq: f64,
    h1: f64,
    mass: f64,
    potential: &[f64],
    eps0: f64,
) -> DMatrix<C64> {
    assert_eq!(potential.len(), n);
    let k = dense_kinetic(n, dq, h1, mass);
    let mut h = DMatrix::zeros(2 * n, 2 * n);
    for j in 0..n {
        for l in 0..n {
            let mut v = k[(j, l)];
            if j == l {
                v += potential[j];
            }
            h[(j, l)] = v;
            h[(n + j, n + l)] = v;
        }
        h[(j, n + j)] = C64::new(eps0, 0.0);
        h[(n + j, j)] = C64::new(eps0, 0.0);
    }
    h
}

/// `exp(-i t H / hbar)` for Hermitian `H`, via dense eigendecomposition.
pub fn unitary_propagator(h: &DMatrix<C64>, t: f64, hbar: f64) -> DMatrix<C64> {
    let herm = (h + h.adjoint()) * C64::new(0.5, 0.0);
    let eig = herm.symmetric_eigen();
    let v = &eig.eigenvectors;
    let phases = DVector::from_iterator(
        eig.eigenvalues.len(),
        eig.eigenvalues
            .iter()
            .map(|&lam| C64::from_polar(1.0, -lam * t / hbar)),
    );
    v * DMatrix::from_diagonal(&phases) * v.adjoint()
}

/// Apply `exp(-i t H / hbar)` to `psi`.
pub fn propagate_dense(h: &DMatrix<C64>, psi0: &[C64], t: f64, hbar: f64) -> Vec<C64> {
    let u = unitary_propagator(h, t, hbar);
    let out = u * DVector::from_column_slice(psi0);
    out.iter().copied().collect()
}

/// Matrix exponential by scaling and squaring of a truncated Taylor series.
/// Independent of any eigendecomposition; works for non-normal input.
pub fn expm_taylor(m: &DMatrix<C64>) -> DMatrix<C64> {
    let n = m.nrows();
    let norm = m.iter().map(|z| z.norm()).fold(0.0, f64::max) * n as f64;
    let mut squarings = 0;
    let mut scale = 1.0;
    while norm * scale > 0.5 {
        scale *= 0.5;
        squarings += 1;
    }
    let a = m * C64::new(scale, 0.0);
    let mut term = DMatrix::<C64>::identity(n, n);
    let mut sum = term.clone();
    for k in 1..=30 {
        term = &term * &a * C64::new(1.0 / k as f64, 0.0);
        sum += &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// Ascending eigenvalues of a Hermitian matrix given row-major.
pub fn hermitian_eigenvalues(rows: &[Vec<C64>]) -> Vec<f64> {
    let n = rows.len();
    let m = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    let herm = (&m + m.adjoint()) * C64::new(0.5, 0.0);
    let mut ev: Vec<f64> = herm.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Row-major dense product of two square matrices.
pub fn matmul(a: &[Vec<C64>], b: &[Vec<C64>]) -> Vec<Vec<C64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Split-step-free scalar free-particle propagation of a sampled function by
/// direct summation: forward transform, multiply by `e^{-i t p²/(2 m h0)}`, invert.
pub fn free_scalar_direct(
    q: &[f64],
    f: &[C64],
    dq: f64,
    h0: f64,
    h1: f64,
    mass: f64,
    t: f64,
) -> Vec<C64> {
    let n = q.len();
    let p = centered_momenta(n, dq, h1);
    let mut ft = direct_forward(q, f, &p, dq, h1);
    for (fk, &pk) in ft.iter_mut().zip(&p) {
        *fk *= C64::from_polar(1.0, -t * pk * pk / (2.0 * mass * h0));
    }
    let measure = 1.0 / (n as f64 * dq);
    direct_inverse(&p, &ft, q, measure, h1)
}
