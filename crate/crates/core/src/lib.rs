//! Two-level actions, their continuum limit, and the spinor dynamics of a
//! particle carrying one qubit.
//!
//! The crate is layered bottom-up:
//!
//! * [`pauli`]: 2×2 operators, qubits and the Pauli basis.
//! * [`action`]: the Z₂ Cbit action group and real unit-circle actions.
//! * [`continuum`]: unitary rotation actions, their exponential form and the
//!   generator equation `i dψ/dτ = Gψ`.
//! * [`pse`]: a two-component wavefunction on a periodic 1-D grid with exact
//!   local and momentum-space evolution plus a Strang split-step propagator.
//! * [`dirac`]: the Dirac Hamiltonian, α/β and γ matrices as two-qubit
//!   tensor products, and plane-wave solutions.
//!
//! Basis convention used throughout: the Cbit `|1⟩` is the column `(1, 0)ᵀ`
//! and `|0⟩` is `(0, 1)ᵀ`.

pub mod action;
pub mod continuum;
pub mod dirac;
mod error;
pub mod pauli;
pub mod pse;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
