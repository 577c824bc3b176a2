//! Complex 2×2 operators, qubits and the Pauli basis.
//!
//! Operators act on column vectors `(a, b)ᵀ`. With the fixed Cbit assignment
//! `|1⟩ → (1, 0)ᵀ`, `|0⟩ → (0, 1)ᵀ`, the first amplitude belongs to `|1⟩`.
//! `X` is the NOT and `Z = diag(1, -1)` so that `Z|1⟩ = |1⟩`.

use crate::{Error, Result, C64};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Absolute tolerance on max-entry deviation used by the structural predicates.
pub const TOLERANCE: f64 = 1e-12;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

/// Two complex amplitudes over the Cbit basis.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Qubit {
    /// Amplitude of the first basis column.
    pub a: C64,
    /// Amplitude of the second basis column.
    pub b: C64,
}

impl Qubit {
    pub const fn new(a: C64, b: C64) -> Self {
        Self { a, b }
    }

    /// The Cbit with label `x`: `1 → (1, 0)ᵀ`, `0 → (0, 1)ᵀ`.
    pub fn cbit(x: u8) -> Result<Self> {
        match x {
            1 => Ok(Self::new(ONE, ZERO)),
            0 => Ok(Self::new(ZERO, ONE)),
            other => Err(Error::InvalidCbit(other)),
        }
    }

    /// Label of this state if it is exactly a Cbit.
    pub fn as_cbit(&self) -> Option<u8> {
        if *self == Self::new(ONE, ZERO) {
            Some(1)
        } else if *self == Self::new(ZERO, ONE) {
            Some(0)
        } else {
            None
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= TOLERANCE
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        Self::new(self.a / n, self.b / n)
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Qubit) -> C64 {
        self.a.conj() * other.a + self.b.conj() * other.b
    }

    pub fn scale(&self, z: C64) -> Self {
        Self::new(self.a * z, self.b * z)
    }

    /// Largest component-wise modulus of `self - other`.
    pub fn max_deviation(&self, other: &Qubit) -> f64 {
        (self.a - other.a).norm().max((self.b - other.b).norm())
    }

    /// Distance after optimizing over a global phase:
    /// `min_θ ‖self − e^{iθ} other‖`.
    pub fn phase_insensitive_distance(&self, other: &Qubit) -> f64 {
        let d = self.norm_sqr() + other.norm_sqr() - 2.0 * self.inner(other).norm();
        d.max(0.0).sqrt()
    }
}

impl Add for Qubit {
    type Output = Qubit;
    fn add(self, rhs: Qubit) -> Qubit {
        Qubit::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Qubit {
    type Output = Qubit;
    fn sub(self, rhs: Qubit) -> Qubit {
        Qubit::new(self.a - rhs.a, self.b - rhs.b)
    }
}

/// Coefficients of an operator in the `{I, X, Y, Z}` basis.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PauliCoefficients {
    pub i: C64,
    pub x: C64,
    pub y: C64,
    pub z: C64,
}

impl PauliCoefficients {
    pub fn as_array(&self) -> [C64; 4] {
        [self.i, self.x, self.y, self.z]
    }

    /// `c_I I + c_X X + c_Y Y + c_Z Z`.
    pub fn reconstruct(&self) -> TwoLevelOperator {
        TwoLevelOperator::identity() * self.i
            + TwoLevelOperator::x() * self.x
            + TwoLevelOperator::y() * self.y
            + TwoLevelOperator::z() * self.z
    }
}

/// A complex 2×2 matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoLevelOperator {
    pub entries: [[C64; 2]; 2],
}

impl TwoLevelOperator {
    pub const fn new(entries: [[C64; 2]; 2]) -> Self {
        Self { entries }
    }

    pub fn from_real(m: [[f64; 2]; 2]) -> Self {
        Self::new([
            [C64::new(m[0][0], 0.0), C64::new(m[0][1], 0.0)],
            [C64::new(m[1][0], 0.0), C64::new(m[1][1], 0.0)],
        ])
    }

    pub const fn identity() -> Self {
        Self::new([[ONE, ZERO], [ZERO, ONE]])
    }

    pub const fn zero() -> Self {
        Self::new([[ZERO, ZERO], [ZERO, ZERO]])
    }

    /// NOT.
    pub const fn x() -> Self {
        Self::new([[ZERO, ONE], [ONE, ZERO]])
    }

    pub const fn y() -> Self {
        Self::new([[ZERO, C64::new(0.0, -1.0)], [I, ZERO]])
    }

    pub const fn z() -> Self {
        Self::new([[ONE, ZERO], [ZERO, C64::new(-1.0, 0.0)]])
    }

    /// `αI + βX` for complex coefficients.
    pub fn action(alpha: C64, beta: C64) -> Self {
        Self::new([[alpha, beta], [beta, alpha]])
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.entries[row][col]
    }

    pub fn apply(&self, q: &Qubit) -> Qubit {
        let m = &self.entries;
        Qubit::new(m[0][0] * q.a + m[0][1] * q.b, m[1][0] * q.a + m[1][1] * q.b)
    }

    /// `self · first`; `first` acts first.
    pub fn compose(&self, first: &TwoLevelOperator) -> TwoLevelOperator {
        let a = &self.entries;
        let b = &first.entries;
        let mut out = [[ZERO; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, v) in row.iter_mut().enumerate() {
                *v = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        Self::new(out)
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.entries;
        Self::new([
            [m[0][0].conj(), m[1][0].conj()],
            [m[0][1].conj(), m[1][1].conj()],
        ])
    }

    pub fn trace(&self) -> C64 {
        self.entries[0][0] + self.entries[1][1]
    }

    pub fn determinant(&self) -> C64 {
        let m = &self.entries;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// `c_P = tr(P·M)/2` for each Pauli basis element `P`.
    pub fn pauli_decompose(&self) -> PauliCoefficients {
        let half = C64::new(0.5, 0.0);
        PauliCoefficients {
            i: self.trace() * half,
            x: Self::x().compose(self).trace() * half,
            y: Self::y().compose(self).trace() * half,
            z: Self::z().compose(self).trace() * half,
        }
    }

    pub fn max_deviation(&self, other: &TwoLevelOperator) -> f64 {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    /// Max-entry deviation of `M†M` from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        self.adjoint().compose(self).max_deviation(&Self::identity())
    }

    pub fn is_unitary(&self) -> bool {
        self.unitarity_defect() <= TOLERANCE
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.max_deviation(&self.adjoint()) <= TOLERANCE
    }

    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Default for TwoLevelOperator {
    fn default() -> Self {
        Self::identity()
    }
}

impl Add for TwoLevelOperator {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self.entries;
        for (r, row) in out.iter_mut().enumerate() {
            for (c, v) in row.iter_mut().enumerate() {
                *v += rhs.entries[r][c];
            }
        }
        Self::new(out)
    }
}

impl Sub for TwoLevelOperator {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for TwoLevelOperator {
    type Output = Self;
    fn neg(self) -> Self {
        self * C64::new(-1.0, 0.0)
    }
}

impl Mul<C64> for TwoLevelOperator {
    type Output = Self;
    fn mul(self, z: C64) -> Self {
        let mut out = self.entries;
        out.iter_mut().flatten().for_each(|v| *v *= z);
        Self::new(out)
    }
}

impl Mul<f64> for TwoLevelOperator {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self * C64::new(s, 0.0)
    }
}

impl Mul for TwoLevelOperator {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.compose(&rhs)
    }
}

impl Mul<Qubit> for TwoLevelOperator {
    type Output = Qubit;
    fn mul(self, q: Qubit) -> Qubit {
        self.apply(&q)
    }
}

impl fmt::Display for TwoLevelOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.entries;
        write!(f, "[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

/// Matrix-vector product.
pub fn apply(op: &TwoLevelOperator, q: &Qubit) -> Qubit {
    op.apply(q)
}

/// `second · first`; `first` acts first.
pub fn compose(second: &TwoLevelOperator, first: &TwoLevelOperator) -> TwoLevelOperator {
    second.compose(first)
}

pub fn pauli_decompose(op: &TwoLevelOperator) -> PauliCoefficients {
    op.pauli_decompose()
}
