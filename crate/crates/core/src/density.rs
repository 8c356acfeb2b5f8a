//! Two-qubit density operators and the Pauli algebra they are probed with.

use nalgebra::{Matrix2, Matrix4, SymmetricEigen, Vector4};

use crate::error::{Error, Result};
use crate::C64;

pub const HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-12;
/// Smallest eigenvalue still accepted as positive semidefinite.
pub const PSD_TOL: f64 = -1e-10;

const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
const ONE: C64 = C64 { re: 1.0, im: 0.0 };
const I: C64 = C64 { re: 0.0, im: 1.0 };

/// `σ_x`, `σ_y`, `σ_z` for `axis = 0, 1, 2`.
pub fn pauli(axis: usize) -> Matrix2<C64> {
    match axis {
        0 => Matrix2::new(ZERO, ONE, ONE, ZERO),
        1 => Matrix2::new(ZERO, -I, I, ZERO),
        2 => Matrix2::new(ONE, ZERO, ZERO, -ONE),
        _ => panic!("Pauli axis {axis} out of range"),
    }
}

/// `n·σ` for a real 3-vector `n`.
pub fn pauli_dot(n: &nalgebra::Vector3<f64>) -> Matrix2<C64> {
    (0..3).fold(Matrix2::zeros(), |acc, k| {
        acc + pauli(k) * C64::new(n[k], 0.0)
    })
}

/// Kronecker product of two single-qubit operators, first factor = Alice.
pub fn kron(a: &Matrix2<C64>, b: &Matrix2<C64>) -> Matrix4<C64> {
    Matrix4::from_fn(|i, j| a[(i / 2, j / 2)] * b[(i % 2, j % 2)])
}

/// `σ_y ⊗ σ_y`, the two-qubit spin flip.
pub fn spin_flip() -> Matrix4<C64> {
    kron(&pauli(1), &pauli(1))
}

/// A 4×4 Hermitian, unit-trace, positive semidefinite matrix in the basis
/// `|00⟩, |01⟩, |10⟩, |11⟩` (Alice first).
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitDensity(Matrix4<C64>);

impl TwoQubitDensity {
    pub fn new(matrix: Matrix4<C64>) -> Result<Self> {
        if matrix
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::InvalidDensity("non-finite entry".into()));
        }
        let rho = Self(matrix);
        let herm = rho.hermiticity_residual();
        if herm > HERMITIAN_TOL {
            return Err(Error::InvalidDensity(format!(
                "not Hermitian: max |ρ − ρ†| = {herm:e}"
            )));
        }
        let tr = rho.trace();
        if (tr - 1.0).abs() > TRACE_TOL {
            return Err(Error::InvalidDensity(format!("trace {tr} ≠ 1")));
        }
        let min = rho.min_eigenvalue();
        if min < PSD_TOL {
            return Err(Error::InvalidDensity(format!(
                "not positive semidefinite: min eigenvalue {min:e}"
            )));
        }
        Ok(rho)
    }

    /// For matrices that are density operators by construction.
    pub(crate) fn from_trusted(matrix: Matrix4<C64>) -> Self {
        Self(matrix)
    }

    /// Projector onto a (normalized on entry) pure state.
    pub fn pure(psi: &Vector4<C64>) -> Result<Self> {
        let n = psi.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::InvalidDensity("zero state vector".into()));
        }
        let psi = psi / C64::new(n, 0.0);
        Self::new(psi * psi.adjoint())
    }

    /// `(|00⟩ + |11⟩)/√2`.
    pub fn bell_phi_plus() -> Self {
        let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self::pure(&Vector4::new(h, ZERO, ZERO, h)).expect("Bell state is valid")
    }

    /// `1/4`.
    pub fn maximally_mixed() -> Self {
        Self(Matrix4::identity() * C64::new(0.25, 0.0))
    }

    /// `ρ_A ⊗ ρ_B` for two single-qubit states given as Bloch vectors.
    pub fn product_from_bloch(
        alice: &nalgebra::Vector3<f64>,
        bob: &nalgebra::Vector3<f64>,
    ) -> Result<Self> {
        let half = C64::new(0.5, 0.0);
        let a = (Matrix2::identity() + pauli_dot(alice)) * half;
        let b = (Matrix2::identity() + pauli_dot(bob)) * half;
        Self::new(kron(&a, &b))
    }

    pub fn matrix(&self) -> &Matrix4<C64> {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix4<C64> {
        self.0
    }

    pub fn trace(&self) -> f64 {
        self.0.trace().re
    }

    pub fn hermiticity_residual(&self) -> f64 {
        (self.0 - self.0.adjoint())
            .iter()
            .fold(0.0, |m, z| m.max(z.norm()))
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let mut ev: Vec<f64> = SymmetricEigen::new(self.0)
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(f64::total_cmp);
        [ev[0], ev[1], ev[2], ev[3]]
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    /// `Tr[ρ O]` for a two-qubit operator `O`.
    pub fn expectation(&self, op: &Matrix4<C64>) -> C64 {
        (self.0 * op).trace()
    }

    /// `(U ⊗ V) ρ (U ⊗ V)†`.
    pub fn rotate_local(&self, u: &Matrix2<C64>, v: &Matrix2<C64>) -> Result<Self> {
        let w = kron(u, v);
        Self::new(w * self.0 * w.adjoint())
    }

    /// Largest entry-wise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &TwoQubitDensity) -> f64 {
        (self.0 - other.0).iter().fold(0.0, |m, z| m.max(z.norm()))
    }
}
