//! Pauli correlation tomography and two-qubit entanglement measures.

use nalgebra::{Matrix3, Matrix4, SymmetricEigen};

use crate::density::{kron, pauli, spin_flip, TwoQubitDensity};
use crate::error::{Error, Result};
use crate::C64;

/// Imaginary parts of Pauli expectations above this are a tomography error.
pub const TOMOGRAPHY_IMAG_TOL: f64 = 1e-12;

/// Eigenvalues of `ρ` below this are numerically indistinguishable from zero
/// and are dropped before taking square roots.
const RANK_TOL: f64 = 1e-13;

/// Eigenvalues below this are treated as a genuinely broken input.
const INSTABILITY_TOL: f64 = -1e-8;

/// The 3×3 real matrix `t_ij = Tr[ρ σ_i ⊗ σ_j]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationMatrix(Matrix3<f64>);

impl CorrelationMatrix {
    pub fn from_matrix(t: Matrix3<f64>) -> Self {
        Self(t)
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.0
    }

    /// `U = TᵀT`.
    pub fn gram(&self) -> Matrix3<f64> {
        self.0.transpose() * self.0
    }

    /// Eigenvalues of `TᵀT`, descending.
    pub fn gram_eigenvalues(&self) -> [f64; 3] {
        let mut ev: Vec<f64> = SymmetricEigen::new(self.gram())
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(|a, b| b.total_cmp(a));
        [ev[0], ev[1], ev[2]]
    }

    /// Singular values of `T`, descending.
    pub fn singular_values(&self) -> [f64; 3] {
        let mut sv: Vec<f64> = self.0.singular_values().iter().copied().collect();
        sv.sort_by(|a, b| b.total_cmp(a));
        [sv[0], sv[1], sv[2]]
    }
}

/// Pauli–Pauli expectation values of `rho`.
pub fn correlation_matrix(rho: &TwoQubitDensity) -> Result<CorrelationMatrix> {
    let mut t = Matrix3::zeros();
    for i in 0..3 {
        for j in 0..3 {
            let v = rho.expectation(&kron(&pauli(i), &pauli(j)));
            if v.im.abs() > TOMOGRAPHY_IMAG_TOL {
                return Err(Error::Tomography(format!(
                    "Tr[ρ σ{i}⊗σ{j}] has imaginary part {:e}",
                    v.im
                )));
            }
            t[(i, j)] = v.re;
        }
    }
    Ok(CorrelationMatrix(t))
}

/// `ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`, conjugation taken in the computational basis.
pub fn spin_flipped(rho: &TwoQubitDensity) -> Matrix4<C64> {
    let y = spin_flip();
    y * rho.matrix().conjugate() * y
}

/// Hermitian square root of a PSD matrix, with near-zero eigenvalues
/// snapped to zero.
fn psd_sqrt(m: &Matrix4<C64>) -> Result<Matrix4<C64>> {
    let eig = SymmetricEigen::new(*m);
    let mut roots = eig.eigenvalues;
    for w in roots.iter_mut() {
        if *w < INSTABILITY_TOL {
            return Err(Error::NumericalInstability(format!(
                "density matrix eigenvalue {w:e} is negative"
            )));
        }
        *w = if *w < RANK_TOL { 0.0 } else { w.sqrt() };
    }
    let v = eig.eigenvectors;
    let d = Matrix4::from_diagonal(&roots.map(|x| C64::new(x, 0.0)));
    Ok(v * d * v.adjoint())
}

/// Square roots of the eigenvalues of `ρρ̃`, descending.
///
/// These are the singular values of `√ρ (σ_y⊗σ_y) √ρ*`, which avoids taking
/// square roots of eigenvalues that are zero up to rounding.
pub fn wootters_roots(rho: &TwoQubitDensity) -> Result<[f64; 4]> {
    let s = psd_sqrt(rho.matrix())?;
    let m = s * spin_flip() * s.conjugate();
    let mut sv: Vec<f64> = m.singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    Ok([sv[0], sv[1], sv[2], sv[3]])
}

/// Wootters concurrence `max(0, √λ₁ − √λ₂ − √λ₃ − √λ₄)`.
pub fn concurrence(rho: &TwoQubitDensity) -> Result<f64> {
    let l = wootters_roots(rho)?;
    Ok((l[0] - l[1] - l[2] - l[3]).max(0.0))
}

/// Partial transpose over Alice's qubit.
pub fn partial_transpose(rho: &TwoQubitDensity) -> Matrix4<C64> {
    let m = rho.matrix();
    Matrix4::from_fn(|row, col| {
        let (a, b) = (row / 2, row % 2);
        let (ap, bp) = (col / 2, col % 2);
        m[(2 * ap + b, 2 * a + bp)]
    })
}

/// `(‖ρ^{T_A}‖₁ − 1)/2`, the sum of the moduli of the negative eigenvalues of
/// the partial transpose. A Bell state has negativity 1/2.
pub fn negativity(rho: &TwoQubitDensity) -> f64 {
    SymmetricEigen::new(partial_transpose(rho))
        .eigenvalues
        .iter()
        .filter(|&&x| x < 0.0)
        .fold(0.0, |acc, x| acc - x)
}
