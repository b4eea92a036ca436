//! Entanglement and mixedness quantifiers for small density matrices.
//!
//! The two-qubit concurrence is Wootters' measure: with
//! ρ̃ = (σy⊗σy) ρ* (σy⊗σy), take the square roots λ₁ ≥ λ₂ ≥ λ₃ ≥ λ₄ of the
//! eigenvalues of ρρ̃ and report max{0, λ₁ − λ₂ − λ₃ − λ₄}. ρρ̃ itself is not
//! Hermitian, so the implementation diagonalizes √ρ·ρ̃·√ρ instead, which has
//! the same spectrum and keeps everything inside the Hermitian eigensolver.

use crate::error::{Error, Result};
use crate::linalg::{pauli_y, ComplexMatrix, DensityMatrix, EIG_CLAMP_FLOOR, EIG_ZERO_FLOOR};

/// Concurrence values closer to zero than this are reported as exactly zero,
/// which keeps sudden-death onset detection stable against roundoff.
pub const CONCURRENCE_ZERO_SNAP: f64 = 1e-12;

/// The spin-flipped state ρ̃ = (σy⊗σy) ρ* (σy⊗σy), with the conjugate taken
/// entrywise in the computational basis. Two-qubit states only.
pub fn spin_flip(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    require_two_qubits(rho)?;
    let yy = pauli_y().kron(&pauli_y());
    Ok(&(&yy * &rho.matrix().conj()) * &yy)
}

/// The sorted square roots λ₁ ≥ … ≥ λ₄ of the eigenvalues of ρρ̃.
pub fn concurrence_spectrum(rho: &DensityMatrix) -> Result<[f64; 4]> {
    require_two_qubits(rho)?;
    let root = rho.matrix().mat_sqrt_psd()?;
    let product = &(&root * &spin_flip(rho)?) * &root;
    // symmetrize away roundoff before handing to the Hermitian solver
    let herm = {
        let adj = product.adjoint();
        (&product + &adj).scaled(0.5)
    };
    let eigs = herm.herm_eigvals()?;
    let mut lambdas = [0.0f64; 4];
    for (slot, &mu) in lambdas.iter_mut().zip(&eigs) {
        if mu < EIG_CLAMP_FLOOR {
            return Err(Error::invalid(format!(
                "spin-flip spectrum is not PSD: eigenvalue {mu:.3e}"
            )));
        }
        *slot = if mu < EIG_ZERO_FLOOR { 0.0 } else { mu.sqrt() };
    }
    Ok(lambdas)
}

/// Wootters concurrence of a two-qubit density matrix, in [0, 1].
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    let [l1, l2, l3, l4] = concurrence_spectrum(rho)?;
    let c = (l1 - l2 - l3 - l4).max(0.0);
    Ok(if c < CONCURRENCE_ZERO_SNAP { 0.0 } else { c })
}

/// Purity Tr(ρ²): 1 for pure states, 1/dim for the maximally mixed state.
pub fn purity(rho: &DensityMatrix) -> f64 {
    (rho.matrix() * rho.matrix()).trace().re
}

/// Mixedness 1 − Tr(ρ²).
pub fn mixedness(rho: &DensityMatrix) -> f64 {
    1.0 - purity(rho)
}

fn require_two_qubits(rho: &DensityMatrix) -> Result<()> {
    if rho.n_qubits() != 2 {
        return Err(Error::invalid(format!(
            "expected a 2-qubit state, got {} qubits",
            rho.n_qubits()
        )));
    }
    Ok(())
}
