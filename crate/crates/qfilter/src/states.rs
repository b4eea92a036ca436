//! Constructors for the named 3-qubit pure states.
//!
//! Basis convention: ∣b₁b₂b₃⟩ sits at index b₁·4 + b₂·2 + b₃, i.e. qubit 1 is
//! the most significant tensor factor.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix, StateVector};

/// The 3-qubit W state, (∣001⟩ + ∣010⟩ + ∣100⟩)/√3.
pub fn w3() -> StateVector {
    superposition(&[0b001, 0b010, 0b100])
}

/// The obverse W state, (∣110⟩ + ∣101⟩ + ∣011⟩)/√3.
pub fn wbar3() -> StateVector {
    superposition(&[0b110, 0b101, 0b011])
}

/// The 3-qubit GHZ state, (∣000⟩ + ∣111⟩)/√2.
pub fn ghz3() -> StateVector {
    superposition(&[0b000, 0b111])
}

/// Equal superposition of the W and obverse-W states: amplitude 1/√6 on all
/// six basis states of Hamming weight 1 or 2.
pub fn wwbar3() -> StateVector {
    superposition(&[0b001, 0b010, 0b011, 0b100, 0b101, 0b110])
}

fn superposition(indices: &[usize]) -> StateVector {
    let amp = Complex64::new(1.0 / (indices.len() as f64).sqrt(), 0.0);
    let mut amps = vec![Complex64::ZERO; 8];
    for &i in indices {
        amps[i] = amp;
    }
    StateVector::new(3, amps).expect("fixed 3-qubit constructor")
}

/// Density matrix of a pure state: the outer product of `psi` with itself,
/// normalized to unit trace.
pub fn density(psi: &StateVector) -> Result<DensityMatrix> {
    let norm = psi.norm();
    if !norm.is_finite() || norm == 0.0 {
        return Err(Error::invalid("cannot form density of a zero state vector"));
    }
    let unit = psi.normalized();
    let amps = unit.amplitudes();
    let dim = amps.len();
    let mut mat = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            mat[(i, j)] = amps[i] * amps[j].conj();
        }
    }
    DensityMatrix::new(psi.n_qubits(), mat)
}

/// Selector for the three states the sweep machinery knows how to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NamedState {
    W3,
    #[serde(rename = "GHZ3")]
    Ghz3,
    #[serde(rename = "WWbar3")]
    WwBar3,
}

impl NamedState {
    pub fn vector(self) -> StateVector {
        match self {
            NamedState::W3 => w3(),
            NamedState::Ghz3 => ghz3(),
            NamedState::WwBar3 => wwbar3(),
        }
    }

    pub fn density(self) -> DensityMatrix {
        density(&self.vector()).expect("named states are nonzero")
    }
}

impl fmt::Display for NamedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NamedState::W3 => "W3",
            NamedState::Ghz3 => "GHZ3",
            NamedState::WwBar3 => "WWbar3",
        })
    }
}

impl FromStr for NamedState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "w3" | "w" => Ok(NamedState::W3),
            "ghz3" | "ghz" => Ok(NamedState::Ghz3),
            "wwbar3" | "wwbar" => Ok(NamedState::WwBar3),
            other => Err(Error::invalid(format!(
                "unknown state '{other}' (expected w3, ghz3, or wwbar3)"
            ))),
        }
    }
}
