//! Desk-scale simulation of single local filtering on 3-qubit pure states.
//!
//! A local filter diag(√(1−k), √k) applied to one qubit of an entangled state
//! redistributes entanglement among the two-qubit subsystems: biasing the
//! filter concentrates concurrence (and purity) in the pair that was not
//! touched, at the cost of the pairs containing the filtered qubit. The same
//! filter, applied after part of the register has decohered under
//! depolarizing noise, delays or hastens the finite-time death of the pair
//! entanglement depending on the bias.
//!
//! The crate is organized in layers:
//!
//! - [`linalg`]: dense complex matrices, Kronecker products, partial trace,
//!   and a Jacobi eigensolver for the Hermitian problems that arise.
//! - [`states`]: the W, GHZ, and W-W̄ superposition constructors.
//! - [`channels`]: the filtering operation, the depolarizing Kraus channel,
//!   and lifting of single-qubit operators onto the register.
//! - [`measures`]: Wootters concurrence, purity, and mixedness.
//! - [`experiments`]: parameter sweeps, closed-form references, and
//!   detection of entanglement-death onsets.
//! - [`cli`]: the `qfilter` binary's figure/point/sweep/esd commands.
//!
//! ```
//! use qfilter::channels::{apply_filter, FilterParams};
//! use qfilter::measures::concurrence;
//! use qfilter::states::{density, w3};
//!
//! // bias the filter fully towards ∣0⟩ on qubit 1: the (2,3) pair of the
//! // W state becomes a Bell pair, at success probability 2/3
//! let rho = density(&w3()).unwrap();
//! let outcome = apply_filter(&rho, &FilterParams::new(0.0, 1).unwrap()).unwrap();
//! let pair = outcome.state.partial_trace(&[2, 3]).unwrap();
//! assert!((concurrence(&pair).unwrap() - 1.0).abs() < 1e-10);
//! assert!((outcome.success_prob - 2.0 / 3.0).abs() < 1e-12);
//! ```

pub mod channels;
pub mod cli;
mod error;
pub mod experiments;
pub mod linalg;
pub mod measures;
pub mod states;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, DensityMatrix, StateVector};
