//! Quantum channels: the single-qubit filtering operation, the depolarizing
//! noise channel, and the machinery to lift either onto an n-qubit register.
//!
//! Filtering is non-trace-preserving: applying it post-selects on the filter
//! outcome, so [`apply_filter`] renormalizes the state and reports the
//! success probability separately. The depolarizing channel is a proper
//! (trace-preserving) Kraus channel.

use std::collections::BTreeSet;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{pauli_x, pauli_z, ComplexMatrix, DensityMatrix};

/// Kraus completeness must hold to this entrywise tolerance.
pub const KRAUS_COMPLETENESS_TOL: f64 = 1e-12;
/// Post-filter traces below this are treated as exact annihilation rather
/// than roundoff.
pub const FILTER_ANNIHILATION_THRESHOLD: f64 = 1e-14;

/// Filtering parameters: bias `k` in [0, 1] and the 1-based target qubit.
///
/// `k = 1/2` biases neither basis state and acts as the identity up to an
/// overall rescaling; `k = 0` and `k = 1` project onto ∣0⟩ and ∣1⟩.
#[derive(Clone, Copy, Debug)]
pub struct FilterParams {
    k: f64,
    target_qubit: usize,
}

impl FilterParams {
    pub fn new(k: f64, target_qubit: usize) -> Result<Self> {
        check_unit_interval(k, "filtering parameter k")?;
        if target_qubit < 1 {
            return Err(Error::invalid("target qubit indices are 1-based"));
        }
        Ok(FilterParams { k, target_qubit })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn target_qubit(&self) -> usize {
        self.target_qubit
    }
}

/// Noise parameters: dimensionless time `gamma_t` = Γt ≥ 0 and the set of
/// qubits exposed to the depolarizing environment.
#[derive(Clone, Debug)]
pub struct NoiseParams {
    gamma_t: f64,
    noisy_qubits: BTreeSet<usize>,
}

impl NoiseParams {
    pub fn new(gamma_t: f64, noisy_qubits: impl IntoIterator<Item = usize>) -> Result<Self> {
        if !gamma_t.is_finite() || gamma_t < 0.0 {
            return Err(Error::invalid(format!(
                "gamma_t must be finite and nonnegative, got {gamma_t}"
            )));
        }
        let noisy_qubits: BTreeSet<usize> = noisy_qubits.into_iter().collect();
        if noisy_qubits.is_empty() {
            return Err(Error::invalid("noisy qubit set must be nonempty"));
        }
        if noisy_qubits.contains(&0) {
            return Err(Error::invalid("qubit indices are 1-based"));
        }
        Ok(NoiseParams { gamma_t, noisy_qubits })
    }

    pub fn gamma_t(&self) -> f64 {
        self.gamma_t
    }

    pub fn noisy_qubits(&self) -> &BTreeSet<usize> {
        &self.noisy_qubits
    }
}

/// A finite set of Kraus operators satisfying the completeness relation
/// Σ Kᵢ† Kᵢ = I within [`KRAUS_COMPLETENESS_TOL`].
#[derive(Clone, Debug)]
pub struct KrausSet {
    ops: Vec<ComplexMatrix>,
}

impl KrausSet {
    pub fn new(ops: Vec<ComplexMatrix>) -> Result<Self> {
        let dim = match ops.first() {
            Some(op) => op.dim(),
            None => return Err(Error::invalid("Kraus set must contain at least one operator")),
        };
        if ops.iter().any(|op| op.dim() != dim) {
            return Err(Error::invalid("Kraus operators must share one dimension"));
        }
        let mut sum = ComplexMatrix::zeros(dim);
        for op in &ops {
            sum = &sum + &(&op.adjoint() * op);
        }
        let defect = sum.max_abs_diff(&ComplexMatrix::identity(dim));
        if defect > KRAUS_COMPLETENESS_TOL {
            return Err(Error::invalid(format!(
                "Kraus completeness violated: defect {defect:.3e}"
            )));
        }
        Ok(KrausSet { ops })
    }

    pub fn ops(&self) -> &[ComplexMatrix] {
        &self.ops
    }

    /// Lift a single-qubit Kraus set onto an n-qubit register, acting
    /// independently on each qubit in `targets` and as the identity
    /// elsewhere. Operator tuples are enumerated lexicographically, ordered
    /// by ascending target qubit.
    pub fn lift(&self, n_qubits: usize, targets: &BTreeSet<usize>) -> Result<KrausSet> {
        if self.ops[0].dim() != 2 {
            return Err(Error::invalid("only single-qubit Kraus sets can be lifted"));
        }
        if targets.is_empty() {
            return Err(Error::invalid("target set must be nonempty"));
        }
        if targets.iter().any(|&q| q < 1 || q > n_qubits) {
            return Err(Error::invalid(format!(
                "targets {targets:?} outside register 1..={n_qubits}"
            )));
        }
        let targets: Vec<usize> = targets.iter().copied().collect();
        let base = self.ops.len();
        let tuples = base.pow(targets.len() as u32);
        let identity = ComplexMatrix::identity(2);

        let mut lifted = Vec::with_capacity(tuples);
        for tuple in 0..tuples {
            // digits of `tuple` in base `base`, most significant digit first
            let mut choice = vec![0usize; targets.len()];
            let mut rest = tuple;
            for slot in (0..targets.len()).rev() {
                choice[slot] = rest % base;
                rest /= base;
            }
            let mut op: Option<ComplexMatrix> = None;
            for q in 1..=n_qubits {
                let factor = match targets.iter().position(|&t| t == q) {
                    Some(slot) => &self.ops[choice[slot]],
                    None => &identity,
                };
                op = Some(match op {
                    Some(acc) => acc.kron(factor),
                    None => factor.clone(),
                });
            }
            lifted.push(op.expect("n_qubits >= 1"));
        }
        KrausSet::new(lifted)
    }

    /// Apply the channel: ρ ↦ Σ Kᵢ ρ Kᵢ†.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        if self.ops[0].dim() != rho.dim() {
            return Err(Error::invalid(format!(
                "Kraus dimension {} does not match state dimension {}",
                self.ops[0].dim(),
                rho.dim()
            )));
        }
        let mut out = ComplexMatrix::zeros(rho.dim());
        for op in &self.ops {
            out = &out + &(&(op * rho.matrix()) * &op.adjoint());
        }
        DensityMatrix::new(rho.n_qubits(), out)
    }
}

/// The single-qubit filter operator diag(√(1−k), √k).
pub fn filter_op(k: f64) -> Result<ComplexMatrix> {
    check_unit_interval(k, "filtering parameter k")?;
    Ok(ComplexMatrix::diag(&[(1.0 - k).sqrt(), k.sqrt()]))
}

/// Embed a single-qubit operator at position `target` (1-based) of an
/// n-qubit register, tensoring with the identity everywhere else.
pub fn lift(op: &ComplexMatrix, n_qubits: usize, target: usize) -> Result<ComplexMatrix> {
    if op.dim() != 2 {
        return Err(Error::invalid("lift expects a single-qubit operator"));
    }
    if target < 1 || target > n_qubits {
        return Err(Error::invalid(format!(
            "target {target} outside register 1..={n_qubits}"
        )));
    }
    let left = 1usize << (target - 1);
    let right = 1usize << (n_qubits - target);
    let mut out = ComplexMatrix::identity(left).kron(op);
    if right > 1 {
        out = out.kron(&ComplexMatrix::identity(right));
    }
    Ok(out)
}

/// Result of a filtering operation: the renormalized post-selected state and
/// the probability that the filter outcome occurs.
#[derive(Clone, Debug)]
pub struct FilterOutcome {
    pub state: DensityMatrix,
    pub success_prob: f64,
}

/// Apply the filter to one qubit: ρ ↦ M ρ M† / Tr(M ρ M†) with
/// M = F(k) on the target qubit and the identity elsewhere. The trace of the
/// unnormalized output is the success probability.
pub fn apply_filter(rho: &DensityMatrix, params: &FilterParams) -> Result<FilterOutcome> {
    let m = lift(&filter_op(params.k)?, rho.n_qubits(), params.target_qubit)?;
    let unnormalized = &(&m * rho.matrix()) * &m.adjoint();
    let prob = unnormalized.trace().re;
    if prob < FILTER_ANNIHILATION_THRESHOLD {
        return Err(Error::FilterAnnihilated { prob });
    }
    let state = DensityMatrix::new(rho.n_qubits(), unnormalized.scaled(1.0 / prob))?;
    Ok(FilterOutcome { state, success_prob: prob.min(1.0) })
}

/// The four depolarizing Kraus operators at error probability `p`:
/// √(1−p)·I plus √(p/3) times each Pauli.
pub fn depolarizing_kraus(p: f64) -> Result<KrausSet> {
    check_unit_interval(p, "depolarizing probability p")?;
    let w = (p / 3.0).sqrt();
    // y-type operator with the transposed sign convention, [[0, i], [-i, 0]];
    // the channel is unchanged since every operator enters conjugated
    let y_variant = ComplexMatrix::from_vec(
        2,
        vec![
            Complex64::ZERO,
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, -1.0),
            Complex64::ZERO,
        ],
    )?;
    KrausSet::new(vec![
        ComplexMatrix::identity(2).scaled((1.0 - p).sqrt()),
        pauli_x().scaled(w),
        y_variant.scaled(w),
        pauli_z().scaled(w),
    ])
}

/// Depolarizing probability after dimensionless time Γt: p = 1 − e^(−Γt/2).
pub fn p_of_time(gamma_t: f64) -> Result<f64> {
    if !gamma_t.is_finite() || gamma_t < 0.0 {
        return Err(Error::invalid(format!(
            "gamma_t must be finite and nonnegative, got {gamma_t}"
        )));
    }
    Ok(1.0 - (-gamma_t / 2.0).exp())
}

/// Expose the listed qubits to depolarizing noise for dimensionless time
/// `gamma_t`, leaving all other qubits untouched.
pub fn apply_noise(rho: &DensityMatrix, params: &NoiseParams) -> Result<DensityMatrix> {
    let n = rho.n_qubits();
    if params.noisy_qubits.iter().any(|&q| q > n) {
        return Err(Error::invalid(format!(
            "noisy qubits {:?} outside register 1..={n}",
            params.noisy_qubits
        )));
    }
    let p = p_of_time(params.gamma_t)?;
    depolarizing_kraus(p)?.lift(n, &params.noisy_qubits)?.apply(rho)
}

fn check_unit_interval(x: f64, what: &str) -> Result<()> {
    if !(0.0..=1.0).contains(&x) || x.is_nan() {
        return Err(Error::invalid(format!("{what} must lie in [0, 1], got {x}")));
    }
    Ok(())
}
