//! Dense complex linear algebra for small operator dimensions.
//!
//! Everything in this crate lives in Hilbert spaces of dimension at most a
//! few dozen, so all algorithms are the naive O(n³) ones: dense storage,
//! triple-loop products, and a cyclic Jacobi eigensolver for Hermitian
//! matrices. No attempt is made at sparsity or cache tuning.
//!
//! Qubit registers are indexed 1-based with qubit 1 as the *most significant*
//! tensor factor: the basis state ∣b₁b₂…bₙ⟩ maps to the integer index
//! b₁·2ⁿ⁻¹ + … + bₙ. Every operation that takes qubit indices follows this
//! convention.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Entrywise absolute tolerance for algebraic identities.
pub const ALGEBRA_TOL: f64 = 1e-12;
/// Tolerance for spectral checks (Hermiticity, trace, eigenvalue sums).
pub const SPECTRUM_TOL: f64 = 1e-10;
/// Tolerance for composed operations (e.g. a matrix square root squared back).
pub const COMPOSED_TOL: f64 = 1e-9;
/// Eigenvalues in [`EIG_CLAMP_FLOOR`, 0) are treated as roundoff and clamped
/// to zero; anything below the floor is a genuine PSD violation.
pub const EIG_CLAMP_FLOOR: f64 = -1e-10;
/// Eigenvalues below this are solver residue, not spectrum: the Jacobi sweep
/// terminates at off-diagonal norm 1e-14, which bounds how far a true zero
/// can drift. Square-rooting such residue would amplify it to ~1e-7, so the
/// square-root paths zero it out first.
pub const EIG_ZERO_FLOOR: f64 = 1e-13;

/// Off-diagonal Frobenius norm at which the Jacobi sweep stops.
const JACOBI_OFFDIAG_TOL: f64 = 1e-14;
const JACOBI_MAX_SWEEPS: usize = 64;

/// Dense square matrix of complex amplitudes, stored row-major.
#[derive(Clone, Debug)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Zero matrix of the given dimension.
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        ComplexMatrix { dim, entries: vec![Complex64::ZERO; dim * dim] }
    }

    /// Identity matrix of the given dimension.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::ONE;
        }
        m
    }

    /// Build from a row-major entry vector; the length must be `dim²`.
    pub fn from_vec(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim < 1 {
            return Err(Error::invalid("matrix dimension must be at least 1"));
        }
        if entries.len() != dim * dim {
            return Err(Error::invalid(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        Ok(ComplexMatrix { dim, entries })
    }

    /// Build from row-major real entries.
    pub fn from_real(dim: usize, entries: &[f64]) -> Result<Self> {
        Self::from_vec(dim, entries.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Diagonal matrix from real diagonal entries.
    pub fn diag(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &x) in values.iter().enumerate() {
            m[(i, i)] = Complex64::new(x, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj(&self) -> Self {
        ComplexMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z.conj()).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// Multiply every entry by a real scalar.
    pub fn scaled(&self, factor: f64) -> Self {
        ComplexMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    /// Kronecker (tensor) product; the result has dimension `self.dim * rhs.dim`.
    pub fn kron(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        let (da, db) = (self.dim, rhs.dim);
        let mut out = ComplexMatrix::zeros(da * db);
        for i in 0..da {
            for j in 0..da {
                let aij = self[(i, j)];
                for k in 0..db {
                    for l in 0..db {
                        out[(i * db + k, j * db + l)] = aij * rhs[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Largest entrywise absolute difference to `other`.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Tolerance-based equality: every entry within `eps` in absolute value.
    pub fn approx_eq(&self, other: &ComplexMatrix, eps: f64) -> bool {
        self.dim == other.dim && self.max_abs_diff(other) <= eps
    }

    /// [`approx_eq`](Self::approx_eq) at the default tolerance [`ALGEBRA_TOL`].
    pub fn approx_eq_default(&self, other: &ComplexMatrix) -> bool {
        self.approx_eq(other, ALGEBRA_TOL)
    }

    /// Largest deviation from Hermiticity, max |a_ij − conj(a_ji)|.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    /// Eigenvalues of a Hermitian matrix, sorted in descending order.
    ///
    /// The input must be Hermitian within [`SPECTRUM_TOL`].
    pub fn herm_eigvals(&self) -> Result<Vec<f64>> {
        self.check_hermitian()?;
        let (mut eigs, _) = jacobi_hermitian(self);
        eigs.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        Ok(eigs)
    }

    /// Full Hermitian eigendecomposition: eigenvalues in descending order and
    /// the matching orthonormal eigenvectors as columns.
    pub fn herm_eig(&self) -> Result<(Vec<f64>, ComplexMatrix)> {
        self.check_hermitian()?;
        let (eigs, vecs) = jacobi_hermitian(self);
        let mut order: Vec<usize> = (0..self.dim).collect();
        order.sort_by(|&a, &b| eigs[b].partial_cmp(&eigs[a]).expect("eigenvalues are finite"));
        let sorted_eigs: Vec<f64> = order.iter().map(|&i| eigs[i]).collect();
        let mut sorted_vecs = ComplexMatrix::zeros(self.dim);
        for (col, &src) in order.iter().enumerate() {
            for row in 0..self.dim {
                sorted_vecs[(row, col)] = vecs[(row, src)];
            }
        }
        Ok((sorted_eigs, sorted_vecs))
    }

    /// Square root of a Hermitian PSD matrix.
    ///
    /// Eigenvalues in [[`EIG_CLAMP_FLOOR`], 0) are clamped to zero; anything
    /// below the floor is rejected as a PSD violation.
    pub fn mat_sqrt_psd(&self) -> Result<ComplexMatrix> {
        let (eigs, vecs) = self.herm_eig()?;
        let roots = clamp_psd_eigenvalues(&eigs)?
            .into_iter()
            .map(|x| if x < EIG_ZERO_FLOOR { 0.0 } else { x.sqrt() })
            .collect::<Vec<_>>();
        // V · diag(√λ) · V†
        let mut out = ComplexMatrix::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut acc = Complex64::ZERO;
                for (k, &r) in roots.iter().enumerate() {
                    acc += vecs[(i, k)] * r * vecs[(j, k)].conj();
                }
                out[(i, j)] = acc;
            }
        }
        Ok(out)
    }

    fn check_hermitian(&self) -> Result<()> {
        let defect = self.hermiticity_defect();
        if defect > SPECTRUM_TOL {
            return Err(Error::invalid(format!(
                "matrix is not Hermitian: defect {defect:.3e} exceeds {SPECTRUM_TOL:.0e}"
            )));
        }
        Ok(())
    }

    fn offdiag_norm(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j {
                    acc += self[(i, j)].norm_sqr();
                }
            }
        }
        acc.sqrt()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i * self.dim + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix product");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self[(i, k)];
                if aik == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += aik * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix sum");
        ComplexMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix difference");
        ComplexMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Pauli X, [[0, 1], [1, 0]].
pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_real(2, &[0.0, 1.0, 1.0, 0.0]).expect("static 2x2")
}

/// Pauli Y, [[0, −i], [i, 0]].
pub fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::from_vec(
        2,
        vec![
            Complex64::ZERO,
            Complex64::new(0.0, -1.0),
            Complex64::new(0.0, 1.0),
            Complex64::ZERO,
        ],
    )
    .expect("static 2x2")
}

/// Pauli Z, [[1, 0], [0, −1]].
pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_real(2, &[1.0, 0.0, 0.0, -1.0]).expect("static 2x2")
}

/// Clamp eigenvalues in the roundoff window to zero; reject real violations.
fn clamp_psd_eigenvalues(eigs: &[f64]) -> Result<Vec<f64>> {
    eigs.iter()
        .map(|&x| {
            if x < EIG_CLAMP_FLOOR {
                Err(Error::invalid(format!(
                    "matrix is not PSD: eigenvalue {x:.3e} below {EIG_CLAMP_FLOOR:.0e}"
                )))
            } else {
                Ok(x.max(0.0))
            }
        })
        .collect()
}

/// Cyclic Jacobi eigensolver for Hermitian matrices.
///
/// Returns the (unsorted) real eigenvalues and the accumulated unitary whose
/// columns are the eigenvectors. Converges when the off-diagonal Frobenius
/// norm drops below [`JACOBI_OFFDIAG_TOL`]; quadratic convergence makes a
/// handful of sweeps enough at these dimensions.
fn jacobi_hermitian(m: &ComplexMatrix) -> (Vec<f64>, ComplexMatrix) {
    let n = m.dim;
    // symmetrize so roundoff-level defects cannot drift during sweeps
    let mut a = m.adjoint();
    for (x, y) in a.entries.iter_mut().zip(&m.entries) {
        *x = (*x + y) * 0.5;
    }
    let mut v = ComplexMatrix::identity(n);

    for _ in 0..JACOBI_MAX_SWEEPS {
        if a.offdiag_norm() < JACOBI_OFFDIAG_TOL {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let b = apq.norm();
                if b == 0.0 {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let phase = apq / b;
                let tau = (aqq - app) / (2.0 * b);
                // smaller-magnitude root of t² + 2τt − 1 = 0
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = phase * (t * c);

                // A ← R† A R with R the identity except
                // R[p][p] = c, R[p][q] = s, R[q][p] = −s̄, R[q][q] = c
                for i in 0..n {
                    let aip = a[(i, p)];
                    let aiq = a[(i, q)];
                    a[(i, p)] = c * aip - s.conj() * aiq;
                    a[(i, q)] = s * aip + c * aiq;
                }
                for j in 0..n {
                    let apj = a[(p, j)];
                    let aqj = a[(q, j)];
                    a[(p, j)] = c * apj - s * aqj;
                    a[(q, j)] = s.conj() * apj + c * aqj;
                }
                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = c * vip - s.conj() * viq;
                    v[(i, q)] = s * vip + c * viq;
                }
            }
        }
    }

    let eigs = (0..n).map(|i| a[(i, i)].re).collect();
    (eigs, v)
}

/// Pure-state amplitude vector over an n-qubit register.
///
/// The norm is checked at construction (finite, nonzero) but never cached;
/// consumers that need a unit vector call [`normalized`](Self::normalized).
#[derive(Clone, Debug)]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(n_qubits: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if n_qubits < 1 {
            return Err(Error::invalid("state must have at least one qubit"));
        }
        let want = 1usize << n_qubits;
        if amplitudes.len() != want {
            return Err(Error::invalid(format!(
                "expected {want} amplitudes for {n_qubits} qubits, got {}",
                amplitudes.len()
            )));
        }
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if !norm_sqr.is_finite() || norm_sqr == 0.0 {
            return Err(Error::invalid("state vector norm must be finite and nonzero"));
        }
        Ok(StateVector { n_qubits, amplitudes })
    }

    /// Computational basis state ∣index⟩.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::invalid(format!(
                "basis index {index} out of range for {n_qubits} qubits"
            )));
        }
        let mut amps = vec![Complex64::ZERO; dim];
        amps[index] = Complex64::ONE;
        StateVector::new(n_qubits, amps)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Unit-norm copy.
    pub fn normalized(&self) -> StateVector {
        let n = self.norm();
        StateVector {
            n_qubits: self.n_qubits,
            amplitudes: self.amplitudes.iter().map(|z| z / n).collect(),
        }
    }
}

/// Density matrix over an n-qubit register.
///
/// Construction enforces Hermiticity and unit trace within [`SPECTRUM_TOL`]
/// and positive semidefiniteness up to the [`EIG_CLAMP_FLOOR`] roundoff
/// window, so a value of this type is always a valid (numerical) state.
#[derive(Clone, Debug)]
pub struct DensityMatrix {
    n_qubits: usize,
    mat: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(n_qubits: usize, mat: ComplexMatrix) -> Result<Self> {
        if n_qubits < 1 {
            return Err(Error::invalid("density matrix must cover at least one qubit"));
        }
        let want = 1usize << n_qubits;
        if mat.dim() != want {
            return Err(Error::invalid(format!(
                "expected dimension {want} for {n_qubits} qubits, got {}",
                mat.dim()
            )));
        }
        let defect = mat.hermiticity_defect();
        if defect > SPECTRUM_TOL {
            return Err(Error::invalid(format!(
                "density matrix is not Hermitian: defect {defect:.3e}"
            )));
        }
        let tr = mat.trace();
        if (tr.re - 1.0).abs() > SPECTRUM_TOL || tr.im.abs() > SPECTRUM_TOL {
            return Err(Error::invalid(format!(
                "density matrix trace {tr} differs from 1"
            )));
        }
        let (eigs, _) = jacobi_hermitian(&mat);
        if let Some(bad) = eigs.iter().find(|&&x| x < EIG_CLAMP_FLOOR) {
            return Err(Error::invalid(format!(
                "density matrix is not PSD: eigenvalue {bad:.3e}"
            )));
        }
        Ok(DensityMatrix { n_qubits, mat })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    /// Maximally mixed state I/2ⁿ.
    pub fn maximally_mixed(n_qubits: usize) -> Result<Self> {
        let dim = 1usize << n_qubits;
        DensityMatrix::new(n_qubits, ComplexMatrix::identity(dim).scaled(1.0 / dim as f64))
    }

    /// Trace out every qubit not listed in `keep` (1-based indices, qubit 1
    /// most significant). `keep` must be a nonempty proper subset of the
    /// register; the kept qubits appear in ascending position order.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let n = self.n_qubits;
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        if kept.len() != keep.len() {
            return Err(Error::invalid("duplicate qubit index in keep set"));
        }
        if kept.is_empty() {
            return Err(Error::invalid("keep set must be nonempty"));
        }
        if kept.len() == n {
            return Err(Error::invalid("keep set must be a proper subset of the register"));
        }
        if kept.iter().any(|&q| q < 1 || q > n) {
            return Err(Error::invalid(format!(
                "keep set {kept:?} outside register 1..={n}"
            )));
        }
        let traced: Vec<usize> = (1..=n).filter(|q| !kept.contains(q)).collect();

        // scatter the bits of a compact index onto the listed qubit positions
        let place = |qubits: &[usize], bits: usize| -> usize {
            let mut idx = 0usize;
            for (j, &q) in qubits.iter().enumerate() {
                let bit = (bits >> (qubits.len() - 1 - j)) & 1;
                idx |= bit << (n - q);
            }
            idx
        };

        let kd = 1usize << kept.len();
        let td = 1usize << traced.len();
        let mut out = ComplexMatrix::zeros(kd);
        for a in 0..kd {
            let row_keep = place(&kept, a);
            for b in 0..kd {
                let col_keep = place(&kept, b);
                let mut acc = Complex64::ZERO;
                for t in 0..td {
                    let env = place(&traced, t);
                    acc += self.mat[(row_keep | env, col_keep | env)];
                }
                out[(a, b)] = acc;
            }
        }
        DensityMatrix::new(kept.len(), out)
    }
}
