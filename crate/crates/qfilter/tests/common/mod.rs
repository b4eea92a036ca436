//! Helpers shared by the integration test binaries.

#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;

use qfilter::{ComplexMatrix, DensityMatrix};

/// Random density matrix from a Ginibre-style construction: ρ ∝ GG† + εI.
/// The small ridge keeps the trace comfortably away from zero.
pub fn random_density(rng: &mut impl Rng, n_qubits: usize) -> DensityMatrix {
    let dim = 1usize << n_qubits;
    let g = random_matrix(rng, dim);
    let mut m = &g * &g.adjoint();
    for i in 0..dim {
        m[(i, i)] += Complex64::new(1e-3, 0.0);
    }
    let tr = m.trace().re;
    DensityMatrix::new(n_qubits, m.scaled(1.0 / tr)).expect("GG† + εI is a valid state")
}

/// Dense matrix with entries uniform in the complex unit square.
pub fn random_matrix(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    let entries = (0..dim * dim)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    ComplexMatrix::from_vec(dim, entries).expect("square entry count")
}

/// Random single-qubit unitary from an exact angle parameterization.
pub fn random_unitary2(rng: &mut impl Rng) -> ComplexMatrix {
    let tau = std::f64::consts::TAU;
    let theta = rng.random_range(0.0..tau);
    let alpha = rng.random_range(0.0..tau);
    let beta = rng.random_range(0.0..tau);
    let (c, s) = (theta.cos(), theta.sin());
    let e = |phi: f64| Complex64::new(phi.cos(), phi.sin());
    ComplexMatrix::from_vec(
        2,
        vec![e(alpha) * c, e(beta) * s, -e(-beta) * s, e(-alpha) * c],
    )
    .expect("static 2x2")
}

/// Random unitary of any dimension via Gram-Schmidt on a random matrix.
pub fn random_unitary(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    loop {
        let g = random_matrix(rng, dim);
        if let Some(u) = gram_schmidt(&g) {
            return u;
        }
    }
}

fn gram_schmidt(g: &ComplexMatrix) -> Option<ComplexMatrix> {
    let dim = g.dim();
    let mut cols: Vec<Vec<Complex64>> = (0..dim)
        .map(|j| (0..dim).map(|i| g[(i, j)]).collect())
        .collect();
    for j in 0..dim {
        for prev in 0..j {
            let proj: Complex64 = (0..dim).map(|i| cols[prev][i].conj() * cols[j][i]).sum();
            let corrections: Vec<Complex64> = cols[prev].iter().map(|&z| proj * z).collect();
            for (z, correction) in cols[j].iter_mut().zip(corrections) {
                *z -= correction;
            }
        }
        let norm: f64 = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-8 {
            return None;
        }
        for z in &mut cols[j] {
            *z /= norm;
        }
    }
    let mut u = ComplexMatrix::zeros(dim);
    for j in 0..dim {
        for i in 0..dim {
            u[(i, j)] = cols[j][i];
        }
    }
    Some(u)
}

/// Conjugate a density matrix by a unitary of matching dimension.
pub fn conjugate(rho: &DensityMatrix, u: &ComplexMatrix) -> DensityMatrix {
    let m = &(u * rho.matrix()) * &u.adjoint();
    DensityMatrix::new(rho.n_qubits(), m).expect("unitary conjugation preserves validity")
}
