//! The depolarizing channel from its Kraus operators: completeness, the
//! time-to-probability map p = 1 − e^(−Γt/2), and full depolarization.

use std::collections::BTreeSet;

use qfilter::channels::{apply_noise, depolarizing_kraus, p_of_time, NoiseParams};
use qfilter::linalg::ComplexMatrix;
use qfilter::measures::purity;
use qfilter::states::NamedState;
use qfilter::DensityMatrix;

fn main() -> qfilter::Result<()> {
    // completeness of the four single-qubit operators and of the 16 lifted
    // two-qubit operators is enforced at construction; show the defect anyway
    let single = depolarizing_kraus(0.3)?;
    let mut sum = ComplexMatrix::zeros(2);
    for op in single.ops() {
        sum = &sum + &(&op.adjoint() * op);
    }
    println!("single-qubit completeness defect: {:.3e}", sum.max_abs_diff(&ComplexMatrix::identity(2)));

    let targets: BTreeSet<usize> = [2, 3].into_iter().collect();
    let lifted = single.lift(3, &targets)?;
    let mut sum = ComplexMatrix::zeros(8);
    for op in lifted.ops() {
        sum = &sum + &(&op.adjoint() * op);
    }
    println!(
        "lifted ({} ops) completeness defect:  {:.3e}",
        lifted.ops().len(),
        sum.max_abs_diff(&ComplexMatrix::identity(8))
    );

    println!();
    println!("{:>6} {:>10}", "Γt", "p");
    for gamma_t in [0.0, 0.5, 1.0, 2.0, 4.0, 8.0] {
        println!("{gamma_t:>6.1} {:>10.6}", p_of_time(gamma_t)?);
    }

    // at p = 3/4 a single qubit is completely depolarized
    let rho = DensityMatrix::new(1, ComplexMatrix::diag(&[0.9, 0.1]))?;
    let out = depolarizing_kraus(0.75)?.apply(&rho)?;
    println!();
    println!(
        "p = 3/4 sends diag(0.9, 0.1) to the maximally mixed state: defect {:.3e}",
        out.matrix().max_abs_diff(&ComplexMatrix::identity(2).scaled(0.5))
    );

    // purity of the W state decays as qubits 2 and 3 decohere
    println!();
    println!("W state with noise on qubits 2 and 3:");
    println!("{:>6} {:>10}", "Γt", "purity");
    let rho = NamedState::W3.density();
    for gamma_t in [0.0, 0.5, 1.0, 2.0, 4.0] {
        let noised = apply_noise(&rho, &NoiseParams::new(gamma_t, [2, 3])?)?;
        println!("{gamma_t:>6.1} {:>10.6}", purity(&noised));
    }
    Ok(())
}
