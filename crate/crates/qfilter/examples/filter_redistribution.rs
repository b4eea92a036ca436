//! Sweep the filtering parameter on qubit 1 of the W state and watch the
//! entanglement move between the subsystems.
//!
//! Biasing the filter towards ∣0⟩ (k < 1/2) drains concurrence from the pairs
//! that contain the filtered qubit into the untouched (2,3) pair; at k = 0
//! that pair becomes a perfect Bell state. Biasing the other way briefly
//! reverses the flow. The success probability is the price: the filter only
//! post-selects a fraction (2−k)/3 of the ensemble.

use qfilter::experiments::{linspace, sweep_filter};
use qfilter::states::NamedState;

fn main() -> qfilter::Result<()> {
    let grid = linspace(0.0, 1.0, 11);
    println!("W state, filter on qubit 1:");
    println!("{:>5} {:>10} {:>10} {:>10} {:>10} {:>8}", "k", "c12=c13", "c23", "g12", "g23", "P");
    for record in sweep_filter(NamedState::W3, &grid)? {
        println!(
            "{:>5.2} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>8.4}",
            record.k, record.c12, record.c23, record.g12, record.g23, record.success_prob,
        );
    }

    println!();
    println!("W-Wbar superposition, same filter (symmetric about k = 1/2):");
    println!("{:>5} {:>10} {:>10} {:>10} {:>10} {:>8}", "k", "c12=c13", "c23", "g12", "g23", "P");
    for record in sweep_filter(NamedState::WwBar3, &grid)? {
        println!(
            "{:>5.2} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>8.4}",
            record.k, record.c12, record.c23, record.g12, record.g23, record.success_prob,
        );
    }
    Ok(())
}
