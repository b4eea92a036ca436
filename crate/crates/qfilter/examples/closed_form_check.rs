//! Cross-validate the numeric pipeline against the closed-form expressions
//! for the filtered W state and the filtered W-Wbar purities.

use qfilter::experiments::{
    closed_form_w, closed_form_wwbar_purity, evaluate_point, linspace,
};
use qfilter::states::NamedState;

fn main() -> qfilter::Result<()> {
    let grid = linspace(0.0, 1.0, 101);

    let mut worst_w = 0.0f64;
    for &k in &grid {
        let r = evaluate_point(NamedState::W3, k, 0.0)?;
        let cf = closed_form_w(k)?;
        for (got, want) in [(r.c12, cf.c12), (r.c23, cf.c23), (r.g12, cf.g12), (r.g23, cf.g23)] {
            worst_w = worst_w.max((got - want).abs());
        }
    }
    println!("W state, 101 k-points: worst |numeric - closed form| = {worst_w:.3e}");

    let mut worst_b = 0.0f64;
    for &k in &grid {
        let r = evaluate_point(NamedState::WwBar3, k, 0.0)?;
        let cf = closed_form_wwbar_purity(k)?;
        for (got, want) in [(r.g12, cf.g12), (r.g23, cf.g23)] {
            worst_b = worst_b.max((got - want).abs());
        }
    }
    println!("W-Wbar purities, 101 k-points: worst deviation = {worst_b:.3e}");

    println!();
    println!("sample closed-form values:");
    for k in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let cf = closed_form_w(k)?;
        println!(
            "  k={k:<5} c12={:.6} c23={:.6} g12={:.6} g23={:.6}",
            cf.c12, cf.c23, cf.g12, cf.g23
        );
    }
    Ok(())
}
