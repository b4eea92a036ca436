//! Parameter sweeps over the filtering and noise parameters, closed-form
//! references for the W and W-W̄ families, and detection of the noise time at
//! which a pair's entanglement dies.
//!
//! The pipeline evaluated at every grid point is always the same: build the
//! named 3-qubit state, expose qubits 2 and 3 to depolarizing noise for the
//! dimensionless time Γt, filter qubit 1 with parameter k, then reduce to
//! each of the three qubit pairs and record concurrences and purities along
//! with the filter's success probability.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::channels::{apply_filter, apply_noise, FilterParams, NoiseParams};
use crate::error::{Error, Result};
use crate::measures::{concurrence, purity};
use crate::states::NamedState;

/// Grid step of the coarse scan that brackets an entanglement death.
pub const ESD_SCAN_STEP: f64 = 0.05;
/// Largest Γt the onset search will consider.
pub const ESD_HORIZON: f64 = 20.0;
/// A death candidate must stay at zero concurrence for this long past the
/// candidate point; shorter dips are treated as grazing zeros and skipped.
pub const ESD_PERSISTENCE_WINDOW: f64 = 0.5;
/// Default width of the final onset bracket.
pub const ESD_DEFAULT_TOL: f64 = 1e-6;

/// Default number of k grid points for filter sweeps.
pub const DEFAULT_K_POINTS: usize = 201;
/// Default number of Γt grid points for noise sweeps.
pub const DEFAULT_NOISE_POINTS: usize = 401;
/// Default upper end of the Γt grid.
pub const DEFAULT_GAMMA_T_MAX: f64 = 4.0;
/// Default family of filtering parameters for curve-per-k datasets.
pub const DEFAULT_K_FAMILY: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

/// One evaluated grid point: all pairwise concurrences and purities plus the
/// filter success probability.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepRecord {
    pub state_name: NamedState,
    pub k: f64,
    pub gamma_t: f64,
    pub c12: f64,
    pub c13: f64,
    pub c23: f64,
    pub g12: f64,
    pub g13: f64,
    pub g23: f64,
    pub success_prob: f64,
}

/// A pair of qubits out of the 3-qubit register.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QubitPair {
    Q12,
    Q13,
    Q23,
}

impl QubitPair {
    pub fn qubits(self) -> [usize; 2] {
        match self {
            QubitPair::Q12 => [1, 2],
            QubitPair::Q13 => [1, 3],
            QubitPair::Q23 => [2, 3],
        }
    }
}

impl fmt::Display for QubitPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.qubits();
        write!(f, "{a}{b}")
    }
}

impl FromStr for QubitPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().replace(',', "").as_str() {
            "12" | "21" => Ok(QubitPair::Q12),
            "13" | "31" => Ok(QubitPair::Q13),
            "23" | "32" => Ok(QubitPair::Q23),
            other => Err(Error::invalid(format!(
                "unknown qubit pair '{other}' (expected 12, 13, or 23)"
            ))),
        }
    }
}

/// Closed-form concurrences and purities of the filtered W state:
/// c12 = 2√(k(1−k))/(2−k), c23 = 2(1−k)/(2−k),
/// g12 = (2−(2−k)k)/(2−k)², g23 = (4−k(8−5k))/(2−k)².
/// The 12 and 13 pairs coincide by symmetry.
#[derive(Clone, Copy, Debug)]
pub struct WClosedForm {
    pub c12: f64,
    pub c23: f64,
    pub g12: f64,
    pub g23: f64,
}

pub fn closed_form_w(k: f64) -> Result<WClosedForm> {
    check_k(k)?;
    let d = 2.0 - k;
    Ok(WClosedForm {
        c12: (2.0 * (k * (1.0 - k)).sqrt() / d).max(0.0),
        c23: (2.0 * (1.0 - k) / d).max(0.0),
        g12: (2.0 - d * k) / (d * d),
        g23: (4.0 - k * (8.0 - 5.0 * k)) / (d * d),
    })
}

/// Closed-form purities of the filtered W-W̄ superposition:
/// g12 = (7 − 2k(1−k))/9, g23 = (9 − 10k(1−k))/9.
#[derive(Clone, Copy, Debug)]
pub struct WwBarPurity {
    pub g12: f64,
    pub g23: f64,
}

pub fn closed_form_wwbar_purity(k: f64) -> Result<WwBarPurity> {
    check_k(k)?;
    let q = k * (1.0 - k);
    Ok(WwBarPurity { g12: (7.0 - 2.0 * q) / 9.0, g23: (9.0 - 10.0 * q) / 9.0 })
}

/// Evaluate the full noise-then-filter pipeline at a single (k, Γt) point.
pub fn evaluate_point(state: NamedState, k: f64, gamma_t: f64) -> Result<SweepRecord> {
    let rho = state.density();
    let noised = apply_noise(&rho, &NoiseParams::new(gamma_t, [2, 3])?)?;
    let outcome = apply_filter(&noised, &FilterParams::new(k, 1)?)?;

    let mut conc = [0.0f64; 3];
    let mut pur = [0.0f64; 3];
    for (i, pair) in [QubitPair::Q12, QubitPair::Q13, QubitPair::Q23].into_iter().enumerate() {
        let reduced = outcome.state.partial_trace(&pair.qubits())?;
        conc[i] = concurrence(&reduced)?;
        pur[i] = purity(&reduced);
    }
    Ok(SweepRecord {
        state_name: state,
        k,
        gamma_t,
        c12: conc[0],
        c13: conc[1],
        c23: conc[2],
        g12: pur[0],
        g13: pur[1],
        g23: pur[2],
        success_prob: outcome.success_prob,
    })
}

/// Sweep the filtering parameter with no noise applied.
pub fn sweep_filter(state: NamedState, k_grid: &[f64]) -> Result<Vec<SweepRecord>> {
    k_grid.iter().map(|&k| evaluate_point(state, k, 0.0)).collect()
}

/// Sweep the noise time at a fixed filtering parameter.
pub fn sweep_noise_filter(
    state: NamedState,
    k: f64,
    gamma_t_grid: &[f64],
) -> Result<Vec<SweepRecord>> {
    gamma_t_grid.iter().map(|&gamma_t| evaluate_point(state, k, gamma_t)).collect()
}

/// A located entanglement death: the onset time and the final bracket
/// [positive, zero] whose width is at most the requested tolerance.
#[derive(Clone, Copy, Debug)]
pub struct EsdOnset {
    pub gamma_t_star: f64,
    pub bracket: (f64, f64),
}

/// Find the smallest Γt at which the chosen pair's concurrence reaches zero
/// and stays there (for at least [`ESD_PERSISTENCE_WINDOW`]).
///
/// A coarse scan with step [`ESD_SCAN_STEP`] brackets the death, bisection
/// shrinks the bracket below `tol`. Fails with
/// [`Error::NeverEntangled`] when the pair starts disentangled and with
/// [`Error::NoDeathFound`] when the concurrence is still positive at
/// [`ESD_HORIZON`].
pub fn esd_onset(state: NamedState, k: f64, pair: QubitPair, tol: f64) -> Result<EsdOnset> {
    check_k(k)?;
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::invalid(format!("tolerance must be positive, got {tol}")));
    }
    let conc_at = |gamma_t: f64| -> Result<f64> {
        let record = evaluate_point(state, k, gamma_t)?;
        Ok(match pair {
            QubitPair::Q12 => record.c12,
            QubitPair::Q13 => record.c13,
            QubitPair::Q23 => record.c23,
        })
    };

    if conc_at(0.0)? == 0.0 {
        return Err(Error::NeverEntangled);
    }

    let steps = (ESD_HORIZON / ESD_SCAN_STEP).round() as usize;
    let window = (ESD_PERSISTENCE_WINDOW / ESD_SCAN_STEP).round() as usize;
    let mut prev_t = 0.0;
    let mut prev_c = f64::INFINITY;
    for i in 1..=steps {
        let t = i as f64 * ESD_SCAN_STEP;
        let c = conc_at(t)?;
        if prev_c > 0.0 && c == 0.0 {
            let persistent = (1..=window)
                .map(|j| conc_at(t + j as f64 * ESD_SCAN_STEP))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .all(|cw| cw == 0.0);
            if persistent {
                let (mut lo, mut hi) = (prev_t, t);
                while hi - lo > tol {
                    let mid = 0.5 * (lo + hi);
                    if conc_at(mid)? > 0.0 {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                return Ok(EsdOnset { gamma_t_star: 0.5 * (lo + hi), bracket: (lo, hi) });
            }
        }
        prev_t = t;
        prev_c = c;
    }
    Err(Error::NoDeathFound { horizon: ESD_HORIZON })
}

/// `n` evenly spaced values covering [lo, hi] inclusive.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (n - 1) as f64;
            (0..n).map(|i| lo + i as f64 * step).collect()
        }
    }
}

fn check_k(k: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&k) || k.is_nan() {
        return Err(Error::invalid(format!("filtering parameter k must lie in [0, 1], got {k}")));
    }
    Ok(())
}
