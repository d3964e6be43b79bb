//! Secular perturbation theory of the weakly driven chain.
//!
//! In the sine-mode basis the drive couples modes through an anti-Hermitian
//! matrix whose `(n, m)` entry survives only when `n + m` is odd. Averaging
//! over the fast scale keeps a coupling only when the level difference
//! `E_n − E_m` matches a drive harmonic `lω`; the resulting slow-flow matrix
//! is anti-Hermitian, so any nonzero entry produces a conjugate pair of slow
//! exponents — secular growth, i.e. complex quasi energies — with a rate
//! linear in the drive amplitude.

use ndarray::Array2;
use num_complex::Complex64;
use std::f64::consts::PI;

use crate::chain::{sine_mode_matrix, ChainSpec};
use crate::error::{Error, Result};
use crate::gauge::GaugeField;
use crate::numerics::{eig_general, integrate_periodic_complex};
use crate::{DEFAULT_EIG_TOL, DEFAULT_QUAD_TOL};

/// Mode-basis ingredients of the slow-flow analysis: the sine modes that
/// diagonalize the unperturbed hop matrix, their energies and the drive
/// coupling between them.
#[derive(Debug, Clone)]
pub struct PerturbationSetup {
    pub spec: ChainSpec,
    /// Symmetric orthogonal sine-mode matrix (its own inverse).
    pub modes: Array2<f64>,
    /// Mode energies `E_n = 2κ cos(nπ/(N+1))`, `n = 1..=N`.
    pub energies: Vec<f64>,
    /// Anti-symmetric drive coupling in the mode basis; zero whenever
    /// `n + m` is even.
    pub coupling: Array2<f64>,
}

/// Slow-flow matrix with the harmonics that fired the resonance condition
/// and the resulting slow exponents.
#[derive(Debug, Clone)]
pub struct SlowFlowMatrix {
    /// Anti-Hermitian slow-flow coupling (units of κ).
    pub matrix: Array2<Complex64>,
    /// `(n, m, l)` triples (1-based mode indices, harmonic order) whose
    /// resonance condition `|E_n − E_m − lω| ≤ detuning_tol` fired with a
    /// nonvanishing coupling.
    pub harmonics: Vec<(usize, usize, i32)>,
    /// Real slow-scale exponents (eigenvalues of `−i·matrix`), sorted
    /// ascending; the largest magnitude is the leading-order `|Im E|`.
    pub growth_rates: Vec<f64>,
}

/// Drive coupling between sine modes `n, m` (1-based):
/// `κ (1−(−1)^{n+m})/(N+1) · sin(mπ/(N+1)) · [cot(π(n+m)/(2(N+1))) + cot(π(n−m)/(2(N+1)))]`.
pub(crate) fn coupling_matrix(spec: &ChainSpec) -> Array2<f64> {
    let n = spec.sites;
    let np1 = (n + 1) as f64;
    let cot = |x: f64| x.cos() / x.sin();
    Array2::from_shape_fn((n, n), |(i, j)| {
        let (row, col) = (i + 1, j + 1);
        if (row + col) % 2 == 0 {
            return 0.0;
        }
        let sum = (row + col) as f64;
        let diff = row as f64 - col as f64;
        spec.kappa * (2.0 / np1)
            * (col as f64 * PI / np1).sin()
            * (cot(PI * sum / (2.0 * np1)) + cot(PI * diff / (2.0 * np1)))
    })
}

/// Build the mode-basis setup, verifying internally that the sine modes
/// diagonalize the hop matrix.
pub fn build_setup(spec: &ChainSpec) -> Result<PerturbationSetup> {
    let n = spec.sites;
    let modes = sine_mode_matrix(n);
    let energies = spec.stationary_spectrum();
    let coupling = coupling_matrix(spec);

    // Hop matrix must satisfy A·W = W·diag(E) (the modes are exact).
    let mut hop = Array2::<f64>::zeros((n, n));
    for i in 0..n - 1 {
        hop[[i, i + 1]] = spec.kappa;
        hop[[i + 1, i]] = spec.kappa;
    }
    let aw = hop.dot(&modes);
    let mut we = modes.clone();
    for (s, mut col) in we.columns_mut().into_iter().enumerate() {
        col.iter_mut().for_each(|x| *x *= energies[s]);
    }
    let defect = aw
        .iter()
        .zip(we.iter())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    if defect > 1e-10 * spec.kappa {
        return Err(Error::invalid(
            "perturbation setup",
            format!("mode matrix fails to diagonalize the hop matrix (defect {defect:e})"),
        ));
    }

    Ok(PerturbationSetup {
        spec: *spec,
        modes,
        energies,
        coupling,
    })
}

/// Period-averaged drive harmonic `⟨h(t) e^{iΔt}⟩` with the dc component of
/// `h` removed first (a constant offset gauges away and cannot drive a
/// resonance). Constant fields therefore yield zero.
pub fn fourier_coefficient(field: &GaugeField, delta: f64) -> Result<Complex64> {
    let period = match field.period() {
        Some(t) => t,
        None => return Ok(Complex64::new(0.0, 0.0)),
    };
    let mean = field.mean()?;
    integrate_periodic_complex(
        |t| {
            let osc = Complex64::new(0.0, delta * t).exp();
            (field.value_at(t) - mean) * osc
        },
        period,
        &field.breakpoints(),
        DEFAULT_QUAD_TOL,
    )
}

/// Assemble the slow-flow matrix for a drive: entry `(n, m)` is the mode
/// coupling times the drive harmonic at `E_n − E_m`, kept only when the
/// resonance condition `|E_n − E_m − lω| ≤ detuning_tol` holds for some
/// integer `l ≠ 0`.
pub fn build_slow_flow(
    setup: &PerturbationSetup,
    field: &GaugeField,
    detuning_tol: f64,
) -> Result<SlowFlowMatrix> {
    let n = setup.spec.sites;
    let mut matrix = Array2::<Complex64>::zeros((n, n));
    let mut harmonics = Vec::new();

    if let Some(period) = field.period() {
        let omega = 2.0 * PI / period;
        // The nearest harmonic is the only candidate as long as the window
        // stays below half the harmonic spacing.
        let window = detuning_tol.min(0.49 * omega);
        for row in 1..=n {
            for col in 1..=n {
                if row == col || setup.coupling[[row - 1, col - 1]].abs() <= 1e-14 {
                    continue;
                }
                let delta = setup.energies[row - 1] - setup.energies[col - 1];
                let l = (delta / omega).round();
                if l == 0.0 || (delta - l * omega).abs() > window {
                    continue;
                }
                let coefficient = fourier_coefficient(field, delta)?;
                matrix[[row - 1, col - 1]] =
                    setup.coupling[[row - 1, col - 1]] * coefficient;
                harmonics.push((row, col, l as i32));
            }
        }
    }

    let growth_rates = if harmonics.is_empty() {
        vec![0.0; n]
    } else {
        let eig = eig_general(&matrix, DEFAULT_EIG_TOL)?;
        let mut rates: Vec<f64> = eig.eigenvalues.iter().map(|lambda| lambda.im).collect();
        rates.sort_by(f64::total_cmp);
        rates
    };

    Ok(SlowFlowMatrix {
        matrix,
        harmonics,
        growth_rates,
    })
}

/// Leading-order instability rate `max |Im E|` predicted by the slow flow,
/// rescaled by `amplitude_scale` (the rate is linear in the drive amplitude
/// at fixed waveform shape; pass 1.0 for the amplitude the flow was built
/// with).
pub fn predicted_growth_rate(slow_flow: &SlowFlowMatrix, amplitude_scale: f64) -> f64 {
    amplitude_scale
        * slow_flow
            .growth_rates
            .iter()
            .map(|r| r.abs())
            .fold(0.0, f64::max)
}
