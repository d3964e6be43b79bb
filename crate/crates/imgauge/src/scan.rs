//! Stability cartography: sweep `(ω, h1)` grids of the driven chain, map the
//! regions of complex quasi energies, locate tongue roots and compare them
//! against the predicted resonance frequencies `ω = |E_n − E_m|/l`.

use ndarray::Array2;
use rayon::prelude::*;

use crate::chain::ChainSpec;
use crate::error::{Error, Result};
use crate::gauge::GaugeField;
use crate::perturbation::coupling_matrix;

/// Drive waveform family scanned over the `(ω, h1)` plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldFamily {
    SquareWave,
    Sinusoidal,
}

impl FieldFamily {
    pub fn build(&self, h1: f64, omega: f64) -> GaugeField {
        match self {
            FieldFamily::SquareWave => GaugeField::square_wave(h1, omega),
            FieldFamily::Sinusoidal => GaugeField::sinusoidal(h1, omega),
        }
    }
}

/// Instability map over the `(ω, h1)` plane: `measure[[i, j]]` is
/// `max |Im E|/κ` at `(omega_axis[i], h1_axis[j])`; a cell is flagged when
/// the measure exceeds `threshold`. Cells where the eigensolver failed hold
/// NaN and are counted in `warnings`.
#[derive(Debug, Clone)]
pub struct TongueGrid {
    pub omega_axis: Vec<f64>,
    pub h1_axis: Vec<f64>,
    pub measure: Array2<f64>,
    pub threshold: f64,
    pub flags: Array2<bool>,
    pub warnings: usize,
}

/// Resonance frequencies predicted from level differences, with the
/// `(n, m, l)` triple that generated each (1-based mode indices, harmonic
/// order).
#[derive(Debug, Clone)]
pub struct ResonancePrediction {
    pub frequencies: Vec<f64>,
    pub provenance: Vec<(usize, usize, i32)>,
}

/// All candidate tongue roots `ω = |E_n − E_m|/l` for `l = 1..=l_max`,
/// deduplicated and sorted ascending; every frequency lies in `(0, 4κ]`.
///
/// With `selection_rules` the symmetry-forbidden candidates are dropped:
/// pairs whose first-order coupling vanishes (`n + m` even), and even
/// harmonics `l` — appropriate for square-wave drives, whose even Fourier
/// amplitudes vanish.
pub fn predicted_resonances(
    spec: &ChainSpec,
    l_max: usize,
    selection_rules: bool,
) -> ResonancePrediction {
    let energies = spec.stationary_spectrum();
    let n = spec.sites;
    let dedup_tol = 1e-12 * spec.kappa;
    let mut candidates: Vec<(f64, (usize, usize, i32))> = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            if selection_rules && (i + j) % 2 == 0 {
                continue;
            }
            let gap = (energies[i - 1] - energies[j - 1]).abs();
            if gap <= dedup_tol {
                continue;
            }
            for l in 1..=l_max {
                if selection_rules && l % 2 == 0 {
                    continue;
                }
                candidates.push((gap / l as f64, (i, j, l as i32)));
            }
        }
    }
    candidates.sort_by(|a, b| {
        a.0.total_cmp(&b.0)
            .then(a.1 .2.cmp(&b.1 .2))
            .then(a.1 .0.cmp(&b.1 .0))
    });
    let mut frequencies = Vec::new();
    let mut provenance = Vec::new();
    for (freq, triple) in candidates {
        if let Some(last) = frequencies.last() {
            if (freq - last) <= dedup_tol {
                continue;
            }
        }
        frequencies.push(freq);
        provenance.push(triple);
    }
    ResonancePrediction {
        frequencies,
        provenance,
    }
}

/// Sweep the `(ω, h1)` grid, computing the instability measure of the
/// monodromy at every cell. Cells are independent and run on the rayon
/// worker pool; results are written in deterministic row-major `(ω, h1)`
/// order regardless of completion order.
pub fn tongue_scan(
    spec: &ChainSpec,
    family: FieldFamily,
    omega_axis: &[f64],
    h1_axis: &[f64],
    steps: usize,
    threshold: f64,
) -> Result<TongueGrid> {
    let mut problems = Vec::new();
    if omega_axis.is_empty() || h1_axis.is_empty() {
        problems.push("grid axes must be non-empty".to_string());
    }
    if omega_axis.windows(2).any(|w| w[1] <= w[0]) || h1_axis.windows(2).any(|w| w[1] <= w[0]) {
        problems.push("grid axes must be strictly ascending".to_string());
    }
    if omega_axis.iter().any(|w| *w <= 0.0) {
        problems.push("drive frequencies must be positive".to_string());
    }
    if !(threshold > 0.0) {
        problems.push(format!(
            "threshold must exceed the numerical noise floor, got {threshold}"
        ));
    }
    if !problems.is_empty() {
        return Err(Error::invalid("tongue scan", problems.join("; ")));
    }

    let n_omega = omega_axis.len();
    let n_h1 = h1_axis.len();
    let kappa = spec.kappa;
    let cells: Vec<f64> = (0..n_omega * n_h1)
        .into_par_iter()
        .map(|flat| {
            let i = flat / n_h1;
            let j = flat % n_h1;
            let field = family.build(h1_axis[j], omega_axis[i]);
            match spec.monodromy(&field, steps) {
                Ok(result) => result.quasi_energies.max_im / kappa,
                Err(_) => f64::NAN,
            }
        })
        .collect();

    let measure = Array2::from_shape_vec((n_omega, n_h1), cells)
        .expect("cell count matches grid dimensions");
    let warnings = measure.iter().filter(|x| x.is_nan()).count();
    let flags = measure.mapv(|x| x > threshold);
    Ok(TongueGrid {
        omega_axis: omega_axis.to_vec(),
        h1_axis: h1_axis.to_vec(),
        measure,
        threshold,
        flags,
        warnings,
    })
}

/// Root frequency of every tongue: connected flagged regions (8-neighbour
/// connectivity) that reach into the lowest fifth of the amplitude axis
/// report the centroid ω of their cells in their own lowest flagged row.
/// Sorted ascending; empty for an all-stable grid.
pub fn tongue_tips(grid: &TongueGrid) -> Vec<f64> {
    let n_omega = grid.omega_axis.len();
    let n_h1 = grid.h1_axis.len();
    if n_omega == 0 || n_h1 == 0 {
        return Vec::new();
    }
    // A genuine tongue roots at h1 -> 0; anything that never reaches the low
    // rows is an upper lobe or noise, not a root.
    let root_row_cutoff = ((n_h1 as f64 * 0.2).ceil() as usize).max(2).min(n_h1 - 1);

    let mut component = vec![usize::MAX; n_omega * n_h1];
    let mut tips = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    let mut next_component = 0;
    for start in 0..n_omega * n_h1 {
        let (si, sj) = (start / n_h1, start % n_h1);
        if !grid.flags[[si, sj]] || component[start] != usize::MAX {
            continue;
        }
        let id = next_component;
        next_component += 1;
        component[start] = id;
        queue.push_back((si, sj));
        let mut cells = Vec::new();
        while let Some((i, j)) = queue.pop_front() {
            cells.push((i, j));
            for di in -1i64..=1 {
                for dj in -1i64..=1 {
                    if di == 0 && dj == 0 {
                        continue;
                    }
                    let (ni, nj) = (i as i64 + di, j as i64 + dj);
                    if ni < 0 || nj < 0 || ni >= n_omega as i64 || nj >= n_h1 as i64 {
                        continue;
                    }
                    let (ni, nj) = (ni as usize, nj as usize);
                    let flat = ni * n_h1 + nj;
                    if grid.flags[[ni, nj]] && component[flat] == usize::MAX {
                        component[flat] = id;
                        queue.push_back((ni, nj));
                    }
                }
            }
        }
        let j_min = cells.iter().map(|(_, j)| *j).min().unwrap();
        if j_min > root_row_cutoff {
            continue;
        }
        let roots: Vec<usize> = cells
            .iter()
            .filter(|(_, j)| *j == j_min)
            .map(|(i, _)| *i)
            .collect();
        let centroid =
            roots.iter().map(|i| grid.omega_axis[*i]).sum::<f64>() / roots.len() as f64;
        tips.push(centroid);
    }
    tips.sort_by(f64::total_cmp);
    tips
}

/// Drop predicted frequencies whose leading-order drive coupling vanishes
/// identically even though the pair satisfies the resonance condition; used
/// when comparing tip locations against predictions.
pub fn coupled_resonances(spec: &ChainSpec, prediction: &ResonancePrediction) -> ResonancePrediction {
    let coupling = coupling_matrix(spec);
    let mut frequencies = Vec::new();
    let mut provenance = Vec::new();
    for (freq, (n, m, l)) in prediction
        .frequencies
        .iter()
        .zip(prediction.provenance.iter())
    {
        if coupling[[n - 1, m - 1]].abs() > 1e-14 {
            frequencies.push(*freq);
            provenance.push((*n, *m, *l));
        }
    }
    ResonancePrediction {
        frequencies,
        provenance,
    }
}

/// Evenly spaced inclusive grid with `count ≥ 2` points (or the single point
/// `start` when `count == 1`).
pub fn linspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    if count == 0 {
        return Vec::new();
    }
    if count == 1 {
        return vec![start];
    }
    let step = (stop - start) / (count - 1) as f64;
    (0..count).map(|i| start + step * i as f64).collect()
}
