//! Shared oracles for the integration suites.
//!
//! Everything here deliberately avoids the closed-form propagators under
//! test: Hamiltonians are assembled entry by entry and exponentiated by
//! scaling-and-squaring, so agreement with the library is meaningful.

#![allow(dead_code)]

use imgauge::gauge::GaugeField;
use ndarray::Array2;
use num_complex::Complex64;

/// Ring hop matrix with asymmetric gauge factors, assembled directly.
pub fn ring_hop_matrix(sites: usize, kappa: f64, h: f64) -> Array2<Complex64> {
    let mut m = Array2::zeros((sites, sites));
    for n in 0..sites {
        m[[n, (n + 1) % sites]] += Complex64::new(kappa * h.exp(), 0.0);
        m[[(n + 1) % sites, n]] += Complex64::new(kappa * (-h).exp(), 0.0);
    }
    m
}

/// Open-chain hop matrix with asymmetric gauge factors, assembled directly.
pub fn chain_hop_matrix(sites: usize, kappa: f64, h: f64) -> Array2<Complex64> {
    let mut m = Array2::zeros((sites, sites));
    for n in 0..sites - 1 {
        m[[n, n + 1]] = Complex64::new(kappa * h.exp(), 0.0);
        m[[n + 1, n]] = Complex64::new(kappa * (-h).exp(), 0.0);
    }
    m
}

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
pub fn expm(a: &Array2<Complex64>) -> Array2<Complex64> {
    let n = a.nrows();
    let norm_bound = a.iter().map(|z| z.norm()).fold(0.0, f64::max) * n as f64;
    let squarings = if norm_bound > 0.5 {
        (norm_bound / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let scale = 0.5f64.powi(squarings);
    let b = a.mapv(|z| z * scale);
    let mut term = Array2::<Complex64>::eye(n);
    let mut sum = Array2::<Complex64>::eye(n);
    for k in 1..200u32 {
        term = term.dot(&b).mapv(|z| z / k as f64);
        sum = &sum + &term;
        let term_norm = term.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if term_norm < 1e-20 {
            break;
        }
    }
    let mut result = sum;
    for _ in 0..squarings {
        result = result.dot(&result);
    }
    result
}

/// Field jump times inside `(0, t_end)`, replicated over periods.
fn jump_times(field: &GaugeField, t_end: f64) -> Vec<f64> {
    let mut cuts = Vec::new();
    if let Some(period) = field.period() {
        let breakpoints = field.breakpoints();
        let mut offset = 0.0;
        while offset < t_end {
            for bp in &breakpoints {
                let t = offset + bp;
                if t > 0.0 && t < t_end {
                    cuts.push(t);
                }
            }
            offset += period;
        }
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    cuts
}

/// Midpoint-exponential reference propagator: freeze the field at each
/// substep midpoint and multiply `exp(-i H(h_mid) dt)` factors, splitting
/// segments exactly at the field's jump times. `steps` counts substeps over
/// the whole interval.
pub fn stepped_propagator(
    build_h: impl Fn(f64) -> Array2<Complex64>,
    field: &GaugeField,
    t_end: f64,
    steps: usize,
) -> Array2<Complex64> {
    let n = build_h(0.0).nrows();
    let mut boundaries = vec![0.0];
    boundaries.extend(jump_times(field, t_end));
    boundaries.push(t_end);

    let mut u = Array2::<Complex64>::eye(n);
    for window in boundaries.windows(2) {
        let (a, b) = (window[0], window[1]);
        let len = b - a;
        if len <= 0.0 {
            continue;
        }
        let sub = ((steps as f64 * len / t_end).ceil() as usize).max(1);
        let dt = len / sub as f64;
        for k in 0..sub {
            let t_mid = a + (k as f64 + 0.5) * dt;
            let h = field.value_at(t_mid);
            let gen = build_h(h).mapv(|z| -Complex64::i() * z * dt);
            u = expm(&gen).dot(&u);
        }
    }
    u
}

pub fn max_abs_diff(a: &Array2<Complex64>, b: &Array2<Complex64>) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Greedy nearest-neighbour matching distance between two complex multisets.
pub fn multiset_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let mut used = vec![false; b.len()];
    let mut worst = 0.0f64;
    for x in a {
        let mut best = f64::INFINITY;
        let mut best_j = 0;
        for (j, y) in b.iter().enumerate() {
            if !used[j] {
                let d = (x - y).norm();
                if d < best {
                    best = d;
                    best_j = j;
                }
            }
        }
        used[best_j] = true;
        worst = worst.max(best);
    }
    worst
}
