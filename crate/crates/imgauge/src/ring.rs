//! Closed-form analytics for the N-site ring (periodic boundary conditions).
//!
//! The plane-wave modes `q_l = 2πl/N` diagonalize the hop matrix for *any*
//! field value, so the time-ordered propagator collapses to mode-wise phase
//! integrals and every quantity here is exact up to quadrature tolerance.

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::gauge::GaugeField;
use crate::numerics::integrate;
use crate::DEFAULT_QUAD_TOL;

/// Ring lattice: `sites ≥ 3` sites with hopping rate `kappa > 0` and
/// periodic boundary conditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RingSpec {
    pub sites: usize,
    pub kappa: f64,
}

/// Complex (quasi-)energies with the branch convention that produced them
/// and the largest imaginary magnitude as an instability measure.
#[derive(Debug, Clone)]
pub struct QuasiEnergySpectrum {
    pub values: Vec<Complex64>,
    pub branch: String,
    pub max_im: f64,
}

impl QuasiEnergySpectrum {
    pub fn new(values: Vec<Complex64>, branch: impl Into<String>) -> Self {
        let max_im = values.iter().map(|e| e.im.abs()).fold(0.0, f64::max);
        QuasiEnergySpectrum {
            values,
            branch: branch.into(),
            max_im,
        }
    }
}

impl RingSpec {
    pub fn new(sites: usize, kappa: f64) -> Result<Self> {
        let mut problems = Vec::new();
        if sites < 3 {
            problems.push(format!("ring needs at least 3 sites, got {sites}"));
        }
        if !(kappa.is_finite() && kappa > 0.0) {
            problems.push(format!("hopping rate must be > 0, got {kappa}"));
        }
        if problems.is_empty() {
            Ok(RingSpec { sites, kappa })
        } else {
            Err(Error::invalid("ring spec", problems.join("; ")))
        }
    }

    /// Quantized wave numbers `q_l = 2πl/N`, `l = 0..N-1`.
    pub fn wavenumbers(&self) -> Vec<f64> {
        (0..self.sites)
            .map(|l| 2.0 * PI * l as f64 / self.sites as f64)
            .collect()
    }

    /// Instantaneous mode energy `E_q(h) = 2κ (cos q cosh h + i sin q sinh h)`.
    fn mode_energy(&self, q: f64, h: f64) -> Complex64 {
        2.0 * self.kappa * Complex64::new(q.cos() * h.cosh(), q.sin() * h.sinh())
    }

    /// Hop matrix with gauge factor `e^{±h}` on the two hopping directions,
    /// wrapped periodically.
    pub fn hamiltonian(&self, h: f64) -> Array2<Complex64> {
        let n = self.sites;
        let mut m = Array2::zeros((n, n));
        let fwd = Complex64::new(self.kappa * h.exp(), 0.0);
        let bwd = Complex64::new(self.kappa * (-h).exp(), 0.0);
        for i in 0..n {
            m[[i, (i + 1) % n]] += fwd;
            m[[(i + 1) % n, i]] += bwd;
        }
        m
    }

    /// Static spectrum `E_l = 2κ cosh(h0) cos(q_l) + 2iκ sinh(h0) sin(q_l)`.
    /// Lies on the ellipse with semi-axes `2κ cosh h0`, `2κ sinh h0`.
    pub fn stationary_spectrum(&self, h0: f64) -> QuasiEnergySpectrum {
        let values = self
            .wavenumbers()
            .into_iter()
            .map(|q| self.mode_energy(q, h0))
            .collect();
        QuasiEnergySpectrum::new(values, "exact closed form (static field)")
    }

    /// Exact propagator for a constant field: identity at `t = 0`, circulant
    /// for all times, unitary in the Hermitian limit `h0 = 0`.
    pub fn propagator_stationary(&self, h0: f64, t: f64) -> Result<Array2<Complex64>> {
        if !(t >= 0.0) {
            return Err(Error::invalid("time", format!("t must be >= 0, got {t}")));
        }
        let phases: Vec<Complex64> = self
            .wavenumbers()
            .into_iter()
            .map(|q| (-Complex64::i() * self.mode_energy(q, h0) * t).exp())
            .collect();
        Ok(self.assemble_from_mode_phases(&phases))
    }

    /// Exact propagator for an arbitrary (periodic or constant) field: each
    /// plane-wave mode accumulates the integral of its instantaneous energy.
    pub fn propagator_periodic(&self, field: &GaugeField, t: f64) -> Result<Array2<Complex64>> {
        if !(t >= 0.0) {
            return Err(Error::invalid("time", format!("t must be >= 0, got {t}")));
        }
        let (cosh_int, sinh_int) = integrated_cosh_sinh(field, t)?;
        let phases: Vec<Complex64> = self
            .wavenumbers()
            .into_iter()
            .map(|q| {
                let phase_int =
                    2.0 * self.kappa * Complex64::new(q.cos() * cosh_int, q.sin() * sinh_int);
                (-Complex64::i() * phase_int).exp()
            })
            .collect();
        Ok(self.assemble_from_mode_phases(&phases))
    }

    /// Quasi energies of the periodically driven ring: exact period averages,
    /// no branch ambiguity. Real iff the averaged `sinh h` vanishes; the
    /// values lie on the ellipse with semi-axes `2κ⟨cosh h⟩`, `2κ⟨sinh h⟩`.
    pub fn quasienergies(&self, field: &GaugeField) -> Result<QuasiEnergySpectrum> {
        let cosh_avg = field.cosh_average()?;
        let sinh_avg = field.sinh_average()?;
        let values = self
            .wavenumbers()
            .into_iter()
            .map(|q| {
                2.0 * self.kappa * Complex64::new(q.cos() * cosh_avg, q.sin() * sinh_avg)
            })
            .collect();
        Ok(QuasiEnergySpectrum::new(
            values,
            "exact period average (non-modular)",
        ))
    }

    /// Hermitian ring Hamiltonian with renormalized hopping
    /// `κ_eff = κ ⟨cosh h⟩` that reproduces the driven dynamics at
    /// stroboscopic times. Refuses fields whose averaged `sinh h` does not
    /// vanish.
    pub fn effective_hamiltonian(&self, field: &GaugeField) -> Result<Array2<Complex64>> {
        let sinh_avg = field.sinh_average()?;
        let tol = 1e-10;
        if sinh_avg.abs() > tol {
            return Err(Error::ConditionNotMet {
                sinh_average: sinh_avg,
                tol,
            });
        }
        let kappa_eff = self.kappa * field.cosh_average()?;
        let eff = RingSpec {
            sites: self.sites,
            kappa: kappa_eff,
        };
        Ok(eff.hamiltonian(0.0))
    }

    /// Effective hopping rate `κ_eff = κ ⟨cosh h⟩`.
    pub fn effective_hopping(&self, field: &GaugeField) -> Result<f64> {
        Ok(self.kappa * field.cosh_average()?)
    }

    // U = F diag(phases) F† with F the unitary DFT matrix.
    fn assemble_from_mode_phases(&self, phases: &[Complex64]) -> Array2<Complex64> {
        let n = self.sites;
        let mut u = Array2::zeros((n, n));
        for row in 0..n {
            for col in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for (l, phase) in phases.iter().enumerate() {
                    let q = 2.0 * PI * l as f64 / n as f64;
                    acc += (Complex64::i() * q * (row as f64 - col as f64)).exp() * phase;
                }
                u[[row, col]] = acc / n as f64;
            }
        }
        u
    }

    /// Apply the exact constant-field propagator to a state in O(N²): DFT,
    /// mode phases, inverse DFT. Used by the trajectory stepper.
    pub(crate) fn apply_stationary(
        &self,
        state: &Array1<Complex64>,
        h: f64,
        dt: f64,
    ) -> Array1<Complex64> {
        let n = self.sites;
        let qs = self.wavenumbers();
        let mut modes = Array1::<Complex64>::zeros(n);
        for (l, q) in qs.iter().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (m, c) in state.iter().enumerate() {
                acc += (-Complex64::i() * q * m as f64).exp() * c;
            }
            modes[l] = acc / (n as f64).sqrt() * (-Complex64::i() * self.mode_energy(*q, h) * dt).exp();
        }
        let mut out = Array1::<Complex64>::zeros(n);
        for (m, o) in out.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (l, q) in qs.iter().enumerate() {
                acc += (Complex64::i() * q * m as f64).exp() * modes[l];
            }
            *o = acc / (n as f64).sqrt();
        }
        out
    }
}

/// Squared-ellipse defect `|[Re E/cosh h0]² + [Im E/sinh h0]² − 4κ²|`; zero
/// for members of the static spectrum. Degenerate at `h0 = 0` where the
/// ellipse collapses onto the real axis.
pub fn ellipse_residual(energy: Complex64, h0: f64, kappa: f64) -> Result<f64> {
    if h0 == 0.0 {
        return Err(Error::DegenerateEllipse);
    }
    let re = energy.re / h0.cosh();
    let im = energy.im / h0.sinh();
    Ok((re * re + im * im - 4.0 * kappa * kappa).abs())
}

/// `(∫₀ᵗ cosh h dt', ∫₀ᵗ sinh h dt')`: whole periods contribute the exact
/// period averages, the remainder is integrated with breakpoint splits.
fn integrated_cosh_sinh(field: &GaugeField, t: f64) -> Result<(f64, f64)> {
    match field {
        GaugeField::Constant { h0 } => Ok((t * h0.cosh(), t * h0.sinh())),
        _ => {
            let period = field.period().ok_or(Error::NoPeriod)?;
            let breakpoints = field.breakpoints();
            let full = (t / period).floor();
            let remainder = t - full * period;
            let cosh_rem = integrate(
                |s| field.value_at(s).cosh(),
                0.0,
                remainder,
                &breakpoints,
                DEFAULT_QUAD_TOL,
            )?;
            let sinh_rem = integrate(
                |s| field.value_at(s).sinh(),
                0.0,
                remainder,
                &breakpoints,
                DEFAULT_QUAD_TOL,
            )?;
            let cosh_full = full * period * field.cosh_average()?;
            let sinh_full = full * period * field.sinh_average()?;
            Ok((cosh_full + cosh_rem, sinh_full + sinh_rem))
        }
    }
}
