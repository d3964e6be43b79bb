//! Open-boundary linear chain: gauge-transformable static problem,
//! sine-mode propagator, time-ordered monodromy and Floquet quasi energies,
//! and direct trajectory simulation for either topology.
//!
//! For a constant field the chain is pseudo-Hermitian: rescaling the site
//! amplitudes by `e^{h0 n}` maps it onto the Hermitian chain, so the static
//! spectrum `E_l = 2κ cos(lπ/(N+1))` is real and field-independent. A
//! time-periodic field breaks this: the monodromy (one-period propagator)
//! can develop multipliers off the unit circle, i.e. complex quasi energies.

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::gauge::GaugeField;
use crate::numerics::{complex_order, eig_general, fold_frequency};
use crate::ring::{QuasiEnergySpectrum, RingSpec};
use crate::DEFAULT_EIG_TOL;

/// Largest allowed `|h|·N` before the gauge factors `e^{±hN}` leave the
/// comfortably representable range.
const GAUGE_EXPONENT_LIMIT: f64 = 300.0;

/// Open chain: `sites ≥ 2` sites with hopping rate `kappa > 0`, site labels
/// `1..=N`, hard-wall boundaries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainSpec {
    pub sites: usize,
    pub kappa: f64,
}

/// Either lattice topology; used by [`simulate`] and the CLI front end.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LatticeSpec {
    Ring(RingSpec),
    Chain(ChainSpec),
}

impl LatticeSpec {
    pub fn sites(&self) -> usize {
        match self {
            LatticeSpec::Ring(r) => r.sites,
            LatticeSpec::Chain(c) => c.sites,
        }
    }

    pub fn kappa(&self) -> f64 {
        match self {
            LatticeSpec::Ring(r) => r.kappa,
            LatticeSpec::Chain(c) => c.kappa,
        }
    }
}

/// Direction of the imaginary gauge rescaling `a_n = c_n e^{+h0 n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaugeDirection {
    /// Non-Hermitian amplitudes → Hermitian-frame amplitudes (`× e^{+h0 n}`).
    ToHermitian,
    /// Hermitian-frame amplitudes → non-Hermitian amplitudes (`× e^{−h0 n}`).
    FromHermitian,
}

/// One-period propagator with its Floquet multipliers and quasi energies.
///
/// Quasi energies are `E_l = (i/T) ln μ_l` under the principal branch with
/// `Re(E)` folded to `(−ω/2, ω/2]`, sorted by real part then imaginary part;
/// `multipliers[l]` stays paired with `quasi_energies.values[l]`.
#[derive(Debug, Clone)]
pub struct MonodromyResult {
    pub matrix: Array2<Complex64>,
    pub multipliers: Vec<Complex64>,
    pub quasi_energies: QuasiEnergySpectrum,
}

/// Sampled trajectory of site amplitudes; `norms[k][n] = |c_n(t_k)|`.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub amplitudes: Vec<Array1<Complex64>>,
    pub norms: Vec<Vec<f64>>,
}

impl Trajectory {
    fn push(&mut self, t: f64, state: Array1<Complex64>) {
        self.times.push(t);
        self.norms.push(state.iter().map(|c| c.norm()).collect());
        self.amplitudes.push(state);
    }

    /// Largest `|c_n|` over all samples and sites.
    pub fn max_norm(&self) -> f64 {
        self.norms
            .iter()
            .flat_map(|row| row.iter().copied())
            .fold(0.0, f64::max)
    }
}

impl ChainSpec {
    pub fn new(sites: usize, kappa: f64) -> Result<Self> {
        let mut problems = Vec::new();
        if sites < 2 {
            problems.push(format!("chain needs at least 2 sites, got {sites}"));
        }
        if !(kappa.is_finite() && kappa > 0.0) {
            problems.push(format!("hopping rate must be > 0, got {kappa}"));
        }
        if problems.is_empty() {
            Ok(ChainSpec { sites, kappa })
        } else {
            Err(Error::invalid("chain spec", problems.join("; ")))
        }
    }

    /// Static spectrum `E_l = 2κ cos(lπ/(N+1))`, `l = 1..=N`; real and
    /// independent of any constant gauge field.
    pub fn stationary_spectrum(&self) -> Vec<f64> {
        let np1 = (self.sites + 1) as f64;
        (1..=self.sites)
            .map(|l| 2.0 * self.kappa * (l as f64 * PI / np1).cos())
            .collect()
    }

    /// Hop matrix with gauge factor `e^{±h}` on the two hopping directions,
    /// open boundaries.
    pub fn hamiltonian(&self, h: f64) -> Array2<Complex64> {
        let n = self.sites;
        let mut m = Array2::zeros((n, n));
        let fwd = Complex64::new(self.kappa * h.exp(), 0.0);
        let bwd = Complex64::new(self.kappa * (-h).exp(), 0.0);
        for i in 0..n - 1 {
            m[[i, i + 1]] = fwd;
            m[[i + 1, i]] = bwd;
        }
        m
    }

    /// Normalized sine modes `W[n-1, l-1] = √(2/(N+1)) sin(nlπ/(N+1))`;
    /// symmetric, orthogonal and involutory.
    pub(crate) fn sine_modes(&self) -> Array2<f64> {
        sine_mode_matrix(self.sites)
    }

    fn check_gauge_range(&self, h: f64) -> Result<()> {
        let exponent = h.abs() * self.sites as f64;
        if exponent > GAUGE_EXPONENT_LIMIT {
            return Err(Error::GaugeOverflow {
                exponent,
                limit: GAUGE_EXPONENT_LIMIT,
            });
        }
        Ok(())
    }

    /// Componentwise gauge rescaling `a_n = c_n e^{+h0 n}` (site labels
    /// `1..=N`); the two directions are exact inverses.
    pub fn gauge_transform(
        &self,
        state: &Array1<Complex64>,
        h0: f64,
        direction: GaugeDirection,
    ) -> Result<Array1<Complex64>> {
        if state.len() != self.sites {
            return Err(Error::DimensionMismatch(format!(
                "state length {} does not match {} sites",
                state.len(),
                self.sites
            )));
        }
        self.check_gauge_range(h0)?;
        let sign = match direction {
            GaugeDirection::ToHermitian => 1.0,
            GaugeDirection::FromHermitian => -1.0,
        };
        Ok(Array1::from_iter(state.iter().enumerate().map(|(i, c)| {
            let site = (i + 1) as f64;
            c * (sign * h0 * site).exp()
        })))
    }

    /// Exact propagator for a constant field: gauge-scaled sine-mode sum,
    /// identity at `t = 0`, similar to a unitary via [`Self::gauge_transform`].
    pub fn propagator_stationary(&self, h0: f64, t: f64) -> Result<Array2<Complex64>> {
        if !(t >= 0.0) {
            return Err(Error::invalid("time", format!("t must be >= 0, got {t}")));
        }
        self.check_gauge_range(h0)?;
        let n = self.sites;
        let modes = self.sine_modes();
        let energies = self.stationary_spectrum();
        let phases: Vec<Complex64> = energies
            .iter()
            .map(|e| (-Complex64::i() * *e * t).exp())
            .collect();
        let mut u = Array2::zeros((n, n));
        for row in 0..n {
            for col in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for s in 0..n {
                    acc += modes[[row, s]] * modes[[col, s]] * phases[s];
                }
                u[[row, col]] = acc * (h0 * (col as f64 - row as f64)).exp();
            }
        }
        Ok(u)
    }

    /// One-period propagator and Floquet data for a periodic field.
    ///
    /// Piecewise-constant fields (square wave, two-level, constant) use the
    /// exact product of stationary factors regardless of `steps`; smooth
    /// fields use an ordered midpoint product of `steps` exact stationary
    /// factors (second order in the step size).
    pub fn monodromy(&self, field: &GaugeField, steps: usize) -> Result<MonodromyResult> {
        let period = field.period().ok_or(Error::NoPeriod)?;
        self.monodromy_with_period(field, period, steps)
    }

    /// [`Self::monodromy`] with an explicit period; required for constant
    /// fields, which have no intrinsic one.
    pub fn monodromy_with_period(
        &self,
        field: &GaugeField,
        period: f64,
        steps: usize,
    ) -> Result<MonodromyResult> {
        if !(period.is_finite() && period > 0.0) {
            return Err(Error::NonPositivePeriod(period));
        }
        let matrix = match field {
            GaugeField::Constant { h0 } => self.propagator_stationary(*h0, period)?,
            GaugeField::SquareWave { h1, .. } => {
                let half = 0.5 * period;
                let first = self.propagator_stationary(*h1, half)?;
                let second = self.propagator_stationary(-*h1, half)?;
                second.dot(&first)
            }
            GaugeField::TwoLevel { h1, h2, t1, .. } => {
                let first = self.propagator_stationary(*h1, *t1)?;
                let second = self.propagator_stationary(-*h2, period - *t1)?;
                second.dot(&first)
            }
            _ => self.ordered_product(field, period, steps)?,
        };
        self.floquet_from_matrix(matrix, period)
    }

    /// Monodromy via the ordered midpoint product even for piecewise-constant
    /// fields; validation/convergence companion to [`Self::monodromy`].
    pub fn monodromy_stepped(
        &self,
        field: &GaugeField,
        period: f64,
        steps: usize,
    ) -> Result<MonodromyResult> {
        if !(period.is_finite() && period > 0.0) {
            return Err(Error::NonPositivePeriod(period));
        }
        let matrix = self.ordered_product(field, period, steps)?;
        self.floquet_from_matrix(matrix, period)
    }

    fn ordered_product(
        &self,
        field: &GaugeField,
        period: f64,
        steps: usize,
    ) -> Result<Array2<Complex64>> {
        if steps == 0 {
            return Err(Error::invalid("steps", "need at least one step"));
        }
        let n = self.sites;
        let dt = period / steps as f64;
        // The sine-mode phase block W diag(e^{-iE dt}) W is field-independent;
        // only the gauge scaling changes per step.
        let modes = self.sine_modes();
        let energies = self.stationary_spectrum();
        let mut block = Array2::<Complex64>::zeros((n, n));
        for row in 0..n {
            for col in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for s in 0..n {
                    acc += modes[[row, s]]
                        * modes[[col, s]]
                        * (-Complex64::i() * energies[s] * dt).exp();
                }
                block[[row, col]] = acc;
            }
        }
        let mut product = Array2::<Complex64>::eye(n);
        let mut factor = Array2::<Complex64>::zeros((n, n));
        for k in 1..=steps {
            let h = field.value_at((k as f64 - 0.5) * dt);
            self.check_gauge_range(h)?;
            for row in 0..n {
                for col in 0..n {
                    factor[[row, col]] =
                        block[[row, col]] * (h * (col as f64 - row as f64)).exp();
                }
            }
            product = factor.dot(&product);
            if product.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::NonFinite("ordered propagator product"));
            }
        }
        Ok(product)
    }

    fn floquet_from_matrix(
        &self,
        matrix: Array2<Complex64>,
        period: f64,
    ) -> Result<MonodromyResult> {
        let omega = 2.0 * PI / period;
        let eig = eig_general(&matrix, DEFAULT_EIG_TOL)?;
        let mut pairs: Vec<(Complex64, Complex64)> = eig
            .eigenvalues
            .iter()
            .map(|mu| {
                let e = Complex64::i() / period * mu.ln();
                let e = Complex64::new(fold_frequency(e.re, omega), e.im);
                (e, *mu)
            })
            .collect();
        pairs.sort_by(|a, b| complex_order(&a.0, &b.0));
        let (values, multipliers): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        Ok(MonodromyResult {
            matrix,
            multipliers,
            quasi_energies: QuasiEnergySpectrum::new(
                values,
                "principal branch, Re(E) folded to (-omega/2, omega/2]",
            ),
        })
    }

    /// Apply the exact constant-field step to a state in O(N²).
    pub(crate) fn apply_stationary(
        &self,
        state: &Array1<Complex64>,
        h: f64,
        dt: f64,
    ) -> Result<Array1<Complex64>> {
        self.check_gauge_range(h)?;
        let n = self.sites;
        let modes = self.sine_modes();
        let energies = self.stationary_spectrum();
        // a = D c with D = diag(e^{h n})
        let scaled: Vec<Complex64> = state
            .iter()
            .enumerate()
            .map(|(i, c)| c * (h * (i + 1) as f64).exp())
            .collect();
        // mode amplitudes, phase advance, back-transform
        let mut mode_amps = vec![Complex64::new(0.0, 0.0); n];
        for (s, amp) in mode_amps.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (i, c) in scaled.iter().enumerate() {
                acc += modes[[i, s]] * c;
            }
            *amp = acc * (-Complex64::i() * energies[s] * dt).exp();
        }
        let mut out = Array1::<Complex64>::zeros(n);
        for (i, o) in out.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (s, amp) in mode_amps.iter().enumerate() {
                acc += modes[[i, s]] * amp;
            }
            *o = acc * (-h * (i + 1) as f64).exp();
        }
        Ok(out)
    }
}

/// Normalized sine-mode matrix for `n` sites (shared with the perturbation
/// machinery, where it diagonalizes the unperturbed hop matrix).
pub(crate) fn sine_mode_matrix(n: usize) -> Array2<f64> {
    let np1 = (n + 1) as f64;
    let norm = (2.0 / np1).sqrt();
    Array2::from_shape_fn((n, n), |(i, j)| {
        norm * ((i + 1) as f64 * (j + 1) as f64 * PI / np1).sin()
    })
}

/// Evolve `initial` under the driven lattice dynamics, sampling at step
/// boundaries. Each substep applies the exact stationary propagator at the
/// midpoint field value, so piecewise-constant drives are integrated exactly
/// and the Hermitian limit conserves the norm to machine precision.
///
/// `steps_per_period` sets the resolution relative to the field period (for
/// a constant field, relative to `t_end`).
pub fn simulate(
    lattice: &LatticeSpec,
    field: &GaugeField,
    initial: &Array1<Complex64>,
    t_end: f64,
    steps_per_period: usize,
) -> Result<Trajectory> {
    if initial.len() != lattice.sites() {
        return Err(Error::DimensionMismatch(format!(
            "initial state length {} does not match {} sites",
            initial.len(),
            lattice.sites()
        )));
    }
    let norm: f64 = initial.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    if !(norm > 0.0) {
        return Err(Error::invalid("initial state", "must have nonzero norm"));
    }
    if !(t_end >= 0.0 && t_end.is_finite()) {
        return Err(Error::invalid("time", format!("t_end must be >= 0, got {t_end}")));
    }
    if steps_per_period == 0 {
        return Err(Error::invalid("steps", "need at least one step per period"));
    }

    let reference = field.period().unwrap_or(t_end).max(f64::MIN_POSITIVE);
    let dt = reference / steps_per_period as f64;
    let mut trajectory = Trajectory {
        times: Vec::new(),
        amplitudes: Vec::new(),
        norms: Vec::new(),
    };
    trajectory.push(0.0, initial.clone());

    let mut state = initial.clone();
    let mut t = 0.0;
    // Full steps, then one shortened step to land exactly on t_end.
    while t < t_end {
        let step = dt.min(t_end - t);
        if step <= f64::EPSILON * reference {
            break;
        }
        let h_mid = field.value_at(t + 0.5 * step);
        state = match lattice {
            LatticeSpec::Ring(ring) => ring.apply_stationary(&state, h_mid, step),
            LatticeSpec::Chain(chain) => chain.apply_stationary(&state, h_mid, step)?,
        };
        t += step;
        trajectory.push(t, state.clone());
    }
    Ok(trajectory)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{max_abs_diff, sort_complex};
    use approx::assert_abs_diff_eq;

    #[test]
    fn spec_validation() {
        assert!(ChainSpec::new(1, 1.0).is_err());
        assert!(ChainSpec::new(2, -1.0).is_err());
        assert!(ChainSpec::new(2, 1.0).is_ok());
    }

    #[test]
    fn two_site_spectrum() {
        let chain = ChainSpec::new(2, 1.0).unwrap();
        let e = chain.stationary_spectrum();
        assert_abs_diff_eq!(e[0], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e[1], -1.0, epsilon = 1e-14);
    }

    #[test]
    fn three_site_spectrum() {
        let chain = ChainSpec::new(3, 1.0).unwrap();
        let e = chain.stationary_spectrum();
        let root2 = 2.0f64.sqrt();
        assert_abs_diff_eq!(e[0], root2, epsilon = 1e-14);
        assert_abs_diff_eq!(e[1], 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e[2], -root2, epsilon = 1e-14);
    }

    #[test]
    fn spectrum_is_field_independent() {
        // Dense eigensolver on the gauged hop matrix agrees with the closed
        // form for any constant field.
        let chain = ChainSpec::new(50, 1.0).unwrap();
        let mut dense = crate::numerics::eig_general(&chain.hamiltonian(0.3), 1e-9)
            .unwrap()
            .eigenvalues;
        sort_complex(&mut dense);
        let mut closed: Vec<f64> = chain.stationary_spectrum();
        closed.sort_by(f64::total_cmp);
        for (d, c) in dense.iter().zip(&closed) {
            assert!((d.re - c).abs() < 1e-9, "re {} vs {}", d.re, c);
            assert!(d.im.abs() < 1e-9);
        }
    }

    #[test]
    fn gauge_transform_round_trip() {
        let chain = ChainSpec::new(6, 1.0).unwrap();
        let state = Array1::from_vec(
            (0..6)
                .map(|k| Complex64::new(0.2 * k as f64 - 0.3, 0.1 * k as f64))
                .collect(),
        );
        let fwd = chain
            .gauge_transform(&state, 0.7, GaugeDirection::ToHermitian)
            .unwrap();
        let back = chain
            .gauge_transform(&fwd, 0.7, GaugeDirection::FromHermitian)
            .unwrap();
        for (a, b) in state.iter().zip(back.iter()) {
            assert!((a - b).norm() < 1e-14);
        }
        // h0 = 0 is the identity.
        let same = chain
            .gauge_transform(&state, 0.0, GaugeDirection::ToHermitian)
            .unwrap();
        assert!(state
            .iter()
            .zip(same.iter())
            .all(|(a, b)| (a - b).norm() == 0.0));
    }

    #[test]
    fn gauge_transform_overflow_guard() {
        let chain = ChainSpec::new(100, 1.0).unwrap();
        let state = Array1::from_elem(100, Complex64::new(1.0, 0.0));
        assert!(matches!(
            chain.gauge_transform(&state, 4.0, GaugeDirection::ToHermitian),
            Err(Error::GaugeOverflow { .. })
        ));
    }

    #[test]
    fn propagator_identity_at_zero_and_unitary_hermitian() {
        let chain = ChainSpec::new(4, 1.0).unwrap();
        let u0 = chain.propagator_stationary(0.5, 0.0).unwrap();
        assert!(max_abs_diff(&u0, &Array2::eye(4)) < 1e-13);

        let u = chain.propagator_stationary(0.0, 1.7).unwrap();
        let udag_u = u.t().mapv(|z| z.conj()).dot(&u);
        assert!(max_abs_diff(&udag_u, &Array2::eye(4)) < 1e-12);
    }

    #[test]
    fn propagator_gauge_similarity_to_unitary() {
        // D U0(h) D^{-1} must be unitary, with D = diag(e^{h n}).
        let chain = ChainSpec::new(5, 1.0).unwrap();
        let h0 = 0.4;
        let u = chain.propagator_stationary(h0, 0.9).unwrap();
        let n = 5;
        let mut w = Array2::<Complex64>::zeros((n, n));
        for i in 0..n {
            for j in 0..n {
                w[[i, j]] = u[[i, j]] * ((h0 * (i + 1) as f64).exp() / (h0 * (j + 1) as f64).exp());
            }
        }
        let wdag_w = w.t().mapv(|z| z.conj()).dot(&w);
        assert!(max_abs_diff(&wdag_w, &Array2::eye(n)) < 1e-11);
    }

    #[test]
    fn monodromy_constant_field_is_static_floquet() {
        let chain = ChainSpec::new(4, 1.0).unwrap();
        let omega = 2.5;
        let period = 2.0 * PI / omega;
        let result = chain
            .monodromy_with_period(&GaugeField::constant(0.3), period, 16)
            .unwrap();
        assert!(result.quasi_energies.max_im < 1e-10);
        let mut expected: Vec<f64> = chain
            .stationary_spectrum()
            .into_iter()
            .map(|e| fold_frequency(e, omega))
            .collect();
        expected.sort_by(f64::total_cmp);
        let got: Vec<f64> = result.quasi_energies.values.iter().map(|e| e.re).collect();
        for (g, e) in got.iter().zip(&expected) {
            assert_abs_diff_eq!(*g, *e, epsilon = 1e-10);
        }
        // Multipliers stay paired with their quasi energies.
        for (mu, e) in result
            .multipliers
            .iter()
            .zip(&result.quasi_energies.values)
        {
            let back = Complex64::i() / period * mu.ln();
            assert_abs_diff_eq!(back.im, e.im, epsilon = 1e-12);
        }
    }

    #[test]
    fn monodromy_square_wave_first_tongue_is_unstable() {
        let chain = ChainSpec::new(3, 1.0).unwrap();
        let omega = 2.0f64.sqrt();
        let field = GaugeField::square_wave(0.4, omega);
        let result = chain.monodromy(&field, 1).unwrap();
        assert!(
            result.quasi_energies.max_im > 1e-2,
            "expected instability inside the first tongue, max_im = {:e}",
            result.quasi_energies.max_im
        );
    }

    #[test]
    fn monodromy_sinusoidal_off_resonance_is_stable() {
        let chain = ChainSpec::new(3, 1.0).unwrap();
        let field = GaugeField::sinusoidal(0.4, 1.0);
        let result = chain.monodromy(&field, 2048).unwrap();
        assert!(result.quasi_energies.max_im <= 1e-8);
    }

    #[test]
    fn monodromy_needs_a_period_for_constant_fields() {
        let chain = ChainSpec::new(3, 1.0).unwrap();
        assert!(matches!(
            chain.monodromy(&GaugeField::constant(0.2), 8),
            Err(Error::NoPeriod)
        ));
    }

    #[test]
    fn stepped_and_exact_square_wave_agree() {
        let chain = ChainSpec::new(5, 1.0).unwrap();
        let field = GaugeField::square_wave(0.4, 1.3);
        let period = field.period().unwrap();
        let exact = chain.monodromy(&field, 1).unwrap();
        let stepped = chain.monodromy_stepped(&field, period, 512).unwrap();
        assert!(max_abs_diff(&exact.matrix, &stepped.matrix) < 1e-10);
    }

    #[test]
    fn simulate_conserves_norm_in_hermitian_limit() {
        let chain = ChainSpec::new(4, 1.0).unwrap();
        let lattice = LatticeSpec::Chain(chain);
        let mut initial = Array1::zeros(4);
        initial[0] = Complex64::new(1.0, 0.0);
        let field = GaugeField::constant(0.0);
        let result = simulate(&lattice, &field, &initial, 7.0, 64).unwrap();
        for row in &result.norms {
            let total: f64 = row.iter().map(|x| x * x).sum();
            assert_abs_diff_eq!(total, 1.0, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(*result.times.last().unwrap(), 7.0, epsilon = 1e-12);
    }

    #[test]
    fn simulate_rejects_bad_input() {
        let chain = ChainSpec::new(3, 1.0).unwrap();
        let lattice = LatticeSpec::Chain(chain);
        let zero = Array1::zeros(3);
        assert!(simulate(&lattice, &GaugeField::constant(0.0), &zero, 1.0, 8).is_err());
        let wrong = Array1::from_elem(2, Complex64::new(1.0, 0.0));
        assert!(simulate(&lattice, &GaugeField::constant(0.0), &wrong, 1.0, 8).is_err());
    }
}
