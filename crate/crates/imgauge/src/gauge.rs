//! Time-dependent imaginary gauge field `h(t)` and its period-averaged
//! functionals.
//!
//! The reality of the quasi-energy spectrum on a ring hinges on the period
//! average of `sinh h(t)`: when it vanishes the drive only renormalizes the
//! hopping rate by the average of `cosh h(t)` and the dynamics is
//! pseudo-Hermitian.

use crate::error::{Error, Result};
use crate::numerics::integrate_periodic;
use crate::DEFAULT_QUAD_TOL;

/// Imaginary gauge field waveform. Amplitudes are dimensionless, frequencies
/// in units of the hopping rate.
///
/// Conventions:
/// * `SquareWave` is `+h1` on `(0, T/2)` and `−h1` on `(T/2, T)`.
/// * `TwoLevel` is `+h1` on `(0, t1)` and `−h2` on `(t1, T)`, with
///   `h1, h2 > 0` and `0 < t1 < T`; its dc component is generally nonzero.
/// * `Sampled` interpolates linearly between `(breakpoints[i], values[i])`
///   and wraps periodically; a repeated breakpoint encodes a jump.
/// * At a jump the right-limit value is returned.
#[derive(Debug, Clone, PartialEq)]
pub enum GaugeField {
    Constant {
        h0: f64,
    },
    Sinusoidal {
        h1: f64,
        omega: f64,
    },
    SquareWave {
        h1: f64,
        omega: f64,
    },
    TwoLevel {
        h1: f64,
        h2: f64,
        t1: f64,
        period: f64,
    },
    Sampled {
        breakpoints: Vec<f64>,
        values: Vec<f64>,
        period: f64,
    },
}

impl GaugeField {
    pub fn constant(h0: f64) -> Self {
        GaugeField::Constant { h0 }
    }

    pub fn sinusoidal(h1: f64, omega: f64) -> Self {
        GaugeField::Sinusoidal { h1, omega }
    }

    pub fn square_wave(h1: f64, omega: f64) -> Self {
        GaugeField::SquareWave { h1, omega }
    }

    pub fn two_level(h1: f64, h2: f64, t1: f64, period: f64) -> Result<Self> {
        let field = GaugeField::TwoLevel { h1, h2, t1, period };
        field.validate()?;
        Ok(field)
    }

    pub fn sampled(breakpoints: Vec<f64>, values: Vec<f64>, period: f64) -> Result<Self> {
        let field = GaugeField::Sampled {
            breakpoints,
            values,
            period,
        };
        field.validate()?;
        Ok(field)
    }

    /// All constraint violations, empty when the field is well formed.
    pub fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        match self {
            GaugeField::Constant { h0 } => {
                if !h0.is_finite() {
                    v.push("constant field amplitude h0 must be finite".into());
                }
            }
            GaugeField::Sinusoidal { h1, omega } | GaugeField::SquareWave { h1, omega } => {
                if !h1.is_finite() {
                    v.push("field amplitude h1 must be finite".into());
                }
                if !(omega.is_finite() && *omega > 0.0) {
                    v.push(format!("drive frequency omega must be > 0, got {omega}"));
                }
            }
            GaugeField::TwoLevel { h1, h2, t1, period } => {
                if !(h1.is_finite() && *h1 > 0.0) {
                    v.push(format!("two-level field requires h1 > 0, got {h1}"));
                }
                if !(h2.is_finite() && *h2 > 0.0) {
                    v.push(format!("two-level field requires h2 > 0, got {h2}"));
                }
                if !(period.is_finite() && *period > 0.0) {
                    v.push(format!("period must be > 0, got {period}"));
                }
                if !(t1.is_finite() && *t1 > 0.0 && t1 < period) {
                    v.push(format!(
                        "two-level switch time must satisfy 0 < t1 < period, got t1 = {t1}"
                    ));
                }
            }
            GaugeField::Sampled {
                breakpoints,
                values,
                period,
            } => {
                if !(period.is_finite() && *period > 0.0) {
                    v.push(format!("period must be > 0, got {period}"));
                }
                if breakpoints.is_empty() {
                    v.push("sampled field needs at least one breakpoint".into());
                }
                if breakpoints.len() != values.len() {
                    v.push(format!(
                        "breakpoint/value length mismatch: {} vs {}",
                        breakpoints.len(),
                        values.len()
                    ));
                }
                if breakpoints.windows(2).any(|w| w[1] < w[0]) {
                    v.push("sampled breakpoints must be non-decreasing".into());
                }
                if breakpoints
                    .iter()
                    .any(|t| !t.is_finite() || *t < 0.0 || *t >= *period)
                {
                    v.push("sampled breakpoints must lie in [0, period)".into());
                }
                if values.iter().any(|x| !x.is_finite()) {
                    v.push("sampled values must be finite".into());
                }
            }
        }
        v
    }

    pub fn validate(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::invalid("gauge field", v.join("; ")))
        }
    }

    /// Modulation period, `None` for a constant field (any period is valid).
    pub fn period(&self) -> Option<f64> {
        match self {
            GaugeField::Constant { .. } => None,
            GaugeField::Sinusoidal { omega, .. } | GaugeField::SquareWave { omega, .. } => {
                Some(2.0 * std::f64::consts::PI / omega)
            }
            GaugeField::TwoLevel { period, .. } | GaugeField::Sampled { period, .. } => {
                Some(*period)
            }
        }
    }

    /// Jump/kink locations within one period, declared to the quadrature so
    /// panels never straddle a discontinuity.
    pub fn breakpoints(&self) -> Vec<f64> {
        match self {
            GaugeField::Constant { .. } | GaugeField::Sinusoidal { .. } => Vec::new(),
            GaugeField::SquareWave { omega, .. } => {
                let period = 2.0 * std::f64::consts::PI / omega;
                vec![0.0, 0.5 * period]
            }
            GaugeField::TwoLevel { t1, .. } => vec![0.0, *t1],
            GaugeField::Sampled { breakpoints, .. } => breakpoints.clone(),
        }
    }

    /// Field value at time `t` (reduced modulo the period); right-limit at a
    /// jump.
    pub fn value_at(&self, t: f64) -> f64 {
        match self {
            GaugeField::Constant { h0 } => *h0,
            GaugeField::Sinusoidal { h1, omega } => {
                let period = 2.0 * std::f64::consts::PI / omega;
                h1 * (omega * t.rem_euclid(period)).sin()
            }
            GaugeField::SquareWave { h1, omega } => {
                let period = 2.0 * std::f64::consts::PI / omega;
                let tm = t.rem_euclid(period);
                if tm < 0.5 * period {
                    *h1
                } else {
                    -*h1
                }
            }
            GaugeField::TwoLevel { h1, h2, t1, period } => {
                let tm = t.rem_euclid(*period);
                if tm < *t1 {
                    *h1
                } else {
                    -*h2
                }
            }
            GaugeField::Sampled {
                breakpoints,
                values,
                period,
            } => {
                let tm = t.rem_euclid(*period);
                // Rightmost segment start at or before tm gives the
                // right-limit at repeated breakpoints.
                let idx = breakpoints.partition_point(|p| *p <= tm);
                if idx == 0 {
                    // Before the first breakpoint: wrap segment from the last
                    // sample (shifted one period back) to the first.
                    let t_prev = breakpoints[breakpoints.len() - 1] - period;
                    let t_next = breakpoints[0];
                    let v_prev = values[values.len() - 1];
                    let v_next = values[0];
                    lerp(tm, t_prev, t_next, v_prev, v_next)
                } else if idx == breakpoints.len() {
                    let t_prev = breakpoints[idx - 1];
                    let t_next = breakpoints[0] + period;
                    lerp(tm, t_prev, t_next, values[idx - 1], values[0])
                } else {
                    lerp(
                        tm,
                        breakpoints[idx - 1],
                        breakpoints[idx],
                        values[idx - 1],
                        values[idx],
                    )
                }
            }
        }
    }

    /// Period average of `sinh h(t)`; its vanishing is the reality condition
    /// for the ring quasi-energy spectrum.
    pub fn sinh_average(&self) -> Result<f64> {
        match self {
            GaugeField::Constant { h0 } => Ok(h0.sinh()),
            _ => {
                let period = self.period().expect("periodic variant");
                integrate_periodic(
                    |t| self.value_at(t).sinh(),
                    period,
                    &self.breakpoints(),
                    DEFAULT_QUAD_TOL,
                )
            }
        }
    }

    /// Period average of `cosh h(t)` (≥ 1); multiplies the hopping rate in
    /// the effective stroboscopic description.
    pub fn cosh_average(&self) -> Result<f64> {
        match self {
            GaugeField::Constant { h0 } => Ok(h0.cosh()),
            _ => {
                let period = self.period().expect("periodic variant");
                integrate_periodic(
                    |t| self.value_at(t).cosh(),
                    period,
                    &self.breakpoints(),
                    DEFAULT_QUAD_TOL,
                )
            }
        }
    }

    /// Period average (dc component) of the field itself.
    pub fn mean(&self) -> Result<f64> {
        match self {
            GaugeField::Constant { h0 } => Ok(*h0),
            _ => {
                let period = self.period().expect("periodic variant");
                integrate_periodic(
                    |t| self.value_at(t),
                    period,
                    &self.breakpoints(),
                    DEFAULT_QUAD_TOL,
                )
            }
        }
    }

    /// Whether the period-averaged `sinh h` vanishes within `tol`, i.e. the
    /// driven dynamics on a ring is pseudo-Hermitian.
    pub fn is_pseudo_hermitian(&self, tol: f64) -> Result<bool> {
        Ok(self.sinh_average()?.abs() <= tol)
    }
}

fn lerp(t: f64, t0: f64, t1: f64, v0: f64, v1: f64) -> f64 {
    if t1 <= t0 {
        v1
    } else {
        v0 + (v1 - v0) * (t - t0) / (t1 - t0)
    }
}
