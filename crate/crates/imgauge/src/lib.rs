//! Dynamics of a quantum particle hopping on one-dimensional tight-binding
//! lattices threaded by a time-periodic *imaginary* gauge field.
//!
//! An imaginary gauge field `h` enters the hopping amplitudes as `κ·e^{±h}`,
//! making left/right hopping asymmetric and the Hamiltonian non-Hermitian.
//! The lattice topology decides the physics:
//!
//! * **ring** (periodic boundary conditions): the static spectrum is complex
//!   and lies on an ellipse, but an oscillating field whose period-averaged
//!   `sinh h` vanishes produces an entirely real quasi-energy spectrum and
//!   pseudo-Hermitian dynamics ([`ring`]).
//! * **open chain**: the static spectrum is real for any constant field (it
//!   gauges away), but an oscillating field can break reality through
//!   multiple parametric resonances; instability tongues emanate from
//!   frequencies `ω = |E_n − E_m|/l` below the band-width cutoff `4κ`
//!   ([`chain`], [`scan`], [`perturbation`]).
//!
//! Energies are in units of the hopping rate `κ` (`ħ = 1`), times in `1/κ`.

pub mod chain;
pub mod error;
pub mod gauge;
pub mod numerics;
pub mod perturbation;
pub mod ring;
pub mod scan;

pub use chain::{ChainSpec, LatticeSpec, MonodromyResult, Trajectory};
pub use error::{Error, Result};
pub use gauge::GaugeField;
pub use numerics::EigenResult;
pub use ring::{QuasiEnergySpectrum, RingSpec};
pub use scan::{ResonancePrediction, TongueGrid};
pub use perturbation::{PerturbationSetup, SlowFlowMatrix};

/// Default absolute tolerance for period averages and propagator integrals.
pub const DEFAULT_QUAD_TOL: f64 = 1e-12;
/// Default relative residual bound for the dense eigensolver.
pub const DEFAULT_EIG_TOL: f64 = 1e-10;
/// Default number of midpoint steps per modulation period.
pub const DEFAULT_STEPS_PER_PERIOD: usize = 2048;
/// Default instability threshold on `max |Im E|/κ` for tongue maps.
pub const DEFAULT_TONGUE_THRESHOLD: f64 = 1e-6;
/// Default detuning tolerance (units of κ) for the resonance condition.
pub const DEFAULT_DETUNING_TOL: f64 = 0.02;
