//! Relativistic linear singular oscillator in the finite-difference
//! formulation of relativistic quantum mechanics.
//!
//! The crate is organised bottom-up:
//!
//! * [`specfun`]: complex log-gamma, gamma ratios, Pochhammer symbols.
//! * [`orthopoly`]: continuous dual Hahn, Meixner–Pollaczek and Laguerre
//!   polynomials.
//! * [`oscillator`]: parameters, regimes, spectrum and stationary states.
//! * [`operators`]: the Hamiltonian, ladder operators and free plane waves,
//!   all acting by exact complex shifts.
//! * [`verify`]: quadrature and the verification suite.
//! * [`cli`]: the command-line front end used by the `relosc` binary.

#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord, clippy::redundant_closure_call)]

pub mod cli;
mod ddouble;
pub mod error;
pub mod operators;
pub mod orthopoly;
pub mod oscillator;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use operators::{
    apply_free_hamiltonian, apply_hamiltonian, apply_ladder, apply_ladder_with, apply_momentum, apply_number,
    omega_from_coefficients, plane_wave, series_coefficients, AnalyticFunction, LadderOrdering, LadderSign,
    PlaneWaveState,
};
pub use orthopoly::{cdh_recurrence, cdh_series, laguerre, meixner_pollaczek, CdhParams};
pub use oscillator::{
    binding_energy, compute_alpha_nu, energy_level, nonrel_energy, nonrel_wavefunction, normalization,
    relosc_reference, wavefunction, OscillatorParams, Regime, SpectralSolution, StationaryState,
};
pub use specfun::{gamma, gamma_ratio, ln_gamma, ln_gamma_ratio, ComplexScalar};
