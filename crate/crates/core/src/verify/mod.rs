//! Quadrature, verification checks and the suite that runs them.

pub mod checks;
pub mod quadrature;
pub mod report;
pub mod suite;

pub use checks::*;
pub use quadrature::{gauss_legendre, identity_deviation, overlap_matrix, overlap_matrix_states, QuadratureGrid};
pub use report::{strictly_decreasing, VerificationReport, FAILED_RESIDUAL};
pub use suite::{run_suite, SuiteConfig, CHECK_GROUPS};
