use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::oscillator::OscillatorParams;

/// Outcome of one verification check. `passed` is always `residual <= tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_name: String,
    #[serde(flatten)]
    pub params: Option<OscillatorParams>,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub notes: String,
}

/// Residual recorded when a check cannot produce a number, or when an
/// ordering requirement (such as monotone convergence) is violated.
pub const FAILED_RESIDUAL: f64 = f64::MAX;

impl VerificationReport {
    pub fn new(
        check_name: impl Into<String>,
        params: Option<OscillatorParams>,
        residual: f64,
        tolerance: f64,
        notes: impl Into<String>,
    ) -> Self {
        let residual = if residual.is_nan() || residual.is_infinite() { FAILED_RESIDUAL } else { residual };
        Self {
            check_name: check_name.into(),
            params,
            residual,
            tolerance,
            passed: residual <= tolerance,
            notes: notes.into(),
        }
    }

    /// Builds a report from a fallible measurement of (residual, notes);
    /// an error becomes a failed report carrying the error text.
    pub fn from_measurement(
        check_name: &str,
        params: Option<OscillatorParams>,
        tolerance: f64,
        measured: Result<(f64, String)>,
    ) -> Self {
        match measured {
            Ok((residual, notes)) => Self::new(check_name, params, residual, tolerance, notes),
            Err(e) => Self::new(check_name, params, FAILED_RESIDUAL, tolerance, format!("error: {e}")),
        }
    }

    /// Multiplies the tolerance and re-evaluates `passed`.
    pub fn rescaled(mut self, scale: f64) -> Self {
        self.tolerance *= scale;
        self.passed = self.residual <= self.tolerance;
        self
    }
}

/// Whether a sequence of errors decreases strictly, treating entries that
/// are already at `floor` as converged.
pub fn strictly_decreasing(errors: &[f64], floor: f64) -> bool {
    errors.windows(2).all(|w| w[1] < w[0] || (w[0] <= floor && w[1] <= floor))
}

pub(crate) fn format_sequence(values: &[f64]) -> String {
    values.iter().map(|v| format!("{v:.3e}")).collect::<Vec<_>>().join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passed_tracks_residual() {
        let r = VerificationReport::new("x", None, 2e-9, 1e-9, "");
        assert!(!r.passed);
        assert!(r.clone().rescaled(2.0).passed);
        let nan = VerificationReport::new("x", None, f64::NAN, 1.0, "");
        assert_eq!(nan.residual, FAILED_RESIDUAL);
        assert!(!nan.passed);
    }

    #[test]
    fn json_is_flat() {
        let r = VerificationReport::new("x", Some(OscillatorParams::default()), 0.0, 1.0, "n");
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["c"], 4.0);
        assert_eq!(v["check_name"], "x");
        let back: VerificationReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
        let bare: serde_json::Value = serde_json::to_value(VerificationReport::new("y", None, 0.0, 1.0, "")).unwrap();
        assert!(bare.get("m").is_none());
    }

    #[test]
    fn monotonicity() {
        assert!(strictly_decreasing(&[3.0, 2.0, 1.0], 0.0));
        assert!(!strictly_decreasing(&[3.0, 3.0, 1.0], 0.0));
        assert!(strictly_decreasing(&[0.0, 0.0, 0.0], 1e-15));
    }
}
