use serde::{Deserialize, Serialize};

use super::checks::*;
use super::report::VerificationReport;
use crate::error::{Error, Result};
use crate::oscillator::OscillatorParams;

/// Check groups and the report names each produces. `--only` accepts
/// either a group or a report name.
pub const CHECK_GROUPS: &[(&str, &[&str])] = &[
    ("orthonormality", &["orthonormality"]),
    ("quadrature-stability", &["quadrature-stability"]),
    ("tail-bound", &["tail-bound"]),
    ("eigen-residual", &["eigen-residual"]),
    ("ladder", &["ladder-annihilation", "number-operator", "factorization", "ladder-ordering"]),
    ("polynomial-identities", &["cdh-dual-path", "identity-a2", "identity-a3", "difference-a4", "difference-a5"]),
    ("series-termination", &["series-termination"]),
    ("laguerre-limit", &["laguerre-limit"]),
    (
        "nonrel-limit",
        &[
            "nonrel-limit-alpha",
            "nonrel-limit-nu",
            "nonrel-limit-energy",
            "nonrel-limit-wavefunction",
            "nonrel-limit-operator",
        ],
    ),
    ("collapse-boundary", &["collapse-boundary"]),
    ("relosc-consistency", &["relosc-energy", "relosc-continuity", "relosc-wavefunction"]),
    ("free-theory", &["free-theory"]),
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub params: OscillatorParams,
    /// Multiplier applied to every tolerance.
    pub tolerance_scale: f64,
    /// Relative perturbation of every normalization constant (fault injection).
    pub perturb_cn: f64,
    pub only: Option<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { params: OscillatorParams::default(), tolerance_scale: 1.0, perturb_cn: 0.0, only: None }
    }
}

const SEED: u64 = 0x5eed_0f0c;

fn run_group(group: &str, cfg: &SuiteConfig) -> Vec<VerificationReport> {
    let p = &cfg.params;
    match group {
        "orthonormality" => vec![check_orthonormality(p, 11, cfg.perturb_cn)],
        "quadrature-stability" => vec![check_quadrature_stability(p, 11)],
        "tail-bound" => vec![check_tail_bound(p, 11)],
        "eigen-residual" => vec![check_eigen_residual(p, 8)],
        "ladder" => check_factorization(p, 5),
        "polynomial-identities" => vec![
            check_cdh_dual_path(p),
            check_identity_a2(p),
            check_identity_a3(p),
            check_difference_a4(p),
            check_difference_a5(p),
        ],
        "series-termination" => vec![check_series_termination(p, 6)],
        "laguerre-limit" => [(0, 1.0, 1.5), (1, 1.0, 1.5), (2, 0.7, 0.8), (3, 0.0, 2.0), (5, 2.0, 1.0)]
            .iter()
            .map(|&(n, z, a)| check_laguerre_limit(n, z, a, &[1e2, 1e3, 1e4]))
            .collect(),
        "nonrel-limit" => {
            // the limit needs g₀ ≥ −1/8; fall back to g = 1 otherwise
            let base = if p.d().is_ok() { *p } else { p.with_g(1.0) };
            let cs = [10.0, 100.0, 1000.0];
            let xi: Vec<f64> = (1..=12).map(|k| 0.25 * k as f64).collect();
            let mut out = Vec::new();
            for n in 0..3 {
                out.extend(check_nonrel_limit(n, &base, &cs, &xi));
            }
            for n in 0..2 {
                out.push(check_nonrel_operator_limit(n, &base, &cs, &[0.5, 1.0, 2.0]));
            }
            out
        }
        "collapse-boundary" => sweep_regimes(p, (-10.0, 2.0), &[1e6, 4.0, 2.0, 1.0, 0.5, 0.25], 241).reports,
        "relosc-consistency" => check_relosc_consistency(p, 20, SEED),
        "free-theory" => vec![check_free_theory(p, 50, SEED)],
        _ => Vec::new(),
    }
}

/// Runs every selected check. Fails with a configuration error for an
/// unknown `only` name, invalid parameters, or parameters in the collapse
/// regime.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    cfg.params.validate()?;
    bound_solution(&cfg.params)?;
    if !(cfg.tolerance_scale.is_finite() && cfg.tolerance_scale > 0.0) {
        return Err(Error::Config(format!("tolerance scale must be positive, got {}", cfg.tolerance_scale)));
    }
    let selected: Vec<&str> = match &cfg.only {
        None => CHECK_GROUPS.iter().map(|(g, _)| *g).collect(),
        Some(name) => {
            let hits: Vec<&str> = CHECK_GROUPS
                .iter()
                .filter(|(g, names)| g == name || names.contains(&name.as_str()))
                .map(|(g, _)| *g)
                .collect();
            if hits.is_empty() {
                return Err(Error::Config(format!("unknown check '{name}'")));
            }
            hits
        }
    };
    let mut reports = Vec::new();
    for group in selected {
        for r in run_group(group, cfg) {
            let wanted = match &cfg.only {
                Some(name) => name == group || &r.check_name == name,
                None => true,
            };
            if wanted {
                reports.push(r.rescaled(cfg.tolerance_scale));
            }
        }
    }
    Ok(reports)
}
