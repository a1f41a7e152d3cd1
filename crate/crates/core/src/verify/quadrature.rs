//! Composite Gauss–Legendre quadrature on [0, R] with a decay-envelope
//! estimate of the neglected tail [R, ∞).

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oscillator::{OscillatorParams, StationaryState};
use crate::specfun::{CompensatedSum, ComplexScalar};

type Rule = (Vec<f64>, Vec<f64>);

/// Nodes and weights of the n-point Gauss–Legendre rule on [−1, 1].
pub fn gauss_legendre(n: usize) -> Rule {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Panel {
    pub lo: f64,
    pub hi: f64,
    pub nodes: usize,
}

/// Unit panels tiling [0, R]; denser near the origin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureGrid {
    pub panels: Vec<Panel>,
    pub nodes_per_panel: usize,
    pub far_nodes_per_panel: usize,
    /// Panels ending at or below this radius use `nodes_per_panel`.
    pub dense_radius: f64,
    pub truncation_radius: f64,
    /// Estimated bound on ∫_R^∞ |ψ_n ψ_m| over the states the grid was built for.
    pub tail_bound: f64,
    pub tolerance: f64,
}

pub const DEFAULT_TOLERANCE: f64 = 1e-8;

impl QuadratureGrid {
    fn tile(radius: f64, near: usize, far: usize, dense_radius: f64) -> Vec<Panel> {
        let count = radius.ceil() as usize;
        (0..count)
            .map(|k| {
                let lo = k as f64;
                let hi = ((k + 1) as f64).min(radius);
                let nodes = if hi <= dense_radius { near } else { far };
                Panel { lo, hi, nodes }
            })
            .collect()
    }

    /// Grid on [0, radius] for `states`, without the tail-size gate.
    pub fn with_radius(radius: f64, states: &[StationaryState], tolerance: f64) -> Result<Self> {
        let tail_bound = tail_bound(radius, states)?;
        Ok(Self {
            panels: Self::tile(radius, 64, 16, 10.0),
            nodes_per_panel: 64,
            far_nodes_per_panel: 16,
            dense_radius: 10.0,
            truncation_radius: radius,
            tail_bound,
            tolerance,
        })
    }

    /// Default grid: R = max(40, 10 Re ν). Fails with `GridTooSmall` when the
    /// tail estimate exceeds a tenth of the tolerance.
    pub fn for_states(states: &[StationaryState], tolerance: f64) -> Result<Self> {
        let nu = states.iter().map(|s| s.solution().nu.re).fold(0.0, f64::max);
        let grid = Self::with_radius((10.0 * nu).max(40.0), states, tolerance)?;
        grid.check_tail()?;
        Ok(grid)
    }

    pub fn check_tail(&self) -> Result<()> {
        let limit = self.tolerance / 10.0;
        if self.tail_bound > limit {
            Err(Error::GridTooSmall { tail_bound: self.tail_bound, limit })
        } else {
            Ok(())
        }
    }

    /// The same panels with twice the nodes in each.
    pub fn refined(&self) -> Self {
        let mut g = self.clone();
        for p in &mut g.panels {
            p.nodes *= 2;
        }
        g.nodes_per_panel *= 2;
        g.far_nodes_per_panel *= 2;
        g
    }

    /// Absolute (node, weight) pairs over all panels.
    pub fn points(&self) -> Vec<(f64, f64)> {
        let mut rules: Vec<(usize, Rule)> = Vec::new();
        let mut out = Vec::new();
        for p in &self.panels {
            if !rules.iter().any(|(n, _)| *n == p.nodes) {
                rules.push((p.nodes, gauss_legendre(p.nodes)));
            }
            let (_, (x, w)) = rules.iter().find(|(n, _)| *n == p.nodes).unwrap();
            let half = 0.5 * (p.hi - p.lo);
            let mid = 0.5 * (p.hi + p.lo);
            out.extend(x.iter().zip(w).map(|(&x, &w)| (mid + half * x, half * w)));
        }
        out
    }

    pub fn integrate<F: FnMut(f64) -> Result<ComplexScalar>>(&self, mut f: F) -> Result<ComplexScalar> {
        let mut sum = CompensatedSum::default();
        for (x, w) in self.points() {
            sum.add(w * f(x)?);
        }
        Ok(sum.value())
    }
}

/// Exponent p with |ψ_n(ρ)| ~ ρ^p e^{−πρ/2} for large ρ.
pub fn decay_exponent(state: &StationaryState) -> f64 {
    let sol = state.solution();
    sol.alpha.re + sol.nu.re - 0.5 + 2.0 * state.degree() as f64
}

/// ln C in |ψ_n(ρ)| ≤ C ρ^p e^{−πρ/2} on ρ ≥ R, taken as twice the largest
/// observed ratio on [R, 2R].
pub fn ln_envelope_constant(state: &StationaryState, radius: f64) -> Result<f64> {
    let p = decay_exponent(state);
    let mut best = f64::NEG_INFINITY;
    for k in 0..=64 {
        let rho = radius * (1.0 + k as f64 / 64.0);
        let ln_psi = state.ln_abs(Complex64::new(rho, 0.0))?;
        best = best.max(ln_psi - p * rho.ln() + 0.5 * PI * rho);
    }
    Ok(best + std::f64::consts::LN_2)
}

/// Bound on max_{n,m} ∫_R^∞ |ψ_n ψ_m| from the envelopes, using
/// ∫_R^∞ ρ^p e^{−πρ} dρ ≤ R^p e^{−πR} / (π − p/R) when πR > p.
pub fn tail_bound(radius: f64, states: &[StationaryState]) -> Result<f64> {
    let env: Vec<(f64, f64)> =
        states.iter().map(|s| Ok((ln_envelope_constant(s, radius)?, decay_exponent(s)))).collect::<Result<_>>()?;
    let mut worst = 0.0f64;
    for (i, &(ln_a, pa)) in env.iter().enumerate() {
        for &(ln_b, pb) in &env[i..] {
            let p = pa + pb;
            let rate = PI - p / radius;
            if rate <= 0.0 {
                return Ok(f64::INFINITY);
            }
            let ln_tail = ln_a + ln_b + p * radius.ln() - PI * radius - rate.ln();
            worst = worst.max(ln_tail.exp());
        }
    }
    Ok(worst)
}

/// Gram matrix G[n][m] = ∫₀^R ψ_n ψ_m* dρ.
pub fn overlap_matrix_states(states: &[StationaryState], grid: &QuadratureGrid) -> Result<Vec<Vec<ComplexScalar>>> {
    let points = grid.points();
    let values: Vec<Vec<ComplexScalar>> = states
        .iter()
        .map(|s| points.iter().map(|&(x, _)| s.value(Complex64::new(x, 0.0))).collect())
        .collect::<Result<_>>()?;
    let n = states.len();
    let mut g = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        for j in i..n {
            let mut sum = CompensatedSum::default();
            for (k, &(_, w)) in points.iter().enumerate() {
                sum.add(w * values[i][k] * values[j][k].conj());
            }
            g[i][j] = sum.value();
            g[j][i] = g[i][j].conj();
        }
    }
    Ok(g)
}

/// Overlap matrix of ψ_0 … ψ_{n−1}.
pub fn overlap_matrix(n: usize, params: &OscillatorParams, grid: &QuadratureGrid) -> Result<Vec<Vec<ComplexScalar>>> {
    grid.check_tail()?;
    let states = (0..n as u32).map(|k| StationaryState::new(k, params)).collect::<Result<Vec<_>>>()?;
    overlap_matrix_states(&states, grid)
}

/// max |G − I| entrywise.
pub fn identity_deviation(g: &[Vec<ComplexScalar>]) -> f64 {
    let mut worst = 0.0f64;
    for (i, row) in g.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((v - target).norm());
        }
    }
    worst
}
