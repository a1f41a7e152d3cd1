//! Finite-difference operators acting by exact complex shifts.
//!
//! A shift e^{a∂_ρ} is always realised as f(ρ) ↦ f(ρ + a) on a closed-form
//! [`AnalyticFunction`]; nothing here differentiates numerically.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oscillator::{OscillatorParams, SpectralSolution};
use crate::specfun::{binomial, ComplexScalar};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Absolute floor used by [`relative_residual`] near zeros of the reference.
pub const RESIDUAL_FLOOR: f64 = 1e-12;

/// A function that can be evaluated exactly at complex arguments.
pub trait AnalyticFunction {
    fn eval(&self, rho: ComplexScalar) -> Result<ComplexScalar>;

    /// e^{a∂_ρ} f evaluated at ρ.
    fn shifted(&self, rho: ComplexScalar, a: ComplexScalar) -> Result<ComplexScalar> {
        self.eval(rho + a)
    }
}

impl<F> AnalyticFunction for F
where
    F: Fn(ComplexScalar) -> Result<ComplexScalar>,
{
    fn eval(&self, rho: ComplexScalar) -> Result<ComplexScalar> {
        self(rho)
    }
}

/// |got − expected| / max(|expected|, 1e-12).
pub fn relative_residual(got: ComplexScalar, expected: ComplexScalar) -> f64 {
    (got - expected).norm() / expected.norm().max(RESIDUAL_FLOOR)
}

fn nonzero(z: ComplexScalar) -> Result<ComplexScalar> {
    if z.re == 0.0 && z.im == 0.0 {
        Err(Error::SingularPoint { re: z.re, im: z.im })
    } else {
        Ok(z)
    }
}

/// Hf(ρ) in units of mc²:
/// ½[f(ρ+i) + f(ρ−i)] + (½ω₀²ρ⁽²⁾ + g₀/ρ⁽²⁾) f(ρ+i), with ρ⁽²⁾ = ρ(ρ+i).
pub fn apply_hamiltonian<F>(f: &F, rho: ComplexScalar, params: &OscillatorParams) -> Result<ComplexScalar>
where
    F: AnalyticFunction + ?Sized,
{
    nonzero(rho)?;
    nonzero(rho + I).map_err(|_| Error::SingularPoint { re: rho.re, im: rho.im })?;
    let rho2 = rho * (rho + I);
    let w0 = params.omega0();
    let up = f.shifted(rho, I)?;
    let down = f.shifted(rho, -I)?;
    Ok(0.5 * (up + down) + (0.5 * w0 * w0 * rho2 + params.g0() / rho2) * up)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LadderSign {
    Lowering,
    Raising,
}

/// Where the multiplicative factor of a ladder operator is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LadderOrdering {
    /// a⁻ multiplies at ρ + i/2 (shift applied to the product), a⁺ at ρ.
    /// This is the ordering for which a⁻ψ₀ = 0 and H = mc²(a⁺a⁻ + ω₀(α+ν)).
    #[default]
    Canonical,
    /// The opposite reading: a⁻ multiplies at ρ, a⁺ at ρ + i/2.
    FactorAtOrigin,
}

// (ν + iσ)(1 + α/(iσ))
fn lowering_factor(sigma: ComplexScalar, sol: &SpectralSolution) -> Result<ComplexScalar> {
    let is = nonzero(I * sigma)?;
    Ok((sol.nu + is) * (1.0 + sol.alpha / is))
}

// (ν − iσ)(1 − α/(iσ))
fn raising_factor(sigma: ComplexScalar, sol: &SpectralSolution) -> Result<ComplexScalar> {
    let is = nonzero(I * sigma)?;
    Ok((sol.nu - is) * (1.0 - sol.alpha / is))
}

/// a∓f(ρ) in the canonical ordering, dimensionless.
pub fn apply_ladder<F>(sign: LadderSign, f: &F, rho: ComplexScalar, sol: &SpectralSolution) -> Result<ComplexScalar>
where
    F: AnalyticFunction + ?Sized,
{
    apply_ladder_with(sign, LadderOrdering::Canonical, f, rho, sol)
}

/// a∓f(ρ) = (1/√2)[f(ρ − i/2) − ω₀ K(σ) f(ρ + i/2)], with the factor K
/// evaluated at σ chosen by `ordering`.
pub fn apply_ladder_with<F>(
    sign: LadderSign,
    ordering: LadderOrdering,
    f: &F,
    rho: ComplexScalar,
    sol: &SpectralSolution,
) -> Result<ComplexScalar>
where
    F: AnalyticFunction + ?Sized,
{
    let half = 0.5 * I;
    let factor = match (sign, ordering) {
        (LadderSign::Lowering, LadderOrdering::Canonical) => lowering_factor(rho + half, sol)?,
        (LadderSign::Lowering, LadderOrdering::FactorAtOrigin) => lowering_factor(rho, sol)?,
        (LadderSign::Raising, LadderOrdering::Canonical) => raising_factor(rho, sol)?,
        (LadderSign::Raising, LadderOrdering::FactorAtOrigin) => raising_factor(rho + half, sol)?,
    };
    let w0 = sol.params.omega0();
    let down = f.shifted(rho, -half)?;
    let up = f.shifted(rho, half)?;
    Ok(std::f64::consts::FRAC_1_SQRT_2 * (down - w0 * factor * up))
}

/// a⁺a⁻f(ρ) in the given ordering.
pub fn apply_number<F>(
    ordering: LadderOrdering,
    f: &F,
    rho: ComplexScalar,
    sol: &SpectralSolution,
) -> Result<ComplexScalar>
where
    F: AnalyticFunction + ?Sized,
{
    let lowered = |r: ComplexScalar| apply_ladder_with(LadderSign::Lowering, ordering, f, r, sol);
    apply_ladder_with(LadderSign::Raising, ordering, &lowered, rho, sol)
}

/// A free relativistic plane wave with real momentum p.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlaneWaveState {
    pub p: f64,
    pub p0: f64,
    /// Rapidity χ with p = mc·sinh χ.
    pub chi: f64,
    /// E_p = c·p₀.
    pub energy: f64,
    lambda: f64,
}

impl PlaneWaveState {
    pub fn new(p: f64, params: &OscillatorParams) -> Self {
        let mc = params.m * params.c;
        let chi = (p / mc).asinh();
        let p0 = mc * chi.cosh();
        Self { p, p0, chi, energy: params.c * p0, lambda: params.lambda() }
    }

    /// ξ(p, x) = e^{ixχ/λ}, for complex x so it can be shifted by ±iλ.
    pub fn value(&self, x: ComplexScalar) -> ComplexScalar {
        (I * x * self.chi / self.lambda).exp()
    }
}

impl AnalyticFunction for PlaneWaveState {
    fn eval(&self, x: ComplexScalar) -> Result<ComplexScalar> {
        Ok(self.value(x))
    }
}

pub fn plane_wave(p: f64, x: f64, params: &OscillatorParams) -> ComplexScalar {
    PlaneWaveState::new(p, params).value(x.into())
}

/// Ĥ₀f(x) = mc² cosh(iλ∂_x) f = ½mc²[f(x+iλ) + f(x−iλ)].
pub fn apply_free_hamiltonian<F>(f: &F, x: ComplexScalar, params: &OscillatorParams) -> Result<ComplexScalar>
where
    F: AnalyticFunction + ?Sized,
{
    let step = I * params.lambda();
    Ok(0.5 * params.rest_energy() * (f.shifted(x, step)? + f.shifted(x, -step)?))
}

/// p̂f(x) = −mc sinh(iλ∂_x) f = −½mc[f(x+iλ) − f(x−iλ)].
pub fn apply_momentum<F>(f: &F, x: ComplexScalar, params: &OscillatorParams) -> Result<ComplexScalar>
where
    F: AnalyticFunction + ?Sized,
{
    let step = I * params.lambda();
    Ok(-0.5 * params.m * params.c * (f.shifted(x, step)? - f.shifted(x, -step)?))
}

fn binom(n: u32, m: i64) -> Result<f64> {
    binomial(n, m).map(|v| v as f64)
}

/// Even coefficients e₀, e₂, …, e_{2n} of Ω(ρ) = Σ e_{2k}(iρ)^{2k}, by
/// downward recursion from e_{2n} = 1 at ε = 2n + α + ν.
pub fn series_coefficients(n: u32, sol: &SpectralSolution) -> Result<Vec<ComplexScalar>> {
    sol.require_bound_states()?;
    binom(2 * n, 0)?;
    let (a, b) = (sol.alpha, sol.nu);
    let (ab, a_plus_b) = (a * b, a + b);
    let eps = 2.0 * n as f64 + a_plus_b;
    let mut e = vec![Complex64::new(0.0, 0.0); n as usize + 1];
    e[n as usize] = Complex64::new(1.0, 0.0);
    for j in (0..n).rev() {
        let jj = 2 * j as i64;
        let mut acc = Complex64::new(0.0, 0.0);
        for k in j + 1..=n {
            let two_k = 2 * k;
            let weight = ab * binom(two_k, jj + 1)? + a_plus_b * binom(two_k, jj)? + binom(two_k, jj - 1)?;
            acc += weight * e[k as usize];
        }
        let den = eps - a_plus_b - jj as f64;
        if den.norm() == 0.0 {
            return Err(Error::SingularParameters { k: j });
        }
        e[j as usize] = acc / den;
    }
    Ok(e)
}

/// Σ e_{2k}(iρ)^{2k} for coefficients from [`series_coefficients`].
pub fn omega_from_coefficients(coefficients: &[ComplexScalar], rho: ComplexScalar) -> ComplexScalar {
    let t = -(rho * rho);
    coefficients.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &e| acc * t + e)
}

/// Relative residual of the polynomial difference equation
/// (α+iρ)(ν+iρ)Ω(ρ−i) − (α−iρ)(ν−iρ)Ω(ρ+i) = 2iε_nρ Ω(ρ).
pub fn omega_difference_residual<F>(omega: &F, n: u32, rho: ComplexScalar, sol: &SpectralSolution) -> Result<f64>
where
    F: AnalyticFunction + ?Sized,
{
    let (a, b) = (sol.alpha, sol.nu);
    let ir = I * rho;
    let lhs = (a + ir) * (b + ir) * omega.shifted(rho, -I)? - (a - ir) * (b - ir) * omega.shifted(rho, I)?;
    let eps = 2.0 * n as f64 + a + b;
    let rhs = 2.0 * I * eps * rho * omega.eval(rho)?;
    let scale = ((a + ir) * (b + ir) * omega.shifted(rho, -I)?).norm().max(rhs.norm());
    Ok((lhs - rhs).norm() / scale.max(RESIDUAL_FLOOR))
}
