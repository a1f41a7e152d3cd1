//! The relativistic linear singular oscillator: parameters, regime
//! classification, spectrum and closed-form stationary states, together with
//! the two reference models it reduces to (the non-relativistic singular
//! oscillator and the g = 0 relativistic harmonic oscillator).

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operators::AnalyticFunction;
use crate::orthopoly::{cdh_recurrence, laguerre, meixner_pollaczek, CdhParams};
use crate::specfun::{is_nonpositive_integer, ln_gamma, ln_gamma_ratio, ComplexScalar};

/// Physical constants of the model. Derived dimensionless quantities are
/// always recomputed from the five primitives.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatorParams {
    pub m: f64,
    pub omega: f64,
    pub g: f64,
    pub c: f64,
    pub hbar: f64,
}

impl Default for OscillatorParams {
    fn default() -> Self {
        Self { m: 1.0, omega: 1.0, g: 1.0, c: 4.0, hbar: 1.0 }
    }
}

impl OscillatorParams {
    pub fn new(m: f64, omega: f64, g: f64, c: f64, hbar: f64) -> Result<Self> {
        let p = Self { m, omega, g, c, hbar };
        p.validate()?;
        Ok(p)
    }

    /// Units m = ω = ħ = 1 with the speed of light and coupling as dials.
    pub fn natural(c: f64, g: f64) -> Result<Self> {
        Self::new(1.0, 1.0, g, c, 1.0)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("m", self.m), ("omega", self.omega), ("c", self.c), ("hbar", self.hbar)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParams(format!("{name} must be finite and positive, got {v}")));
            }
        }
        if !self.g.is_finite() {
            return Err(Error::InvalidParams(format!("g must be finite, got {}", self.g)));
        }
        Ok(())
    }

    pub fn with_g(self, g: f64) -> Self {
        Self { g, ..self }
    }

    pub fn with_c(self, c: f64) -> Self {
        Self { c, ..self }
    }

    /// Compton wavelength λ = ħ/(mc).
    pub fn lambda(&self) -> f64 {
        self.hbar / (self.m * self.c)
    }

    /// ω₀ = ħω/(mc²).
    pub fn omega0(&self) -> f64 {
        self.hbar * self.omega / (self.m * self.c * self.c)
    }

    /// g₀ = mg/ħ².
    pub fn g0(&self) -> f64 {
        self.m * self.g / (self.hbar * self.hbar)
    }

    /// μ = mc²/(ħω) = 1/ω₀.
    pub fn mu(&self) -> f64 {
        self.m * self.c * self.c / (self.hbar * self.omega)
    }

    pub fn rest_energy(&self) -> f64 {
        self.m * self.c * self.c
    }

    pub fn hbar_omega(&self) -> f64 {
        self.hbar * self.omega
    }

    /// Collapse threshold g_crit = −ħ²/(8m) − ħ²ω₀²/(32m).
    pub fn g_crit(&self) -> f64 {
        let w0 = self.omega0();
        -self.hbar * self.hbar / (8.0 * self.m) * (1.0 + 0.25 * w0 * w0)
    }

    /// Non-relativistic exponent d = ½√(1 + 8g₀), defined for g₀ ≥ −1/8.
    pub fn d(&self) -> Result<f64> {
        let g0 = self.g0();
        let arg = 1.0 + 8.0 * g0;
        if arg < 0.0 {
            Err(Error::ComplexExponent { g0 })
        } else {
            Ok(0.5 * arg.sqrt())
        }
    }

    /// ξ/x = √(mω/ħ).
    pub fn xi_per_x(&self) -> f64 {
        (self.m * self.omega / self.hbar).sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// α and ν both real.
    Real,
    /// ν = conj(α); the spectrum is still real.
    ComplexConjugate,
    /// Hermiticity lost, α + ν complex.
    Collapse,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::Real => "real",
            Regime::ComplexConjugate => "complex_conjugate",
            Regime::Collapse => "collapse",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// α, ν and regime for one parameter set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralSolution {
    pub alpha: ComplexScalar,
    pub nu: ComplexScalar,
    pub regime: Regime,
    /// ½√(1 + 8g₀); `None` when g₀ < −1/8.
    pub d: Option<f64>,
    /// ½ + √(¼ + 1/ω₀²), the g = 0 oscillator parameter.
    pub nu_prime: f64,
    /// ν − μ evaluated without cancellation.
    pub nu_minus_mu: ComplexScalar,
    pub params: OscillatorParams,
}

impl SpectralSolution {
    pub fn alpha_plus_nu(&self) -> ComplexScalar {
        self.alpha + self.nu
    }

    pub(crate) fn require_bound_states(&self) -> Result<()> {
        if self.regime == Regime::Collapse {
            Err(Error::Collapse { g: self.params.g, g_crit: self.params.g_crit() })
        } else {
            Ok(())
        }
    }
}

struct RawRoots {
    s: ComplexScalar,
    inner_alpha: ComplexScalar,
    inner_nu: ComplexScalar,
}

// s = √(1 − 8g₀ω₀²); 1 − s is rewritten as 8g₀ω₀²/(1 + s) so that the
// (2/ω₀²)(1 − s) term becomes 16g₀/(1 + s) with no cancellation.
fn raw_roots(params: &OscillatorParams) -> RawRoots {
    let w0 = params.omega0();
    let g0 = params.g0();
    let s = Complex64::new(1.0 - 8.0 * g0 * w0 * w0, 0.0).sqrt();
    let inner_alpha = 1.0 + 16.0 * g0 / (1.0 + s);
    let inner_nu = 1.0 + 2.0 * (1.0 + s) / (w0 * w0);
    RawRoots { s, inner_alpha, inner_nu }
}

/// α and ν straight from the closed form with principal complex square
/// roots, without regime clean-up. Used as the independent route when
/// locating the collapse onset.
pub fn alpha_nu_direct(params: &OscillatorParams) -> (ComplexScalar, ComplexScalar) {
    let r = raw_roots(params);
    (0.5 + 0.5 * r.inner_alpha.sqrt(), 0.5 + 0.5 * r.inner_nu.sqrt())
}

/// Regime from the closed-form thresholds. The boundary g = g_crit is Real.
pub fn classify_regime(params: &OscillatorParams) -> Regime {
    let w0 = params.omega0();
    let g0 = params.g0();
    if 1.0 - 8.0 * g0 * w0 * w0 < 0.0 {
        Regime::ComplexConjugate
    } else if g0 < -0.125 - w0 * w0 / 32.0 {
        Regime::Collapse
    } else {
        Regime::Real
    }
}

pub fn compute_alpha_nu(params: &OscillatorParams) -> SpectralSolution {
    let regime = classify_regime(params);
    let r = raw_roots(params);
    let mu = params.mu();
    let (alpha, nu) = match regime {
        Regime::Real => {
            // clamp rounding noise at the boundary double root
            let a = 0.5 + 0.5 * r.inner_alpha.re.max(0.0).sqrt();
            let n = 0.5 + 0.5 * r.inner_nu.re.sqrt();
            (Complex64::new(a, 0.0), Complex64::new(n, 0.0))
        }
        Regime::ComplexConjugate => {
            let a = 0.5 + 0.5 * r.inner_alpha.sqrt();
            (a, a.conj())
        }
        Regime::Collapse => (0.5 + 0.5 * r.inner_alpha.sqrt(), 0.5 + 0.5 * r.inner_nu.sqrt()),
    };
    let nu_minus_mu = match regime {
        Regime::ComplexConjugate => nu - mu,
        _ => {
            // √inner_ν − 2μ = (1 − 16g₀/(1+s)) / (√inner_ν + 2μ)
            let num = 1.0 - 16.0 * params.g0() / (1.0 + r.s);
            0.5 + 0.5 * num / (r.inner_nu.sqrt() + 2.0 * mu)
        }
    };
    let w0 = params.omega0();
    SpectralSolution {
        alpha,
        nu,
        regime,
        d: params.d().ok(),
        nu_prime: 0.5 + (0.25 + 1.0 / (w0 * w0)).sqrt(),
        nu_minus_mu,
        params: *params,
    }
}

/// E_n = ħω(2n + α + ν). Complex only in the collapse regime.
pub fn energy_level(n: u32, params: &OscillatorParams) -> ComplexScalar {
    let sol = compute_alpha_nu(params);
    params.hbar_omega() * (2.0 * n as f64 + sol.alpha_plus_nu())
}

/// E_n − mc², formed from ν − μ so it stays accurate as c → ∞.
pub fn binding_energy(n: u32, params: &OscillatorParams) -> ComplexScalar {
    let sol = compute_alpha_nu(params);
    params.hbar_omega() * (2.0 * n as f64 + sol.alpha + sol.nu_minus_mu)
}

fn ln_factorial(n: u32) -> f64 {
    (1..=n).map(|k| (k as f64).ln()).sum()
}

fn ln_normalization_sq(n: u32, sol: &SpectralSolution) -> Result<f64> {
    let nf = n as f64;
    let sum = ln_gamma(nf + sol.alpha + sol.nu)? + ln_gamma(nf + sol.alpha + 0.5)? + ln_gamma(nf + sol.nu + 0.5)?;
    Ok(LN_2 - sum.re - ln_factorial(n))
}

/// c_n = √(2 / (Γ(n+α+ν) Γ(n+α+½) Γ(n+ν+½) n!)).
pub fn normalization(n: u32, sol: &SpectralSolution) -> Result<f64> {
    sol.require_bound_states()?;
    Ok((0.5 * ln_normalization_sq(n, sol)?).exp())
}

/// Factors of ψ_n(ρ) = c_n · (−ρ)^(α) · M(ρ) · Ω_n(ρ).
///
/// `c_n · M(ρ)` is held as one logarithm because for large μ each factor
/// separately over- or underflows.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WavefunctionFactors {
    /// i^α Γ(iρ+α)/Γ(iρ).
    pub generalized_degree: ComplexScalar,
    /// S_n(ρ²; α, ν, ½).
    pub polynomial: ComplexScalar,
    /// ln c_n + ln M(ρ), with M(ρ) = ω₀^{iρ} Γ(ν+iρ).
    pub ln_scale: ComplexScalar,
    /// ln c_n. For complex α the generalized degree carries only the phase
    /// of i^α, so c_n normalizes in every regime.
    pub ln_normalization: f64,
}

impl WavefunctionFactors {
    pub fn normalization(&self) -> f64 {
        self.ln_normalization.exp()
    }

    pub fn m_factor(&self) -> ComplexScalar {
        (self.ln_scale - self.ln_normalization).exp()
    }

    pub fn recombine(&self) -> ComplexScalar {
        self.ln_scale.exp() * self.generalized_degree * self.polynomial
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WavefunctionEvaluation {
    pub rho: ComplexScalar,
    pub value: ComplexScalar,
    pub factors: WavefunctionFactors,
}

/// A stationary state ψ_n with its ρ-independent constants precomputed.
#[derive(Debug, Clone, Copy)]
pub struct StationaryState {
    n: u32,
    sol: SpectralSolution,
    cdh: CdhParams,
    ln_omega0: f64,
    // ½ln2 − ½ln n! − ½lnΓ(n+α+½)
    ln_const: ComplexScalar,
    ln_half_shift_nu: ComplexScalar,
    phase: ComplexScalar,
    ln_normalization: f64,
    scale: f64,
}

impl StationaryState {
    pub fn new(n: u32, params: &OscillatorParams) -> Result<Self> {
        let sol = compute_alpha_nu(params);
        Self::from_solution(n, sol)
    }

    pub fn from_solution(n: u32, sol: SpectralSolution) -> Result<Self> {
        sol.require_bound_states()?;
        let nf = n as f64;
        let (alpha, nu) = (sol.alpha, sol.nu);
        // lnΓ(ν+iρ) − ½lnΓ(n+α+ν) − ½lnΓ(n+ν+½)
        //   = R(ν, iρ) − ½R(ν, n+α) − ½R(ν, n+½), R(z, s) = lnΓ(z+s) − lnΓ(z)
        let ln_half_shift_nu =
            0.5 * ln_gamma_ratio(nu, nf + alpha)? + 0.5 * ln_gamma_ratio(nu, Complex64::new(nf + 0.5, 0.0))?;
        let ln_rest = 0.5 * (LN_2 - ln_factorial(n)) - 0.5 * ln_gamma(nf + alpha + 0.5)?;
        // unit-modulus part of i^α = exp(iπα/2)
        let phase = Complex64::new(0.0, FRAC_PI_2 * alpha.re).exp();
        let ln_normalization = 0.5 * ln_normalization_sq(n, &sol)?;
        let ln_const = ln_rest;
        Ok(Self {
            n,
            sol,
            cdh: CdhParams::oscillator(alpha, nu),
            ln_omega0: sol.params.omega0().ln(),
            ln_const,
            ln_half_shift_nu,
            phase,
            ln_normalization,
            scale: 1.0,
        })
    }

    /// Multiplies the state by a constant; used for fault injection.
    pub fn scaled(mut self, factor: f64) -> Self {
        self.scale *= factor;
        self
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn solution(&self) -> &SpectralSolution {
        &self.sol
    }

    /// E_n / mc².
    pub fn reduced_energy(&self) -> ComplexScalar {
        self.sol.params.omega0() * (2.0 * self.n as f64 + self.sol.alpha_plus_nu())
    }

    pub fn evaluate(&self, rho: ComplexScalar) -> Result<WavefunctionEvaluation> {
        let i = Complex64::new(0.0, 1.0);
        let z = i * rho;
        let alpha = self.sol.alpha;
        let generalized_degree = if is_nonpositive_integer(z) {
            if is_nonpositive_integer(z + alpha) {
                return Err(Error::PoleOfGamma { re: (z + alpha).re, im: (z + alpha).im });
            }
            Complex64::new(0.0, 0.0)
        } else {
            self.phase * ln_gamma_ratio(z, alpha)?.exp()
        };
        let polynomial = cdh_recurrence(self.n, rho * rho, self.cdh)?;
        let ln_m_rest = z * self.ln_omega0 + ln_gamma_ratio(self.sol.nu, z)?;
        let ln_scale = self.ln_const - self.ln_half_shift_nu + ln_m_rest + self.scale.ln();
        let factors = WavefunctionFactors {
            generalized_degree,
            polynomial,
            ln_scale,
            ln_normalization: self.ln_normalization + self.scale.ln(),
        };
        Ok(WavefunctionEvaluation { rho, value: factors.recombine(), factors })
    }

    pub fn value(&self, rho: ComplexScalar) -> Result<ComplexScalar> {
        self.evaluate(rho).map(|e| e.value)
    }

    /// ln|ψ_n(ρ)|, finite even where |ψ_n| underflows.
    pub fn ln_abs(&self, rho: ComplexScalar) -> Result<f64> {
        let f = self.evaluate(rho)?.factors;
        Ok(f.ln_scale.re + f.generalized_degree.norm().ln() + f.polynomial.norm().ln())
    }
}

impl AnalyticFunction for StationaryState {
    fn eval(&self, rho: ComplexScalar) -> Result<ComplexScalar> {
        self.value(rho)
    }
}

/// ψ_n(ρ) with its factor decomposition.
pub fn wavefunction(n: u32, rho: ComplexScalar, params: &OscillatorParams) -> Result<WavefunctionEvaluation> {
    StationaryState::new(n, params)?.evaluate(rho)
}

/// Normalized eigenfunction of the non-relativistic singular oscillator at
/// physical coordinate x ≥ 0.
pub fn nonrel_wavefunction(n: u32, x: f64, params: &OscillatorParams) -> Result<f64> {
    let d = params.d()?;
    let k = params.m * params.omega / params.hbar;
    if x == 0.0 {
        return Ok(0.0);
    }
    let ln_pref =
        0.5 * (LN_2 + (d + 1.0) * k.ln() + ln_factorial(n) - ln_gamma(Complex64::new(d + n as f64 + 1.0, 0.0))?.re);
    let y = k * x * x;
    Ok((ln_pref + (d + 0.5) * x.ln() - 0.5 * y).exp() * laguerre(n, d, y))
}

/// E_n = ħω(2n + d + 1) of the non-relativistic model.
pub fn nonrel_energy(n: u32, params: &OscillatorParams) -> Result<f64> {
    Ok(params.hbar_omega() * (2.0 * n as f64 + params.d()? + 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RelOscReference {
    pub energy: f64,
    pub wavefunction: ComplexScalar,
}

/// Eigenpair of the g = 0 relativistic harmonic oscillator (odd states):
/// E = ħω(2n + 1 + ν′), ψ = c′_n ω₀^{iρ} Γ(ν′ + iρ) P_{2n+1}^{ν′}(ρ; π/2)
/// with c′_n = 2^{ν′}√((2n+1)!/(2πλΓ(2n+1+ν′))). Only `params.omega0()`,
/// λ and ħω enter; the coupling g is ignored.
pub fn relosc_reference(n: u32, rho: ComplexScalar, params: &OscillatorParams) -> Result<RelOscReference> {
    let w0 = params.omega0();
    let nu_p = 0.5 + (0.25 + 1.0 / (w0 * w0)).sqrt();
    let k = 2 * n + 1;
    let ln_c = nu_p * LN_2
        + 0.5
            * (ln_factorial(k)
                - (2.0 * PI * params.lambda()).ln()
                - ln_gamma(Complex64::new(k as f64 + nu_p, 0.0))?.re);
    let z = Complex64::new(0.0, 1.0) * rho;
    let ln_m = z * w0.ln() + ln_gamma(nu_p + z)?;
    let poly = meixner_pollaczek(k, rho, Complex64::new(nu_p, 0.0), FRAC_PI_2)?;
    Ok(RelOscReference {
        energy: params.hbar_omega() * (2.0 * n as f64 + 1.0 + nu_p),
        wavefunction: (ln_c + ln_m).exp() * poly,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn derived_quantities() {
        let p = OscillatorParams::new(2.0, 3.0, 0.7, 5.0, 0.5).unwrap();
        assert!((p.omega0() * p.mu() - 1.0).abs() < 1e-15);
        assert!((p.lambda() - 0.05).abs() < 1e-15);
        assert!((p.g0() - 2.0 * 0.7 / 0.25).abs() < 1e-14);
        assert!(OscillatorParams::new(0.0, 1.0, 0.0, 1.0, 1.0).is_err());
        assert!(OscillatorParams::new(1.0, 1.0, f64::NAN, 1.0, 1.0).is_err());
    }

    #[test]
    fn alpha_is_one_at_zero_coupling() {
        let sol = compute_alpha_nu(&OscillatorParams::natural(2.0, 0.0).unwrap());
        assert_eq!(sol.alpha, c(1.0, 0.0));
        // ω₀ = ¼: ν = ½ + ½√(1 + 64) = ν′
        let nu = 0.5 + 0.5 * 65f64.sqrt();
        assert!((sol.nu.re - nu).abs() < 1e-14 && sol.nu.im == 0.0);
        assert!((sol.nu_prime - nu).abs() < 1e-14);
        assert_eq!(sol.regime, Regime::Real);
    }

    #[test]
    fn collapse_boundary_is_a_double_root_of_the_inner_sqrt() {
        let p = OscillatorParams::natural(1.0, -5.0 / 32.0).unwrap();
        assert!((p.g_crit() + 0.15625).abs() < 1e-16);
        let sol = compute_alpha_nu(&p);
        assert_eq!(sol.regime, Regime::Real);
        assert_eq!(sol.alpha, c(0.5, 0.0));
        assert!((sol.nu.re - (0.5 + 0.5 * 6f64.sqrt())).abs() < 1e-14);
    }

    #[test]
    fn regime_examples() {
        assert_eq!(classify_regime(&OscillatorParams::natural(3.0, 0.0).unwrap()), Regime::Real);
        let p = OscillatorParams::natural(0.25, -9.0).unwrap();
        assert!((p.g_crit() + 8.125).abs() < 1e-14);
        assert_eq!(classify_regime(&p), Regime::Collapse);
        let p = OscillatorParams::natural(1.0, 0.2).unwrap();
        assert_eq!(classify_regime(&p), Regime::ComplexConjugate);
        let sol = compute_alpha_nu(&p);
        assert_eq!(sol.nu, sol.alpha.conj());
        assert_eq!(sol.alpha_plus_nu().im, 0.0);
        assert!(sol.alpha.im != 0.0);
    }

    #[test]
    fn spectrum_examples() {
        let p = OscillatorParams::natural(2.0, 0.0).unwrap();
        let e0 = energy_level(0, &p);
        assert!((e0.re - (1.5 + 0.5 * 65f64.sqrt())).abs() < 1e-13);
        assert!((e0.re - 5.531_128_874_149_275).abs() < 1e-12);
        for n in 0..6 {
            let gap = energy_level(n + 1, &p) - energy_level(n, &p);
            assert!((gap - 2.0).norm() < 1e-13);
        }
        let collapse = energy_level(0, &OscillatorParams::natural(1.0, -0.2).unwrap());
        assert!(collapse.im != 0.0);
    }

    #[test]
    fn binding_energy_approaches_nonrelativistic_value() {
        let mut prev = f64::INFINITY;
        for &cl in &[10.0, 100.0, 1000.0] {
            let p = OscillatorParams::natural(cl, 1.0).unwrap();
            let gap = (binding_energy(0, &p).re - 2.5).abs();
            assert!(gap < prev);
            prev = gap;
            // direct difference agrees where it is still well-conditioned
            if cl <= 100.0 {
                let direct = energy_level(0, &p).re - p.rest_energy();
                assert!((direct - binding_energy(0, &p).re).abs() < 1e-9);
            }
        }
        assert!(prev < 1e-5);
    }

    #[test]
    fn normalization_half_integer_gammas() {
        let mut sol = compute_alpha_nu(&OscillatorParams::default());
        sol.alpha = c(1.0, 0.0);
        sol.nu = c(2.0, 0.0);
        sol.regime = Regime::Real;
        let cn = normalization(0, &sol).unwrap();
        assert!((cn - (8.0 / (3.0 * PI)).sqrt()).abs() < 1e-14);
        assert!((cn - 0.921_317_731_923_561_3).abs() < 1e-14);
    }

    #[test]
    fn collapse_refuses_states() {
        let p = OscillatorParams::natural(1.0, -0.2).unwrap();
        let sol = compute_alpha_nu(&p);
        assert!(matches!(normalization(0, &sol), Err(Error::Collapse { .. })));
        assert!(matches!(wavefunction(0, c(1.0, 0.0), &p), Err(Error::Collapse { .. })));
    }

    #[test]
    fn wavefunction_vanishes_at_origin() {
        let p = OscillatorParams::default();
        for n in 0..4 {
            let w = wavefunction(n, c(0.0, 0.0), &p).unwrap();
            assert_eq!(w.value, c(0.0, 0.0));
        }
    }

    #[test]
    fn factors_recombine_and_decay() {
        let p = OscillatorParams::natural(3.0, 0.5).unwrap();
        let w = wavefunction(2, c(1.7, 0.0), &p).unwrap();
        let f = w.factors;
        let product = f.normalization() * f.generalized_degree * f.m_factor() * f.polynomial;
        assert!((product - w.value).norm() <= 1e-13 * w.value.norm());
        assert_eq!(f.recombine(), w.value);
        // both routes to c_n agree for real α
        let cn = normalization(2, &compute_alpha_nu(&p)).unwrap();
        assert!((f.normalization() - cn).abs() < 1e-14 * cn);
        let far = wavefunction(2, c(50.0, 0.0), &p).unwrap().value.norm();
        let near = wavefunction(2, c(20.0, 0.0), &p).unwrap().value.norm();
        assert!(far < near);
    }

    #[test]
    fn nonrel_reference_values() {
        let p = OscillatorParams::natural(1.0, 0.0).unwrap();
        assert_eq!(nonrel_wavefunction(0, 0.0, &p).unwrap(), 0.0);
        // d = ½: [2/Γ(3/2)]^{½} · 1 · e^{−½}
        let expected = (2.0 / (PI.sqrt() / 2.0)).sqrt() * (-0.5f64).exp();
        assert!((nonrel_wavefunction(0, 1.0, &p).unwrap() - expected).abs() < 1e-14);
        assert!((nonrel_energy(0, &p).unwrap() - 1.5).abs() < 1e-15);
        let p1 = OscillatorParams::natural(1.0, 1.0).unwrap();
        assert!((nonrel_energy(2, &p1).unwrap() - 6.5).abs() < 1e-14);
        let bad = OscillatorParams::natural(1.0, -0.2).unwrap();
        assert!(matches!(nonrel_energy(0, &bad), Err(Error::ComplexExponent { .. })));
        assert!(nonrel_wavefunction(0, 1.0, &bad).is_err());
    }

    #[test]
    fn relosc_energy_matches_zero_coupling_spectrum() {
        for &cl in &[0.3, 1.0, 2.0, 7.0] {
            let p = OscillatorParams::natural(cl, 0.0).unwrap();
            for n in 0..4 {
                let r = relosc_reference(n, c(1.0, 0.0), &p).unwrap();
                assert!((r.energy - energy_level(n, &p).re).abs() < 1e-12 * r.energy);
            }
        }
        let p = OscillatorParams::natural(2.0, 0.0).unwrap();
        let e0 = relosc_reference(0, c(1.0, 0.0), &p).unwrap().energy;
        assert!((e0 - 5.531_128_874_149_275).abs() < 1e-12);
    }

    #[test]
    fn relosc_shape_matches_zero_coupling_state() {
        let p = OscillatorParams::natural(1.5, 0.0).unwrap();
        for n in 0..3 {
            let state = StationaryState::new(n, &p).unwrap();
            let r0 = relosc_reference(n, c(0.8, 0.0), &p).unwrap().wavefunction / state.value(c(0.8, 0.0)).unwrap();
            for &rho in &[0.3, 1.1, 2.5, 4.0] {
                let r = relosc_reference(n, c(rho, 0.0), &p).unwrap().wavefunction / state.value(c(rho, 0.0)).unwrap();
                assert!((r - r0).norm() < 1e-10 * r0.norm(), "n={n} rho={rho}");
            }
        }
    }
}
