//! Continuous dual Hahn, Meixner–Pollaczek and associated Laguerre
//! polynomials.
//!
//! The continuous dual Hahn family has two evaluation paths, the terminating
//! ₃F₂ sum ([`cdh_series`]) and the three-term recurrence
//! ([`cdh_recurrence`]); the recurrence is the one the model uses. Every
//! evaluator takes complex arguments so that shifted points ρ ± i and
//! ρ ± i/2 can be reached.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::ddouble::Cdd;
use crate::error::{Error, Result};
use crate::specfun::{pochhammer, ComplexScalar};

/// Highest degree accepted by the polynomial evaluators.
pub const MAX_DEGREE: u32 = 64;

/// Parameters (a, b, c) of S_n(x²; a, b, c).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CdhParams {
    pub a: ComplexScalar,
    pub b: ComplexScalar,
    pub c: ComplexScalar,
}

impl CdhParams {
    pub fn new(a: ComplexScalar, b: ComplexScalar, c: ComplexScalar) -> Self {
        Self { a, b, c }
    }

    pub fn real(a: f64, b: f64, c: f64) -> Self {
        Self::new(a.into(), b.into(), c.into())
    }

    /// The binding used by the oscillator: (a, b, c) = (α, ν, ½).
    pub fn oscillator(alpha: ComplexScalar, nu: ComplexScalar) -> Self {
        Self::new(alpha, nu, Complex64::new(0.5, 0.0))
    }
}

fn check_degree(n: u32) -> Result<()> {
    if n > MAX_DEGREE {
        Err(Error::DegreeTooLarge { n, max: MAX_DEGREE })
    } else {
        Ok(())
    }
}

fn is_zero(z: ComplexScalar) -> bool {
    z.re == 0.0 && z.im == 0.0
}

/// S_n(x²; a, b, c) from the terminating ₃F₂ sum
/// (a+b)_n (a+c)_n · ₃F₂(−n, a+ix, a−ix; a+b, a+c; 1).
///
/// The alternating terms can exceed the result by many orders of magnitude,
/// so the sum is carried in double-double arithmetic.
pub fn cdh_series(n: u32, x_sq: ComplexScalar, p: CdhParams) -> Result<ComplexScalar> {
    check_degree(n)?;
    let (a, b, c) = (Cdd::from(p.a), Cdd::from(p.b), Cdd::from(p.c));
    let x_sq = Cdd::from(x_sq);
    let one = Cdd::from(1.0);
    let mut term = one;
    let mut sum = one;
    let mut prefactor = one;
    for k in 0..n {
        let kf = Cdd::from(k as f64);
        let den_ab = a + b + kf;
        let den_ac = a + c + kf;
        if den_ab.is_zero() || den_ac.is_zero() {
            return Err(Error::SingularParameters { k });
        }
        // (a+ix)_k (a−ix)_k = Π ((a+j)² + x²)
        let shifted = a + kf;
        let ratio = Cdd::from(k as f64 - n as f64) * (shifted * shifted + x_sq);
        term = term * ratio / (den_ab * den_ac * Cdd::from(k as f64 + 1.0));
        sum = sum + term;
        prefactor = prefactor * den_ab * den_ac;
    }
    Ok((prefactor * sum).to_complex())
}

/// S_n(x²; a, b, c) by upward recurrence on the normalized S̃_n, then
/// rescaled by (a+b)_n (a+c)_n.
pub fn cdh_recurrence(n: u32, x_sq: ComplexScalar, p: CdhParams) -> Result<ComplexScalar> {
    check_degree(n)?;
    let CdhParams { a, b, c } = p;
    let diag = a * a + x_sq;
    let mut prev = Complex64::new(0.0, 0.0);
    let mut cur = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let kf = k as f64;
        let a_k = (kf + a + b) * (kf + a + c);
        if is_zero(a_k) {
            return Err(Error::SingularParameters { k });
        }
        let c_k = kf * (kf + b + c - 1.0);
        let next = ((a_k + c_k - diag) * cur - c_k * prev) / a_k;
        prev = cur;
        cur = next;
    }
    Ok(pochhammer(a + b, n) * pochhammer(a + c, n) * cur)
}

/// Meixner–Pollaczek polynomial P_n^λ(x; φ) by its three-term recurrence
/// (n+1) P_{n+1} = 2[x sin φ + (n+λ) cos φ] P_n − (n+2λ−1) P_{n−1}.
pub fn meixner_pollaczek(n: u32, x: ComplexScalar, lambda: ComplexScalar, phi: f64) -> Result<ComplexScalar> {
    check_degree(n)?;
    if !(phi > 0.0 && phi < std::f64::consts::PI) {
        return Err(Error::InvalidParams(format!("phi = {phi} outside (0, pi)")));
    }
    let (sin, cos) = phi.sin_cos();
    let mut prev = Complex64::new(0.0, 0.0);
    let mut cur = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let kf = k as f64;
        let next = (2.0 * (x * sin + (lambda + kf) * cos) * cur - (lambda * 2.0 + kf - 1.0) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Associated Laguerre polynomial L_n^d(y).
pub fn laguerre(n: u32, d: f64, y: f64) -> f64 {
    let mut prev = 0.0;
    let mut cur = 1.0;
    for k in 0..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + d - y) * cur - (kf + d) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn degree_zero_is_one() {
        let p = CdhParams::new(c(0.7, 0.2), c(0.7, -0.2), c(0.5, 0.0));
        assert_eq!(cdh_series(0, c(3.0, 1.0), p).unwrap(), c(1.0, 0.0));
        assert_eq!(cdh_recurrence(0, c(3.0, 1.0), p).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn degree_one_closed_form() {
        let p = CdhParams::real(1.0, 2.0, 0.5);
        // (a+b)(a+c) − (a² + x²) = 4.5 − 2
        let s = cdh_series(1, c(1.0, 0.0), p).unwrap();
        let r = cdh_recurrence(1, c(1.0, 0.0), p).unwrap();
        assert!((s - 2.5).norm() < 1e-15);
        assert!((r - 2.5).norm() < 1e-15);
    }

    #[test]
    fn degree_two_paths_agree() {
        let p = CdhParams::real(1.0, 2.0, 0.5);
        let s = cdh_series(2, c(0.0, 0.0), p).unwrap();
        let r = cdh_recurrence(2, c(0.0, 0.0), p).unwrap();
        // hand expansion: (3)_2 (1.5)_2 [1 − 2·1/(3·1.5) + 2·4/(12·3.75·2)]
        let hand = 12.0 * 3.75 * (1.0 - 2.0 / 4.5 + 8.0 / 90.0);
        assert!((s - hand).norm() < 1e-12 && (r - hand).norm() < 1e-12);
    }

    #[test]
    fn degree_five_paths_agree() {
        let p = CdhParams::new(c(1.3, 0.4), c(1.3, -0.4), c(0.5, 0.0));
        for &x2 in &[0.0, 0.5, 2.0, 7.5] {
            let s = cdh_series(5, c(x2, 0.0), p).unwrap();
            let r = cdh_recurrence(5, c(x2, 0.0), p).unwrap();
            assert!((s - r).norm() <= 1e-10 * s.norm().max(r.norm()));
        }
    }

    #[test]
    fn singular_parameters_rejected() {
        // a + b = −1 vanishes at k = 1
        let p = CdhParams::real(0.5, -1.5, 0.5);
        assert_eq!(cdh_series(3, c(1.0, 0.0), p), Err(Error::SingularParameters { k: 1 }));
        assert_eq!(cdh_recurrence(3, c(1.0, 0.0), p), Err(Error::SingularParameters { k: 1 }));
        assert!(cdh_series(65, c(1.0, 0.0), CdhParams::real(1.0, 1.0, 0.5)).is_err());
    }

    #[test]
    fn meixner_pollaczek_low_degrees() {
        let b = c(1.3, 0.0);
        assert_eq!(meixner_pollaczek(0, c(0.7, 0.0), b, FRAC_PI_2).unwrap(), c(1.0, 0.0));
        let p1 = meixner_pollaczek(1, c(0.7, 0.0), b, FRAC_PI_2).unwrap();
        assert!((p1 - 1.4).norm() < 1e-15);
        // P_2 at φ = π/2 is 2x² − λ, which equals −2·S_1(x²; 0, λ, ½)
        let p2 = meixner_pollaczek(2, c(0.7, 0.0), b, FRAC_PI_2).unwrap();
        assert!((p2 - (2.0 * 0.49 - 1.3)).norm() < 1e-15);
        let s1 = cdh_series(1, c(0.49, 0.0), CdhParams::real(0.0, 1.3, 0.5)).unwrap();
        assert!((p2 + 2.0 * s1).norm() < 1e-14);
        assert!(meixner_pollaczek(2, c(0.7, 0.0), b, 0.0).is_err());
    }

    #[test]
    fn meixner_pollaczek_matches_hypergeometric_form() {
        // ((2λ)_n / n!) e^{inφ} ₂F₁(−n, λ+ix; 2λ; 1 − e^{−2iφ})
        let (lambda, phi, x) = (c(0.8, 0.0), 1.1_f64, c(0.6, 0.2));
        let z = c(1.0, 0.0) - c(0.0, -2.0 * phi).exp();
        for n in 0..10u32 {
            let mut term = c(1.0, 0.0);
            let mut sum = term;
            for k in 0..n {
                let kf = k as f64;
                term *= (kf - n as f64) * (lambda + c(0.0, 1.0) * x + kf) * z / ((lambda * 2.0 + kf) * (kf + 1.0));
                sum += term;
            }
            let fact: f64 = (1..=n).map(|v| v as f64).product();
            let oracle = pochhammer(lambda * 2.0, n) / fact * c(0.0, n as f64 * phi).exp() * sum;
            let got = meixner_pollaczek(n, x, lambda, phi).unwrap();
            assert!((got - oracle).norm() <= 1e-12 * oracle.norm().max(1.0), "n={n}");
        }
    }

    #[test]
    fn laguerre_examples() {
        assert_eq!(laguerre(0, 0.3, 5.0), 1.0);
        assert!((laguerre(1, 0.5, 2.0) + 0.5).abs() < 1e-15);
        // L_n^d(0) = C(n+d, n)
        assert!((laguerre(3, 1.0, 0.0) - 4.0).abs() < 1e-14);
    }
}
