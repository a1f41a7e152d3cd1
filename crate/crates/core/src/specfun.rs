//! Complex special-function kernel: log-gamma, gamma ratios, Pochhammer
//! symbols and exact binomial coefficients.
//!
//! `ln_gamma` returns the principal branch, i.e. the analytic continuation of
//! the real log-gamma off the positive axis with the cut on (−∞, 0]. For
//! Re z ≥ ½ it uses the Lanczos approximation (g = 607/128, 15 terms); to the
//! left it shifts upward with lnΓ(z) = lnΓ(z+k) − Σ log(z+j), which is
//! analytic on the same cut plane and so needs no winding correction.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex scalar used throughout the crate. Logs and powers use the
/// principal branch: `ln` has imaginary part in (−π, π] and
/// `z.powc(w) = exp(w·ln z)`.
pub type ComplexScalar = Complex64;

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_COEF: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];

// B_{2k} / (2k (2k − 1)) for k = 1..7, the Stirling correction coefficients.
const STIRLING_COEF: [f64; 7] =
    [1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0, 1.0 / 1188.0, -691.0 / 360_360.0, 1.0 / 156.0];

// Below this modulus lnΓ differences are taken directly.
const ASYMPTOTIC_MIN_ABS: f64 = 1.0e3;

pub(crate) fn is_nonpositive_integer(z: ComplexScalar) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

fn check_finite(z: ComplexScalar) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { what: "gamma argument" })
    }
}

fn lanczos_ln_gamma(z: ComplexScalar) -> ComplexScalar {
    let zm1 = z - 1.0;
    let mut series = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (k, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        series += c / (zm1 + k as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    HALF_LN_TWO_PI + (zm1 + 0.5) * t.ln() - t + series.ln()
}

/// Principal-branch log Γ(z).
pub fn ln_gamma(z: ComplexScalar) -> Result<ComplexScalar> {
    check_finite(z)?;
    if is_nonpositive_integer(z) {
        return Err(Error::PoleOfGamma { re: z.re, im: z.im });
    }
    if z.re >= 0.5 {
        return Ok(lanczos_ln_gamma(z));
    }
    let shift = (0.5 - z.re).ceil() as usize;
    let mut acc = lanczos_ln_gamma(z + shift as f64);
    for j in 0..shift {
        acc -= (z + j as f64).ln();
    }
    Ok(acc)
}

/// Γ(z) by exponentiating [`ln_gamma`].
pub fn gamma(z: ComplexScalar) -> Result<ComplexScalar> {
    ln_gamma(z).map(|v| v.exp())
}

/// log(1 + u) without cancellation for small |u|.
pub(crate) fn ln_1p(u: ComplexScalar) -> ComplexScalar {
    if u.norm() > 0.5 {
        return (u + 1.0).ln();
    }
    let re = 0.5 * (u.re * (2.0 + u.re) + u.im * u.im).ln_1p();
    let im = u.im.atan2(1.0 + u.re);
    Complex64::new(re, im)
}

fn stirling_tail(w: ComplexScalar) -> ComplexScalar {
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in &STIRLING_COEF {
        acc += c * pow;
        pow *= inv2;
    }
    acc
}

fn use_asymptotic(z: ComplexScalar, shift: ComplexScalar) -> bool {
    let zs = z + shift;
    z.norm() >= ASYMPTOTIC_MIN_ABS
        && zs.norm() >= ASYMPTOTIC_MIN_ABS
        && shift.norm() <= 0.5 * z.norm()
        && (z.re > 0.0 || z.im.abs() > z.re.abs())
}

/// lnΓ(z + shift) − lnΓ(z), principal branches.
///
/// For |z| large the difference is formed from the Stirling series directly
/// so that it keeps absolute accuracy even when each lnΓ is of order 10¹³.
pub fn ln_gamma_ratio(z: ComplexScalar, shift: ComplexScalar) -> Result<ComplexScalar> {
    check_finite(z)?;
    check_finite(shift)?;
    if shift == Complex64::new(0.0, 0.0) {
        if is_nonpositive_integer(z) {
            return Err(Error::PoleOfGamma { re: z.re, im: z.im });
        }
        return Ok(Complex64::new(0.0, 0.0));
    }
    if use_asymptotic(z, shift) {
        let u = shift / z;
        let zs = z + shift;
        let main = shift * z.ln() + (zs - 0.5) * ln_1p(u) - shift;
        return Ok(main + stirling_tail(zs) - stirling_tail(z));
    }
    Ok(ln_gamma(z + shift)? - ln_gamma(z)?)
}

/// Γ(z + shift) / Γ(z) without forming either gamma on its own.
pub fn gamma_ratio(z: ComplexScalar, shift: ComplexScalar) -> Result<ComplexScalar> {
    ln_gamma_ratio(z, shift).map(|v| v.exp())
}

/// Rising factorial (a)_n = a(a+1)…(a+n−1) by direct product.
pub fn pochhammer(a: ComplexScalar, n: u32) -> ComplexScalar {
    (0..n).fold(Complex64::new(1.0, 0.0), |acc, k| acc * (a + k as f64))
}

/// Largest `n` accepted by [`binomial`].
pub const BINOMIAL_MAX_N: u32 = 64;

/// Exact binomial coefficient C(n, m); zero when m < 0 or m > n.
pub fn binomial(n: u32, m: i64) -> Result<u64> {
    if n > BINOMIAL_MAX_N {
        return Err(Error::BinomialRange { n });
    }
    if m < 0 || m > n as i64 {
        return Ok(0);
    }
    let m = (m as u32).min(n - m as u32);
    let mut acc: u128 = 1;
    for k in 0..m {
        // exact at every step: acc·(n−k) is divisible by (k+1)
        acc = acc * (n - k) as u128 / (k + 1) as u128;
    }
    Ok(acc as u64)
}

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: Complex64,
    comp: Complex64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: ComplexScalar) {
        self.sum.re = neumaier_step(self.sum.re, x.re, &mut self.comp.re);
        self.sum.im = neumaier_step(self.sum.im, x.im, &mut self.comp.im);
    }

    pub(crate) fn value(&self) -> ComplexScalar {
        self.sum + self.comp
    }
}

fn neumaier_step(sum: f64, x: f64, comp: &mut f64) -> f64 {
    let t = sum + x;
    if sum.abs() >= x.abs() {
        *comp += (sum - t) + x;
    } else {
        *comp += (x - t) + sum;
    }
    t
}
