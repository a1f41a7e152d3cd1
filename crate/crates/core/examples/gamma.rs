// Complex log-gamma, gamma ratios and Pochhammer symbols.

use num_complex::Complex64;
use relosc::specfun::{gamma, gamma_ratio, ln_gamma, pochhammer};

pub fn run_example() -> relosc::Result<Vec<String>> {
    let mut lines = Vec::new();
    let half = gamma(Complex64::new(0.5, 0.0))?;
    lines.push(format!("Gamma(1/2) = {:.15} (sqrt(pi) = {:.15})", half.re, std::f64::consts::PI.sqrt()));
    for z in [Complex64::new(1.5, 2.0), Complex64::new(-2.5, 0.3), Complex64::new(0.0, 40.0)] {
        lines.push(format!("lnGamma({z}) = {:.12}", ln_gamma(z)?));
    }
    // Γ(z + s)/Γ(z) stays finite where both gammas overflow
    let z = Complex64::new(180.0, 5.0);
    lines.push(format!("Gamma(z + 3.5)/Gamma(z) at z = {z}: {:.6e}", gamma_ratio(z, Complex64::new(3.5, 0.0))?));
    lines.push(format!("(1+i)_4 = {}", pochhammer(Complex64::new(1.0, 1.0), 4)));
    Ok(lines)
}

fn main() -> relosc::Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
