// Stationary states, their factor decomposition and the nonrelativistic shape.

use num_complex::Complex64;
use relosc::oscillator::{nonrel_wavefunction, wavefunction, OscillatorParams, StationaryState};

pub fn run_example() -> relosc::Result<Vec<String>> {
    let p = OscillatorParams::natural(4.0, 1.0)?;
    let mut lines = Vec::new();
    for rho in [0.0, 1.0, 5.0, 10.0, 20.0] {
        let e = wavefunction(1, Complex64::new(rho, 0.0), &p)?;
        lines.push(format!(
            "psi_1({rho:>4}) = {:+.6e} {:+.6e}i   degree factor {:.3e}, S_1 {:.4}",
            e.value.re,
            e.value.im,
            e.factors.generalized_degree.norm(),
            e.factors.polynomial.re
        ));
    }
    // at large c the rescaled modulus approaches the nonrelativistic state
    let p = OscillatorParams::natural(300.0, 1.0)?;
    let psi = StationaryState::new(0, &p)?;
    let scale = p.lambda().powf(-0.5);
    for xi in [0.5, 1.0, 2.0] {
        let rel = scale * psi.value(Complex64::new(xi * p.mu().sqrt(), 0.0))?.norm();
        let nonrel = nonrel_wavefunction(0, xi / p.xi_per_x(), &p)?.abs();
        lines.push(format!("xi = {xi}: |psi_0| rescaled {rel:.6}, non-relativistic {nonrel:.6}"));
    }
    Ok(lines)
}

fn main() -> relosc::Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
