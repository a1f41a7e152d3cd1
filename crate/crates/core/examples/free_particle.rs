// Relativistic plane waves as eigenfunctions of the free finite-difference operators.

use num_complex::Complex64;
use relosc::operators::{apply_free_hamiltonian, apply_momentum, PlaneWaveState};
use relosc::oscillator::OscillatorParams;

pub fn run_example() -> relosc::Result<Vec<String>> {
    let params = OscillatorParams::natural(2.0, 0.0)?;
    let x = Complex64::new(0.8, 0.0);
    let mut lines = Vec::new();
    for p in [0.5, 2.0, 10.0] {
        let w = PlaneWaveState::new(p, &params);
        let v = w.value(x);
        let e = apply_free_hamiltonian(&w, x, &params)? / v;
        let k = apply_momentum(&w, x, &params)? / v;
        lines.push(format!(
            "p = {p:>4}: rapidity {:.6}, H0 xi / xi = {:.12} (E_p = {:.12}), p xi / xi = {:.12}",
            w.chi, e.re, w.energy, k.re
        ));
    }
    Ok(lines)
}

fn main() -> relosc::Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
