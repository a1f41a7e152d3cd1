// Hamiltonian and ladder operators applied through exact complex shifts.

use num_complex::Complex64;
use relosc::operators::{apply_hamiltonian, apply_ladder, apply_number, LadderOrdering, LadderSign};
use relosc::oscillator::{OscillatorParams, StationaryState};

pub fn run_example() -> relosc::Result<Vec<String>> {
    let p = OscillatorParams::natural(3.0, 0.5)?;
    let rho = Complex64::new(1.7, 0.0);
    let mut lines = Vec::new();
    for n in 0..4 {
        let psi = StationaryState::new(n, &p)?;
        let v = psi.value(rho)?;
        let h = apply_hamiltonian(&psi, rho, &p)?;
        let number = apply_number(LadderOrdering::Canonical, &psi, rho, psi.solution())?;
        lines.push(format!(
            "n = {n}: H psi / psi = {:.12}, E_n/mc^2 = {:.12}, a+a- psi / psi = {:.10} (2n omega0 = {:.10})",
            (h / v).re,
            psi.reduced_energy().re,
            (number / v).re,
            2.0 * n as f64 * p.omega0()
        ));
    }
    let ground = StationaryState::new(0, &p)?;
    let lowered = apply_ladder(LadderSign::Lowering, &ground, rho, ground.solution())?;
    lines.push(format!("|a- psi_0| = {:.2e} against |psi_0| = {:.2e}", lowered.norm(), ground.value(rho)?.norm()));
    Ok(lines)
}

fn main() -> relosc::Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
