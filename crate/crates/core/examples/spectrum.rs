// Energy levels and regime classification across the speed of light.

use relosc::oscillator::{binding_energy, compute_alpha_nu, energy_level, nonrel_energy, OscillatorParams};

pub fn run_example() -> relosc::Result<Vec<String>> {
    let mut lines = Vec::new();
    for c in [0.5, 1.0, 4.0, 100.0] {
        let p = OscillatorParams::natural(c, 1.0)?;
        let sol = compute_alpha_nu(&p);
        lines.push(format!(
            "c = {c:>5}: {:<17} alpha = {:.6}, E_0 = {:.10}, E_1 - E_0 = {:.10}",
            sol.regime.to_string(),
            sol.alpha,
            energy_level(0, &p).re,
            (energy_level(1, &p) - energy_level(0, &p)).re,
        ));
    }
    let p = OscillatorParams::natural(1000.0, 1.0)?;
    lines.push(format!(
        "c = 1000: E_0 - mc^2 = {:.10}, non-relativistic 2n + d + 1 = {:.10}",
        binding_energy(0, &p).re,
        nonrel_energy(0, &p)?
    ));
    let collapse = OscillatorParams::natural(1.0, -0.2)?;
    lines.push(format!(
        "g = -0.2 < g_crit = {}: {} with E_0 = {:.6}",
        collapse.g_crit(),
        compute_alpha_nu(&collapse).regime,
        energy_level(0, &collapse)
    ));
    Ok(lines)
}

fn main() -> relosc::Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
