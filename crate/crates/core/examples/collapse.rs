// Locating the onset of complex energies as the coupling decreases.

use relosc::oscillator::OscillatorParams;
use relosc::verify::sweep_regimes;

pub fn run_example() -> relosc::Result<Vec<String>> {
    let base = OscillatorParams::default();
    let sweep = sweep_regimes(&base, (-10.0, 2.0), &[4.0, 2.0, 1.0, 0.5, 0.25], 241);
    Ok(sweep.reports.iter().map(|r| format!("{} (error {:.1e})", r.notes, r.residual)).collect())
}

fn main() -> relosc::Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
