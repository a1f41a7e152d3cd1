// The full verification suite for one parameter set.

use relosc::oscillator::OscillatorParams;
use relosc::verify::{run_suite, SuiteConfig, VerificationReport};

pub fn run_example() -> relosc::Result<Vec<VerificationReport>> {
    let cfg = SuiteConfig { params: OscillatorParams::natural(1.0, 1.0)?, ..SuiteConfig::default() };
    run_suite(&cfg)
}

fn main() -> relosc::Result<()> {
    let reports = run_example()?;
    for r in &reports {
        println!(
            "{:<5} {:<26} {:.3e} <= {:.1e}",
            if r.passed { "ok" } else { "FAIL" },
            r.check_name,
            r.residual,
            r.tolerance
        );
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("{} of {} checks passed", reports.len() - failed, reports.len());
    Ok(())
}
