// Continuous dual Hahn, Meixner-Pollaczek and Laguerre polynomials.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use relosc::orthopoly::{cdh_recurrence, cdh_series, laguerre, meixner_pollaczek, CdhParams};

pub fn run_example() -> relosc::Result<Vec<String>> {
    let mut lines = Vec::new();
    // a complex-conjugate pair, as in the oscillator's complex regime
    let a = Complex64::new(1.4, 0.6);
    let p = CdhParams::oscillator(a, a.conj());
    for n in [0, 3, 10, 20] {
        let x2 = Complex64::new(2.25, 0.0);
        let s = cdh_series(n, x2, p)?;
        let r = cdh_recurrence(n, x2, p)?;
        lines.push(format!(
            "S_{n}(2.25): series {:.10e}, recurrence {:.10e}, rel diff {:.1e}",
            s.re,
            r.re,
            (s - r).norm() / r.norm()
        ));
    }
    let x = Complex64::new(0.7, 0.0);
    let mp = meixner_pollaczek(5, x, Complex64::new(2.0, 0.0), FRAC_PI_2)?;
    lines.push(format!("P_5^2(0.7; pi/2) = {:.12}", mp.re));
    lines.push(format!("L_3^(1/2)(1.2) = {:.12}", laguerre(3, 0.5, 1.2)));
    Ok(lines)
}

fn main() -> relosc::Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
