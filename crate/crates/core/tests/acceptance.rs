//! Acceptance suite. Runs every criterion at its stated tolerance, prints one
//! line per criterion and exits nonzero if any fails.
//!
//! Run with `cargo test --release --test acceptance`.

use std::f64::consts::FRAC_PI_2;
use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use relosc::cli::{fig1_tables, fig2_tables, Cell, Command, NamedTable, RunConfig};
use relosc::orthopoly::{cdh_recurrence, cdh_series, meixner_pollaczek, CdhParams};
use relosc::oscillator::{compute_alpha_nu, OscillatorParams, Regime};
use relosc::verify::*;

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_reports(reports: &[VerificationReport]) -> Outcome {
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| format!("{} residual {:.3e} > {:.1e} ({})", r.check_name, r.residual, r.tolerance, r.notes))
        .collect();
    let worst = reports.iter().map(|r| (r.residual / r.tolerance.max(f64::MIN_POSITIVE), r)).fold(
        None::<(f64, &VerificationReport)>,
        |acc, (q, r)| match acc {
            Some((best, _)) if best >= q => acc,
            _ => Some((q, r)),
        },
    );
    let detail = match (failed.is_empty(), worst) {
        (true, Some((_, r))) => format!(
            "{} checks; tightest {} residual {:.3e} vs {:.1e}",
            reports.len(),
            r.check_name,
            r.residual,
            r.tolerance
        ),
        (true, None) => "no checks ran".into(),
        (false, _) => failed.join("; "),
    };
    Outcome { passed: failed.is_empty() && !reports.is_empty(), detail }
}

fn natural(g: f64, c: f64) -> OscillatorParams {
    OscillatorParams::natural(c, g).expect("valid parameters")
}

fn orthonormality() -> Outcome {
    let start = Instant::now();
    let mut reports = Vec::new();
    for g in [0.5, 1.0, 3.0] {
        for c in [0.5, 1.0, 4.0] {
            reports.push(check_orthonormality(&natural(g, c), 11, 0.0));
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let mut out = from_reports(&reports);
    out.passed &= elapsed < 60.0;
    out.detail = format!("{}; {elapsed:.2} s for 9 sets", out.detail);
    out
}

fn eigen_residual() -> Outcome {
    let sets = [
        ((1.0, 4.0), Regime::Real),
        ((0.5, 3.0), Regime::Real),
        ((0.0, 2.0), Regime::Real),
        ((-0.1, 4.0), Regime::Real),
        ((3.0, 10.0), Regime::Real),
        ((1.0, 1.0), Regime::ComplexConjugate),
        ((0.5, 0.5), Regime::ComplexConjugate),
        ((3.0, 1.0), Regime::ComplexConjugate),
        ((0.2, 0.8), Regime::ComplexConjugate),
        ((3.0, 1.5), Regime::ComplexConjugate),
    ];
    let mut reports = Vec::new();
    for ((g, c), regime) in sets {
        let p = natural(g, c);
        let got = compute_alpha_nu(&p).regime;
        if got != regime {
            return Outcome { passed: false, detail: format!("g = {g}, c = {c} is {got}, expected {regime}") };
        }
        reports.push(check_eigen_residual(&p, 8));
    }
    from_reports(&reports)
}

fn factorization() -> Outcome {
    let mut reports = Vec::new();
    for (g, c) in [(1.0, 4.0), (0.5, 3.0), (1.0, 1.0), (3.0, 0.5)] {
        reports
            .extend(check_factorization(&natural(g, c), 5).into_iter().filter(|r| r.check_name != "ladder-ordering"));
    }
    from_reports(&reports)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

fn polynomial_identities() -> Outcome {
    let mut rng = StdRng::seed_from_u64(11);
    let mut dual = 0.0f64;
    for k in 0..200 {
        let (a, b) = if k % 2 == 0 {
            (Complex64::new(rng.gen_range(0.5..4.0), 0.0), Complex64::new(rng.gen_range(0.5..30.0), 0.0))
        } else {
            let z = Complex64::new(rng.gen_range(0.5..3.0), rng.gen_range(0.05..3.0));
            (z, z.conj())
        };
        let n = rng.gen_range(0..=20);
        let x: f64 = rng.gen_range(0.0..4.0);
        let cp = CdhParams::oscillator(a, b);
        let x2 = Complex64::new(x * x, 0.0);
        let (s, r) = match (cdh_series(n, x2, cp), cdh_recurrence(n, x2, cp)) {
            (Ok(s), Ok(r)) => (s, r),
            (Err(e), _) | (_, Err(e)) => return Outcome { passed: false, detail: format!("cdh evaluation: {e}") },
        };
        dual = dual.max(rel(s, r));
    }

    let mut identities = 0.0f64;
    for _ in 0..50 {
        let x = Complex64::new(rng.gen_range(0.05..4.0), 0.0);
        let b = Complex64::new(rng.gen_range(0.1..20.0), 0.0);
        for n in 0..=8u32 {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let odd = meixner_pollaczek(2 * n + 1, x, b, FRAC_PI_2).unwrap();
            let s1 = cdh_recurrence(n, x * x, CdhParams::new(1.0.into(), b, 0.5.into())).unwrap();
            let pref = sign * 2f64.powi(2 * n as i32 + 1) / factorial(2 * n + 1);
            identities = identities.max(rel(odd, pref * x * s1));
            let even = meixner_pollaczek(2 * n, x, b, FRAC_PI_2).unwrap();
            let s0 = cdh_recurrence(n, x * x, CdhParams::new(0.0.into(), b, 0.5.into())).unwrap();
            let pref = sign * 2f64.powi(2 * n as i32) / factorial(2 * n);
            identities = identities.max(rel(even, pref * s0));
        }
    }

    let mut reports = Vec::new();
    for (g, c) in [(1.0, 4.0), (1.0, 1.0)] {
        let p = natural(g, c);
        reports.extend([check_difference_a4(&p), check_difference_a5(&p), check_cdh_dual_path(&p)]);
    }
    let mut out = from_reports(&reports);
    out.passed &= dual <= 1e-10 && identities <= 1e-10;
    out.detail =
        format!("series vs recurrence {dual:.2e} (200 samples), a2/a3 {identities:.2e} (50 x, b); {}", out.detail);
    out
}

fn series_termination() -> Outcome {
    let reports: Vec<_> = [(1.0, 4.0), (0.5, 3.0), (1.0, 1.0), (3.0, 0.5)]
        .iter()
        .map(|&(g, c)| check_series_termination(&natural(g, c), 6))
        .collect();
    from_reports(&reports)
}

fn limits() -> Outcome {
    let mut reports: Vec<_> = [(0, 1.0, 1.5), (1, 1.0, 1.5), (2, 0.7, 0.8), (3, 0.0, 2.0), (5, 2.0, 1.0)]
        .iter()
        .map(|&(n, z, a)| check_laguerre_limit(n, z, a, &[1e2, 1e3, 1e4]))
        .collect();
    let xi: Vec<f64> = (1..=12).map(|k| 0.25 * k as f64).collect();
    for g in [0.0, 1.0] {
        for n in 0..3 {
            reports.extend(check_nonrel_limit(n, &natural(g, 10.0), &[10.0, 100.0, 1000.0], &xi));
        }
    }
    from_reports(&reports)
}

fn collapse_boundary() -> Outcome {
    let base = OscillatorParams::default();
    let sweep = sweep_regimes(&base, (-10.0, 2.0), &[4.0, 2.0, 1.0, 0.5, 0.25], 241);
    let mut out = from_reports(&sweep.reports);
    let g1 = locate_collapse(&base.with_c(1.0), -10.0, 2.0, 241);
    let g4 = locate_collapse(&base.with_c(0.25), -10.0, 2.0, 241);
    match (g1, g4) {
        (Ok(a), Ok(b)) => {
            out.passed &= (a + 0.15625).abs() <= 1e-10 && (b + 8.125).abs() <= 1e-10;
            out.detail = format!("g_crit(1) = {a:.12}, g_crit(0.25) = {b:.12}; {}", out.detail);
        }
        (Err(e), _) | (_, Err(e)) => {
            out.passed = false;
            out.detail = format!("bisection failed: {e}");
        }
    }
    out
}

fn relosc_consistency() -> Outcome {
    from_reports(&check_relosc_consistency(&OscillatorParams::default(), 20, 2024))
}

fn free_theory() -> Outcome {
    let reports: Vec<_> = [1.0, 4.0, 0.3].iter().map(|&c| check_free_theory(&natural(1.0, c), 50, 7)).collect();
    from_reports(&reports)
}

fn real(cell: &Cell) -> f64 {
    match cell {
        Cell::Real(v) => *v,
        other => panic!("expected a real cell, got {other:?}"),
    }
}

fn find<'a>(tables: &'a [NamedTable], stem: &str) -> Option<&'a NamedTable> {
    tables.iter().find(|t| t.stem == stem)
}

fn figure_data() -> Outcome {
    let (f1, f2) =
        match (fig1_tables(&RunConfig::defaults(Command::Fig1)), fig2_tables(&RunConfig::defaults(Command::Fig2))) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => return Outcome { passed: false, detail: format!("generation failed: {e}") },
        };
    let mut problems = Vec::new();
    for stem in ["fig1_cinf", "fig1_c4", "fig1_c0.25"] {
        match find(&f1, stem) {
            None => problems.push(format!("missing {stem}")),
            Some(t) => {
                for row in t.table.rows.iter().filter(|r| real(&r[0]) == 0.0) {
                    let v = real(&row[2]);
                    if !(v == 0.0 || v.is_nan()) {
                        problems.push(format!("{stem}: Re psi0(0) = {v} at g = {}", real(&row[1])));
                    }
                }
            }
        }
    }
    for stem in ["fig2_cinf", "fig2_c4", "fig2_c2", "fig2_c1", "fig2_c0.5", "fig2_c0.25"] {
        if find(&f2, stem).is_none() {
            problems.push(format!("missing {stem}"));
        }
    }
    if let Some(t) = find(&f2, "fig2_c1") {
        for row in &t.table.rows {
            let (g, im) = (real(&row[0]), real(&row[2]));
            if (g > -0.15625 && im != 0.0) || (g < -0.15625 && im == 0.0) {
                problems.push(format!("fig2_c1: Im E0 = {im} at g = {g}"));
            }
        }
    }
    if let Some(t) = find(&f2, "fig2_cinf") {
        for row in t.table.rows.iter().filter(|r| real(&r[0]) >= -0.125) {
            let g = real(&row[0]);
            let want = 1.0 + 0.5 * (1.0 + 8.0 * g).sqrt();
            if (real(&row[1]) - want).abs() > 1e-12 {
                problems.push(format!("fig2_cinf: Re E0 = {} at g = {g}, want d + 1 = {want}", real(&row[1])));
            }
        }
    }
    let files = f1.len() + f2.len();
    let rows: usize = f1.iter().chain(&f2).map(|t| t.table.rows.len()).sum();
    Outcome {
        passed: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("{files} files, {rows} rows, spot checks hold")
        } else {
            problems.join("; ")
        },
    }
}

type Criterion = fn() -> Outcome;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        ("orthonormality", orthonormality),
        ("eigen-residual", eigen_residual),
        ("factorization", factorization),
        ("polynomial identities", polynomial_identities),
        ("series termination", series_termination),
        ("limits", limits),
        ("collapse boundary", collapse_boundary),
        ("g -> 0 consistency", relosc_consistency),
        ("free theory", free_theory),
        ("figure data", figure_data),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let verdict = if out.passed { "PASS" } else { "FAIL" };
        println!("criterion {:2} {name}: {verdict} ({}) [{:.2} s]", k + 1, out.detail, start.elapsed().as_secs_f64());
        failures += usize::from(!out.passed);
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
