use std::io::Write;
use std::path::{Path, PathBuf};

use num_complex::Complex64;

use super::config::{c_label, Command, OutputFormat, RunConfig};
use super::output::{to_json, write_atomic, Cell, Table};
use crate::error::{Error, Result};
use crate::oscillator::{binding_energy, compute_alpha_nu, energy_level, nonrel_wavefunction, Regime, StationaryState};
use crate::verify::{run_suite, SuiteConfig, VerificationReport};

/// A named table destined for its own file.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedTable {
    pub stem: String,
    pub table: Table,
}

/// Rows (n, E_n, E_n − mc², regime, α, ν) for n = 0..=n_max.
pub fn spectrum_table(cfg: &RunConfig) -> Result<Table> {
    let p = &cfg.params;
    let sol = compute_alpha_nu(p);
    let mut t = Table::new(vec![
        "n",
        "re_e",
        "im_e",
        "re_e_minus_rest",
        "regime",
        "re_alpha",
        "im_alpha",
        "re_nu",
        "im_nu",
        "collapse_warning",
    ]);
    for n in 0..=cfg.n_max {
        let e = energy_level(n, p);
        t.push(vec![
            Cell::Int(n as u64),
            Cell::Real(e.re),
            Cell::Real(e.im),
            Cell::Real(binding_energy(n, p).re),
            Cell::Text(sol.regime.to_string()),
            Cell::Real(sol.alpha.re),
            Cell::Real(sol.alpha.im),
            Cell::Real(sol.nu.re),
            Cell::Real(sol.nu.im),
            Cell::Bool(sol.regime == Regime::Collapse),
        ]);
    }
    Ok(t)
}

/// One table (ρ, Re ψ_n, Im ψ_n, |ψ_n|) per n = 0..=n_max.
pub fn wavefunction_tables(cfg: &RunConfig) -> Result<Vec<NamedTable>> {
    let rho = cfg.grid.points();
    (0..=cfg.n_max)
        .map(|n| {
            let psi = StationaryState::new(n, &cfg.params)?;
            let mut t = Table::new(vec!["rho", "re_psi", "im_psi", "abs_psi"]);
            for &r in &rho {
                let v = psi.value(Complex64::new(r, 0.0))?;
                t.push(vec![Cell::Real(r), Cell::Real(v.re), Cell::Real(v.im), Cell::Real(v.norm())]);
            }
            Ok(NamedTable { stem: format!("wavefunction_n{n}"), table: t })
        })
        .collect()
}

/// Ground-state wavefunction over the (x, g) grid for each c. The finite-c
/// columns are λ^{−½}ψ₀(x/λ), normalized in x like the c = ∞ column.
/// Cells in the collapse regime, where no bound state exists, are NaN.
pub fn fig1_tables(cfg: &RunConfig) -> Result<Vec<NamedTable>> {
    let xs = cfg.grid.points();
    let gs = cfg.g_sweep.points();
    let mut out = Vec::new();
    for &c in &cfg.c_list {
        let mut t = Table::new(vec!["x", "g", "re_psi0", "im_psi0"]);
        for &g in &gs {
            let base = cfg.params.with_g(g);
            if c.is_infinite() {
                for &x in &xs {
                    let v = nonrel_wavefunction(0, x, &base).unwrap_or(f64::NAN);
                    t.push(vec![Cell::Real(x), Cell::Real(g), Cell::Real(v), Cell::Real(0.0)]);
                }
                continue;
            }
            let p = base.with_c(c);
            let scale = p.lambda().powf(-0.5);
            let state = match StationaryState::new(0, &p) {
                Ok(s) => Some(s),
                Err(Error::Collapse { .. }) => None,
                Err(e) => return Err(e),
            };
            for &x in &xs {
                let v = match &state {
                    Some(s) => scale * s.value(Complex64::new(x / p.lambda(), 0.0))?,
                    None => Complex64::new(f64::NAN, f64::NAN),
                };
                t.push(vec![Cell::Real(x), Cell::Real(g), Cell::Real(v.re), Cell::Real(v.im)]);
            }
        }
        out.push(NamedTable { stem: format!("fig1_c{}", c_label(c)), table: t });
    }
    Ok(out)
}

/// E₀ against g for each c, with the rest energy mc² in its own column
/// (0 for the c = ∞ panel, whose energy is ħω(d + 1)).
pub fn fig2_tables(cfg: &RunConfig) -> Result<Vec<NamedTable>> {
    let gs = cfg.g_sweep.points();
    let mut out = Vec::new();
    for &c in &cfg.c_list {
        let mut t = Table::new(vec!["g", "re_e0", "im_e0", "rest_energy"]);
        for &g in &gs {
            let base = cfg.params.with_g(g);
            let (e, rest) = if c.is_infinite() {
                let d = 0.5 * Complex64::new(1.0 + 8.0 * base.g0(), 0.0).sqrt();
                (base.hbar_omega() * (d + 1.0), 0.0)
            } else {
                let p = base.with_c(c);
                (energy_level(0, &p), p.rest_energy())
            };
            t.push(vec![Cell::Real(g), Cell::Real(e.re), Cell::Real(e.im), Cell::Real(rest)]);
        }
        out.push(NamedTable { stem: format!("fig2_c{}", c_label(c)), table: t });
    }
    Ok(out)
}

pub fn verify_reports(cfg: &RunConfig) -> Result<Vec<VerificationReport>> {
    run_suite(&SuiteConfig {
        params: cfg.params,
        tolerance_scale: cfg.tolerance_scale,
        perturb_cn: cfg.perturb_cn,
        only: cfg.only.clone(),
    })
}

fn render(table: &Table, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Csv => Ok(table.to_csv()),
        OutputFormat::Json => table.to_json(),
    }
}

fn extension(format: OutputFormat) -> &'static str {
    match format {
        OutputFormat::Csv => "csv",
        OutputFormat::Json => "json",
    }
}

fn emit(text: &str, path: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => write_atomic(p, text),
        None => stdout.write_all(text.as_bytes()).map_err(Into::into),
    }
}

fn emit_tables(tables: &[NamedTable], cfg: &RunConfig, stdout: &mut dyn Write) -> Result<()> {
    let dir = cfg.output_path.clone().unwrap_or_else(|| PathBuf::from("."));
    for t in tables {
        let path = dir.join(format!("{}.{}", t.stem, extension(cfg.output_format)));
        write_atomic(&path, &render(&t.table, cfg.output_format)?)?;
        writeln!(stdout, "{}", path.display())?;
    }
    Ok(())
}

fn reports_table(reports: &[VerificationReport]) -> Table {
    let mut t = Table::new(vec!["check_name", "residual", "tolerance", "passed", "notes"]);
    for r in reports {
        t.push(vec![
            Cell::Text(r.check_name.clone()),
            Cell::Real(r.residual),
            Cell::Real(r.tolerance),
            Cell::Bool(r.passed),
            Cell::Text(format!("\"{}\"", r.notes.replace('"', "'"))),
        ]);
    }
    t
}

/// Runs a resolved configuration. Returns the process exit code for
/// successful runs (1 only when verification checks fail).
pub fn execute(cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match cfg.command {
        Command::Spectrum => {
            let table = spectrum_table(cfg)?;
            if compute_alpha_nu(&cfg.params).regime == Regime::Collapse {
                writeln!(
                    stderr,
                    "warning: g = {} is below the collapse threshold {}; energies are complex",
                    cfg.params.g,
                    cfg.params.g_crit()
                )?;
            }
            emit(&render(&table, cfg.output_format)?, cfg.output_path.as_deref(), stdout)?;
            Ok(0)
        }
        Command::Wavefunction => {
            emit_tables(&wavefunction_tables(cfg)?, cfg, stdout)?;
            Ok(0)
        }
        Command::Fig1 => {
            emit_tables(&fig1_tables(cfg)?, cfg, stdout)?;
            Ok(0)
        }
        Command::Fig2 => {
            emit_tables(&fig2_tables(cfg)?, cfg, stdout)?;
            Ok(0)
        }
        Command::Verify => {
            let reports = verify_reports(cfg)?;
            let text = match cfg.output_format {
                OutputFormat::Json => to_json(&reports)?,
                OutputFormat::Csv => reports_table(&reports).to_csv(),
            };
            emit(&text, cfg.output_path.as_deref(), stdout)?;
            let failed: Vec<&str> = reports.iter().filter(|r| !r.passed).map(|r| r.check_name.as_str()).collect();
            writeln!(stderr, "{} of {} checks passed", reports.len() - failed.len(), reports.len())?;
            if failed.is_empty() {
                Ok(0)
            } else {
                writeln!(stderr, "failed: {}", failed.join(", "))?;
                Ok(1)
            }
        }
    }
}
