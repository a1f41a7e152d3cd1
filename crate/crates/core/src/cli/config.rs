//! Resolution of a [`RunConfig`] from flags, an optional key=value file and
//! built-in defaults, in that order of precedence.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oscillator::OscillatorParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Spectrum,
    Wavefunction,
    Verify,
    Fig1,
    Fig2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "relosc",
    version,
    about = "Relativistic linear singular oscillator: spectra, wavefunctions, verification and figure data"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Energy levels E_0..E_{n_max} with regime and (alpha, nu)
    Spectrum(Flags),
    /// psi_n on a rho grid, one file per n
    Wavefunction(Flags),
    /// Run the verification suite and emit a JSON report
    Verify(Flags),
    /// Ground-state wavefunction over an (x, g) grid for each c
    Fig1(Flags),
    /// Ground-state energy against g for each c
    Fig2(Flags),
}

impl CliCommand {
    pub fn split(&self) -> (Command, &Flags) {
        match self {
            CliCommand::Spectrum(f) => (Command::Spectrum, f),
            CliCommand::Wavefunction(f) => (Command::Wavefunction, f),
            CliCommand::Verify(f) => (Command::Verify, f),
            CliCommand::Fig1(f) => (Command::Fig1, f),
            CliCommand::Fig2(f) => (Command::Fig2, f),
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// Mass (default 1)
    #[arg(long)]
    pub m: Option<f64>,
    /// Oscillator frequency (default 1)
    #[arg(long)]
    pub omega: Option<f64>,
    /// Coupling of the singular term (default 1)
    #[arg(long, allow_negative_numbers = true)]
    pub g: Option<f64>,
    /// Speed of light (default 4)
    #[arg(long)]
    pub c: Option<f64>,
    /// Reduced Planck constant (default 1)
    #[arg(long)]
    pub hbar: Option<f64>,
    /// Highest level emitted (default 5)
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Start of the rho grid; the x grid for fig1
    #[arg(long, allow_negative_numbers = true)]
    pub rho_min: Option<f64>,
    /// End of the rho grid; the x grid for fig1
    #[arg(long, allow_negative_numbers = true)]
    pub rho_max: Option<f64>,
    /// Number of grid points
    #[arg(long)]
    pub steps: Option<usize>,
    /// Lower end of the coupling sweep (fig1, fig2)
    #[arg(long, allow_negative_numbers = true)]
    pub g_lo: Option<f64>,
    /// Upper end of the coupling sweep (fig1, fig2)
    #[arg(long, allow_negative_numbers = true)]
    pub g_hi: Option<f64>,
    /// Number of couplings in the sweep
    #[arg(long)]
    pub g_steps: Option<usize>,
    /// Comma-separated speeds of light; "inf" selects the non-relativistic model
    #[arg(long)]
    pub c_list: Option<String>,
    /// Output format (csv by default, json for verify)
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Output file (spectrum, verify) or directory (wavefunction, fig1, fig2)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Restrict verify to one check group or check name
    #[arg(long)]
    pub only: Option<String>,
    /// Multiply every normalization constant by (1 + X) in verify
    #[arg(long, allow_negative_numbers = true)]
    pub perturb_cn: Option<f64>,
    /// key=value file supplying defaults for any of the flags above
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RhoGrid {
    pub rho_min: f64,
    pub rho_max: f64,
    pub steps: usize,
}

impl RhoGrid {
    pub fn points(&self) -> Vec<f64> {
        linspace(self.rho_min, self.rho_max, self.steps)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GSweep {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl GSweep {
    pub fn points(&self) -> Vec<f64> {
        linspace(self.lo, self.hi, self.steps)
    }
}

pub(crate) fn linspace(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    if steps < 2 {
        return vec![lo];
    }
    (0..steps).map(|k| lo + (hi - lo) * k as f64 / (steps - 1) as f64).collect()
}

/// Fully resolved configuration for one CLI invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: Command,
    pub params: OscillatorParams,
    pub n_max: u32,
    pub grid: RhoGrid,
    pub g_sweep: GSweep,
    /// `f64::INFINITY` stands for the non-relativistic panel.
    pub c_list: Vec<f64>,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
    pub only: Option<String>,
    pub perturb_cn: f64,
    pub tolerance_scale: f64,
}

pub const MAX_N: u32 = 32;

impl RunConfig {
    /// Defaults for `command` with m = ω = ħ = 1, c = 4, g = 1.
    pub fn defaults(command: Command) -> Self {
        let (grid, g_sweep, c_list) = match command {
            Command::Fig1 => (
                RhoGrid { rho_min: 0.0, rho_max: 10.0, steps: 201 },
                GSweep { lo: 0.0, hi: 2.0, steps: 11 },
                vec![f64::INFINITY, 4.0, 0.25],
            ),
            Command::Fig2 => (
                RhoGrid { rho_min: 0.0, rho_max: 40.0, steps: 401 },
                GSweep { lo: -10.0, hi: 2.0, steps: 241 },
                vec![f64::INFINITY, 4.0, 2.0, 1.0, 0.5, 0.25],
            ),
            _ => (
                RhoGrid { rho_min: 0.0, rho_max: 40.0, steps: 401 },
                GSweep { lo: -10.0, hi: 2.0, steps: 241 },
                vec![4.0],
            ),
        };
        Self {
            command,
            params: OscillatorParams::default(),
            n_max: 5,
            grid,
            g_sweep,
            c_list,
            output_format: if command == Command::Verify { OutputFormat::Json } else { OutputFormat::Csv },
            output_path: None,
            only: None,
            perturb_cn: 0.0,
            tolerance_scale: 1.0,
        }
    }

    /// Applies the config file (if any), then the flags, then validates.
    /// `tolerance_scale` is the value of RELOSC_TOLERANCE_SCALE, if set.
    pub fn resolve(command: Command, flags: &Flags, tolerance_scale: Option<&str>) -> Result<Self> {
        let mut cfg = Self::defaults(command);
        if let Some(path) = &flags.config {
            cfg.apply_file(path)?;
        }
        cfg.apply_flags(flags)?;
        if let Some(s) = tolerance_scale {
            cfg.tolerance_scale = parse_f64("RELOSC_TOLERANCE_SCALE", s)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn apply_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        let mut entries = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("{}:{}: expected key=value", path.display(), lineno + 1)))?;
            entries.insert(k.trim().replace('_', "-"), v.trim().to_string());
        }
        for (k, v) in &entries {
            self.apply_key(k, v)?;
        }
        Ok(())
    }

    fn apply_key(&mut self, key: &str, v: &str) -> Result<()> {
        match key {
            "m" => self.params.m = parse_f64(key, v)?,
            "omega" => self.params.omega = parse_f64(key, v)?,
            "g" => self.params.g = parse_f64(key, v)?,
            "c" => self.params.c = parse_f64(key, v)?,
            "hbar" => self.params.hbar = parse_f64(key, v)?,
            "n-max" => self.n_max = parse_usize(key, v)? as u32,
            "rho-min" => self.grid.rho_min = parse_f64(key, v)?,
            "rho-max" => self.grid.rho_max = parse_f64(key, v)?,
            "steps" => self.grid.steps = parse_usize(key, v)?,
            "g-lo" => self.g_sweep.lo = parse_f64(key, v)?,
            "g-hi" => self.g_sweep.hi = parse_f64(key, v)?,
            "g-steps" => self.g_sweep.steps = parse_usize(key, v)?,
            "c-list" => self.c_list = parse_c_list(v)?,
            "format" => {
                self.output_format =
                    OutputFormat::from_str(v, true).map_err(|_| Error::Config(format!("format: '{v}'")))?
            }
            "out" => self.output_path = Some(PathBuf::from(v)),
            "only" => self.only = Some(v.to_string()),
            "perturb-cn" => self.perturb_cn = parse_f64(key, v)?,
            _ => return Err(Error::Config(format!("unknown key '{key}'"))),
        }
        Ok(())
    }

    fn apply_flags(&mut self, f: &Flags) -> Result<()> {
        let p = &mut self.params;
        set(&mut p.m, f.m);
        set(&mut p.omega, f.omega);
        set(&mut p.g, f.g);
        set(&mut p.c, f.c);
        set(&mut p.hbar, f.hbar);
        set(&mut self.n_max, f.n_max);
        set(&mut self.grid.rho_min, f.rho_min);
        set(&mut self.grid.rho_max, f.rho_max);
        set(&mut self.grid.steps, f.steps);
        set(&mut self.g_sweep.lo, f.g_lo);
        set(&mut self.g_sweep.hi, f.g_hi);
        set(&mut self.g_sweep.steps, f.g_steps);
        if let Some(list) = &f.c_list {
            self.c_list = parse_c_list(list)?;
        }
        set(&mut self.output_format, f.format);
        if f.out.is_some() {
            self.output_path = f.out.clone();
        }
        if f.only.is_some() {
            self.only = f.only.clone();
        }
        set(&mut self.perturb_cn, f.perturb_cn);
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        if !(self.grid.rho_min >= 0.0) {
            return Err(Error::Config(format!("rho-min must be >= 0, got {}", self.grid.rho_min)));
        }
        if !(self.grid.rho_max.is_finite() && self.grid.rho_max >= self.grid.rho_min) {
            return Err(Error::Config("rho-max must be finite and >= rho-min".into()));
        }
        if self.grid.steps < 2 || self.g_sweep.steps < 2 {
            return Err(Error::Config("steps and g-steps must be >= 2".into()));
        }
        if !(self.g_sweep.lo.is_finite() && self.g_sweep.hi.is_finite() && self.g_sweep.lo <= self.g_sweep.hi) {
            return Err(Error::Config("g-lo must be finite and <= g-hi".into()));
        }
        if self.n_max > MAX_N {
            return Err(Error::Config(format!("n-max must be <= {MAX_N}, got {}", self.n_max)));
        }
        if self.c_list.is_empty() || self.c_list.iter().any(|&c| !(c > 0.0)) {
            return Err(Error::Config("c-list entries must be positive".into()));
        }
        if !self.perturb_cn.is_finite() {
            return Err(Error::Config("perturb-cn must be finite".into()));
        }
        if !(self.tolerance_scale.is_finite() && self.tolerance_scale > 0.0) {
            return Err(Error::Config("RELOSC_TOLERANCE_SCALE must be positive".into()));
        }
        Ok(())
    }
}

fn set<T>(slot: &mut T, value: Option<T>) {
    if let Some(v) = value {
        *slot = v;
    }
}

fn parse_f64(key: &str, v: &str) -> Result<f64> {
    v.trim().parse::<f64>().map_err(|_| Error::Config(format!("{key}: cannot parse '{v}' as a number")))
}

fn parse_usize(key: &str, v: &str) -> Result<usize> {
    v.trim().parse::<usize>().map_err(|_| Error::Config(format!("{key}: cannot parse '{v}' as an integer")))
}

/// Parses "inf,4,0.25"; "inf", "infinity" and "∞" select the
/// non-relativistic panel.
pub fn parse_c_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| match t.to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => Ok(f64::INFINITY),
            _ => parse_f64("c-list", t),
        })
        .collect()
}

/// File-name label for a speed of light: "inf" or the shortest decimal form.
pub fn c_label(c: f64) -> String {
    if c.is_infinite() {
        "inf".to_string()
    } else {
        format!("{c}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_list_parsing() {
        assert_eq!(parse_c_list("inf, 4,0.25").unwrap(), vec![f64::INFINITY, 4.0, 0.25]);
        assert!(parse_c_list("4,x").is_err());
        assert_eq!(c_label(0.25), "0.25");
        assert_eq!(c_label(4.0), "4");
        assert_eq!(c_label(f64::INFINITY), "inf");
    }

    #[test]
    fn flags_override_file_which_overrides_defaults() {
        let dir = std::env::temp_dir().join(format!("relosc-cfg-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.cfg");
        std::fs::write(&path, "# test\ng = 0.5\nc=2\nn_max = 3\n").unwrap();
        let flags = Flags { c: Some(3.0), config: Some(path), ..Flags::default() };
        let cfg = RunConfig::resolve(Command::Spectrum, &flags, None).unwrap();
        assert_eq!(cfg.params.g, 0.5);
        assert_eq!(cfg.params.c, 3.0);
        assert_eq!(cfg.n_max, 3);
        assert_eq!(cfg.params.m, 1.0);
        std::fs::remove_dir_all(dir).ok();
    }

    #[test]
    fn validation() {
        let bad = |f: Flags| RunConfig::resolve(Command::Wavefunction, &f, None).is_err();
        assert!(bad(Flags { rho_min: Some(-1.0), ..Flags::default() }));
        assert!(bad(Flags { steps: Some(1), ..Flags::default() }));
        assert!(bad(Flags { n_max: Some(33), ..Flags::default() }));
        assert!(bad(Flags { m: Some(0.0), ..Flags::default() }));
        assert!(RunConfig::resolve(Command::Wavefunction, &Flags::default(), Some("abc")).is_err());
        assert!(!bad(Flags { n_max: Some(32), ..Flags::default() }));
    }
}
