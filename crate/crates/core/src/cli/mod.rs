//! Command-line front end. [`run`] parses arguments, executes the command
//! and maps the outcome to an exit code: 0 success, 1 verification
//! failure, 2 usage or parameter error.

mod commands;
mod config;
mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use commands::{
    execute, fig1_tables, fig2_tables, spectrum_table, verify_reports, wavefunction_tables, NamedTable,
};
pub use config::{
    c_label, parse_c_list, Cli, CliCommand, Command, Flags, GSweep, OutputFormat, RhoGrid, RunConfig, MAX_N,
};
pub use output::{write_atomic, Cell, Table};

pub const TOLERANCE_ENV: &str = "RELOSC_TOLERANCE_SCALE";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Runs the CLI on `args` (including the program name), writing to the
/// given streams. The tolerance scale is read from RELOSC_TOLERANCE_SCALE.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    let (command, flags) = cli.command.split();
    let env = std::env::var(TOLERANCE_ENV).ok();
    let result = RunConfig::resolve(command, flags, env.as_deref()).and_then(|cfg| execute(&cfg, stdout, stderr));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}
