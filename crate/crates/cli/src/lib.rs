//! Command-line front end: solve catenaries, verify minimality of their
//! rotational surfaces, scan multipliers and export samples.
//!
//! Exit codes: 0 success, 1 invalid input, library error or failed
//! verification, 2 early termination of the solver.

pub mod args;
pub mod commands;
pub mod config;
pub mod output;

use std::ffi::OsString;

use anyhow::Result;
use clap::Parser;

pub use args::Cli;
pub use commands::{run_command, ExitKind, Outcome};
pub use config::{Command, CurveChoice, Format, RunConfig, Thresholds};
pub use output::Artifact;

/// Runs `cfg` and writes its artifacts; returns the exit kind.
pub fn execute(cfg: &RunConfig) -> Result<Outcome> {
    let outcome = run_command(cfg)?;
    output::emit(&outcome.artifact.render(cfg.format)?, cfg.output_path.as_deref())?;
    if let (Some(s), Some(path)) = (&outcome.surface, &cfg.surface_path) {
        output::emit(&s.render(cfg.format)?, Some(path))?;
    }
    Ok(outcome)
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let cfg = cli.config();
    match execute(&cfg) {
        Ok(outcome) => {
            eprintln!("{}", outcome.message);
            if outcome.exit == ExitKind::EarlyTermination {
                if let Some(tag) = outcome.artifact.summary_value("termination") {
                    eprintln!("early termination: {}", tag.as_str().unwrap_or_default());
                }
            }
            outcome.exit.code()
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    }
}
