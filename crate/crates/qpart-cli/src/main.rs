//! `qpart`: verification suites and data tables for q-Plancherel measures.
//!
//! Exit status: 0 on success, 1 when a check or computation fails, 2 on a usage or
//! configuration error.

mod cli;
mod report;
mod suites;
mod tables;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qpart_core::Error;

use cli::{Cli, Command, Suite};
use report::Report;

#[derive(Debug)]
pub enum Failure {
    /// Invalid arguments, parameters or environment; exit 2.
    Config(String),
    /// A computation failed; exit 1.
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) | Error::LimitExceeded { .. } | Error::Domain(_) => Failure::Config(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

const DEFAULT_GAP_N_MAX: usize = 10;
const DEFAULT_PAINLEVE_N_MAX: usize = 12;

fn run(cli: &Cli) -> Result<bool, Failure> {
    let p = cli::resolve_params(cli)?;
    let (text, pass) = match &cli.command {
        Command::Verify { suite } => {
            let checks = suites::run(*suite, &p);
            let pass = checks.iter().all(|c| c.pass);
            let name = match suite {
                Suite::Special => "special",
                Suite::Measures => "measures",
                Suite::Kernels => "kernels",
                Suite::Gap => "gap",
                Suite::Painleve => "painleve",
                Suite::All => "all",
            };
            let report = Report { suite: name.into(), xi: p.xi(), q: p.q(), pass, checks };
            (report.render(cli.format), pass)
        }
        Command::LimitShape { grid_points, figure } => {
            let xs: Vec<f64> = if *figure { (1..=9).map(|k| k as f64 / 10.0).collect() } else { vec![p.xi()] };
            (tables::limit_shape_table(&xs, *grid_points)?.render(cli.format), true)
        }
        Command::GapTable => {
            let n = cli.n_max.unwrap_or(DEFAULT_GAP_N_MAX);
            (tables::gap_table(&p, cli.variant, n, cli.method)?.render(cli.format), true)
        }
        Command::Painleve { branch, source } => {
            let n = cli.n_max.unwrap_or(DEFAULT_PAINLEVE_N_MAX);
            (tables::painleve_table(&p, *branch, *source, n)?.render(cli.format), true)
        }
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Config(format!("cannot write {}: {e}", path.display())))?,
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Compute(e.to_string()))?,
    }
    Ok(pass)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Config(msg)) => {
            eprintln!("qpart: configuration error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("qpart: {msg}");
            ExitCode::from(1)
        }
    }
}
