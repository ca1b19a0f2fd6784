//! Argument grammar and the resolved run configuration.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use qpart_core::{QParams, Truncation};

use crate::Failure;

#[derive(Debug, Parser)]
#[command(name = "qpart", version, about = "Verification and data tables for q-Plancherel measures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Deformation parameter ξ in [0,1).
    #[arg(long, global = true, default_value_t = 0.3)]
    pub xi: f64,

    /// Base q in [0,1).
    #[arg(long, global = true, default_value_t = 0.5)]
    pub q: f64,

    /// Largest index N (gap-table) or n (painleve).
    #[arg(long = "n-max", global = true)]
    pub n_max: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Variant::Length)]
    pub variant: Variant,

    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Toeplitz)]
    pub method: MethodArg,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run an invariant suite; exit status 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Table of x, ρ(x), Ω(x) on [a−1, b+1].
    LimitShape {
        #[arg(long = "grid-points", default_value_t = 201)]
        grid_points: usize,
        /// One block per ξ = 0.1, 0.2, …, 0.9 instead of the single --xi.
        #[arg(long)]
        figure: bool,
    },
    /// Gap probabilities for N = 0..=n-max.
    GapTable,
    /// q-P_V trajectory with recurrence residuals and the q-Bessel comparator.
    Painleve {
        #[arg(long, value_enum, default_value_t = BranchArg::X)]
        branch: BranchArg,
        #[arg(long, value_enum, default_value_t = SourceArg::SchurSum)]
        source: SourceArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Special,
    Measures,
    Kernels,
    Gap,
    Painleve,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Length,
    FirstPart,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Toeplitz,
    Fredholm,
    Enumeration,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SourceArg {
    /// Forward q-P_V iteration (multiprecision).
    Recurrence,
    /// Toeplitz determinants via LU; relative accuracy in 𝗑_n degrades past n ≈ 8.
    Determinant,
    /// Toeplitz determinants expanded into Schur-function sums.
    SchurSum,
}

/// Resolves `(q, ξ)` with the environment overrides `QPART_MAX_TERMS`, `QPART_TAIL_TOL`.
pub fn resolve_params(cli: &Cli) -> Result<QParams<f64>, Failure> {
    let mut tr = Truncation::<f64>::default();
    if let Ok(v) = std::env::var("QPART_MAX_TERMS") {
        tr.max_terms = v.trim().parse().map_err(|_| Failure::Config(format!("QPART_MAX_TERMS must be a positive integer, got {v:?}")))?;
    }
    if let Ok(v) = std::env::var("QPART_TAIL_TOL") {
        tr.tail_tol = v.trim().parse().map_err(|_| Failure::Config(format!("QPART_TAIL_TOL must be a number, got {v:?}")))?;
    }
    QParams::with_truncation(cli.q, cli.xi, tr).map_err(|e| Failure::Config(e.to_string()))
}
