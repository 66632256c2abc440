//! `disquant`: verification suites, helix and rotator trajectories, rigidity
//! sweeps and the particle/rotator parameter map.

// `!(x > 0.0)` is used on purpose so that NaN inputs are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Seed for every random verification point.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Multiplies every tolerance.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub tol_scale: f64,
}

#[derive(Debug, Parser)]
#[command(name = "disquant", version, about = "Dirac hydrodynamics, classical Dirac particle and relativistic rotator lab")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Algebra,
    #[value(name = "appendixA")]
    AppendixA,
    #[value(name = "appendixB")]
    AppendixB,
    #[value(name = "appendixC")]
    AppendixC,
    Particle,
    Rotator,
    Consistency,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RotatorMode {
    Closed,
    Integrate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    DcrToRr,
    RrToDcr,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite and write its report.
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        #[arg(long, default_value_t = 1.0)]
        m0: f64,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, default_value_t = 1.0)]
        e: f64,
    },
    /// Sample the helical worldline with zero spatial momentum.
    Helix {
        #[arg(long)]
        b: f64,
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, default_value_t = 0.0)]
        phase: f64,
        /// Last coordinate time sampled.
        #[arg(long, default_value_t = 10.0)]
        tmax: f64,
        #[arg(long, default_value_t = 0.1)]
        dt: f64,
    },
    /// Two-particle rotator worldlines with constraint diagnostics.
    Rotator {
        #[arg(long, default_value_t = 1.0)]
        m0: f64,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long = "p0")]
        p0: f64,
        #[arg(long, value_enum, default_value_t = RotatorMode::Closed)]
        mode: RotatorMode,
        /// Steps per period.
        #[arg(long, default_value_t = 2000)]
        steps: usize,
        #[arg(long, default_value_t = 1.0)]
        periods: f64,
        #[arg(long, default_value_t = 0.0)]
        phase: f64,
    },
    /// Sample the rigidity function on an even grid of radii.
    Rigidity {
        #[arg(long, default_value_t = 1.0)]
        m0: f64,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, default_value_t = 0.0)]
        a_min: f64,
        #[arg(long)]
        a_max: f64,
        #[arg(long, default_value_t = 101)]
        n: usize,
    },
    /// Map parameters between the Dirac particle and the rotator.
    Identify {
        #[arg(long, value_enum)]
        direction: DirectionArg,
        /// Particle speed (rr-to-dcr).
        #[arg(long, required_if_eq("direction", "rr-to-dcr"))]
        v: Option<f64>,
        /// Dimensionless radius 4 a m c / hbar (dcr-to-rr).
        #[arg(long, required_if_eq("direction", "dcr-to-rr"))]
        zeta: Option<f64>,
        #[arg(long, default_value_t = 1.0)]
        m0: f64,
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, default_value_t = 1.0)]
        e: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
