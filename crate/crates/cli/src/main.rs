//! `kuramoto`: solve for the order parameter, tabulate approximations, check
//! Bessel-function inequalities on grids and emit figure data.
//!
//! Exit status: 0 on success, 1 when the answer is negative (no nontrivial
//! root, or a violated inequality), 2 for usage, domain and numerical errors.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use output::{Format, OutputSpec};

#[derive(Parser)]
#[command(name = "kuramoto", version, about = "Order parameter of the noisy Kuramoto model and Bessel-ratio inequalities")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Significant digits for numeric output.
    #[arg(long, global = true, default_value_t = 15, value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EvalFn {
    Iv,
    Psi,
    Omega,
    Gamma,
    Lambda,
    Xi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GridSpacing {
    Log,
    Linear,
}

#[derive(Subcommand)]
enum Command {
    /// Solve r = Ψ_ν(2Kr) for the nontrivial root.
    #[command(allow_negative_numbers = true)]
    Solve {
        #[arg(long = "K", visible_alias = "k")]
        k: f64,
        #[arg(long, default_value_t = 0.0)]
        nu: f64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Differences A − r and L_pol − r at K ∈ {1.5, 2, 5, 10, 100}.
    Table,
    /// Bounds and approximations of r over a linear K grid.
    #[command(allow_negative_numbers = true)]
    Sweep {
        #[arg(long)]
        k_min: f64,
        #[arg(long)]
        k_max: f64,
        #[arg(long, default_value_t = 200)]
        steps: usize,
        #[arg(long, default_value_t = 0.0)]
        nu: f64,
        #[arg(long, default_value_t = 1e-13)]
        tol: f64,
    },
    /// Bounds, L(K) and L_pol(K) at one coupling strength (ν = 0).
    #[command(allow_negative_numbers = true)]
    Approx {
        #[arg(long = "K", visible_alias = "k")]
        k: f64,
        #[arg(long, default_value_t = 1e-13)]
        tol: f64,
    },
    /// Check an inequality on a grid of x values.
    #[command(allow_negative_numbers = true)]
    Verify {
        /// turanb, lower_turan, edin, turaninter, ineq9, new_turan or fig1.
        #[arg(long)]
        inequality: String,
        #[arg(long, default_value_t = 0.0)]
        nu: f64,
        #[arg(long, default_value_t = 1e-3)]
        x_min: f64,
        #[arg(long, default_value_t = 50.0)]
        x_max: f64,
        #[arg(long, default_value_t = 2000)]
        points: usize,
        #[arg(long, value_enum, default_value_t = GridSpacing::Log)]
        spacing: GridSpacing,
    },
    /// Data series of figure 1, 2 or 3.
    Figure {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        id: u8,
        #[arg(long, default_value_t = 500)]
        points: usize,
    },
    /// Smallest order ν for which the Ω-relaxed expression is negative for all x.
    #[command(allow_negative_numbers = true)]
    Threshold {
        #[arg(long, default_value_t = 0.01)]
        tolerance: f64,
    },
    /// Evaluate a single function at (ν, x).
    #[command(allow_negative_numbers = true)]
    Eval {
        #[arg(long = "fn", value_enum)]
        function: EvalFn,
        #[arg(long, default_value_t = 0.0)]
        nu: f64,
        #[arg(long)]
        x: f64,
        /// Return e^{−x}·I_ν(x) (iv only).
        #[arg(long)]
        scaled: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let output = OutputSpec { format: cli.format, path: cli.out, precision: cli.precision as usize };
    match commands::run(cli.command, &output) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
