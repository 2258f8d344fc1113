use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod input;

/// Exact checks for hyperbolicity cones and their spectrahedral representations.
#[derive(Debug, Parser)]
#[command(name = "hypercone", version)]
pub struct Cli {
    /// Also write the machine-readable result to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,

    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Sample count for every sampled check.
    #[arg(long, global = true, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the full verification pipeline on the built-in Vamos data.
    VerifyVamos {
        /// Leave out the tangency search (step 10).
        #[arg(long)]
        skip_support_search: bool,
    },
    /// Search for a definite pencil with A(x) f = h g.
    Construct(ConstructArgs),
    /// Determinant of a pencil, as polynomial JSON.
    Det {
        #[arg(long, value_name = "FILE")]
        pencil: PathBuf,
    },
    /// Generators of the dual of a finitely generated cone.
    Dual {
        #[arg(long, value_name = "FILE")]
        rays: PathBuf,
    },
    /// Is v in the closed hyperbolicity cone of h at e?
    ConeMember {
        #[arg(long, value_name = "FILE")]
        h: PathBuf,
        #[arg(long, value_name = "POINT", allow_hyphen_values = true)]
        e: String,
        #[arg(long, value_name = "POINT", allow_hyphen_values = true)]
        v: String,
    },
    /// Real-rootedness of h(te + v) along sampled directions v.
    HyperbolicCheck {
        #[arg(long, value_name = "FILE")]
        h: PathBuf,
        #[arg(long, value_name = "POINT", allow_hyphen_values = true)]
        e: String,
    },
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Polynomial h (JSON or infix text).
    #[arg(long, value_name = "FILE")]
    pub h: PathBuf,
    #[arg(long, value_name = "POINT", allow_hyphen_values = true)]
    pub e: String,
    /// Vector f (JSON, or one infix polynomial per line).
    #[arg(long, value_name = "FILE")]
    pub f: PathBuf,
    /// Degree of the entries of f.
    #[arg(long = "d-prime", value_name = "D")]
    pub d_prime: u32,
    /// Where to write the pencil JSON.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-10)]
    pub residual_tol: f64,
    #[arg(long, default_value_t = 100_000)]
    pub max_iter: usize,
    #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub denom_bound: u64,
    /// CSV trace of the solver, one line per iteration.
    #[arg(long, value_name = "FILE")]
    pub trace: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
