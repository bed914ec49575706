mod cache;
mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact cohomology, resolutions and homological invariants of DG
/// polynomial algebras A(t1, ..., tn).
#[derive(Debug, Parser)]
#[command(name = "dgpoly", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sort A(t) into its isomorphism class with a verified change of variables.
    Classify(Common),
    /// Cohomology dimensions, representatives and a presentation of H(A).
    Cohomology(Common),
    /// A semifree resolution of k with its validation certificate.
    Resolve {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = MethodArg::Killing)]
        method: MethodArg,
    },
    /// The full invariant report.
    Invariants(Common),
    /// The claim table; exits with status 1 if any claim fails.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated claim ids, or `all`.
        #[arg(long, default_value = "all")]
        claims: String,
    },
    /// Verdict counts over randomly drawn specs.
    Sweep {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Worker threads.
        #[arg(long, default_value_t = 4)]
        jobs: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Em,
    Killing,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Parameters as rational strings, e.g. "1,0,-3/2".
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    /// Number of variables (checked against --t; picks n for sweep).
    #[arg(long)]
    n: Option<usize>,
    /// JSON file holding {"n": .., "t": [..]}.
    #[arg(long)]
    spec: Option<PathBuf>,
    #[arg(long, default_value_t = 8)]
    max_degree: u32,
    /// Degree through which the presentation of H(A) is certified.
    #[arg(long, default_value_t = 8)]
    presentation_bound: u32,
    #[arg(long, default_value_t = 12)]
    internal_degree_bound: u32,
    /// Syzygy steps (default: number of generators of H(A) + 2).
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit JSON instead of a table.
    #[arg(long)]
    json: bool,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(commands::Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(commands::Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
