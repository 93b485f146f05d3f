//! `qg`: analyze Gorenstein algebras of pure simplicial complexes.
//!
//! Exit codes: 0 success (or WLP/SLP witnessed), 1 oracle mismatch or proven
//! failure, 2 bad input, 3 instance above the brute-force guard, 4 property
//! not witnessed by the sampled forms.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qg_core::gorenstein::DEFAULT_MAX_ORACLE_DIM;
use qg_core::lefschetz::{DEFAULT_COEFF_BOUND, DEFAULT_SEARCH_CAP, DEFAULT_SLP_MAX_DIM, DEFAULT_TRIALS};

#[derive(Parser)]
#[command(name = "qg", version, about = "Gorenstein algebras of pure simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize the Turan algebra with the given part sizes.
    Turan {
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Summary, generators and Hilbert vector of a complex.
    Analyze {
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        output: Output,
    },
    /// Cross-check the face description against brute-force apolarity.
    Oracle {
        #[command(flatten)]
        instance: Instance,
        /// Highest degree to check (default d+1).
        #[arg(long)]
        max_degree: Option<usize>,
        /// Largest dim Q_k attempted.
        #[arg(long, default_value_t = DEFAULT_MAX_ORACLE_DIM)]
        max_oracle_dim: u128,
        #[command(flatten)]
        probe: Probe,
        #[command(flatten)]
        output: Output,
    },
    /// Probe the weak Lefschetz property with random linear forms.
    Wlp {
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        probe: Probe,
        #[command(flatten)]
        output: Output,
    },
    /// Probe the strong Lefschetz property with random linear forms.
    Slp {
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        probe: Probe,
        /// Largest h_k for which powers are composed.
        #[arg(long, default_value_t = DEFAULT_SLP_MAX_DIM)]
        max_level_dim: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Smallest Turan algebra of socle degree D with a totally non-unimodal Hilbert vector.
    Hunt {
        d: usize,
        /// Allow unequal part sizes.
        #[arg(long)]
        any: bool,
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        cap: u64,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Instance {
    /// Turan part sizes, e.g. 2,2,2.
    #[arg(long, value_delimiter = ',')]
    orders: Option<Vec<usize>>,
    /// JSON file {"m": .., "facets": [[..], ..], "labels": [..]}.
    #[arg(long)]
    complex: Option<PathBuf>,
}

#[derive(Args, Clone, Copy)]
struct Probe {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS as u64, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, default_value_t = DEFAULT_COEFF_BOUND, value_parser = clap::value_parser!(u64).range(1..))]
    coeff_bound: u64,
}

#[derive(Args)]
struct Output {
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    /// Hilbert-vector table; turan and analyze only.
    Csv,
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("QG_THREADS") else {
        return Ok(());
    };
    let threads: usize = value.parse().map_err(|_| format!("QG_THREADS must be a positive integer, got {value:?}"))?;
    if threads == 0 {
        return Err("QG_THREADS must be positive".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let result = match cli.command {
        Command::Turan { orders, output } => commands::turan(&orders, &output),
        Command::Analyze { instance, output } => commands::analyze(&instance, &output),
        Command::Oracle { instance, max_degree, max_oracle_dim, probe, output } => {
            commands::oracle(&instance, max_degree, max_oracle_dim, probe, &output)
        }
        Command::Wlp { instance, probe, output } => commands::wlp(&instance, probe, &output),
        Command::Slp { instance, probe, max_level_dim, output } => commands::slp(&instance, probe, max_level_dim, &output),
        Command::Hunt { d, any, cap, output } => commands::hunt(d, any, cap, &output),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
