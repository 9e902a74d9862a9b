//! `fareyzc`: max-min constellation scaling for two-user NOMA Z-channels.
//!
//! Exit codes: 0 success, 1 runtime failure (degenerate channel, I/O,
//! failed `--check`), 2 usage error.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod check;
mod commands;
mod parse;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

/// Max-min constellation scaling for two-user NOMA over Gaussian Z-channels.
#[derive(Debug, Parser)]
#[command(name = "fareyzc", version, args_conflicts_with_subcommands = true)]
pub struct Cli {
    /// Validate a JSON or CSV file previously written by this tool.
    #[arg(long, value_name = "FILE")]
    check: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Optimal scaling factors for a channel (JSON).
    Solve(SolveArgs),
    /// Farey sequences, interval sets and partitions (JSON).
    Farey(FareyArgs),
    /// Minimum distances at both receivers for given scalings (JSON).
    Mindist(MindistArgs),
    /// Closed form against a grid-search reference (JSON).
    Oracle(OracleArgs),
    /// Monte Carlo bit-error-rate sweep (CSV).
    Ber(BerArgs),
    /// Received constellation points at the optimum (CSV).
    Constellation(ConstellationArgs),
}

/// Channel description shared by the channel-based subcommands.
///
/// With `--p1/--p2` the gains' magnitudes define one real Z-channel whose
/// PAM order is `--M`. Otherwise the channel is complex: `--P1/--P2` are
/// total powers split between the in-phase (`--M`) and quadrature (`--Mp`)
/// rails.
#[derive(Debug, Args)]
pub struct ChannelArgs {
    /// Complex channel as JSON: {"h11":[re,im],"h21":[re,im],"h22":[re,im],"P1":..,"P2":..,"M":..,"Mp":..}
    #[arg(long, value_name = "FILE", conflicts_with_all = ["h11", "h21", "h22", "p1", "p2", "total_p1", "total_p2", "m", "mp"])]
    pub channel: Option<PathBuf>,
    /// Direct gain S1 -> D1, e.g. `1`, `3+4j`, `2j`.
    #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
    pub h11: Option<num_complex::Complex64>,
    /// Cross gain S2 -> D1.
    #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
    pub h21: Option<num_complex::Complex64>,
    /// Direct gain S2 -> D2.
    #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
    pub h22: Option<num_complex::Complex64>,
    /// Per-rail power of user 1 (real channel).
    #[arg(long, requires = "p2", conflicts_with_all = ["total_p1", "total_p2", "mp"])]
    pub p1: Option<f64>,
    /// Per-rail power of user 2 (real channel).
    #[arg(long, requires = "p1")]
    pub p2: Option<f64>,
    /// Total power of user 1 (complex channel, default 1).
    #[arg(long = "P1", id = "total_p1")]
    pub total_p1: Option<f64>,
    /// Total power of user 2 (complex channel, default 1).
    #[arg(long = "P2", id = "total_p2")]
    pub total_p2: Option<f64>,
    /// In-phase PAM order (both users).
    #[arg(long = "M", id = "m")]
    pub m: Option<u32>,
    /// Quadrature PAM order (defaults to M).
    #[arg(long = "Mp", id = "mp")]
    pub mp: Option<u32>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub channel: ChannelArgs,
    /// Include every per-interval candidate in the output.
    #[arg(long)]
    pub trace: bool,
    /// Write JSON here instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FareyArgs {
    /// Sequence order.
    #[arg(long = "K", id = "k")]
    pub k: u64,
    /// Extend with reciprocals up to 1/0.
    #[arg(long)]
    pub extended: bool,
    /// Emit the interval set (adjacent pairs of the extended sequence).
    #[arg(long, conflicts_with = "extended")]
    pub intervals: bool,
    /// Split the interval set by numerator sum against this threshold.
    #[arg(long = "L", id = "l", conflicts_with_all = ["extended", "intervals"])]
    pub l: Option<u64>,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MindistArgs {
    #[command(flatten)]
    pub channel: ChannelArgs,
    #[arg(long)]
    pub w1: f64,
    #[arg(long)]
    pub w2: f64,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub channel: ChannelArgs,
    /// Grid points per sweep.
    #[arg(long, default_value_t = 100_000)]
    pub grid: usize,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BerArgs {
    /// noma, tdma, fdma or crnoma.
    #[arg(long)]
    pub scheme: String,
    #[arg(long = "M", id = "m")]
    pub m: u32,
    /// Quadrature order (defaults to M).
    #[arg(long = "Mp", id = "mp")]
    pub mp: Option<u32>,
    /// Rayleigh variances of h11,h21,h22.
    #[arg(long, value_parser = parse::triple, conflicts_with_all = ["h11", "h21", "h22"])]
    pub vars: Option<[f64; 3]>,
    /// Fixed channel instead of fading (all three gains required).
    #[arg(long, value_parser = parse::complex, allow_hyphen_values = true, requires_all = ["h21", "h22"])]
    pub h11: Option<num_complex::Complex64>,
    #[arg(long, value_parser = parse::complex, allow_hyphen_values = true, requires_all = ["h11", "h22"])]
    pub h21: Option<num_complex::Complex64>,
    #[arg(long, value_parser = parse::complex, allow_hyphen_values = true, requires_all = ["h11", "h21"])]
    pub h22: Option<num_complex::Complex64>,
    #[arg(long = "P1", default_value_t = 1.0)]
    pub total_p1: f64,
    #[arg(long = "P2", default_value_t = 1.0)]
    pub total_p2: f64,
    /// SNR grid in dB: start:step:stop, a comma list, or one value.
    #[arg(long, value_parser = parse::snr_grid_db, allow_hyphen_values = true)]
    pub snr: parse::DbGrid,
    /// Channel realizations per SNR point.
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    /// Symbols per realization.
    #[arg(long, default_value_t = 100)]
    pub symbols: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (results do not depend on this).
    #[arg(long)]
    pub threads: Option<usize>,
    /// Averaged CSV destination (stdout if absent).
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Per-stream CSV destination.
    #[arg(long, value_name = "FILE")]
    pub streams_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConstellationArgs {
    #[command(flatten)]
    pub channel: ChannelArgs,
    /// Receiver whose noise-free points are dumped.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub receiver: u8,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Runtime(m) => f.write_str(m),
        }
    }
}

impl From<fareyzc_core::Error> for CliError {
    fn from(e: fareyzc_core::Error) -> Self {
        use fareyzc_core::Error as E;
        match e {
            E::DegenerateChannel(_) | E::InapplicableBound { .. } | E::ZeroPair => {
                CliError::Runtime(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match (cli.check, cli.command) {
        (Some(path), _) => check::run(&path),
        (None, Some(cmd)) => match cmd {
            Command::Solve(a) => commands::solve_cmd(a),
            Command::Farey(a) => commands::farey(a),
            Command::Mindist(a) => commands::mindist(a),
            Command::Oracle(a) => commands::oracle(a),
            Command::Ber(a) => commands::ber(a),
            Command::Constellation(a) => commands::constellation(a),
        },
        (None, None) => Err(CliError::Usage(
            "nothing to do: give a subcommand or --check FILE (see --help)".into(),
        )),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
