//! `hpa`: batch verification front end.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 64 bad input,
//! 75 a budget cap was exceeded.

mod commands;
mod text;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hopf_planar::pairing::Budget;
use hopf_planar::DeltaSign;
use thiserror::Error;

#[derive(Parser, Debug)]
#[command(name = "hpa", version, about = "Exact checks for the planar algebra of a Hopf algebra")]
pub struct Cli {
    /// Sign of δ: the loop value is sign·√dim H.
    #[arg(long, global = true, default_value_t = 1, allow_negative_numbers = true)]
    delta_sign: i32,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Largest Gram matrix (entries) a command may build.
    #[arg(long, global = true)]
    max_gram_entries: Option<usize>,
    /// Largest network (boxes) a command may evaluate.
    #[arg(long, global = true)]
    max_boxes: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Output {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Hopf axioms, integral laws, relation identities and Fourier laws.
    VerifyHopf {
        path: Option<PathBuf>,
        #[arg(long)]
        hopf: Option<PathBuf>,
    },
    /// Evaluate the partition function of a labeled network.
    Eval {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(long)]
        network: PathBuf,
        /// Use the full assignment sum instead of tensor contraction.
        #[arg(long)]
        naive: bool,
    },
    /// Check that relation moves preserve the value.
    Moves {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(long)]
        check: bool,
        /// Apply every site of each relation to this network instead of random ones.
        #[arg(long)]
        network: Option<PathBuf>,
        /// Restrict to one relation (M, U, I, C, T, E or A).
        #[arg(long)]
        relation: Option<String>,
        /// Random applications per relation.
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Boxes per random network.
        #[arg(long, default_value_t = 3)]
        boxes: usize,
    },
    /// Gram matrix of the trace pairing on P_k in dual bases.
    Gram {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Rank of the depth-two Gram matrix (expected dim H squared).
    DepthTwo {
        #[arg(long)]
        hopf: PathBuf,
    },
    /// Recover the coproduct, counit and antipode from tangles.
    Reconstruct {
        #[arg(long)]
        hopf: PathBuf,
    },
    /// Fourier transform laws and the generator identities.
    Fourier {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(long)]
        verify: bool,
    },
    /// Compare a network over H with its Fourier image over the dual.
    Duality {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(long)]
        network: PathBuf,
    },
    /// Quadrilateral tilings of the 2k-gon and their flip graph.
    Tilings {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        flip_graph: bool,
        /// Write the flip graph in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Also check surjectivity of each tiling's tangle over this algebra.
        #[arg(long)]
        hopf: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 64,
            CliError::Budget(_) => 75,
        }
    }
}

pub struct Session {
    pub delta_sign: DeltaSign,
    pub seed: u64,
    pub budget: Budget,
}

/// `HPA_BUDGET` is a comma-separated list of `gram=N` and `boxes=N`; it
/// overrides the command-line caps.
fn budget(cli: &Cli) -> Result<Budget, CliError> {
    let mut b = Budget::default();
    if let Some(g) = cli.max_gram_entries {
        b.max_gram_entries = g;
    }
    if let Some(m) = cli.max_boxes {
        b.max_boxes = m;
    }
    if let Ok(spec) = std::env::var("HPA_BUDGET") {
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let bad = || CliError::Input(format!("HPA_BUDGET: cannot read {part:?}"));
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            let value: usize = value.trim().parse().map_err(|_| bad())?;
            match key.trim() {
                "gram" => b.max_gram_entries = value,
                "boxes" => b.max_boxes = value,
                _ => return Err(bad()),
            }
        }
    }
    if b.max_gram_entries == 0 || b.max_boxes == 0 {
        return Err(CliError::Input("budget caps must be positive".into()));
    }
    Ok(b)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let session = DeltaSign::from_i32(cli.delta_sign)
        .ok_or_else(|| CliError::Input(format!("--delta-sign must be 1 or -1, not {}", cli.delta_sign)))
        .and_then(|delta_sign| Ok(Session { delta_sign, seed: cli.seed, budget: budget(&cli)? }));
    let result = session.and_then(|s| commands::run(&cli.command, &s));
    match result {
        Ok((report, passed)) => {
            match cli.output {
                Output::Json => println!("{}", serde_json::to_string_pretty(&report).expect("report is JSON")),
                Output::Text => print!("{}", text::render(&report)),
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("hpa: {e}");
            ExitCode::from(e.code())
        }
    }
}
