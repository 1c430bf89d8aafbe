//! `reductlab`: definability lattices, automorphism groups and grid tools
//! from the command line.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

mod commands;
mod workspace;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] reductlab_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    /// A check ran to completion and failed.
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "reductlab",
    version,
    about = "Definability spaces of finite linear orders and grids"
)]
pub struct Cli {
    /// Workspace file with the structure and named relations.
    #[arg(long, global = true)]
    pub workspace: Option<PathBuf>,
    /// Worker threads for automorphism search.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Largest m tried by boundary search (default: height - 1).
    #[arg(long, global = true)]
    pub boundary_cap: Option<usize>,
    /// Write DOT output to this file instead of standard output.
    #[arg(long, global = true)]
    pub dot_out: Option<PathBuf>,
    /// Rewrite the shipped figure goldens.
    #[arg(long, global = true)]
    pub regen_goldens: bool,
    /// Use the linear order on N points (overrides the workspace structure).
    #[arg(long, global = true, value_name = "N", conflicts_with = "grid")]
    pub linear: Option<usize>,
    /// Use the grid with M verticals of height H, written MxH.
    #[arg(long, global = true, value_name = "MxH")]
    pub grid: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the extension of a relation, one tuple per line.
    Eval { name: String },
    /// Decide whether TARGET is definable from the BASE relations.
    Definable {
        target: String,
        /// Base relations, separated by commas or given as several arguments.
        #[arg(required = true)]
        base: Vec<String>,
    },
    /// Print the automorphism group of a relation set.
    Aut {
        #[arg(required = true)]
        names: Vec<String>,
        /// Print only the group order.
        #[arg(long)]
        order_only: bool,
    },
    /// Render a Hasse diagram of definability spaces as DOT.
    Lattice {
        /// One generator set, comma-separated; repeat for more nodes.
        #[arg(long = "set")]
        sets: Vec<String>,
        /// Built-in figure: 1 (linear order lattice) or 2 (grid lattice).
        #[arg(long, conflicts_with = "sets")]
        figure: Option<u8>,
    },
    /// Compare two generator sets and print separating automorphisms.
    Witness { first: String, second: String },
    /// Print the boundary of a relation.
    Boundary { name: String },
    /// Classify a permutation, given as images separated by commas or spaces.
    Classify {
        #[arg(required = true, num_args = 1..)]
        images: Vec<String>,
    },
    /// Run the reproduction suite and print one line per criterion.
    VerifyPaper,
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
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Mismatch(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
