use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable text
    Text,
    /// Pretty-printed JSON
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "bfre", version)]
#[command(about = "Exact solver for bipolar max-product fuzzy relation equations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Largest number of unknowns for which index families are enumerated
    #[arg(long, default_value_t = 16, global = true)]
    pub max_enum: usize,

    /// Largest number of unknowns accepted by the brute-force oracle
    #[arg(long, default_value_t = bipolar_fre::oracle::DEFAULT_ORACLE_CAP, global = true)]
    pub max_oracle: usize,

    /// Add decimal renderings with this many digits next to the exact values
    #[arg(long, value_name = "DIGITS", global = true)]
    pub decimals: Option<usize>,

    /// Include wall-clock time in solve reports (makes output nondeterministic)
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide solvability and list greatest/least/maximal/minimal solutions
    Solve { file: PathBuf },
    /// Evaluate every equation at a candidate solution
    Check {
        file: PathBuf,
        /// File holding the candidate, or the candidate itself, e.g. "(0.4, 0.5)"
        solution: String,
    },
    /// Enumerate the index families of feasible pairs
    Pairs { file: PathBuf },
    /// Brute-force the extreme tuples and report what solves
    Oracle { file: PathBuf },
    /// Write a random problem with scalars on the grid {0, 1/D, .., 1}
    Gen {
        #[arg(long)]
        seed: u64,
        /// Number of unknowns
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..=64))]
        m: u16,
        /// Number of equations
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        n: u16,
        /// Grid denominator D
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        grid: u32,
        out: PathBuf,
    },
}
