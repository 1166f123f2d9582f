//! Batch front end: argument model, subcommand dispatch and report
//! rendering. `main.rs` only parses arguments and maps outcomes to exit
//! codes.

pub mod cache;
mod commands;
mod render;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use sign_classes::{ClassKind, Partition};
use thiserror::Error;

pub use commands::run;

/// Default largest `n` for commands that sweep all partitions of `n`.
pub const DEFAULT_CEILING: usize = 30;

#[derive(Debug, Clone, Parser)]
#[command(name = "sign-classes", version, about = "Sign classes of the symmetric groups")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads (0 = one per core). Never changes the output.
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,

    /// Largest n a brute-force sweep may touch.
    #[arg(long, global = true, default_value_t = DEFAULT_CEILING)]
    pub ceiling: usize,

    /// Directory for persisted character-value memo tables.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Character value [λ](μ).
    Char {
        lambda: Partition,
        mu: Partition,
    },
    /// Sign / unique-path / strongly-decreasing verdicts for μ.
    Classify { mu: Partition },
    /// All partitions of n in a class.
    Enumerate {
        n: usize,
        #[arg(long, default_value = "sign")]
        kind: ClassKind,
    },
    /// Θ_μ split into its positive and negative constituents.
    Theta { mu: Partition },
    /// Binary-expansion class and odd-degree characters of S_n.
    Theorem5 {
        n: usize,
        /// Also report the analogous expansion for this odd prime.
        #[arg(long)]
        probe_prime: Option<usize>,
    },
    /// Sign classes of 2-elements, brute force against the closed form.
    TwoClasses { n: usize },
    /// Conjectured classification against brute force for all n <= max_n.
    Conjecture { max_n: usize },
    /// s(n), binary and non-squashing counts with their identities.
    Counts { max_n: usize },
    /// Exceptional partitions for n <= max_n, checked against the known series.
    Exceptional { max_n: usize },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] sign_classes::Error),
    #[error("n = {n} exceeds the brute-force ceiling {ceiling}; pass --ceiling {n} to proceed")]
    Ceiling { n: usize, ceiling: usize },
    #[error("{0}")]
    Usage(String),
    #[error("output: {0}")]
    Output(String),
}

/// What a successful run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    /// A verification found a disagreement; printed in full in `stdout`.
    pub discrepancy: bool,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_DISCREPANCY: i32 = 2;

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.discrepancy {
            EXIT_DISCREPANCY
        } else {
            EXIT_OK
        }
    }
}
