use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pnum_core::Property;

/// Classify group orders by which group properties every group of that order shares.
#[derive(Parser, Debug)]
#[command(name = "pnum", version)]
pub struct Cli {
    /// Run range work on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verdicts and diagnoses for one order or a range of orders.
    Classify(ClassifyArgs),
    /// The counterexample recipe for a false verdict.
    Witness(WitnessArgs),
    /// Check every verdict in 1..=MAX against concrete groups.
    Verify(VerifyArgs),
    /// Build, load, or validate Cayley tables.
    #[command(subcommand)]
    Group(GroupCommand),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    /// A single order.
    #[arg(required_unless_present = "range", conflicts_with = "range")]
    pub n: Option<u64>,

    /// Inclusive range of orders.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    pub range: Option<Vec<u64>>,

    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Newline-delimited JSON cache of earlier reports.
    #[arg(long, value_name = "PATH")]
    pub cache: Option<PathBuf>,

    /// Largest accepted range length.
    #[arg(long, default_value_t = 1_000_000)]
    pub max_range: u64,
}

#[derive(Args, Debug)]
pub struct WitnessArgs {
    pub n: u64,

    #[arg(long, value_parser = parse_property)]
    pub property: Property,

    /// Construct the group, confirm it lacks the property, and print its table.
    #[arg(long)]
    pub build: bool,

    /// Largest order --build will construct.
    #[arg(long, default_value_t = 512)]
    pub cap: u64,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long = "max", value_name = "N")]
    pub max_n: u64,

    /// Write one record per line to this file.
    #[arg(long, value_name = "PATH")]
    pub report: Option<PathBuf>,

    /// Witnesses above this order are recorded as skipped.
    #[arg(long, default_value_t = pnum_core::crosscheck::DEFAULT_WITNESS_CAP)]
    pub cap: u64,

    /// Groups sampled per true verdict.
    #[arg(long, default_value_t = pnum_core::crosscheck::DEFAULT_SAMPLE_BUDGET)]
    pub budget: usize,

    /// Build only the first diagnosed witness per false verdict.
    #[arg(long)]
    pub first_only: bool,
}

#[derive(Subcommand, Debug)]
pub enum GroupCommand {
    /// Print the table of a witness recipe, e.g. `kind=redei_f1 p=3 q=2 u=1 cofactor=1`.
    Dump {
        #[arg(required = true, num_args = 1..)]
        recipe: Vec<String>,
    },
    /// Read a table and print its group-level properties.
    Load { path: PathBuf },
    /// Validate a table; exits 1 if it is not a group.
    Check { path: PathBuf },
}

fn parse_property(s: &str) -> Result<Property, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Property::ALL.iter().map(|p| p.as_str()).collect();
        format!("expected one of {}", names.join(", "))
    })
}
