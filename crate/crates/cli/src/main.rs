//! `npb`: command-line front end for npb-core.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "npb", version, about = "Exact computations for algebras with bracket")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads; 0 uses all available cores.
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
    /// Seed for the randomized suites.
    #[arg(long, default_value_t = 2024, global = true)]
    pub seed: u64,
    /// Ground field (Q, F2, F3, ...); must agree with input files.
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Underlying {
    Assoc,
    Leibniz,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check membership in a variety (or the derived identities when no variety is given).
    Check(CheckArgs),
    /// List every variety the algebra belongs to.
    Classify {
        algebra: PathBuf,
    },
    /// Normal forms, bases, confluence and free-basis checks in a free algebra.
    Free(FreeArgs),
    /// Cohomology dimension table.
    Cohomology(CohomologyArgs),
    /// Verify one of the 22 short exact sequences and its long exact sequence.
    Les(LesArgs),
    /// Compare the extension count with the size of second cohomology over a finite field.
    Extensions(ExtensionsArgs),
    /// Run the seeded property suite.
    Report(ReportArgs),
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    pub algebra: PathBuf,
    #[arg(long)]
    pub variety: Option<String>,
    /// Also check the action axioms of this representation.
    #[arg(long)]
    pub rep: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct FreeArgs {
    #[arg(long)]
    pub variety: String,
    /// Comma-separated generator names.
    #[arg(long, value_delimiter = ',', default_value = "x")]
    pub gens: Vec<String>,
    #[arg(long, default_value_t = 3)]
    pub max_degree: usize,
    /// Normalize this term instead of listing bases.
    #[arg(long, conflicts_with_all = ["confluence", "underlying"])]
    pub term: Option<String>,
    /// Compare innermost and outermost rewriting on every word.
    #[arg(long, conflicts_with = "underlying")]
    pub confluence: bool,
    /// Check that the underlying associative or Leibniz algebra is free.
    #[arg(long, value_enum)]
    pub underlying: Option<Underlying>,
}

#[derive(Args, Debug)]
pub struct CohomologyArgs {
    pub algebra: PathBuf,
    /// Representation file; the regular representation when omitted.
    #[arg(long)]
    pub rep: Option<PathBuf>,
    #[arg(long)]
    pub variety: String,
    #[arg(long, default_value_t = 3)]
    pub max_degree: usize,
}

#[derive(Args, Debug)]
pub struct LesArgs {
    pub algebra: PathBuf,
    #[arg(long)]
    pub rep: Option<PathBuf>,
    /// Sequence tag, e.g. A1.
    #[arg(long)]
    pub tag: String,
    #[arg(long, default_value_t = 4)]
    pub max_degree: usize,
}

#[derive(Args, Debug)]
pub struct ExtensionsArgs {
    pub algebra: PathBuf,
    #[arg(long)]
    pub rep: Option<PathBuf>,
    #[arg(long)]
    pub variety: String,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    /// A tenth of the instances.
    #[arg(long)]
    pub quick: bool,
    /// Criteria to run (1 to 12); all when omitted.
    #[arg(long = "criterion", value_parser = clap::value_parser!(u8).range(1..=12))]
    pub criteria: Vec<u8>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    npb_core::par::set_jobs(cli.jobs);
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
