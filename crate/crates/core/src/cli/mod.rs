//! Command-line front end.
//!
//! Exit codes: 0 when a computation finished (whatever its boolean
//! outcome), 2 for parse and load errors, 3 for precondition or hypothesis
//! violations, 4 for internal invariant failures and failed example claims.

pub mod commands;
pub mod expr;
pub mod instance;

use clap::{Parser, Subcommand};
use thiserror::Error;

pub use commands::{run, Report};
pub use instance::Instance;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("cannot read {0}")]
    Io(String),
    #[error("malformed instance: {0}")]
    Syntax(String),
    #[error("invalid instance: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error(transparent)]
    Compute(#[from] crate::Error),
    #[error("{0} example claim(s) failed")]
    ClaimsFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_)
            | CliError::Syntax(_)
            | CliError::Invalid(_)
            | CliError::Parse(_)
            | CliError::UnknownAlgebra(_) => 2,
            CliError::Compute(e) if e.is_internal() => 4,
            CliError::Compute(_) => 3,
            CliError::ClaimsFailed(_) => 4,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "upper-motives",
    version,
    about = "Rational maps between products of generalized Severi-Brauer varieties and their upper motives"
)]
pub struct Cli {
    /// Emit a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct InstanceArg {
    /// Instance file (JSON). `@ex1` and `@ex2` select the bundled fixtures.
    #[arg(long, short = 'i')]
    pub instance: String,
}

impl InstanceArg {
    pub fn load(&self) -> Result<Instance, CliError> {
        match self.instance.as_str() {
            "@ex1" => Instance::from_json(crate::fixtures::EX1_JSON),
            "@ex2" => Instance::from_json(crate::fixtures::EX2_JSON),
            path => Instance::load(path),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Index of a class, given as `NAME[:COEF],...` (e.g. `D3,D1:-2,D2:-2`).
    Index {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        class: String,
    },
    /// Exponent (order in the group) of a class, same syntax as `index`.
    Exponent {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        class: String,
    },
    /// Subgroup generated by comma-separated algebras, optionally compared
    /// with a second generating set.
    Subgroup {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        generators: String,
        #[arg(long)]
        compare: Option<String>,
    },
    /// Index of an algebra over the function field of a product.
    ReducedIndex {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        target: String,
        #[arg(long)]
        base: String,
    },
    /// Existence of a rational map source --> target.
    RationalMap {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
    },
    /// Rational maps in both directions.
    Equivalent {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Isomorphism of the upper motives of two products.
    MotiveIso {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Compare the upper motives of two families of algebras.
    CompareFamilies {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Check every claim about the bundled worked examples.
    VerifyExamples,
}
