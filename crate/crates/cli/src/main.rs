//! `balance-lab`: decide, certify and reduce from the command line.
//!
//! Exit codes: 0 decided (or certificate accepted), 1 certificate rejected,
//! 2 input error, 3 undecided or inapplicable, 4 internal defect.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use balance_lab::balance::DEFAULT_ORACLE_CAP;
use balance_lab::characterize::Strategy;
use balance_lab::Property;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "balance-lab", version, about = "Balanceable and simply balanceable graphs: decide, certify, reduce")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide a property, or verify a certificate with --certificate.
    Check(CheckArgs),
    /// Build a certificate with the cubic or 4-regular constructor.
    Certify(CertifyArgs),
    /// Emit the hardness instance L(G) □ K4 of a 4-regular graph.
    Reduce(ReduceArgs),
    /// Decide a property for every graph6 line of a file.
    Batch(BatchArgs),
    /// Print a generated graph in graph6.
    Gen(GenArgs),
}

#[derive(Args, Debug, Clone)]
pub struct GraphInput {
    /// Graph in graph6.
    #[arg(long, conflicts_with = "input")]
    pub graph6: Option<String>,
    /// File holding one graph in graph6 or edge-list form; stdin when neither flag is given.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PropertyArg {
    Balanceable,
    SimplyBalanceable,
}

impl From<PropertyArg> for Property {
    fn from(p: PropertyArg) -> Self {
        match p {
            PropertyArg::Balanceable => Property::Balanceable,
            PropertyArg::SimplyBalanceable => Property::SimplyBalanceable,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Theorem,
    Oracle,
    Construct,
}

impl From<MethodArg> for Strategy {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Strategy::Auto,
            MethodArg::Theorem => Strategy::Theorem,
            MethodArg::Oracle => Strategy::Oracle,
            MethodArg::Construct => Strategy::Construct,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct DecisionArgs {
    #[arg(long, value_enum, default_value = "balanceable")]
    pub property: PropertyArg,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: MethodArg,
    /// Largest vertex count the exhaustive oracles accept.
    #[arg(long, env = "BALANCE_LAB_CAP", default_value_t = DEFAULT_ORACLE_CAP)]
    pub cap: usize,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[command(flatten)]
    pub decision: DecisionArgs,
    /// Verify this certificate file instead of deciding.
    #[arg(long)]
    pub certificate: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructorArg {
    Auto,
    Cubic,
    FourRegular,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[arg(long, value_enum, default_value = "auto")]
    pub constructor: ConstructorArg,
    /// Write the certificate here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Re-read the written certificate and verify it.
    #[arg(long)]
    pub verify: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    /// Also run the exact equivalence check and print its report.
    #[arg(long)]
    pub verify_equivalence: bool,
    /// Write the instance's graph6 line here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct BatchArgs {
    /// File with one graph6 string per line.
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub decision: DecisionArgs,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(subcommand)]
    pub family: FamilyArg,
    /// Seed for random families.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum FamilyArg {
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    /// Circulant graph C_n(s1, s2, ...).
    Circulant {
        n: usize,
        #[arg(required = true)]
        connections: Vec<usize>,
    },
    Hypercube {
        d: usize,
    },
    Petersen,
    RandomRegular {
        n: usize,
        k: usize,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(a) => commands::check(a),
        Command::Certify(a) => commands::certify(a),
        Command::Reduce(a) => commands::reduce(a),
        Command::Batch(a) => commands::batch(a),
        Command::Gen(a) => commands::gen(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(commands::exit_code(&err))
        }
    }
}
