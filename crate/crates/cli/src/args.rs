use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fibcube_core::{Family, Method};

#[derive(Debug, Parser)]
#[command(
    name = "fibcube",
    version,
    about = "Orders and sizes of k-th order Fibonacci cubes and Fibonacci p-cubes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print F_n^(k) or F_n^p over a range of n.
    Seq(SeqArgs),
    /// Edge count at one n, by one or all methods.
    Size(SizeArgs),
    /// Reproduce the reference tables of sequence values or edge counts.
    Table(TableArgs),
    /// Export an explicitly constructed cube as an edge list or DOT graph.
    Graph(GraphArgs),
    /// Run equivalence, oracle, decomposition and identity sweeps.
    Verify(VerifyArgs),
    /// Time the formula families against each other.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
    Dot,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Iter,
    Conv,
    Linear,
    Brute,
    All,
}

impl MethodArg {
    pub fn methods(self) -> Vec<Method> {
        match self {
            MethodArg::Iter => vec![Method::Iterative],
            MethodArg::Conv => vec![Method::Convolution],
            MethodArg::Linear => vec![Method::Linear],
            MethodArg::Brute => vec![Method::Brute],
            MethodArg::All => Method::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Numbers,
    Sizes,
}

/// `--k` and `--p` select the family; neither means `--k 2`.
#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// Order of the k-th order Fibonacci cube (k >= 2).
    #[arg(long, conflicts_with = "p")]
    pub k: Option<usize>,
    /// Gap of the Fibonacci p-cube (p >= 1).
    #[arg(long)]
    pub p: Option<usize>,
}

impl FamilyArgs {
    pub fn family(&self) -> Family {
        match (self.k, self.p) {
            (_, Some(p)) => Family::PCube(p),
            (Some(k), None) => Family::KOrder(k),
            (None, None) => Family::KOrder(2),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, default_value_t = 0)]
    pub n_min: usize,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SizeArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "iter")]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    /// Largest number of candidate strings brute force may scan (overrides FIBCUBE_BUDGET).
    #[arg(long)]
    pub budget: Option<u64>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub which: Which,
    /// Compare every cell against the embedded reference values.
    #[arg(long)]
    pub golden: bool,
    #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3, 4, 5])]
    pub k_list: Vec<usize>,
    /// Defaults to 16 for numbers and 14 for sizes.
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: Format,
    #[arg(long)]
    pub budget: Option<u64>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Sweep k-order cubes for k = 2..=K.
    #[arg(long)]
    pub k_max: Option<usize>,
    /// Sweep p-cubes for p = 1..=P.
    #[arg(long)]
    pub p_max: Option<usize>,
    #[arg(long, default_value_t = 14)]
    pub n_max: usize,
    /// Also construct every graph and compare against the formulas.
    #[arg(long)]
    pub with_brute: bool,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    #[arg(long)]
    pub budget: Option<u64>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_delimiter = ',', default_values_t = [Method::Iterative, Method::Convolution, Method::Linear])]
    pub methods: Vec<Method>,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    pub reps: u32,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    #[arg(long)]
    pub budget: Option<u64>,
    #[command(flatten)]
    pub out: OutputArgs,
}
