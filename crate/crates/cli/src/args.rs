use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "biscount", version, about = "Exact and approximate counting of independent sets in bipartite graphs")]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputFlags,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct OutputFlags {
    /// Print the report as JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Print the report as CSV.
    #[arg(long, global = true)]
    pub csv: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a random bounded-degree instance.
    Gen(GenArgs),
    /// Count exactly.
    Count(CountArgs),
    /// Approximate IS_k by sampling.
    Approx(ApproxArgs),
    /// Run a reduction pipeline.
    Reduce(ReduceArgs),
    /// Cross-check the bounded-degree counters against brute force on random instances.
    Verify(VerifyArgs),
    /// Time the bounded-degree counters on growing disjoint unions; prints CSV.
    Bench(BenchArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    /// Bipartite `p bis` file.
    Bis,
    /// Coloured `p col` file.
    Col,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_enum, default_value = "bis")]
    pub kind: GraphKind,
    /// Left vertices (bipartite).
    #[arg(long, default_value_t = 6)]
    pub left: usize,
    /// Right vertices (bipartite).
    #[arg(long, default_value_t = 6)]
    pub right: usize,
    /// Vertices (coloured).
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    /// Number of colours (coloured).
    #[arg(long, default_value_t = 2)]
    pub colours: u32,
    #[arg(long, default_value_t = 3)]
    pub delta: usize,
    /// Stop after this many edges.
    #[arg(long)]
    pub max_edges: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the instance here and print a report; without it the instance goes to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Brute,
    Bounded,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    /// All independent sets. The bounded path sums LIS over every left size, so it is only practical for small |U|.
    Is,
    Isk,
    Lis,
    Maxlis,
    Nlr,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long, value_enum, default_value = "bounded")]
    pub alg: Algorithm,
    #[arg(long, value_enum)]
    pub problem: Problem,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long = "l")]
    pub l: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    /// Degree bound for the bounded counters; defaults to the graph's maximum degree.
    #[arg(long)]
    pub delta: Option<usize>,
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct ApproxArgs {
    #[arg(long)]
    pub k: usize,
    /// Accuracy, as a decimal (`0.25`) or fraction (`1/4`).
    #[arg(long)]
    pub eps: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest accepted sample count.
    #[arg(long)]
    pub budget: Option<u64>,
    pub file: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pipeline {
    Maxis,
    Domset,
    Rainbow,
    CliqueGadget,
    CliqueComplement,
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    #[arg(long, value_enum)]
    pub pipeline: Pipeline,
    #[arg(long, value_enum, default_value = "brute")]
    pub oracle: Algorithm,
    /// Degree bound for `--oracle bounded`.
    #[arg(long, default_value_t = 3)]
    pub delta: usize,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    /// Also write the full trace as JSON.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// `p bis` for maxis and clique-complement, `p col` otherwise.
    pub file: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyProblem {
    Is,
    Isk,
    Lis,
    Maxlis,
    Nlr,
    Hom,
    Ind,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub problem: VerifyProblem,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long = "l")]
    pub l: Option<usize>,
    #[arg(long, default_value_t = 3)]
    pub delta: usize,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    /// Vertices per random instance.
    #[arg(long, default_value_t = 12)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value = "lis")]
    pub problem: Problem,
    /// `l` or `k`, depending on the problem.
    #[arg(long, default_value_t = 2)]
    pub param: usize,
    #[arg(long, default_value_t = 3)]
    pub delta: usize,
    /// Comma-separated target vertex counts.
    #[arg(long, value_delimiter = ',', default_value = "200,400,800")]
    pub sizes: Vec<usize>,
    /// Vertices per side of the repeated gadget.
    #[arg(long, default_value_t = 10)]
    pub gadget: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
