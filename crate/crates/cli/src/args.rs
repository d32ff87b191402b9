use std::path::PathBuf;
use std::str::FromStr;
use std::time::Duration;

use arlab_core::coloring::Pattern;
use arlab_core::search::Budget;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "arlab",
    version,
    about = "Exact generalized anti-Ramsey numbers, piercing numbers and packings for small complete graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format. JSON is the stable contract.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Neither read nor write the result cache.
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Directory of cached exact results.
    #[arg(long, global = true, env = "ARLAB_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Worker threads for the search engine.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// f(n,G|F): least colour count forcing a copy of G with every class in F.
    F(SearchArgs),
    /// g(n,G|F): most colours such that every copy of G has a class in F.
    G(SearchArgs),
    /// Anti-Ramsey number Ar(n,G).
    Ar(TargetArgs),
    /// Local anti-Ramsey number: forces a properly coloured copy of G.
    Lr(TargetArgs),
    /// Turán number ex(n, {F1, F2, ...}) with an extremal graph.
    Ex(ExArgs),
    /// Check a lower-bound construction against f or g.
    Verify(VerifyArgs),
    /// Print a pattern coloring.
    Pattern(SourceArgs),
    /// Canonical substructures of a coloring.
    Find(FindArgs),
    /// Pack two graphs into K_p.
    Pack(PackArgs),
    /// Minimum number of shared edges over all placements in K_p.
    Overlap(OverlapArgs),
    /// Minimal (G,p)-blockers or anti-packers.
    Blockers(BlockersArgs),
    /// Exact invariants of a graph.
    Invariants(InvariantsArgs),
    /// Run the built-in claim suite.
    Suite(SuiteArgs),
}

/// A single order or a comma-separated list of orders and inclusive
/// ranges `a..b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NRange(pub Vec<usize>);

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("expected an order, got `{t}`"));
        let mut out = Vec::new();
        for part in s.split(',') {
            match part.split_once("..") {
                Some((a, b)) => {
                    let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
                    if a > b {
                        return Err(format!("empty range `{part}`"));
                    }
                    out.extend(a..=b);
                }
                None => out.push(num(part)?),
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(NRange(out))
    }
}

#[derive(Clone, Debug, Args)]
pub struct BudgetArgs {
    /// Search node limit.
    #[arg(long, default_value_t = 100_000_000)]
    pub budget_nodes: u64,
    /// Wall-clock limit per job, in seconds.
    #[arg(long, default_value_t = 600)]
    pub budget_secs: u64,
}

impl BudgetArgs {
    pub fn budget(&self, jobs: Option<usize>) -> Budget {
        Budget {
            max_nodes: self.budget_nodes,
            max_time: Some(Duration::from_secs(self.budget_secs)),
            jobs,
            split_depth: None,
        }
    }
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Order of the host clique, e.g. `5`, `4..6` or `4,6`.
    #[arg(long)]
    pub n: NRange,
    /// Target graph G.
    #[arg(long)]
    pub target: String,
    /// Family expression F.
    #[arg(long)]
    pub family: String,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct TargetArgs {
    #[arg(long)]
    pub n: NRange,
    #[arg(long)]
    pub target: String,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct ExArgs {
    #[arg(long)]
    pub n: NRange,
    /// Forbidden graph; repeat for a family.
    #[arg(long, required = true)]
    pub forbid: Vec<String>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

/// Where a coloring comes from: a pattern, a rainbow host with a
/// monochromatic complement, or a JSON file `{"n": .., "colors": [..]}`.
#[derive(Debug, Args)]
pub struct SourceArgs {
    #[arg(long, conflicts_with_all = ["rainbow", "coloring"])]
    pub pattern: Option<Pattern>,
    /// Order of K_n (pattern and rainbow sources).
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of Turán parts for the RT* patterns.
    #[arg(long)]
    pub m: Option<usize>,
    /// Host graph coloured rainbow, every other edge sharing one colour.
    #[arg(long, conflicts_with = "coloring")]
    pub rainbow: Option<String>,
    #[arg(long)]
    pub coloring: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum ModeArg {
    FBad,
    GValid,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_enum)]
    pub mode: ModeArg,
    #[arg(long)]
    pub target: String,
    #[arg(long)]
    pub family: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FindKind {
    /// Monochromatic, rainbow or LEX-coloured clique on t vertices.
    Clique,
    /// Clean complete r-partite subgraph with classes of size t.
    Multipartite,
    /// Rainbow subgraph with k edges on as few vertices as possible.
    Rainbow,
}

#[derive(Debug, Args)]
pub struct FindArgs {
    #[arg(value_enum)]
    pub kind: FindKind,
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Debug, Args)]
pub struct PackArgs {
    #[arg(long)]
    pub g1: String,
    #[arg(long)]
    pub g2: String,
    /// Host order; defaults to the larger graph order.
    #[arg(long)]
    pub p: Option<usize>,
}

#[derive(Debug, Args)]
pub struct OverlapArgs {
    #[arg(long)]
    pub h: String,
    #[arg(long)]
    pub g: String,
    #[arg(long)]
    pub p: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ObstructionArg {
    Blocker,
    AntiPacker,
}

#[derive(Debug, Args)]
pub struct BlockersArgs {
    #[arg(long, value_enum, default_value_t = ObstructionArg::Blocker)]
    pub kind: ObstructionArg,
    #[arg(long)]
    pub g: String,
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub max_edges: usize,
    #[arg(long, default_value_t = 600)]
    pub budget_secs: u64,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    #[arg(long)]
    pub graph: String,
    /// Also report chi_F(G) for this family.
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Fast,
    Full,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    #[arg(value_enum, default_value_t = Level::Fast)]
    pub level: Level,
}
