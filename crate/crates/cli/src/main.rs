//! `pathspace`: batch checks on k-graphs, their path spaces and groupoids.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use report::Format;

#[derive(Parser)]
#[command(name = "pathspace", version, about = "Checks for higher-rank graph path spaces")]
struct Cli {
    #[command(flatten)]
    options: Options,
    #[command(subcommand)]
    command: Command,
}

/// Settings shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Degree bound, one coordinate per color or a single value for all (default 3).
    #[arg(long, global = true, value_parser = parse_bound)]
    pub bound: Option<Bound>,
    /// Members of each infinite edge family to enumerate.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    pub limit: u64,
    /// Positions of junk after the first ∞ in sampled lifts.
    #[arg(long, global = true, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
    pub horizon: u64,
    /// Random lifts sampled per sequence, besides the minimal one.
    #[arg(long, global = true, default_value_t = 8)]
    pub lifts: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// A graph given by fixture name or JSON file.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// A shipped graph: e2, e3, e-inf, square-2graph, …
    #[arg(long)]
    pub fixture: Option<String>,
    /// A graph JSON file.
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

/// A sequence file given by fixture name or path.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct SequenceSource {
    /// A shipped sequence file: einf-sequences or factor-sequences.
    #[arg(long)]
    pub fixture: Option<String>,
    /// A sequence JSON file.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify degree additivity, associativity and unique factorization up to the bound.
    Validate {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Check that every pair of paths up to the bound has finitely many minimal common extensions.
    Align {
        #[command(flatten)]
        source: GraphSource,
    },
    /// List finite and eventually periodic paths from each vertex.
    Enumerate {
        #[command(flatten)]
        source: GraphSource,
        /// Only paths with this range.
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Encode paths into 2^Y on a window, or test a bit assignment against the membership conditions.
    Encode {
        #[command(flatten)]
        source: GraphSource,
        /// Path literals such as `v:1.(2)*`.
        #[arg(long = "path")]
        paths: Vec<String>,
        /// A 0/1 string, one bit per window path in enumeration order.
        #[arg(long)]
        bits: Option<String>,
        /// Window base vertex (default: range of the first path, or the first vertex).
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Decide convergence for every case of a sequence file (path or factor sequences).
    Converge {
        #[command(flatten)]
        source: SequenceSource,
    },
    /// Look for a finite subcover of W_v among the given cylinders.
    Subcover {
        #[command(flatten)]
        source: GraphSource,
        /// Vertex whose path space must be covered (default: range of the first cylinder).
        #[arg(long)]
        vertex: Option<String>,
        /// Cylinder bases as path literals.
        #[arg(required = true)]
        cylinders: Vec<String>,
    },
    /// Compose, invert and test basic open sets of the path groupoid.
    Groupoid {
        #[command(flatten)]
        source: GraphSource,
        #[command(subcommand)]
        op: GroupoidOp,
    },
    /// Trace Q, N and cluster points of lifts for each case of a factor-sequence file.
    Tychonoff {
        #[command(flatten)]
        source: SequenceSource,
        /// Instances shown per lift.
        #[arg(long, default_value_t = 3)]
        trace: u64,
    },
}

/// Element literals are `λ|μ|w`; basic sets are `λ|μ`.
#[derive(Subcommand, Debug, Clone)]
pub enum GroupoidOp {
    /// The product of two composable elements.
    Compose { left: String, right: String },
    /// The inverse, with the inverse laws checked.
    Invert { element: String },
    /// Whether an element lies in Z(λ, μ).
    Member { element: String, set: String },
    /// Z(λ, μ) ∩ Z(λ', μ') as a union of basic sets.
    Intersect { left: String, right: String },
    /// Whether range and source restrict to bijections on Z(λ, μ).
    Bijection { set: String },
}

/// `3` or `3,2`: bound coordinates as given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound(pub Vec<u64>);

fn parse_bound(s: &str) -> Result<Bound, String> {
    let coords: Result<Vec<u64>, _> = s.split(',').map(|c| c.trim().parse::<u64>()).collect();
    match coords {
        Ok(c) if !c.is_empty() && c.iter().all(|&x| x > 0) => Ok(Bound(c)),
        Ok(_) => Err("bound coordinates must be positive".into()),
        Err(e) => Err(format!("bad bound `{s}`: {e}")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = match commands::seed() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let o = &cli.options;
    let result = match cli.command {
        Command::Validate { source } => commands::validate(o, &source),
        Command::Align { source } => commands::align(o, &source),
        Command::Enumerate { source, vertex } => commands::enumerate(o, &source, vertex.as_deref()),
        Command::Encode { source, paths, bits, vertex } => {
            commands::encode(o, &source, &paths, bits.as_deref(), vertex.as_deref())
        }
        Command::Converge { source } => commands::converge(o, &source, seed),
        Command::Subcover { source, vertex, cylinders } => commands::subcover(o, &source, vertex.as_deref(), &cylinders),
        Command::Groupoid { source, op } => commands::groupoid(o, &source, &op),
        Command::Tychonoff { source, trace } => commands::tychonoff(o, &source, seed, trace),
    };
    match result {
        Ok(report) => {
            let code = report.exit_code();
            print!("{}", report.render(o.format));
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
