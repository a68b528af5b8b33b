//! `factorlab` command-line front end.
//!
//! Every subcommand prints one JSON report (`"schema": 1`). Exit codes:
//! 0 completed, 1 usage error, 2 scale or budget exceeded, 3 a
//! counterexample was found.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use factorlab::Budget;

#[derive(Parser, Debug)]
#[command(name = "factorlab", version, about = "Toughness, factor criteria and tree-connected factors on small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Args, Debug, Default)]
pub struct BudgetArgs {
    /// Largest n for 2^n subset enumeration.
    #[arg(long, global = true)]
    pub exact_n: Option<usize>,
    /// Largest n for 3^n pair enumeration.
    #[arg(long, global = true)]
    pub criterion_n: Option<usize>,
    #[arg(long, global = true)]
    pub indep_sets: Option<u64>,
    /// Largest cycle-space dimension for even-subgraph scans.
    #[arg(long, global = true)]
    pub cycle_dim: Option<usize>,
    /// Node limit for branch-and-bound searches.
    #[arg(long, global = true)]
    pub search_nodes: Option<u64>,
}

impl BudgetArgs {
    pub fn resolve(&self) -> Budget {
        let mut b = Budget::from_env();
        if let Some(x) = self.exact_n {
            b.exact_n = x;
        }
        if let Some(x) = self.criterion_n {
            b.criterion_n = x;
        }
        if let Some(x) = self.indep_sets {
            b.indep_sets = x;
        }
        if let Some(x) = self.cycle_dim {
            b.cycle_dim = x;
        }
        if let Some(x) = self.search_nodes {
            b.search_nodes = x;
        }
        b
    }
}

#[derive(Args, Debug, Clone)]
pub struct GraphInput {
    /// Graph file, or `-` for stdin.
    #[arg(long, short)]
    pub input: PathBuf,
    /// Input format; guessed from the content when omitted.
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatArg {
    #[value(alias = "g6")]
    Graph6,
    #[value(alias = "el")]
    Edgelist,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToughMode {
    Exact,
    Falsify,
}

#[derive(Args, Debug)]
pub struct ToughArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[arg(long, value_enum, default_value = "exact")]
    pub mode: ToughMode,
    /// Sample count in falsify mode.
    #[arg(long)]
    pub samples: Option<u64>,
    /// Required in falsify mode.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Check a threshold instead of computing the value.
    #[arg(long)]
    pub check: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriterionKind {
    /// Near f-factor criterion over disjoint pairs.
    Tutte,
    /// (g,f)-factor criterion.
    Lovasz,
    /// odd(G-S) <= |S|.
    OneFactor,
    /// (1,f)-factor criterion.
    Vergnas,
    /// Restricted-pair sufficient condition.
    Restricted,
    /// Prescribed-exception condition.
    Forced,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    F,
    Near,
    Gf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum EulerArg {
    Construct,
    Exhaustive,
    Auto,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Petersen,
    Blowup,
    Lowerbound,
    Gnp,
    Regular,
    AllConnected,
    Named,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyKind {
    F,
    Near,
    Gf,
    Mtc,
    Eulerian,
    Factor24,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Toughness: exact minimum of |S|/omega(G-S), or seeded falsification.
    Toughness(ToughArgs),
    /// Isolated toughness.
    Iso(ToughArgs),
    /// m-strong toughness.
    Strong {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long)]
        check: Option<String>,
    },
    /// Greedy weighted independent set, Caro-Wei bound and independence number.
    Indep {
        #[command(flatten)]
        graph: GraphInput,
        /// Weight: a constant or `@file`.
        #[arg(long, default_value = "1")]
        phi: String,
        /// Also split V into this many greedy colour classes.
        #[arg(long)]
        colors: Option<usize>,
    },
    /// Exhaustive factor criterion with a violating witness.
    Criterion {
        #[arg(value_enum)]
        kind: CriterionKind,
        #[command(flatten)]
        graph: GraphInput,
        /// Upper degree function: a constant or `@file`.
        #[arg(long, default_value = "1")]
        f: String,
        /// Lower degree function for `lovasz`.
        #[arg(long, default_value = "0")]
        g: String,
    },
    /// Find an f-factor, near f-factor or (g,f)-factor.
    Factor {
        #[arg(long, value_enum, default_value = "near")]
        kind: FactorKind,
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value = "1")]
        f: String,
        #[arg(long, default_value = "0")]
        g: String,
        /// Vertex that must carry the extra degree (near factors, odd sum f).
        #[arg(long)]
        forced: Option<usize>,
    },
    /// m edge-disjoint spanning trees or a refuting partition.
    Treepack {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// m-tree-connected components and Omega_m; `--worst` adds the maximising set.
    Mtc {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long)]
        worst: bool,
        /// Search a tree-connected factor with max degree <= 2m+1
        /// (and <= m+1 at this vertex).
        #[arg(long)]
        bounded: bool,
        #[arg(long)]
        u: Option<usize>,
    },
    /// Spanning Eulerian subgraph.
    Eulerian {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value = "auto")]
        mode: EulerArg,
    },
    /// Connected {2,4}-factor.
    Factor24 {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value = "auto")]
        mode: EulerArg,
    },
    /// Check a factor certificate against a graph.
    Verify {
        #[arg(value_enum)]
        kind: VerifyKind,
        #[command(flatten)]
        graph: GraphInput,
        /// Certificate JSON, or a report containing one.
        #[arg(long)]
        cert: PathBuf,
        #[arg(long, default_value = "1")]
        f: String,
        #[arg(long, default_value = "0")]
        g: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Audit one theorem on one graph.
    Audit {
        /// Theorem id with parameters, e.g. `T-A:r=2`.
        #[arg(long)]
        theorem: String,
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value = "input")]
        graph_id: String,
        /// Per-vertex f from a file (overrides any `f=` in the theorem).
        #[arg(long)]
        f_file: Option<PathBuf>,
    },
    /// Audit theorems over a graph corpus.
    Campaign {
        /// `all_connected:N`, `gnp:N:P:COUNT`, `regular:N:D:COUNT`,
        /// `named:A,B,...` or `file:PATH`.
        #[arg(long)]
        corpus: String,
        /// Theorem specs; repeat the flag or separate with `;`.
        #[arg(long = "theorems", alias = "theorem", required = true)]
        theorems: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Include elapsed times (makes reports non-reproducible).
        #[arg(long)]
        timing: bool,
        /// Include every case report, not just counterexamples.
        #[arg(long)]
        reports: bool,
        /// Directory for counterexample dumps (graph plus report).
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Re-evaluate a hypothesis witness from a report.
    Replay {
        #[command(flatten)]
        graph: GraphInput,
        /// A case report or counterexample dump.
        #[arg(long)]
        report: PathBuf,
    },
    /// Generate graphs.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, default_value_t = 2)]
        h: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "1/2")]
        p: String,
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Names for `--family named`, comma separated.
        #[arg(long, default_value = "petersen")]
        names: String,
        /// Output graph format.
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// List the theorem registry.
    Registry,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
