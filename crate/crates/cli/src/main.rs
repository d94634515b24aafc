mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tdlab::format::GraphFormat;
use tdlab::SolverConfig;

use error::{CliError, EXIT_USAGE};

/// Exact tree-depth, rankings, minor-criticality and 1-uniqueness for small
/// graphs.
///
/// Graphs are read from a file, or from standard input when the path is `-`
/// or omitted. The input format is detected from the first line unless
/// `--format` is given.
///
/// Exit codes: 0 success, 1 check failed, 2 unreadable or malformed input,
/// 3 search budget exhausted, 4 usage error.
#[derive(Debug, Parser)]
#[command(name = "tdlab", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Graph text format; input is auto-detected when omitted, output
    /// defaults to edgelist.
    #[arg(long, global = true, value_enum, env = "TDLAB_FORMAT")]
    pub format: Option<Format>,
    /// Print one JSON document instead of the text report.
    #[arg(long, global = true, env = "TDLAB_JSON")]
    pub json: bool,
    /// Solver worker threads.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=256), env = "TDLAB_THREADS")]
    pub threads: u32,
    /// Stop after expanding this many search nodes.
    #[arg(long, global = true, env = "TDLAB_NODE_BUDGET")]
    pub node_budget: Option<u64>,
    /// Stop after this many seconds of search.
    #[arg(long, global = true, value_parser = parse_seconds, env = "TDLAB_TIME_BUDGET")]
    pub time_budget: Option<Duration>,
    /// Maximum number of memoized subproblems.
    #[arg(long, global = true, env = "TDLAB_MEMO_CAPACITY")]
    pub memo_capacity: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 1, env = "TDLAB_SEED")]
    pub seed: u64,
}

impl Global {
    pub fn solver_config(&self) -> SolverConfig {
        let mut c = SolverConfig::default().with_threads(self.threads as usize);
        if let Some(n) = self.node_budget {
            c = c.with_node_budget(n);
        }
        if let Some(t) = self.time_budget {
            c = c.with_time_budget(t);
        }
        if let Some(m) = self.memo_capacity {
            c = c.with_memo_capacity(m);
        }
        c
    }

    pub fn graph_format(&self) -> Option<GraphFormat> {
        self.format.map(|f| match f {
            Format::Edgelist => GraphFormat::EdgeList,
            Format::Graph6 => GraphFormat::Graph6,
        })
    }
}

fn parse_seconds(s: &str) -> Result<Duration, String> {
    let secs: f64 = s
        .parse()
        .map_err(|_| format!("'{s}' is not a number of seconds"))?;
    Duration::try_from_secs_f64(secs).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// K_n with every edge at vertex 0 subdivided once (n >= 3)
    Hn,
    /// K_k with a pendant vertex on each clique vertex
    Knet,
    /// Two copies of K_a joined by a perfect matching
    Kak2,
    Complete,
    Cycle,
    Path,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact tree-depth with an optimal ranking.
    Td {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Check a ranking (`k: l0 l1 ...` or bare labels) against a graph.
    Verify { graph: PathBuf, ranking: PathBuf },
    /// Print a member of a graph family.
    Gen { family: Family, size: usize },
    /// Check whether every one-step minor has smaller tree-depth.
    Critical {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Decide for each vertex whether it can be the only vertex labelled 1
    /// in an optimal ranking.
    Unique1 {
        #[arg(default_value = "-")]
        input: PathBuf,
        /// Report a single vertex.
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// Full check of the H_n family for n = 4..=N.
    Reproduce {
        #[arg(value_parser = clap::value_parser!(u64).range(4..=8))]
        n_max: u64,
    },
    /// Quick cross-validation of the solver and the 1-uniqueness test on
    /// graphs with at most 5 vertices.
    Selftest,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError { code, message }) => {
            eprintln!("tdlab: {message}");
            ExitCode::from(code)
        }
    }
}
