//! `expander-extract`: command-line front end for the extraction library.
//!
//! Exit status: 0 on success, 1 on unreadable or malformed input, 2 when an
//! input violates a precondition, 3 when a requested verification fails.
//! A JSON report is written for every outcome except status 1.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "expander-extract", version, about = "Extract large induced expander subgraphs with exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact Cheeger constant of a graph, with an attaining vertex set.
    Cheeger {
        #[arg(long)]
        graph: PathBuf,
        /// Also report whether the graph is a KAPPA-expander.
        #[arg(long)]
        kappa: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Trim a subgraph of a KAPPA-expander down to a KAPPA/3-expander.
    Trim {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        subgraph: PathBuf,
        #[arg(long)]
        kappa: String,
        /// Defaults to 1 - e(subgraph)/e(graph).
        #[arg(long)]
        epsilon: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Delete long blue paths from a vertex-coloured graph and keep the best component.
    Prune {
        /// Coloured edge list with `!blue-vertex` directives.
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        kappa: String,
        #[arg(long)]
        epsilon: String,
        #[arg(long)]
        alpha: String,
        /// Path threshold; must be at least the derived value.
        #[arg(long)]
        big_m: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Extract an induced core from an edge-coloured graph.
    Induce {
        /// Coloured edge list with `!blue-edge` directives.
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        kappa: String,
        #[arg(long)]
        epsilon: String,
        #[arg(long)]
        alpha: String,
        /// Heavy-vertex factor; must be at least the derived value.
        #[arg(long)]
        big_m: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Run the composed reductions from an expander topological minor (or subgraph).
    Pipeline {
        #[arg(long)]
        graph: PathBuf,
        /// The expander H, in its own vertex ids when a witness is given.
        #[arg(long)]
        subgraph: PathBuf,
        /// Topological-minor witness (JSON). Without it H must be a subgraph of G.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        kappa: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        alpha_prime: String,
        #[arg(long, value_enum, default_value_t = Stage::Full)]
        stage: Stage,
        /// Print the planned parameters without running.
        #[arg(long)]
        dry_run: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Re-check a pipeline report against its input graphs with the brute-force oracle.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        subgraph: PathBuf,
        /// Report written by `pipeline`.
        #[arg(long)]
        report: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Generate a seeded instance and its exact Cheeger constant.
    Generate {
        /// Instance spec (JSON), e.g. {"kind":"random-regular","vertices":8,"degree":3,"seed":1}.
        #[arg(long)]
        spec: PathBuf,
        /// Overrides the seed in the spec.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Stage {
    /// Topological minor to induced subgraph (both stages).
    Full,
    MinorToSubgraph,
    SubgraphToInduced,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Report path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Check preconditions and postconditions with the brute-force oracle.
    #[arg(long)]
    verify: bool,
    /// Vertex cap of the brute-force oracle.
    #[arg(long, env = "EXPANDER_EXTRACT_CAP", default_value_t = expander_extract::oracle::DEFAULT_CAP)]
    cap: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(commands::EXIT_PARSE);
        }
    };
    commands::run(cli.command)
}
