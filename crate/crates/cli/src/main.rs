use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

mod commands;
mod report;

use report::{Failure, RunReport};

/// Vertex separations, profiles and k-pseudoflowers of finite graphs.
///
/// Every command prints a JSON run report on stdout. Exit codes: 0 ok,
/// 1 I/O error, 2 invalid input flower or failed precondition, 3 size guard
/// exceeded, 64 usage or parse error.
#[derive(Parser, Debug)]
#[command(name = "pseudoflower", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate all separations of order at most K.
    Separations {
        /// Graph in edge-list format.
        #[arg(long)]
        graph: PathBuf,
        /// Largest separator size to include.
        #[arg(long)]
        max_order: usize,
        /// Write the separation list here instead of into the report.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate the profiles (or tangles) of the system of separations of order below K.
    Profiles {
        #[arg(long)]
        graph: PathBuf,
        /// Order bound K of the separation system.
        #[arg(long)]
        order: usize,
        /// Keep only tangles.
        #[arg(long)]
        tangles_only: bool,
        /// Refuse systems with more separation pairs than this.
        #[arg(long, default_value_t = pseudoflower::profiles::DEFAULT_MAX_PAIRS)]
        max_pairs: usize,
        /// Write the profiles file here instead of into the report.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every clause of the pseudoflower definition.
    Validate(FlowerArgs),
    /// Find, for each profile, a cutpoint locating it.
    Locate {
        #[command(flatten)]
        input: FlowerArgs,
        /// Profiles file of order k+1 for a flower of order k.
        #[arg(long)]
        profiles: PathBuf,
    },
    /// Subdivide petals until no order-k separation can be added.
    Maximalize {
        #[command(flatten)]
        input: FlowerArgs,
        #[arg(long)]
        profiles: PathBuf,
        /// Write the resulting flower here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate graphs and flowers.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Render a flower on its graph as Graphviz DOT.
    Render {
        #[command(flatten)]
        input: FlowerArgs,
        /// Output DOT file.
        #[arg(long)]
        dot: PathBuf,
    },
}

#[derive(Args, Debug)]
pub struct FlowerArgs {
    /// Graph in edge-list format.
    #[arg(long)]
    pub graph: PathBuf,
    /// Flower JSON file.
    #[arg(long)]
    pub flower: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    /// A daisy: d copies of a base graph glued cyclically along arcs, plus a set X.
    Daisy {
        /// Number of arcs (standard base).
        #[arg(long, required_unless_present = "base")]
        n: Option<usize>,
        /// Size of X (standard base).
        #[arg(long, required_unless_present = "base")]
        a: Option<usize>,
        /// Number of copies, at least 3.
        #[arg(long, default_value_t = 3)]
        d: usize,
        /// Custom base graph; needs --arcs.
        #[arg(long, requires = "arcs", conflicts_with_all = ["n", "a"])]
        base: Option<PathBuf>,
        /// Arc list JSON for a custom base.
        #[arg(long)]
        arcs: Option<PathBuf>,
        /// Write the graph here.
        #[arg(long)]
        graph_out: Option<PathBuf>,
        /// Write the flower here.
        #[arg(long)]
        flower_out: Option<PathBuf>,
    },
    /// A pseudoanemone from a set X and a grouping of the components of G - X.
    Anemone {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated vertices of X.
        #[arg(long, value_delimiter = ',')]
        x: Vec<usize>,
        /// Groups as comma-separated vertex lists joined by ';', e.g. "0,1,2;3,4,5".
        #[arg(long)]
        groups: String,
        /// Write the flower here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// An m by n grid graph.
    Grid {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The complete graph on n vertices.
    Clique {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => {
                    RunReport::failed("usage", &Failure::Usage(e.kind().to_string())).print();
                    ExitCode::from(64)
                }
            };
        }
    };
    let name = commands::name(&cli.command);
    let (report, code) = match commands::run(cli.command) {
        Ok(report) => {
            let code = report.exit_code();
            (report, code)
        }
        Err(f) => (RunReport::failed(name, &f), f.exit_code()),
    };
    report.print();
    ExitCode::from(code)
}
