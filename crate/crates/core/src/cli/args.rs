use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use interlace::orbits::DEFAULT_ORBIT_BUDGET;

#[derive(Parser, Debug)]
#[command(name = "interlace", version, about = "Interlace polynomials, LC/ELC orbits, circle graphs and code metrics")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write results here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,

    /// Maximum number of members enumerated per orbit.
    #[arg(long = "budget-orbit", global = true, default_value_t = DEFAULT_ORBIT_BUDGET, value_parser = positive)]
    pub budget_orbit: usize,

    #[command(subcommand)]
    pub command: Command,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyChoice {
    #[value(name = "q")]
    Lower,
    #[value(name = "Q")]
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrbitChoice {
    Lc,
    Elc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyChoice {
    All,
    Bipartite,
    Circle,
}

#[derive(Args, Debug)]
pub struct Inputs {
    /// graph6 files; standard input when none are given or for `-`.
    pub inputs: Vec<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Interlace polynomial of each input graph.
    Poly {
        #[arg(long, value_enum, default_value_t = PolyChoice::Lower)]
        kind: PolyChoice,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Evaluate the interlace polynomial of each input at an integer.
    ///
    /// Input lines may be graph6 or the text output of `poly`.
    Eval {
        #[arg(allow_negative_numbers = true)]
        x: i64,
        /// Polynomial to evaluate; defaults to the one named on `poly` output lines, else q.
        #[arg(long, value_enum)]
        kind: Option<PolyChoice>,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Enumerate the LC or ELC orbit of each input graph.
    Orbit {
        #[arg(long, value_enum, default_value_t = OrbitChoice::Lc)]
        kind: OrbitChoice,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Code parameters of the LC orbit of each connected input graph.
    Metrics {
        /// Report delta as unknown instead of failing when the orbit is over budget.
        #[arg(long)]
        allow_unknown_delta: bool,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Pass through the circle graphs among the inputs.
    Circle {
        /// Pass through the non-circle graphs instead.
        #[arg(long)]
        invert: bool,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Census tables over connected graphs.
    Census {
        /// 1: orbit counts, 2: polynomial counts, 3: circle graphs, 4: deg Q ranges,
        /// 5: Q(G,4)/2^n ranges, 7: bipartite delta grid, 8: delta grid.
        #[arg(long, value_parser = ["1", "2", "3", "4", "5", "7", "8"])]
        table: String,
        /// Largest order.
        #[arg(long = "n-max", alias = "n")]
        n_max: usize,
        /// Smallest order shown (default 1, or 2 for the delta grids).
        #[arg(long = "n-min")]
        n_min: Option<usize>,
        /// Family for the delta grid; overrides the one implied by --table 7 or 8.
        #[arg(long, value_enum)]
        family: Option<FamilyChoice>,
        /// Directory for resumable per-order results.
        #[arg(long)]
        store: Option<PathBuf>,
        /// Connected graphs of one order from a graph6 file, as ORDER=PATH.
        #[arg(long = "input", value_parser = order_path)]
        order_inputs: Vec<(usize, PathBuf)>,
        /// Accepted for symmetry with other subcommands; census tables always use connected graphs.
        #[arg(long)]
        connected_only: bool,
    },
    /// Scan all graphs of one order for non-unimodal q, Q and x q(x+1).
    Unimodal {
        #[arg(long)]
        n: usize,
    },
    /// Euler transform of a sequence of connected counts.
    Euler {
        /// Terms c_1, c_2, ... separated by commas or spaces.
        #[arg(required = true, num_args = 1..)]
        terms: Vec<String>,
    },
    /// Build a graph and print it in graph6.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Bounds on code parameters.
    Bound {
        #[command(subcommand)]
        what: Bound,
    },
}

fn order_path(s: &str) -> Result<(usize, PathBuf), String> {
    let (n, p) = s.split_once('=').ok_or("expected ORDER=PATH")?;
    Ok((n.parse().map_err(|e| format!("{e}"))?, PathBuf::from(p)))
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// Paley graph on Z_p.
    Paley { p: usize },
    /// Paley graph plus a universal vertex.
    BorderedPaley { p: usize },
    /// Circulant graph from its first row, e.g. (00001011101000).
    Circulant { row: String },
    /// Graph from a 0/1 adjacency matrix file (standard input when omitted).
    Matrix { path: Option<PathBuf> },
}

#[derive(Subcommand, Debug)]
pub enum Bound {
    /// gamma(d) for length n.
    Gamma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Upper bound on Q(G,4) for length n and minimum degree delta.
    Q4 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
    },
    /// Upper bound on delta for length n and code type.
    Delta {
        #[arg(long)]
        n: usize,
        #[arg(long = "type", value_parser = ["I", "II"])]
        ty: String,
    },
}
