use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "ccdeg", version, about = "Coupled-cluster degrees of Grassmannians")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct Global {
    /// Human-readable table instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Directory for cached Gröbner bases; CCDEG_CACHE takes precedence.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Wall-clock limit for the job, checked inside Gröbner computations.
    #[arg(long, global = true)]
    pub max_seconds: Option<f64>,
    /// Stop a Gröbner computation once the basis has this many elements.
    #[arg(long, global = true)]
    pub max_basis: Option<usize>,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Log progress to stderr (-v info, -vv debug).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    #[serde(skip)]
    pub verbose: u8,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// CC degree by one or more methods, cross-checked.
    Degree(DegreeArgs),
    /// Check a generator family, a basis file or a toric degeneration.
    Verify(VerifyArgs),
    /// Volume, Ehrhart polynomial, f-vector and lattice points of CGT / CFFLV.
    Polytope(PolytopeArgs),
    /// Young, P_{2,n} and PBW posets with their maximal chains.
    Posets(PosetArgs),
    /// Count solutions of the CC equations for random Hamiltonians.
    SolveCount(SolveArgs),
    /// Write bases, families, Hamiltonians, polytopes or complexes as text.
    Export(ExportArgs),
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodArg {
    Chains,
    Groebner,
    Toric,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RouteArg {
    Elimination,
    Lattice,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChartArg {
    Intro,
    Permuted2n,
}

#[derive(Args, Debug, Serialize)]
pub struct DegreeArgs {
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "chains,groebner")]
    pub method: Vec<MethodArg>,
    /// How the toric ideal is computed.
    #[arg(long, value_enum, default_value = "elimination")]
    pub route: RouteArg,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyArg {
    Lemma31,
    Prop35,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    /// Quadric (lemma31) or binomial (prop35) family for d = 2.
    #[arg(long, value_enum, conflicts_with_all = ["khovanskii", "file"])]
    pub family: Option<FamilyArg>,
    /// Lift the toric basis to the graph ideal and compare initial ideals.
    #[arg(long, conflicts_with = "file")]
    pub khovanskii: bool,
    /// Ideal or basis file to test with the S-pair criterion.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Order for files without an `order:` header, e.g. "grevlex x,y,z".
    #[arg(long, requires = "file")]
    pub order: Option<String>,
    /// Also compare a family with the graph ideal computed by elimination.
    #[arg(long)]
    pub reference: bool,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PolytopeFamily {
    Cgt,
    Cfflv,
}

#[derive(Args, Debug, Serialize)]
pub struct PolytopeArgs {
    #[arg(long, value_enum)]
    pub family: PolytopeFamily,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub vertices: bool,
    #[arg(long)]
    pub volume: bool,
    #[arg(long)]
    pub ehrhart: bool,
    #[arg(long)]
    pub fvector: bool,
    /// Count lattice points of the dilate by `--t`.
    #[arg(long)]
    pub points: bool,
    #[arg(long, default_value_t = 1)]
    pub t: u32,
    /// Largest bounding box examined by the lattice point count.
    #[arg(long, default_value_t = 100_000_000)]
    pub max_box: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PosetKind {
    Young,
    P2n,
    Pbw,
}

#[derive(Args, Debug, Serialize)]
pub struct PosetArgs {
    #[arg(long, value_enum, default_value = "p2n")]
    pub kind: PosetKind,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
    /// Include the Hasse diagram in DOT format.
    #[arg(long)]
    pub dot: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct SolveArgs {
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
    /// Number of random Hamiltonians, seeded seed, seed+1, ...
    #[arg(long, default_value_t = 1)]
    pub trials: u64,
    /// Hamiltonian file (one row per line) instead of random ones.
    #[arg(long, conflicts_with = "trials")]
    pub hamiltonian: Option<PathBuf>,
    /// Solve the full system on the graph instead of chart plus boundary.
    #[arg(long)]
    pub direct: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportWhat {
    Graph,
    Toric,
    Lemma31,
    Prop35,
    Hamiltonian,
    Cgt,
    Cfflv,
    Complex,
    Poset,
}

#[derive(Args, Debug, Serialize)]
pub struct ExportArgs {
    #[arg(value_enum)]
    pub what: ExportWhat,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
    /// Chart for graph bases (default: permuted2n for d = 2, intro otherwise).
    #[arg(long, value_enum)]
    pub chart: Option<ChartArg>,
    /// Write here and print a JSON summary instead of the text itself.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
