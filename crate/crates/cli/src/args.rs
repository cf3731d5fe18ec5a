use std::fmt::Display;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use magnikit::experiments::FamilySpec;
use magnikit::io::GraphSource;
use magnikit::linalg::Coefficients;
use serde::{Serialize, Serializer};

#[derive(Parser, Debug)]
#[command(
    name = "magnikit",
    version,
    about = "Magnitude and path homology of finite graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for randomized families.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(untagged)]
pub enum Command {
    /// Magnitude homology table.
    Mh(HomologyArgs),
    /// Magnitude cohomology table.
    Mhco(HomologyArgs),
    /// Magnitude power series coefficients.
    Series(SeriesArgs),
    /// Euler characteristic of magnitude homology against the series.
    Euler(EulerArgs),
    /// Reduced path homology.
    Pathhom(PathArgs),
    /// Path homology from magnitude homology versus the direct computation.
    ComparePh(CompareArgs),
    /// Growth of magnitude homology along cycles.
    Cycles(CycleArgs),
    /// Growth of magnitude cohomology under edge subdivision.
    SubdivideScan(SubdivideArgs),
    /// Integral torsion over a graph family.
    TorsionScan(TorsionArgs),
    /// A vertex indicator in terms of spanning-tree edge functions.
    DecomposeVertex(DecomposeArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Mh(_) => "mh",
            Command::Mhco(_) => "mhco",
            Command::Series(_) => "series",
            Command::Euler(_) => "euler",
            Command::Pathhom(_) => "pathhom",
            Command::ComparePh(_) => "compare-ph",
            Command::Cycles(_) => "cycles",
            Command::SubdivideScan(_) => "subdivide-scan",
            Command::TorsionScan(_) => "torsion-scan",
            Command::DecomposeVertex(_) => "decompose-vertex",
        }
    }
}

/// Inclusive range written `a..b`, or a single value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span(pub RangeInclusive<usize>);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{s}` is not a range a..b"))
        };
        let (a, b) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => (num(s)?, num(s)?),
        };
        if a > b {
            return Err(format!("empty range `{s}`"));
        }
        Ok(Span(a..=b))
    }
}

impl std::fmt::Display for Span {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}..{}", self.0.start(), self.0.end())
    }
}

fn display<T: Display, S: Serializer>(x: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

fn display_opt<T: Display, S: Serializer>(x: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => s.collect_str(x),
        None => s.serialize_none(),
    }
}

#[derive(Args, Debug, Serialize)]
pub struct HomologyArgs {
    /// Graph source: file:PATH, cycle:M, path:N, complete:N, rose:G, theta:G, dumbbell:A,B,C.
    #[arg(long)]
    #[serde(serialize_with = "display")]
    pub graph: GraphSource,
    #[arg(long, default_value = "0..3")]
    #[serde(serialize_with = "display")]
    pub k: Span,
    #[arg(long, default_value = "0..5")]
    #[serde(serialize_with = "display")]
    pub l: Span,
    /// Z, Q or F<p>.
    #[arg(long, default_value = "Z")]
    #[serde(serialize_with = "display")]
    pub coeff: Coefficients,
    /// Largest chain group computed, in basis elements.
    #[arg(long, default_value_t = 2_000_000)]
    pub max_chain: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct SeriesArgs {
    #[arg(long)]
    #[serde(serialize_with = "display")]
    pub graph: GraphSource,
    #[arg(long, default_value_t = 8)]
    pub max_degree: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct EulerArgs {
    #[arg(long)]
    #[serde(serialize_with = "display")]
    pub graph: GraphSource,
    #[arg(long, default_value = "0..6")]
    #[serde(serialize_with = "display")]
    pub l: Span,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Direct,
    ViaMh,
}

#[derive(Args, Debug, Serialize)]
pub struct PathArgs {
    #[arg(long)]
    #[serde(serialize_with = "display")]
    pub graph: GraphSource,
    #[arg(long, default_value = "0..2")]
    #[serde(serialize_with = "display")]
    pub k: Span,
    #[arg(long, default_value = "Q")]
    #[serde(serialize_with = "display")]
    pub coeff: Coefficients,
    #[arg(long, value_enum, default_value_t = Method::Direct)]
    pub method: Method,
    /// Largest path degree computed directly.
    #[arg(long, default_value_t = magnikit::path::DEFAULT_PATH_DEGREE_CAP)]
    pub degree_cap: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct CompareArgs {
    #[arg(long)]
    #[serde(serialize_with = "display")]
    pub graph: GraphSource,
    #[arg(long, default_value = "0..2")]
    #[serde(serialize_with = "display")]
    pub k: Span,
    #[arg(long, default_value = "Q")]
    #[serde(serialize_with = "display")]
    pub coeff: Coefficients,
    /// Degree shift; calibrated on K2 and C5 when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub shift: Option<isize>,
}

#[derive(Args, Debug, Serialize)]
pub struct CycleArgs {
    #[arg(long, default_value_t = 2)]
    pub k_max: usize,
    #[arg(long, default_value_t = 4)]
    pub l_max: usize,
    /// First fitted length is `l_multiplier * l + offset`.
    #[arg(long, default_value_t = 3)]
    pub offset: usize,
    #[arg(long, default_value_t = 1)]
    pub l_multiplier: usize,
    /// Lengths per bidegree: two fitted, the rest validated.
    #[arg(long, default_value_t = 5)]
    pub points: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct SubdivideArgs {
    #[arg(long)]
    #[serde(serialize_with = "display")]
    pub graph: GraphSource,
    /// Edges to subdivide, `u-v` or `u-v#copy`, comma separated.
    #[arg(long)]
    pub edges: String,
    #[arg(long, default_value = "0..2")]
    #[serde(serialize_with = "display")]
    pub k: Span,
    /// One range per edge, comma separated, or a single range for all.
    #[arg(long, default_value = "3..8")]
    pub grid: String,
    /// Cap on `l` in the summed dimension; 2k+4 when omitted.
    #[arg(long)]
    pub l_cap: Option<usize>,
}

#[derive(Args, Debug, Serialize)]
pub struct TorsionArgs {
    /// connected:N, trees:N, subdiv:theta:A..B, subdiv:k4-e:A..B or random:COUNT:N:P.
    #[arg(long)]
    #[serde(serialize_with = "display")]
    pub family: FamilySpec,
    #[arg(long, default_value_t = 3)]
    pub k_max: usize,
    #[arg(long, default_value_t = 6)]
    pub l_max: usize,
    #[arg(long, default_value_t = magnikit::experiments::DEFAULT_SCAN_VERTEX_CAP)]
    pub vertex_cap: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct DecomposeArgs {
    #[arg(long)]
    #[serde(serialize_with = "display")]
    pub graph: GraphSource,
    #[arg(long)]
    pub vertex: usize,
    #[arg(long, default_value_t = 0)]
    pub root: usize,
    /// Spanning tree edges `u-v`, comma separated; the first spanning tree
    /// found when omitted.
    #[arg(long)]
    #[serde(serialize_with = "display_opt")]
    pub tree: Option<String>,
}

/// `u-v` or `u-v#copy`.
pub fn parse_edge(s: &str) -> Result<(usize, usize, usize), String> {
    let bad = || format!("`{s}` is not an edge u-v or u-v#copy");
    let (pair, copy) = match s.split_once('#') {
        Some((p, c)) => (p, c.trim().parse().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (u, v) = pair.split_once('-').ok_or_else(bad)?;
    Ok((
        u.trim().parse().map_err(|_| bad())?,
        v.trim().parse().map_err(|_| bad())?,
        copy,
    ))
}

pub fn parse_edges(s: &str) -> Result<Vec<(usize, usize, usize)>, String> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(parse_edge)
        .collect()
}
