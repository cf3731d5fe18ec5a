//! Graph files and graph source expressions.
//!
//! Text format: a header line `n m`, then `m` lines `u v` (a loop is `u u`).
//! JSON format: `{"n": 4, "edges": [[0, 1], ...]}`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{complete, cycle, dumbbell, path, rose, theta, Graph};

pub fn write_graph_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let [n, m] = numbers::<2>(header)?;
    let edges = lines
        .map(|l| numbers::<2>(l).map(|[u, v]| (u, v)))
        .collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header promises {m} edges, found {}",
            edges.len()
        )));
    }
    Ok(Graph::new(n, edges)?)
}

fn numbers<const N: usize>(line: &str) -> Result<[usize; N]> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != N {
        return Err(Error::Parse(format!("expected {N} numbers in `{line}`")));
    }
    let mut out = [0; N];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p
            .parse()
            .map_err(|_| Error::Parse(format!("`{p}` is not a vertex count or label")))?;
    }
    Ok(out)
}

pub fn write_graph_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graphs serialize")
}

pub fn parse_graph_json(text: &str) -> Result<Graph> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Reads a graph file, choosing the format by the `.json` extension or a
/// leading `{`.
pub fn read_graph_file(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let is_json = path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{');
    if is_json {
        parse_graph_json(&text)
    } else {
        parse_graph_text(&text)
    }
}

/// Where a graph comes from: `file:PATH`, `cycle:M`, `path:N`,
/// `complete:N`, `rose:G`, `theta:G` or `dumbbell:M1,M2,M3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    File(PathBuf),
    Cycle(usize),
    Path(usize),
    Complete(usize),
    Rose(usize),
    Theta(usize),
    Dumbbell(usize, usize, usize),
}

impl GraphSource {
    pub fn load(&self) -> Result<Graph> {
        Ok(match self {
            GraphSource::File(p) => return read_graph_file(p),
            GraphSource::Cycle(m) => cycle(*m)?,
            GraphSource::Path(n) => path(*n)?,
            GraphSource::Complete(n) => complete(*n)?,
            GraphSource::Rose(g) => rose(*g),
            GraphSource::Theta(g) => theta(*g),
            GraphSource::Dumbbell(a, b, c) => dumbbell(*a, *b, *c),
        })
    }
}

impl std::fmt::Display for GraphSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GraphSource::File(p) => write!(f, "file:{}", p.display()),
            GraphSource::Cycle(m) => write!(f, "cycle:{m}"),
            GraphSource::Path(n) => write!(f, "path:{n}"),
            GraphSource::Complete(n) => write!(f, "complete:{n}"),
            GraphSource::Rose(g) => write!(f, "rose:{g}"),
            GraphSource::Theta(g) => write!(f, "theta:{g}"),
            GraphSource::Dumbbell(a, b, c) => write!(f, "dumbbell:{a},{b},{c}"),
        }
    }
}

impl FromStr for GraphSource {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| format!("graph source `{s}` needs the form kind:arg"))?;
        let num = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{x}` is not a count in `{s}`"))
        };
        Ok(match kind {
            "file" => GraphSource::File(PathBuf::from(arg)),
            "cycle" => GraphSource::Cycle(num(arg)?),
            "path" => GraphSource::Path(num(arg)?),
            "complete" => GraphSource::Complete(num(arg)?),
            "rose" => GraphSource::Rose(num(arg)?),
            "theta" => GraphSource::Theta(num(arg)?),
            "dumbbell" => {
                let parts: Vec<&str> = arg.split(',').collect();
                let [a, b, c] = parts.as_slice() else {
                    return Err(format!("dumbbell needs three counts, got `{arg}`"));
                };
                GraphSource::Dumbbell(num(a)?, num(b)?, num(c)?)
            }
            _ => return Err(format!("unknown graph source `{kind}`")),
        })
    }
}
