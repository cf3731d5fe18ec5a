use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{GraphError, GraphResult};
use crate::graph::{canonical_form, complete, theta, EdgeRef, Graph};

/// Largest vertex count accepted by [`connected_graphs`]; the enumeration
/// walks all `2^(n(n-1)/2)` edge sets.
pub const CONNECTED_ENUMERATION_CAP: usize = 7;
/// Largest vertex count accepted by [`trees`].
pub const TREE_ENUMERATION_CAP: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub id: String,
    pub graph: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub name: String,
    pub seed: u64,
    pub members: Vec<FamilyMember>,
}

/// Fixed genus-2 graphs whose subdivisions form scan families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SubdivisionBase {
    /// Two vertices joined by three parallel edges.
    Theta,
    /// `K_4` with one edge removed.
    K4MinusEdge,
}

impl SubdivisionBase {
    pub fn graph(self) -> Graph {
        match self {
            SubdivisionBase::Theta => theta(2),
            SubdivisionBase::K4MinusEdge => {
                let k4 = complete(4).expect("K4");
                k4.delete_edge(EdgeRef::new(2, 3)).expect("K4 stays connected")
            }
        }
    }

    fn name(self) -> &'static str {
        match self {
            SubdivisionBase::Theta => "theta",
            SubdivisionBase::K4MinusEdge => "k4-e",
        }
    }
}

/// A graph family, as written on the command line:
/// `connected:N`, `trees:N`, `subdiv:theta:A..B`, `subdiv:k4-e:A..B`,
/// `random:COUNT:N:P` (edge probability `P` in percent).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// All connected simple graphs on `1..=max_n` vertices up to isomorphism.
    Connected { max_n: usize },
    /// All trees on `1..=max_n` vertices up to isomorphism.
    Trees { max_n: usize },
    /// Every edge of the base subdivided with the same count, one member per
    /// count.
    Subdivisions {
        base: SubdivisionBase,
        depths: RangeInclusive<usize>,
    },
    /// Connected `G(n, p)` samples.
    Random { count: usize, n: usize, percent: u32 },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Connected { max_n } => write!(f, "connected:{max_n}"),
            FamilySpec::Trees { max_n } => write!(f, "trees:{max_n}"),
            FamilySpec::Subdivisions { base, depths } => {
                write!(f, "subdiv:{}:{}..{}", base.name(), depths.start(), depths.end())
            }
            FamilySpec::Random { count, n, percent } => write!(f, "random:{count}:{n}:{percent}"),
        }
    }
}

fn parse_range(s: &str) -> Option<RangeInclusive<usize>> {
    match s.split_once("..") {
        Some((a, b)) => Some(a.parse().ok()?..=b.parse().ok()?),
        None => {
            let x = s.parse().ok()?;
            Some(x..=x)
        }
    }
}

impl FromStr for FamilySpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || format!("bad family `{s}`");
        let num = |x: &str| x.parse::<usize>().map_err(|_| bad());
        match parts.as_slice() {
            ["connected", n] => Ok(FamilySpec::Connected { max_n: num(n)? }),
            ["trees", n] => Ok(FamilySpec::Trees { max_n: num(n)? }),
            ["subdiv", base, depths] => {
                let base = match *base {
                    "theta" => SubdivisionBase::Theta,
                    "k4-e" => SubdivisionBase::K4MinusEdge,
                    _ => return Err(bad()),
                };
                Ok(FamilySpec::Subdivisions {
                    base,
                    depths: parse_range(depths).ok_or_else(bad)?,
                })
            }
            ["random", count, n, p] => Ok(FamilySpec::Random {
                count: num(count)?,
                n: num(n)?,
                percent: p.parse().map_err(|_| bad())?,
            }),
            _ => Err(bad()),
        }
    }
}

impl FamilySpec {
    pub fn build(&self, seed: u64) -> GraphResult<Family> {
        let members = match self {
            FamilySpec::Connected { max_n } => {
                let mut out = Vec::new();
                for n in 1..=*max_n {
                    for (i, g) in connected_graphs(n)?.into_iter().enumerate() {
                        out.push(FamilyMember {
                            id: format!("c{n}-{i}"),
                            graph: g,
                        });
                    }
                }
                out
            }
            FamilySpec::Trees { max_n } => {
                let mut out = Vec::new();
                for n in 1..=*max_n {
                    for (i, g) in trees(n)?.into_iter().enumerate() {
                        out.push(FamilyMember {
                            id: format!("t{n}-{i}"),
                            graph: g,
                        });
                    }
                }
                out
            }
            FamilySpec::Subdivisions { base, depths } => depths
                .clone()
                .map(|d| {
                    Ok(FamilyMember {
                        id: format!("{}-d{d}", base.name()),
                        graph: uniform_subdivision(&base.graph(), d)?,
                    })
                })
                .collect::<GraphResult<_>>()?,
            FamilySpec::Random { count, n, percent } => random_connected(seed, *count, *n, *percent)?
                .into_iter()
                .enumerate()
                .map(|(i, g)| FamilyMember {
                    id: format!("r{i}"),
                    graph: g,
                })
                .collect(),
        };
        Ok(Family {
            name: self.to_string(),
            seed,
            members,
        })
    }
}

/// Every non-loop edge replaced by a path with `depth` interior vertices.
pub fn uniform_subdivision(g: &Graph, depth: usize) -> GraphResult<Graph> {
    let mut refs = Vec::new();
    let mut seen: Vec<(usize, usize)> = Vec::new();
    for &(u, v) in g.edges() {
        if u == v {
            continue;
        }
        let occurrence = seen.iter().filter(|&&e| e == (u, v)).count();
        seen.push((u, v));
        refs.push(EdgeRef::nth(u, v, occurrence));
    }
    let counts = vec![depth; refs.len()];
    g.subdivide(&refs, &counts)
}

/// Connected simple graphs on `n` vertices, one per isomorphism class,
/// ordered by canonical form.
pub fn connected_graphs(n: usize) -> GraphResult<Vec<Graph>> {
    if n == 0 || n > CONNECTED_ENUMERATION_CAP {
        return Err(GraphError::TooLarge {
            what: "connected graph enumeration",
            size: n,
            cap: CONNECTED_ENUMERATION_CAP,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        if (mask.count_ones() as usize) + 1 < n {
            continue;
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let Ok(g) = Graph::new(n, edges) else { continue };
        let key = canonical_form(&g);
        if seen.insert(key.clone()) {
            out.push((key, g));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

/// Trees on `n` vertices up to isomorphism, from Prüfer sequences.
pub fn trees(n: usize) -> GraphResult<Vec<Graph>> {
    if n == 0 || n > TREE_ENUMERATION_CAP {
        return Err(GraphError::TooLarge {
            what: "tree enumeration",
            size: n,
            cap: TREE_ENUMERATION_CAP,
        });
    }
    if n <= 2 {
        return Ok(vec![Graph::new(n, (1..n).map(|v| (0, v)))?]);
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let g = Graph::new(n, prufer_edges(&seq, n))?;
        let key = canonical_form(&g);
        if !seen.contains(&key) {
            seen.insert(key.clone());
            out.push((key, g));
        }
        // Next sequence in base n.
        let mut i = seq.len();
        loop {
            if i == 0 {
                out.sort_by(|a, b| a.0.cmp(&b.0));
                return Ok(out.into_iter().map(|(_, g)| g).collect());
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
}

fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, x));
        degree[leaf] = 0;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// `count` connected samples of `G(n, percent/100)`, rejecting disconnected
/// draws.
pub fn random_connected(seed: u64, count: usize, n: usize, percent: u32) -> GraphResult<Vec<Graph>> {
    if n == 0 || percent == 0 || percent > 100 {
        return Err(GraphError::BadParameter(format!(
            "random graphs need n >= 1 and 0 < p <= 100, got n = {n}, p = {percent}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_range(0..100) < percent)
            .collect();
        if let Ok(g) = Graph::new(n, edges) {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_up_to_isomorphism() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
        let trees: Vec<usize> = (1..=7).map(|n| trees(n).unwrap().len()).collect();
        assert_eq!(trees, vec![1, 1, 1, 2, 3, 6, 11]);
    }

    #[test]
    fn specs_round_trip() {
        for s in [
            "connected:5",
            "trees:7",
            "subdiv:theta:1..3",
            "subdiv:k4-e:1..2",
            "random:4:6:50",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("subdiv:cube:1..2".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn subdivision_families_keep_genus() {
        for base in [SubdivisionBase::Theta, SubdivisionBase::K4MinusEdge] {
            let fam = FamilySpec::Subdivisions { base, depths: 1..=3 }.build(0).unwrap();
            assert_eq!(fam.members.len(), 3);
            for m in &fam.members {
                assert_eq!(m.graph.genus(), 2);
            }
        }
        let theta = uniform_subdivision(&theta(2), 2).unwrap();
        assert_eq!((theta.vertex_count(), theta.edge_count()), (8, 9));
    }

    #[test]
    fn random_is_seeded() {
        let a = random_connected(7, 5, 6, 40).unwrap();
        let b = random_connected(7, 5, 6, 40).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_connected(8, 5, 6, 40).unwrap());
    }
}
