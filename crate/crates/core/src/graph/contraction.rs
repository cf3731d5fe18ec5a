use super::{isomorphisms, EdgeRef, Graph, UnionFind};
use crate::error::{GraphError, GraphResult};

/// Largest source graph `enumerate_contractions_onto` accepts by default.
pub const DEFAULT_ENUMERATION_CAP: usize = 10;

/// A vertex map `source -> target` obtained by contracting a set of
/// non-loop edges of `source` whose components are trees, followed by a
/// relabelling of the quotient.
///
/// `edge_map[i]` is the target edge that source edge `i` becomes, or `None`
/// when the edge is contracted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionMorphism {
    source: Graph,
    target: Graph,
    vertex_map: Vec<usize>,
    edge_map: Vec<Option<usize>>,
}

impl ContractionMorphism {
    pub fn new(
        source: Graph,
        target: Graph,
        vertex_map: Vec<usize>,
        edge_map: Vec<Option<usize>>,
    ) -> GraphResult<Self> {
        let phi = ContractionMorphism {
            source,
            target,
            vertex_map,
            edge_map,
        };
        phi.validate()?;
        Ok(phi)
    }

    pub fn identity(g: &Graph) -> Self {
        ContractionMorphism {
            source: g.clone(),
            target: g.clone(),
            vertex_map: (0..g.vertex_count()).collect(),
            edge_map: (0..g.edge_count()).map(Some).collect(),
        }
    }

    /// The contraction of a single edge, with the relabelling of
    /// [`Graph::contract`].
    pub fn contracting(g: &Graph, e: EdgeRef) -> GraphResult<Self> {
        let index = g.edge_index(e)?;
        let target = g.contract_index(index)?;
        let (u, v) = g.edges()[index];
        let vertex_map = super::contraction_vertex_map(g.vertex_count(), u, v);
        let edge_map = (0..g.edge_count())
            .map(|i| match i.cmp(&index) {
                std::cmp::Ordering::Less => Some(i),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(i - 1),
            })
            .collect();
        Ok(ContractionMorphism {
            source: g.clone(),
            target,
            vertex_map,
            edge_map,
        })
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn edge_map(&self) -> &[Option<usize>] {
        &self.edge_map
    }

    /// Indices of the contracted source edges.
    pub fn contracted(&self) -> Vec<usize> {
        self.edge_map
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.is_none().then_some(i))
            .collect()
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &ContractionMorphism) -> GraphResult<ContractionMorphism> {
        if self.target != next.source {
            return Err(GraphError::InvalidMorphism(
                "target of the first map is not the source of the second".into(),
            ));
        }
        ContractionMorphism::new(
            self.source.clone(),
            next.target.clone(),
            self.vertex_map.iter().map(|&v| next.vertex_map[v]).collect(),
            self.edge_map
                .iter()
                .map(|e| e.and_then(|i| next.edge_map[i]))
                .collect(),
        )
    }

    /// Checks tree fibres, surjectivity and the edge correspondence.
    pub fn validate(&self) -> GraphResult<()> {
        let bad = |msg: String| Err(GraphError::InvalidMorphism(msg));
        let (ns, nt) = (self.source.vertex_count(), self.target.vertex_count());
        if self.vertex_map.len() != ns || self.edge_map.len() != self.source.edge_count() {
            return bad("map lengths do not match the source graph".into());
        }
        if self.vertex_map.iter().any(|&w| w >= nt) {
            return bad("vertex map leaves the target".into());
        }
        let mut hit = vec![false; nt];
        for &w in &self.vertex_map {
            hit[w] = true;
        }
        if hit.iter().any(|h| !h) {
            return bad("vertex map is not surjective".into());
        }

        let mut uf = UnionFind::new(ns);
        let mut target_hit = vec![false; self.target.edge_count()];
        for (i, &(u, v)) in self.source.edges().iter().enumerate() {
            match self.edge_map[i] {
                None => {
                    if u == v {
                        return bad(format!("self-loop at {u} is contracted"));
                    }
                    if self.vertex_map[u] != self.vertex_map[v] {
                        return bad(format!("contracted edge {{{u}, {v}}} spans two fibres"));
                    }
                    if !uf.union(u, v) {
                        return bad("contracted edges contain a cycle".into());
                    }
                }
                Some(j) => {
                    let Some(&(a, b)) = self.target.edges().get(j) else {
                        return bad(format!("edge {i} maps outside the target"));
                    };
                    let (pu, pv) = (self.vertex_map[u], self.vertex_map[v]);
                    if !((pu == a && pv == b) || (pu == b && pv == a)) {
                        return bad(format!("edge {i} does not map onto target edge {j}"));
                    }
                    if std::mem::replace(&mut target_hit[j], true) {
                        return bad(format!("target edge {j} is hit twice"));
                    }
                }
            }
        }
        if target_hit.iter().any(|h| !h) {
            return bad("edge map is not surjective".into());
        }
        // A forest whose components are exactly the fibres.
        let contracted = self.edge_map.iter().filter(|e| e.is_none()).count();
        if contracted != ns - nt {
            return bad("fibres are not connected by contracted edges".into());
        }
        Ok(())
    }
}

/// Every contraction morphism `big -> small`, one per (contracted edge set,
/// vertex isomorphism of the quotient onto `small`) pair.
///
/// Edge sets are visited in lexicographic order of their index sets and
/// isomorphisms in lexicographic order of their images.
pub fn enumerate_contractions_onto(
    big: &Graph,
    small: &Graph,
    cap: usize,
) -> GraphResult<Vec<ContractionMorphism>> {
    let (nb, ns) = (big.vertex_count(), small.vertex_count());
    if nb > cap {
        return Err(GraphError::TooLarge {
            what: "source graph",
            size: nb,
            cap,
        });
    }
    if nb < ns || big.genus() != small.genus() {
        return Ok(Vec::new());
    }
    let candidates: Vec<usize> = (0..big.edge_count())
        .filter(|&i| big.edges()[i].0 != big.edges()[i].1)
        .collect();
    let mut out = Vec::new();
    for subset in combinations(candidates.len(), nb - ns) {
        let chosen: Vec<usize> = subset.iter().map(|&i| candidates[i]).collect();
        let Some((quotient, vmap, emap)) = quotient(big, &chosen) else {
            continue;
        };
        for sigma in isomorphisms(&quotient, small) {
            let edge_relabel = match_edges(&quotient, small, &sigma);
            let phi = ContractionMorphism {
                source: big.clone(),
                target: small.clone(),
                vertex_map: vmap.iter().map(|&q| sigma[q]).collect(),
                edge_map: emap.iter().map(|e| e.map(|j| edge_relabel[j])).collect(),
            };
            debug_assert!(phi.validate().is_ok());
            out.push(phi);
        }
    }
    Ok(out)
}

type Quotient = (Graph, Vec<usize>, Vec<Option<usize>>);

/// Contracts the edge set `chosen` at once, or `None` if it has a cycle.
/// Quotient vertices are labelled by the order of their smallest member.
fn quotient(g: &Graph, chosen: &[usize]) -> Option<Quotient> {
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    for &i in chosen {
        let (u, v) = g.edges()[i];
        if !uf.union(u, v) {
            return None;
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    let vmap: Vec<usize> = (0..n)
        .map(|v| {
            let r = uf.find(v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            label[r]
        })
        .collect();
    let mut edges = Vec::new();
    let mut emap = Vec::with_capacity(g.edge_count());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if chosen.contains(&i) {
            emap.push(None);
        } else {
            emap.push(Some(edges.len()));
            edges.push((vmap[u], vmap[v]));
        }
    }
    let q = Graph::new(next, edges).expect("quotient of a connected graph is connected");
    Some((q, vmap, emap))
}

/// Matches the edges of `a` to those of `b` under the vertex bijection
/// `sigma`, pairing parallel copies in insertion order.
fn match_edges(a: &Graph, b: &Graph, sigma: &[usize]) -> Vec<usize> {
    let mut taken = vec![false; b.edge_count()];
    a.edges()
        .iter()
        .map(|&(u, v)| {
            let (x, y) = (sigma[u], sigma[v]);
            let j = (0..b.edge_count())
                .find(|&j| {
                    let (p, q) = b.edges()[j];
                    !taken[j] && ((p == x && q == y) || (p == y && q == x))
                })
                .expect("sigma is an isomorphism");
            taken[j] = true;
            j
        })
        .collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}
