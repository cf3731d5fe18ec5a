//! Finite connected undirected multigraphs with self-loops.
//!
//! Vertices are labelled `0..n`. Edges are stored in insertion order with the
//! orientation they were given, so that text and JSON forms round-trip
//! exactly. Parallel copies of an edge are addressed by [`EdgeRef`]
//! (unordered endpoint pair plus occurrence index).

mod constructors;
mod contraction;
mod iso;
mod metric;

pub use constructors::{box_product, complete, cycle, dumbbell, path, rose, theta};
pub use contraction::{enumerate_contractions_onto, ContractionMorphism, DEFAULT_ENUMERATION_CAP};
pub use iso::{canonical_form, isomorphisms, CanonicalForm};
pub use metric::DistanceMatrix;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, GraphResult};

/// A finite connected undirected multigraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        Graph::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges.into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

/// Identifies one copy of an edge: the unordered pair `{u, v}` and which
/// parallel copy (0-based, in insertion order) is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeRef {
    pub u: usize,
    pub v: usize,
    pub occurrence: usize,
}

impl EdgeRef {
    pub fn new(u: usize, v: usize) -> Self {
        EdgeRef { u, v, occurrence: 0 }
    }

    pub fn nth(u: usize, v: usize, occurrence: usize) -> Self {
        EdgeRef { u, v, occurrence }
    }

    fn matches(&self, e: (usize, usize)) -> bool {
        (e.0 == self.u && e.1 == self.v) || (e.0 == self.v && e.1 == self.u)
    }
}

impl Graph {
    /// Builds and validates a graph.
    pub fn new<I>(n: usize, edges: I) -> GraphResult<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let g = Graph::unchecked(n, edges.into_iter().collect())?;
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    /// Range-checks endpoints but does not require connectivity.
    fn unchecked(n: usize, edges: Vec<(usize, usize)>) -> GraphResult<Self> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(GraphError::BadEndpoint { u, v, n });
        }
        Ok(Graph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in insertion order, with their given orientation.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `|E| - |V| + 1`, counting parallel edges and self-loops.
    pub fn genus(&self) -> usize {
        self.edges.len() + 1 - self.n
    }

    /// Sorted, deduplicated neighbour lists of the underlying simple graph.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// Edges of the underlying simple graph as sorted pairs `(u, v)`, `u < v`.
    pub fn simple_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self
            .edges
            .iter()
            .filter(|(u, v)| u != v)
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The graph with loops and parallel copies removed.
    pub fn simplify(&self) -> Graph {
        Graph {
            n: self.n,
            edges: self.simple_edges(),
        }
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        DistanceMatrix::new(self)
    }

    /// Index into [`Graph::edges`] of the referenced edge copy.
    pub fn edge_index(&self, e: EdgeRef) -> GraphResult<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &edge)| e.matches(edge))
            .nth(e.occurrence)
            .map(|(i, _)| i)
            .ok_or(GraphError::EdgeNotFound {
                u: e.u,
                v: e.v,
                occurrence: e.occurrence,
            })
    }

    /// The [`EdgeRef`] addressing the edge at `index`.
    pub fn edge_ref(&self, index: usize) -> EdgeRef {
        let (u, v) = self.edges[index];
        let occurrence = self.edges[..index]
            .iter()
            .filter(|&&e| EdgeRef::new(u, v).matches(e))
            .count();
        EdgeRef { u, v, occurrence }
    }

    fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Contracts one edge copy: the larger endpoint is identified into the
    /// smaller and labels above it shift down by one. Other copies of the
    /// edge become self-loops.
    pub fn contract(&self, e: EdgeRef) -> GraphResult<Graph> {
        self.contract_index(self.edge_index(e)?)
    }

    pub(crate) fn contract_index(&self, index: usize) -> GraphResult<Graph> {
        let (u, v) = self.edges[index];
        if u == v {
            return Err(GraphError::SelfLoopContraction { v: u });
        }
        let map = contraction_vertex_map(self.n, u, v);
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, &(a, b))| (map[a], map[b]))
            .collect();
        Ok(Graph { n: self.n - 1, edges })
    }

    /// Removes one copy of an edge, refusing if the result is disconnected.
    pub fn delete_edge(&self, e: EdgeRef) -> GraphResult<Graph> {
        let index = self.edge_index(e)?;
        let mut edges = self.edges.clone();
        edges.remove(index);
        let g = Graph { n: self.n, edges };
        if !g.is_connected() {
            return Err(GraphError::WouldDisconnect { u: e.u, v: e.v });
        }
        Ok(g)
    }

    /// Replaces edge `e_i` by a path with `counts[i]` new interior vertices,
    /// walked from the edge's first to its second endpoint. A count of zero
    /// contracts the edge instead. New vertices are appended after existing
    /// labels in the order of `edges`; contractions are applied afterwards in
    /// the same order.
    pub fn subdivide(&self, edges: &[EdgeRef], counts: &[usize]) -> GraphResult<Graph> {
        if edges.len() != counts.len() {
            return Err(GraphError::ArityMismatch {
                edges: edges.len(),
                counts: counts.len(),
            });
        }
        let mut indices = Vec::with_capacity(edges.len());
        for &e in edges {
            let i = self.edge_index(e)?;
            if self.edges[i].0 == self.edges[i].1 {
                return Err(GraphError::SelfLoopSubdivision { v: self.edges[i].0 });
            }
            if indices.contains(&i) {
                return Err(GraphError::BadParameter(format!(
                    "edge {{{}, {}}} listed twice",
                    e.u, e.v
                )));
            }
            indices.push(i);
        }

        // Interior vertices are labelled in slot order after the originals.
        let mut n = self.n;
        let mut first_label = vec![0; edges.len()];
        for (slot, &m) in counts.iter().enumerate() {
            first_label[slot] = n;
            n += m;
        }
        let mut new_edges: Vec<(usize, usize)> = Vec::with_capacity(self.edges.len());
        let mut to_contract = Vec::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            match indices.iter().position(|&j| j == i) {
                None => new_edges.push((a, b)),
                Some(slot) if counts[slot] == 0 => {
                    to_contract.push((slot, new_edges.len()));
                    new_edges.push((a, b));
                }
                Some(slot) => {
                    let interior = first_label[slot]..first_label[slot] + counts[slot];
                    let chain: Vec<usize> = std::iter::once(a)
                        .chain(interior)
                        .chain(std::iter::once(b))
                        .collect();
                    new_edges.extend(chain.windows(2).map(|w| (w[0], w[1])));
                }
            }
        }
        let mut g = Graph { n, edges: new_edges };

        // Contract in slot order, tracking where the target edges move.
        to_contract.sort_unstable();
        let mut positions: Vec<usize> = to_contract.iter().map(|&(_, p)| p).collect();
        for i in 0..positions.len() {
            let p = positions[i];
            g = g.contract_index(p)?;
            for q in positions.iter_mut().skip(i + 1) {
                if *q > p {
                    *q -= 1;
                }
            }
        }
        Ok(g)
    }

    /// All spanning trees of the underlying simple graph, each as a sorted
    /// list of simple edges, in lexicographic order of edge-index subsets.
    pub fn spanning_trees(&self) -> Vec<Vec<(usize, usize)>> {
        let edges = self.simple_edges();
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(self.n.saturating_sub(1));
        let mut uf = UnionFind::new(self.n);
        spanning_trees_rec(&edges, 0, self.n - 1, &mut chosen, &mut uf, &mut out);
        out
    }
}

fn spanning_trees_rec(
    edges: &[(usize, usize)],
    start: usize,
    need: usize,
    chosen: &mut Vec<(usize, usize)>,
    uf: &mut UnionFind,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if chosen.len() == need {
        out.push(chosen.clone());
        return;
    }
    let remaining = need - chosen.len();
    for i in start..edges.len() {
        if edges.len() - i < remaining {
            break;
        }
        let (u, v) = edges[i];
        if uf.find(u) == uf.find(v) {
            continue;
        }
        let snapshot = uf.parent.clone();
        uf.union(u, v);
        chosen.push((u, v));
        spanning_trees_rec(edges, i + 1, need, chosen, uf, out);
        chosen.pop();
        uf.parent = snapshot;
    }
}

/// Vertex map of a single contraction of `{u, v}`.
pub(crate) fn contraction_vertex_map(n: usize, u: usize, v: usize) -> Vec<usize> {
    let (keep, gone) = (u.min(v), u.max(v));
    (0..n)
        .map(|x| match x.cmp(&gone) {
            std::cmp::Ordering::Less => x,
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => x - 1,
        })
        .collect()
}

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn build_validates() {
        assert_eq!(Graph::new(1, []).unwrap().vertex_count(), 1);
        assert_eq!(c4().edge_count(), 4);
        assert!(matches!(
            Graph::new(2, [(0, 1), (0, 5)]),
            Err(GraphError::BadEndpoint { u: 0, v: 5, n: 2 })
        ));
        assert!(matches!(Graph::new(3, [(0, 1)]), Err(GraphError::Disconnected)));
        assert!(matches!(Graph::new(0, []), Err(GraphError::Empty)));
    }

    #[test]
    fn contraction_examples() {
        let c3 = c4().contract(EdgeRef::new(0, 1)).unwrap();
        assert_eq!(c3, cycle(3).unwrap());

        let digon = Graph::new(2, [(0, 1), (0, 1)]).unwrap();
        let r1 = digon.contract(EdgeRef::new(0, 1)).unwrap();
        assert_eq!(r1, rose(1));
        assert!(matches!(
            r1.contract(EdgeRef::new(0, 0)),
            Err(GraphError::SelfLoopContraction { v: 0 })
        ));
        assert!(matches!(
            c4().contract(EdgeRef::new(0, 2)),
            Err(GraphError::EdgeNotFound { .. })
        ));
    }

    #[test]
    fn contraction_relabels_larger_into_smaller() {
        let p = path(4).unwrap();
        let g = p.contract(EdgeRef::new(1, 2)).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn deletion_examples() {
        let c3 = cycle(3).unwrap();
        let p3 = c3.delete_edge(EdgeRef::new(0, 1)).unwrap();
        assert_eq!(p3.vertex_count(), 3);
        assert_eq!(p3.edge_count(), 2);
        assert!(matches!(
            p3.delete_edge(EdgeRef::new(1, 2)),
            Err(GraphError::WouldDisconnect { .. })
        ));
        let k1 = rose(1).delete_edge(EdgeRef::new(0, 0)).unwrap();
        assert_eq!(k1, Graph::new(1, []).unwrap());
    }

    #[test]
    fn genus_examples() {
        assert_eq!(path(5).unwrap().genus(), 0);
        assert_eq!(cycle(7).unwrap().genus(), 1);
        assert_eq!(complete(4).unwrap().genus(), 3);
        assert_eq!(rose(3).genus(), 3);
    }

    #[test]
    fn subdivision_examples() {
        let c3 = cycle(3).unwrap();
        let e = EdgeRef::new(0, 1);
        let c4 = c3.subdivide(&[e], &[1]).unwrap();
        assert_eq!(canonical_form(&c4), canonical_form(&cycle(4).unwrap()));
        assert_eq!(c4.edges(), &[(0, 3), (3, 1), (1, 2), (2, 0)]);

        let back = cycle(4).unwrap().subdivide(&[e], &[0]).unwrap();
        assert_eq!(canonical_form(&back), canonical_form(&c3));

        let c6 = c3.subdivide(&[e], &[3]).unwrap();
        assert_eq!(c6.vertex_count(), 6);
        assert_eq!(canonical_form(&c6), canonical_form(&cycle(6).unwrap()));
        assert_eq!(c6.edges()[..4], [(0, 3), (3, 4), (4, 5), (5, 1)]);
    }

    #[test]
    fn subdivision_errors() {
        let r = rose(1);
        assert!(matches!(
            r.subdivide(&[EdgeRef::new(0, 0)], &[1]),
            Err(GraphError::SelfLoopSubdivision { v: 0 })
        ));
        assert!(matches!(
            cycle(3).unwrap().subdivide(&[EdgeRef::new(0, 1)], &[1, 2]),
            Err(GraphError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn subdivision_mixes_contraction_and_insertion() {
        let theta = theta(2);
        let g = theta
            .subdivide(
                &[
                    EdgeRef::nth(0, 1, 0),
                    EdgeRef::nth(0, 1, 1),
                    EdgeRef::nth(0, 1, 2),
                ],
                &[2, 0, 1],
            )
            .unwrap();
        // The contracted copy turns the two endpoints into one vertex, the
        // other two paths become loops of lengths 3 and 2 through it.
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.genus(), 2);
    }

    #[test]
    fn spanning_tree_counts() {
        assert_eq!(cycle(3).unwrap().spanning_trees().len(), 3);
        assert_eq!(complete(4).unwrap().spanning_trees().len(), 16);
        assert_eq!(path(6).unwrap().spanning_trees().len(), 1);
        assert_eq!(
            Graph::new(1, []).unwrap().spanning_trees(),
            vec![Vec::<(usize, usize)>::new()]
        );
    }

    #[test]
    fn edge_refs_address_parallel_copies() {
        let g = Graph::new(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_index(EdgeRef::nth(1, 0, 2)).unwrap(), 2);
        assert_eq!(g.edge_ref(1), EdgeRef::nth(1, 0, 1));
    }
}
