use super::Graph;
use crate::error::{GraphError, GraphResult};

/// The cycle `C_m` with edges `{i, i+1 mod m}`.
pub fn cycle(m: usize) -> GraphResult<Graph> {
    if m < 3 {
        return Err(GraphError::BadParameter(format!("cycle needs m >= 3, got {m}")));
    }
    Graph::new(m, (0..m).map(|i| (i, (i + 1) % m)))
}

/// The path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> GraphResult<Graph> {
    if n == 0 {
        return Err(GraphError::BadParameter("path needs n >= 1".into()));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// One vertex carrying `m` self-loops.
pub fn rose(m: usize) -> Graph {
    Graph::new(1, std::iter::repeat((0, 0)).take(m)).expect("a rose is connected")
}

/// Two vertices with `m1` loops at vertex 0, `m3` loops at vertex 1 and
/// `m2 + 1` parallel edges between them.
pub fn dumbbell(m1: usize, m2: usize, m3: usize) -> Graph {
    let loops0 = std::iter::repeat((0, 0)).take(m1);
    let bridge = std::iter::repeat((0, 1)).take(m2 + 1);
    let loops1 = std::iter::repeat((1, 1)).take(m3);
    Graph::new(2, loops0.chain(bridge).chain(loops1)).expect("a dumbbell is connected")
}

/// Two vertices joined by `g + 1` parallel edges (genus `g`).
pub fn theta(g: usize) -> Graph {
    dumbbell(0, g, 0)
}

pub fn complete(n: usize) -> GraphResult<Graph> {
    if n == 0 {
        return Err(GraphError::BadParameter("complete graph needs n >= 1".into()));
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Cartesian product: vertex `(a, b)` is labelled `a * |V(h)| + b`; edges of
/// `g` copied across `h` come first, then edges of `h` copied across `g`.
pub fn box_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.vertex_count();
    let mut edges = Vec::new();
    for &(u, v) in g.edges() {
        for b in 0..nh {
            edges.push((u * nh + b, v * nh + b));
        }
    }
    for a in 0..g.vertex_count() {
        for &(u, v) in h.edges() {
            edges.push((a * nh + u, a * nh + v));
        }
    }
    Graph::new(g.vertex_count() * nh, edges).expect("product of connected graphs is connected")
}
