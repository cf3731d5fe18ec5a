use std::collections::BTreeMap;

use crate::error::{GraphError, GraphResult};
use crate::graph::Graph;

/// A vertex indicator written as `iota * ι + sum c_e f_e` over the edges `e`
/// of a rooted spanning tree, where `ι` is constant one and `f_e` is the
/// indicator of the vertices on the far side of `e` from the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexDecomposition {
    pub iota: i64,
    /// Nonzero coefficients keyed by tree edge `(min, max)`.
    pub edges: BTreeMap<(usize, usize), i64>,
}

impl VertexDecomposition {
    /// Pointwise values on the vertices of the tree.
    pub fn evaluate(&self, n: usize, tree: &[(usize, usize)], root: usize) -> GraphResult<Vec<i64>> {
        let mut out = vec![self.iota; n];
        for (&e, &c) in &self.edges {
            for (v, inside) in edge_function(n, tree, root, e)?.into_iter().enumerate() {
                if inside {
                    out[v] += c;
                }
            }
        }
        Ok(out)
    }
}

struct Rooted {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    /// Vertices in breadth-first order from the root.
    order: Vec<usize>,
}

fn root_tree(n: usize, tree: &[(usize, usize)], root: usize) -> GraphResult<Rooted> {
    let bad = |m: &str| GraphError::BadParameter(m.to_string());
    if root >= n {
        return Err(bad("root is not a vertex"));
    }
    if tree.len() + 1 != n {
        return Err(bad("a spanning tree has n - 1 edges"));
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in tree {
        if u >= n || v >= n || u == v {
            return Err(bad("tree edge is not a non-loop edge of the graph"));
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut children = vec![Vec::new(); n];
    let mut order = vec![root];
    seen[root] = true;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        let mut next = adj[u].clone();
        next.sort_unstable();
        for w in next {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(u);
                children[u].push(w);
                order.push(w);
            }
        }
    }
    if order.len() != n {
        return Err(bad("tree does not span the graph"));
    }
    Ok(Rooted {
        parent,
        children,
        order,
    })
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// `f_e`: the vertices cut off from `root` when `e` is removed from `tree`.
pub fn edge_function(
    n: usize,
    tree: &[(usize, usize)],
    root: usize,
    e: (usize, usize),
) -> GraphResult<Vec<bool>> {
    let rooted = root_tree(n, tree, root)?;
    let (a, b) = e;
    let far = if rooted.parent[b] == Some(a) {
        b
    } else if rooted.parent[a] == Some(b) {
        a
    } else {
        return Err(GraphError::BadParameter(format!(
            "{{{a}, {b}}} is not a tree edge"
        )));
    };
    let mut out = vec![false; n];
    let mut stack = vec![far];
    while let Some(u) = stack.pop() {
        out[u] = true;
        stack.extend(&rooted.children[u]);
    }
    Ok(out)
}

/// Writes the indicator of `v` in terms of `ι` and the `f_e`, following the
/// induction from the leaves towards the root: for `w` other than the root,
/// `δ_w = f_{e(w)} - sum of δ_u over the proper descendants u of w`, where
/// `e(w)` joins `w` to its parent; at the root `ι` takes the place of `f`.
pub fn vertex_generator_decomposition(
    g: &Graph,
    tree: &[(usize, usize)],
    root: usize,
    v: usize,
) -> GraphResult<VertexDecomposition> {
    let n = g.vertex_count();
    if v >= n {
        return Err(GraphError::BadParameter(format!(
            "vertex {v} is not in the graph"
        )));
    }
    let simple = g.simple_edges();
    if let Some(&(a, b)) = tree
        .iter()
        .find(|&&(a, b)| simple.binary_search(&key(a, b)).is_err())
    {
        return Err(GraphError::BadParameter(format!(
            "{{{a}, {b}}} is not an edge of the graph"
        )));
    }
    let rooted = root_tree(n, tree, root)?;

    // Subtree of v, processed farthest first so every descendant is ready.
    let mut subtree = Vec::new();
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        subtree.push(u);
        stack.extend(&rooted.children[u]);
    }
    let position: Vec<usize> = {
        let mut p = vec![0; n];
        for (i, &u) in rooted.order.iter().enumerate() {
            p[u] = i;
        }
        p
    };
    subtree.sort_by_key(|&u| std::cmp::Reverse(position[u]));

    let mut solved: BTreeMap<usize, VertexDecomposition> = BTreeMap::new();
    let mut descendants: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &w in &subtree {
        let mut below = Vec::new();
        for &c in &rooted.children[w] {
            below.push(c);
            below.extend(descendants[c].iter().copied());
        }
        let mut dec = match rooted.parent[w] {
            Some(p) => VertexDecomposition {
                iota: 0,
                edges: BTreeMap::from([(key(p, w), 1)]),
            },
            None => VertexDecomposition {
                iota: 1,
                edges: BTreeMap::new(),
            },
        };
        for u in &below {
            let du = &solved[u];
            dec.iota -= du.iota;
            for (&e, &c) in &du.edges {
                *dec.edges.entry(e).or_insert(0) -= c;
            }
        }
        dec.edges.retain(|_, c| *c != 0);
        descendants[w] = below;
        solved.insert(w, dec);
    }
    Ok(solved.remove(&v).expect("v is in its own subtree"))
}
