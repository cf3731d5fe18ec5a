use std::collections::VecDeque;

use super::Graph;

/// All-pairs hop distances of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// Breadth-first search from every vertex on the underlying simple graph.
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let adj = g.adjacency();
        let mut d = vec![u32::MAX; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if row[w] == u32::MAX {
                        row[w] = row[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { n, d }
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Sum of consecutive distances along a vertex tuple.
    pub fn tuple_length(&self, tuple: &[usize]) -> u32 {
        tuple.windows(2).map(|w| self.get(w[0], w[1])).sum()
    }
}

#[cfg(test)]
mod tests {
    use crate::graph::{complete, cycle, Graph};

    #[test]
    fn examples() {
        let c4 = cycle(4).unwrap();
        assert_eq!(c4.distance_matrix().get(0, 2), 2);
        let k4 = complete(4).unwrap().distance_matrix();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(k4.get(u, v), u32::from(u != v));
            }
        }
        let doubled = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 1), (2, 2)]).unwrap();
        assert_eq!(doubled.distance_matrix(), c4.distance_matrix());
        assert_eq!(c4.distance_matrix().diameter(), 2);
    }
}
