use std::cmp::Ordering;

use crate::graph::{DistanceMatrix, Graph};
use crate::linalg::{Int, SparseMatrix};

/// Free basis of `MC_{k,l}`: the `(k+1)`-tuples with no two consecutive
/// entries equal and total length `l`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagnitudeBasis {
    k: usize,
    l: usize,
    flat: Vec<usize>,
}

impl MagnitudeBasis {
    pub fn new(g: &Graph, k: usize, l: usize) -> Self {
        Self::from_metric(&g.distance_matrix(), k, l)
    }

    pub fn from_metric(d: &DistanceMatrix, k: usize, l: usize) -> Self {
        enumerate(d, k, l, None)
    }

    /// The tuples starting at `a` and ending at `b`. The differential `δ`
    /// preserves endpoints, so `MC_{*,l}` splits as a sum of these blocks.
    pub fn block(d: &DistanceMatrix, k: usize, l: usize, a: usize, b: usize) -> Self {
        enumerate(d, k, l, Some((a, b)))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn len(&self) -> usize {
        self.flat.len() / (self.k + 1)
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_empty()
    }

    pub fn get(&self, i: usize) -> &[usize] {
        &self.flat[i * (self.k + 1)..(i + 1) * (self.k + 1)]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[usize]> + '_ {
        self.flat.chunks_exact(self.k + 1)
    }

    pub fn index_of(&self, tuple: &[usize]) -> Option<usize> {
        if tuple.len() != self.k + 1 {
            return None;
        }
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(tuple) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Some(mid),
            }
        }
        None
    }
}

fn enumerate(d: &DistanceMatrix, k: usize, l: usize, ends: Option<(usize, usize)>) -> MagnitudeBasis {
    let n = d.len();
    let diam = d.diameter() as usize;
    let mut flat = Vec::new();
    let starts: Vec<usize> = match ends {
        Some((a, _)) => vec![a],
        None => (0..n).collect(),
    };
    let mut tuple = Vec::with_capacity(k + 1);
    for s in starts {
        tuple.clear();
        tuple.push(s);
        extend(d, k, l, diam, ends.map(|e| e.1), &mut tuple, 0, &mut flat);
    }
    MagnitudeBasis { k, l, flat }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    d: &DistanceMatrix,
    k: usize,
    l: usize,
    diam: usize,
    end: Option<usize>,
    tuple: &mut Vec<usize>,
    acc: usize,
    out: &mut Vec<usize>,
) {
    let last = *tuple.last().expect("tuple is never empty");
    let steps = k + 1 - tuple.len();
    if steps == 0 {
        if acc == l && end.map_or(true, |b| b == last) {
            out.extend_from_slice(tuple);
        }
        return;
    }
    for w in 0..d.len() {
        if w == last {
            continue;
        }
        let next = acc + d.get(last, w) as usize;
        let rest = steps - 1;
        if next + rest > l || next + rest * diam < l {
            continue;
        }
        if let Some(b) = end {
            let to_end = d.get(w, b) as usize;
            if next + to_end > l || (rest == 0 && w != b) {
                continue;
            }
        }
        tuple.push(w);
        extend(d, k, l, diam, end, tuple, next, out);
        tuple.pop();
    }
}

/// Calls `visit(face, i)` for each face `t` with `v_i` removed whose length is
/// exactly `drop` less than `t` and which has no consecutive repeats.
/// Endpoint faces are visited only when `ends` is set.
pub(crate) fn for_each_face(
    d: &DistanceMatrix,
    t: &[usize],
    drop: usize,
    ends: bool,
    face: &mut Vec<usize>,
    mut visit: impl FnMut(&[usize], usize),
) {
    let k = t.len() - 1;
    for i in 0..=k {
        let lost = if i == 0 || i == k {
            if !ends || k == 0 {
                continue;
            }
            if i == 0 {
                d.get(t[0], t[1])
            } else {
                d.get(t[k - 1], t[k])
            }
        } else {
            if t[i - 1] == t[i + 1] {
                continue;
            }
            d.get(t[i - 1], t[i]) + d.get(t[i], t[i + 1]) - d.get(t[i - 1], t[i + 1])
        };
        if lost as usize != drop {
            continue;
        }
        face.clear();
        face.extend_from_slice(&t[..i]);
        face.extend_from_slice(&t[i + 1..]);
        visit(face, i);
    }
}

/// Matrix of the signed faces from [`for_each_face`], sign `(-1)^i`.
pub(crate) fn face_matrix(
    d: &DistanceMatrix,
    src: &MagnitudeBasis,
    dst: &MagnitudeBasis,
    drop: usize,
    ends: bool,
) -> SparseMatrix {
    assert_eq!(src.k(), dst.k() + 1);
    let mut columns = Vec::with_capacity(src.len());
    let mut face = Vec::with_capacity(src.k());
    for t in src.iter() {
        let mut col: Vec<(usize, Int)> = Vec::new();
        for_each_face(d, t, drop, ends, &mut face, |f, i| {
            let row = dst.index_of(f).expect("face lies in the target basis");
            col.push((row, if i % 2 == 0 { Int::ONE } else { Int::from(-1) }));
        });
        col.sort_by_key(|e| e.0);
        columns.push(col);
    }
    SparseMatrix::from_sorted_columns(dst.len(), columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn small_bases() {
        let c4 = cycle(4).unwrap();
        let b = MagnitudeBasis::new(&c4, 0, 0);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![&[0][..], &[1], &[2], &[3]]);
        assert_eq!(MagnitudeBasis::new(&complete(3).unwrap(), 2, 2).len(), 12);
        assert!(MagnitudeBasis::new(&complete(2).unwrap(), 1, 2).is_empty());
        assert!(MagnitudeBasis::new(&c4, 3, 2).is_empty());
        assert!(MagnitudeBasis::new(&c4, 0, 1).is_empty());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for g in [cycle(5).unwrap(), path(4).unwrap(), complete(4).unwrap()] {
            let d = g.distance_matrix();
            let n = g.vertex_count();
            for k in 0..4 {
                for l in 0..6 {
                    let mut expect = Vec::new();
                    let total = n.pow(k as u32 + 1);
                    for code in 0..total {
                        let t: Vec<usize> = (0..=k).rev().map(|i| code / n.pow(i as u32) % n).collect();
                        if t.windows(2).all(|w| w[0] != w[1]) && d.tuple_length(&t) as usize == l {
                            expect.push(t);
                        }
                    }
                    let basis = MagnitudeBasis::new(&g, k, l);
                    let got: Vec<Vec<usize>> = basis.iter().map(<[usize]>::to_vec).collect();
                    assert_eq!(got, expect, "k={k} l={l}");
                    for (i, t) in expect.iter().enumerate() {
                        assert_eq!(basis.index_of(t), Some(i));
                    }
                    let blocks: usize = (0..n)
                        .flat_map(|a| (0..n).map(move |b| (a, b)))
                        .map(|(a, b)| MagnitudeBasis::block(&d, k, l, a, b).len())
                        .sum();
                    assert_eq!(blocks, expect.len());
                }
            }
        }
    }
}
