//! Naive reference implementations used by the integration tests. Nothing
//! here calls into the library's linear algebra or tuple enumeration.

#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub const INF: u32 = u32::MAX / 4;

/// All-pairs distances by Floyd–Warshall on an edge list.
pub fn floyd_warshall(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u32>> {
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in edges {
        if u != v {
            d[u][v] = 1;
            d[v][u] = 1;
        }
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                let through = d[i][m] + d[m][j];
                if through < d[i][j] {
                    d[i][j] = through;
                }
            }
        }
    }
    d
}

pub fn length(d: &[Vec<u32>], t: &[usize]) -> u32 {
    t.windows(2).map(|w| d[w[0]][w[1]]).sum()
}

/// Every `(k+1)`-tuple without consecutive repeats and of length `l`, by
/// running through all `n^(k+1)` tuples in lexicographic order.
pub fn tuples(d: &[Vec<u32>], k: usize, l: usize) -> Vec<Vec<usize>> {
    let n = d.len();
    let mut out = Vec::new();
    let mut t = vec![0usize; k + 1];
    loop {
        if t.windows(2).all(|w| w[0] != w[1]) && length(d, &t) as usize == l {
            out.push(t.clone());
        }
        let mut i = k + 1;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

/// `δ: MC_{k,l} -> MC_{k-1,l}` as a sparse map `(row, col) -> value`, with
/// row and column indices into [`tuples`].
pub fn delta(d: &[Vec<u32>], k: usize, l: usize) -> HashMap<(usize, usize), i64> {
    let mut out = HashMap::new();
    if k == 0 {
        return out;
    }
    let src = tuples(d, k, l);
    let dst: HashMap<Vec<usize>, usize> = tuples(d, k - 1, l)
        .into_iter()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    for (c, t) in src.iter().enumerate() {
        for i in 1..k {
            let mut face = t.clone();
            face.remove(i);
            if length(d, &face) as usize != l {
                continue;
            }
            let r = dst[&face];
            let sign = if i % 2 == 0 { 1 } else { -1 };
            *out.entry((r, c)).or_insert(0) += sign;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

pub fn to_dense(rows: usize, cols: usize, m: &HashMap<(usize, usize), i64>) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0; cols]; rows];
    for (&(r, c), &v) in m {
        out[r][c] = v;
    }
    out
}

pub fn transpose(m: &[Vec<i64>], rows: usize, cols: usize) -> Vec<Vec<i64>> {
    (0..cols).map(|j| (0..rows).map(|i| m[i][j]).collect()).collect()
}

pub fn rank_q(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in 0..a.len() {
            if i != rank && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[rank][c];
                for j in c..cols {
                    let s = &f * &a[rank][j];
                    a[i][j] -= s;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank_p(m: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(p)).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let inv = |x: i64| (1..p).find(|y| (x * y) % p == 1).expect("p prime");
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let s = inv(a[rank][c]);
        for j in 0..cols {
            a[rank][j] = a[rank][j] * s % p;
        }
        for i in 0..a.len() {
            if i != rank && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    a[i][j] = (a[i][j] - f * a[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dense Smith normal form by repeated division, tracking the column
/// transform `V` and its inverse so that `A V` has zero columns past the rank.
pub struct DenseSnf {
    pub diagonal: Vec<BigInt>,
    pub v: Vec<Vec<BigInt>>,
    pub v_inv: Vec<Vec<BigInt>>,
}

impl DenseSnf {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

type Mat = Vec<Vec<BigInt>>;

fn swap_cols(a: &mut Mat, v: &mut Mat, vi: &mut Mat, i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut().chain(v.iter_mut()) {
            row.swap(i, j);
        }
        vi.swap(i, j);
    }
}

/// `col_j -= q col_t`, keeping `V` and `V^-1` in step.
fn col_op(a: &mut Mat, v: &mut Mat, vi: &mut Mat, t: usize, j: usize, q: &BigInt) {
    for row in a.iter_mut().chain(v.iter_mut()) {
        let s = q * &row[t];
        row[j] -= s;
    }
    let add: Vec<BigInt> = vi[j].iter().map(|x| q * x).collect();
    for (x, y) in vi[t].iter_mut().zip(add) {
        *x += y;
    }
}

pub fn snf(m: &[Vec<BigInt>], rows: usize, cols: usize) -> DenseSnf {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut v = identity(cols);
    let mut v_inv = identity(cols);
    let mut diagonal = Vec::new();

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| a[i][j].abs())
        else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, &mut v, &mut v_inv, t, pj);
        loop {
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    let pivot_row = a[t].clone();
                    for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                        *x -= &q * y;
                    }
                }
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    col_op(&mut a, &mut v, &mut v_inv, t, j, &q);
                }
            }
            let rest_row = (t + 1..rows).find(|&i| !a[i][t].is_zero());
            let rest_col = (t + 1..cols).find(|&j| !a[t][j].is_zero());
            match (rest_row, rest_col) {
                (Some(i), _) => a.swap(t, i),
                (None, Some(j)) => swap_cols(&mut a, &mut v, &mut v_inv, t, j),
                (None, None) => {
                    // Row and column are clear; enforce divisibility.
                    let bad =
                        (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
                    match bad {
                        Some(i) => {
                            let row = a[i].clone();
                            for (x, y) in a[t].iter_mut().zip(row) {
                                *x += y;
                            }
                        }
                        None => break,
                    }
                }
            }
        }
        diagonal.push(a[t][t].abs());
    }
    DenseSnf { diagonal, v, v_inv }
}

pub fn big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Integral homology of `C_{k+1} -> C_k -> C_{k-1}`: a basis of `ker d_out`
/// from the column transform, the boundaries written in that basis, and the
/// Smith form of the result. Returns `(free rank, torsion factors > 1)`.
pub fn homology_z(
    d_in: &[Vec<i64>],
    d_out: &[Vec<i64>],
    n_next: usize,
    n: usize,
    n_prev: usize,
) -> (usize, Vec<BigInt>) {
    let out = snf(&big(d_out), n_prev, n);
    let r = out.rank();
    let kernel_dim = n - r;
    // d_in = V (V^-1 d_in); rows below the rank give kernel coordinates.
    let coords: Vec<Vec<BigInt>> = (r..n)
        .map(|i| {
            (0..n_next)
                .map(|c| (0..n).map(|j| &out.v_inv[i][j] * BigInt::from(d_in[j][c])).sum())
                .collect()
        })
        .collect();
    for i in 0..r {
        for c in 0..n_next {
            let x: BigInt = (0..n).map(|j| &out.v_inv[i][j] * BigInt::from(d_in[j][c])).sum();
            assert!(x.is_zero(), "boundaries leave the kernel");
        }
    }
    let s = snf(&coords, kernel_dim, n_next);
    let mut torsion: Vec<BigInt> = s.diagonal.iter().filter(|x| !x.is_one()).cloned().collect();
    torsion.sort();
    (kernel_dim - s.rank(), torsion)
}

/// Field homology dimension from ranks.
pub fn homology_dim(n: usize, rank_in: usize, rank_out: usize) -> usize {
    n - rank_in - rank_out
}

/// Dense matrices of `δ_{k+1}` and `δ_k` around `MC_{k,l}` with the sizes
/// of the three chain groups.
pub struct Around {
    pub d_in: Vec<Vec<i64>>,
    pub d_out: Vec<Vec<i64>>,
    pub n_next: usize,
    pub n: usize,
    pub n_prev: usize,
}

pub fn around(d: &[Vec<u32>], k: usize, l: usize) -> Around {
    let n_next = tuples(d, k + 1, l).len();
    let n = tuples(d, k, l).len();
    let n_prev = if k == 0 { 0 } else { tuples(d, k - 1, l).len() };
    Around {
        d_in: to_dense(n, n_next, &delta(d, k + 1, l)),
        d_out: to_dense(n_prev, n, &delta(d, k, l)),
        n_next,
        n,
        n_prev,
    }
}

/// Naive `MH_{k,l}` over `Z`: `(free rank, torsion)`.
pub fn mh_z(d: &[Vec<u32>], k: usize, l: usize) -> (usize, Vec<BigInt>) {
    let a = around(d, k, l);
    homology_z(&a.d_in, &a.d_out, a.n_next, a.n, a.n_prev)
}

/// Naive `dim MH_{k,l}` over `Q` (`p = 0`) or `F_p`.
pub fn mh_field(d: &[Vec<u32>], k: usize, l: usize, p: i64) -> usize {
    let a = around(d, k, l);
    let rank = |m: &[Vec<i64>]| if p == 0 { rank_q(m) } else { rank_p(m, p) };
    homology_dim(a.n, rank(&a.d_in), rank(&a.d_out))
}

/// Image of a tuple under a vertex map, or `None` when it leaves the
/// length-`l` tuples without repeats.
pub fn push_tuple(d_target: &[Vec<u32>], f: &[usize], t: &[usize], l: usize) -> Option<Vec<usize>> {
    let img: Vec<usize> = t.iter().map(|&x| f[x]).collect();
    (img.windows(2).all(|w| w[0] != w[1]) && length(d_target, &img) as usize == l).then_some(img)
}
