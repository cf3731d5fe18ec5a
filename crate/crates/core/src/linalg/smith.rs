use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::elim::eliminate;
use super::ring::Integers;
use super::{Int, SparseMatrix};

/// Invariant factors `d_1 | d_2 | ... | d_r` of an integer matrix, with
/// optional unimodular `U`, `V` such that `U * A * V` is diagonal with the
/// factors on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<Int>,
    pub transforms: Option<Transforms>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transforms {
    pub u: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Factors greater than one.
    pub fn torsion(&self) -> Vec<Int> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_unit())
            .cloned()
            .collect()
    }
}

/// Smith normal form of a sparse integer matrix. Unit pivots are removed by
/// sparse elimination; the remaining block goes through the dense algorithm.
pub fn smith_normal_form(a: &SparseMatrix) -> SmithForm {
    let elim = eliminate(&Integers, a);
    let mut factors = vec![Int::ONE; elim.pivots];
    if !elim.remainder.is_empty() {
        let dense = compact(&elim.remainder);
        let diag = dense_smith(dense, false).0;
        factors.extend(diag.into_iter().map(Int::from));
    }
    SmithForm {
        invariant_factors: factors,
        transforms: None,
    }
}

/// Dense Smith normal form retaining `U` and `V`.
pub fn smith_normal_form_with_transforms(a: &SparseMatrix) -> SmithForm {
    let dense = a
        .to_dense()
        .into_iter()
        .map(|row| row.iter().map(Int::to_big).collect())
        .collect();
    let (diag, transforms) = dense_smith_with(dense, a.rows(), a.cols(), true);
    SmithForm {
        invariant_factors: diag.into_iter().map(Int::from).collect(),
        transforms,
    }
}

/// Rank over the rationals, which equals the Smith rank.
pub fn rational_rank(a: &SparseMatrix) -> usize {
    let elim = eliminate(&Integers, a);
    if elim.remainder.is_empty() {
        return elim.pivots;
    }
    elim.pivots + bareiss_rank(compact(&elim.remainder))
}

/// A basis of the integer kernel `{x : A x = 0}`, as columns of `V` past the
/// rank. The basis spans a saturated lattice.
pub fn integer_kernel_basis(a: &SparseMatrix) -> Vec<Vec<BigInt>> {
    let form = smith_normal_form_with_transforms(a);
    let v = form.transforms.expect("transforms requested").v;
    let r = form.invariant_factors.len();
    (r..a.cols())
        .map(|j| v.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Rows of the remainder as a dense matrix over the columns they use.
fn compact(rows: &[Vec<(usize, Int)>]) -> Vec<Vec<BigInt>> {
    let mut cols: Vec<usize> = rows.iter().flatten().map(|e| e.0).collect();
    cols.sort_unstable();
    cols.dedup();
    rows.iter()
        .map(|row| {
            let mut dense = vec![BigInt::zero(); cols.len()];
            for (c, v) in row {
                dense[cols.binary_search(c).expect("column collected")] = v.to_big();
            }
            dense
        })
        .collect()
}

fn dense_smith(a: Vec<Vec<BigInt>>, transforms: bool) -> (Vec<BigInt>, Option<Transforms>) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    dense_smith_with(a, rows, cols, transforms)
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

/// Row `dst -= q * row src` on `a` (and on `u` when tracked).
fn row_axpy(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (d, s) = if dst < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

/// Column `dst -= q * column src`.
fn col_axpy(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            let t = q * &row[src];
            row[dst] -= t;
        }
    }
}

fn swap_cols(m: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in m.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// The textbook algorithm: move a smallest nonzero entry to the pivot,
/// clear its row and column by Euclidean steps, and fold in any entry the
/// pivot does not divide. The diagonal therefore forms a divisibility chain.
fn dense_smith_with(
    mut a: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
    transforms: bool,
) -> (Vec<BigInt>, Option<Transforms>) {
    let mut u = transforms.then(|| identity(rows));
    let mut v = transforms.then(|| identity(cols));
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&a, t, t..rows, t..cols) else {
            break;
        };
        a.swap(t, pi);
        if let Some(u) = u.as_mut() {
            u.swap(t, pi);
        }
        swap_cols(&mut a, t, pj);
        if let Some(v) = v.as_mut() {
            swap_cols(v, t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    row_axpy(&mut a, i, t, &q);
                    if let Some(u) = u.as_mut() {
                        row_axpy(u, i, t, &q);
                    }
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    col_axpy(&mut a, j, t, &q);
                    if let Some(v) = v.as_mut() {
                        col_axpy(v, j, t, &q);
                    }
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                // A smaller remainder appeared in row or column t.
                let (pi, pj) = min_abs_cross(&a, t, rows, cols);
                a.swap(t, pi);
                if let Some(u) = u.as_mut() {
                    u.swap(t, pi);
                }
                swap_cols(&mut a, t, pj);
                if let Some(v) = v.as_mut() {
                    swap_cols(v, t, pj);
                }
                continue;
            }
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut a, t, i, &minus_one);
                    if let Some(u) = u.as_mut() {
                        row_axpy(u, t, i, &minus_one);
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            if let Some(u) = u.as_mut() {
                for x in u[t].iter_mut() {
                    *x = -&*x;
                }
            }
        }
        t += 1;
    }
    let diag = (0..t).map(|i| a[i][i].clone()).collect();
    (diag, u.zip(v).map(|(u, v)| Transforms { u, v }))
}

fn min_abs_entry(
    a: &[Vec<BigInt>],
    _t: usize,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            let x = &a[i][j];
            if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
                if x.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` or column `t` of the active block.
fn min_abs_cross(a: &[Vec<BigInt>], t: usize, rows: usize, cols: usize) -> (usize, usize) {
    let mut best = (t, t);
    let cands = (t..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
    for (i, j) in cands {
        let x = &a[i][j];
        let b = &a[best.0][best.1];
        if !x.is_zero() && (b.is_zero() || x.abs() < b.abs()) {
            best = (i, j);
        }
    }
    best
}

/// Fraction-free elimination; returns the rank.
fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for j in c + 1..cols {
                let x = &a[r][j] * &a[rank][c] - &a[r][c] * &a[rank][j];
                a[r][j] = x / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
