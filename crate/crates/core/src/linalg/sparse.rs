use std::fmt::Write as _;

use super::Int;
use crate::error::{LinalgError, LinalgResult};

/// Column-major sparse matrix with exact integer entries. No stored zeros,
/// no duplicate positions; each column is sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Int)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, Int::ONE)]).collect(),
        }
    }

    /// Builds from `(row, col, value)` triplets, summing duplicates and
    /// dropping zeros.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Int)>,
    {
        let mut data: Vec<Vec<(usize, Int)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r}, {c}) outside {rows}x{cols}");
            data[c].push((r, v));
        }
        for col in &mut data {
            col.sort_by_key(|e| e.0);
            let mut merged: Vec<(usize, Int)> = Vec::with_capacity(col.len());
            for (r, v) in col.drain(..) {
                match merged.last_mut() {
                    Some((lr, lv)) if *lr == r => *lv = lv.add(&v),
                    _ => merged.push((r, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            *col = merged;
        }
        SparseMatrix { rows, cols, data }
    }

    /// Builds from columns already sorted by row with no zeros.
    pub(crate) fn from_sorted_columns(rows: usize, data: Vec<Vec<(usize, Int)>>) -> Self {
        debug_assert!(data.iter().all(|c| c.windows(2).all(|w| w[0].0 < w[1].0)));
        debug_assert!(data.iter().flatten().all(|(r, v)| *r < rows && !v.is_zero()));
        SparseMatrix {
            rows,
            cols: data.len(),
            data,
        }
    }

    pub fn from_dense(dense: &[Vec<i64>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        SparseMatrix::from_triplets(
            rows,
            cols,
            dense
                .iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, Int::from(v)))),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(usize, Int)] {
        &self.data[c]
    }

    pub fn get(&self, r: usize, c: usize) -> Int {
        self.data[c]
            .binary_search_by_key(&r, |e| e.0)
            .map(|i| self.data[c][i].1.clone())
            .unwrap_or(Int::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    /// Triplets in row-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, Int)> {
        let mut out: Vec<_> = self
            .data
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v.clone())))
            .collect();
        out.sort_by_key(|t| (t.0, t.1));
        out
    }

    /// Rows as sorted `(col, value)` lists.
    pub fn to_rows(&self) -> Vec<Vec<(usize, Int)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (c, col) in self.data.iter().enumerate() {
            for (r, v) in col {
                rows[*r].push((c, v.clone()));
            }
        }
        rows
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            data: self.to_rows(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Int>> {
        let mut out = vec![vec![Int::ZERO; self.cols]; self.rows];
        for (c, col) in self.data.iter().enumerate() {
            for (r, v) in col {
                out[*r][c] = v.clone();
            }
        }
        out
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> LinalgResult<SparseMatrix> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut acc: Vec<Option<Int>> = vec![None; self.rows];
        let mut touched = Vec::new();
        let data = rhs
            .data
            .iter()
            .map(|rcol| {
                for (k, b) in rcol {
                    for (r, a) in &self.data[*k] {
                        let term = a.mul(b);
                        match &mut acc[*r] {
                            Some(x) => *x = x.add(&term),
                            slot @ None => {
                                *slot = Some(term);
                                touched.push(*r);
                            }
                        }
                    }
                }
                touched.sort_unstable();
                let col: Vec<(usize, Int)> = touched
                    .drain(..)
                    .filter_map(|r| acc[r].take().filter(|v| !v.is_zero()).map(|v| (r, v)))
                    .collect();
                col
            })
            .collect();
        Ok(SparseMatrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }

    /// Number of entries not divisible by `modulus` (`0` means exact zero test).
    pub fn count_nonzero_mod(&self, modulus: u64) -> usize {
        self.data
            .iter()
            .flatten()
            .filter(|(_, v)| modulus == 0 || v.rem_euclid(modulus) != 0)
            .count()
    }

    /// Submatrix with the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> SparseMatrix {
        let mut row_pos = vec![usize::MAX; self.rows];
        for (i, &r) in rows.iter().enumerate() {
            row_pos[r] = i;
        }
        let data = cols
            .iter()
            .map(|&c| {
                let mut col: Vec<(usize, Int)> = self.data[c]
                    .iter()
                    .filter(|(r, _)| row_pos[*r] != usize::MAX)
                    .map(|(r, v)| (row_pos[*r], v.clone()))
                    .collect();
                col.sort_by_key(|e| e.0);
                col
            })
            .collect();
        SparseMatrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// Debug dump: header `rows cols nnz`, then one `row col value` line per
    /// entry in row-major order.
    pub fn dump(&self) -> String {
        let mut s = format!("{} {} {}\n", self.rows, self.cols, self.nnz());
        for (r, c, v) in self.triplets() {
            writeln!(s, "{r} {c} {v}").expect("writing to a String");
        }
        s
    }

    pub fn parse_dump(text: &str) -> LinalgResult<SparseMatrix> {
        let bad = |msg: &str| LinalgError::DimensionMismatch(format!("matrix dump: {msg}"));
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header: Vec<usize> = lines
            .next()
            .ok_or_else(|| bad("missing header"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad("bad header")))
            .collect::<Result<_, _>>()?;
        let [rows, cols, nnz] = header[..] else {
            return Err(bad("header needs 3 fields"));
        };
        let mut triplets = Vec::with_capacity(nnz);
        for line in lines {
            let f: Vec<&str> = line.split_whitespace().collect();
            let [r, c, v] = f[..] else {
                return Err(bad("entry needs 3 fields"));
            };
            let r: usize = r.parse().map_err(|_| bad("bad row"))?;
            let c: usize = c.parse().map_err(|_| bad("bad column"))?;
            if r >= rows || c >= cols {
                return Err(bad("entry out of range"));
            }
            triplets.push((r, c, v.parse::<Int>().map_err(|_| bad("bad value"))?));
        }
        if triplets.len() != nnz {
            return Err(bad("entry count does not match header"));
        }
        Ok(SparseMatrix::from_triplets(rows, cols, triplets))
    }
}
