//! Sparse Gaussian elimination restricted to unit pivots.
//!
//! Over a field every nonzero entry is a unit, so the elimination runs to
//! completion and the pivot count is the rank. Over the integers a unit
//! pivot can be cleared from both its row and its column by unimodular
//! operations without touching the invariant factors of the rest, so the
//! pivot count contributes that many factors equal to one and whatever is
//! left is handed to the dense Smith normal form.
//!
//! Pivots follow a Markowitz-style rule: the column with the fewest entries
//! first, then its unit entry whose row is shortest. Ties go to the lowest
//! column and then the lowest row, so results are reproducible.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::ring::Ring;
use super::SparseMatrix;

pub(crate) type SparseRow<E> = Vec<(usize, E)>;

pub(crate) struct Elimination<E> {
    pub pivots: usize,
    /// Rows still holding entries after elimination, each sorted by column.
    pub remainder: Vec<SparseRow<E>>,
}

pub(crate) fn eliminate<R: Ring>(ring: &R, m: &SparseMatrix) -> Elimination<R::Elem> {
    let rows: Vec<SparseRow<R::Elem>> = m
        .to_rows()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|(c, v)| (c, ring.from_int(&v)))
                .filter(|(_, v)| !ring.is_zero(v))
                .collect()
        })
        .collect();
    eliminate_rows(ring, m.cols(), rows)
}

pub(crate) fn eliminate_rows<R: Ring>(
    ring: &R,
    ncols: usize,
    mut rows: Vec<SparseRow<R::Elem>>,
) -> Elimination<R::Elem> {
    let mut alive = vec![true; rows.len()];
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); ncols];
    let mut col_count = vec![0usize; ncols];
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c].push(r);
            col_count[*c] += 1;
        }
    }
    let mut done = vec![false; ncols];
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..ncols)
        .filter(|&c| col_count[c] > 0)
        .map(|c| Reverse((col_count[c], c)))
        .collect();
    let mut pivots = 0;
    let mut touched: Vec<usize> = Vec::new();

    loop {
        while let Some(Reverse((count, c))) = heap.pop() {
            if done[c] || count != col_count[c] || count == 0 {
                continue;
            }
            let list = &mut col_rows[c];
            list.sort_unstable();
            list.dedup();
            list.retain(|&r| alive[r] && find(&rows[r], c).is_some());
            debug_assert_eq!(list.len(), count);

            let mut best: Option<(usize, usize)> = None;
            for &r in list.iter() {
                let v = &rows[r][find(&rows[r], c).expect("row holds column")].1;
                if ring.is_unit(v) && best.map_or(true, |(_, len)| rows[r].len() < len) {
                    best = Some((r, rows[r].len()));
                }
            }
            // No unit here; revisited only if the column changes or in the
            // final sweep.
            let Some((p, _)) = best else { continue };

            let prow = std::mem::take(&mut rows[p]);
            alive[p] = false;
            let inv = ring.unit_inverse(&prow[find(&prow, c).expect("pivot present")].1);
            let others: Vec<usize> = col_rows[c].iter().copied().filter(|&r| r != p).collect();
            for r in others {
                let f = ring.mul(&rows[r][find(&rows[r], c).expect("row holds column")].1, &inv);
                let old = std::mem::take(&mut rows[r]);
                rows[r] = sub_scaled(ring, old, &f, &prow, |col, added| {
                    if added {
                        col_rows[col].push(r);
                        col_count[col] += 1;
                    } else {
                        col_count[col] -= 1;
                    }
                    touched.push(col);
                });
            }
            for (col, _) in &prow {
                col_count[*col] -= 1;
                touched.push(*col);
            }
            done[c] = true;
            col_rows[c].clear();
            pivots += 1;
            touched.sort_unstable();
            touched.dedup();
            for &col in &touched {
                if !done[col] && col_count[col] > 0 {
                    heap.push(Reverse((col_count[col], col)));
                }
            }
            touched.clear();
        }
        // Values can change without counts changing; sweep once more for
        // columns that acquired a unit.
        let mut again = false;
        for c in 0..ncols {
            if done[c] || col_count[c] == 0 {
                continue;
            }
            let has_unit = col_rows[c]
                .iter()
                .any(|&r| alive[r] && find(&rows[r], c).is_some_and(|i| ring.is_unit(&rows[r][i].1)));
            if has_unit {
                heap.push(Reverse((col_count[c], c)));
                again = true;
            }
        }
        if !again {
            break;
        }
    }

    let remainder = rows
        .into_iter()
        .zip(alive)
        .filter(|(row, a)| *a && !row.is_empty())
        .map(|(row, _)| row)
        .collect();
    Elimination { pivots, remainder }
}

fn find<E>(row: &[(usize, E)], c: usize) -> Option<usize> {
    row.binary_search_by_key(&c, |e| e.0).ok()
}

/// `a - f * b` for sorted sparse rows, reporting each column that appears
/// (`true`) or vanishes (`false`).
fn sub_scaled<R: Ring>(
    ring: &R,
    a: SparseRow<R::Elem>,
    f: &R::Elem,
    b: &[(usize, R::Elem)],
    mut report: impl FnMut(usize, bool),
) -> SparseRow<R::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ai = a.into_iter().peekable();
    let mut bi = b.iter().peekable();
    loop {
        match (ai.peek(), bi.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(ai.next().expect("peeked")),
            (None, Some(_)) => {
                let (c, v) = bi.next().expect("peeked");
                out.push((*c, ring.neg(&ring.mul(f, v))));
                report(*c, true);
            }
            (Some((ca, _)), Some((cb, _))) => {
                if ca < cb {
                    out.push(ai.next().expect("peeked"));
                } else if cb < ca {
                    let (c, v) = bi.next().expect("peeked");
                    out.push((*c, ring.neg(&ring.mul(f, v))));
                    report(*c, true);
                } else {
                    let (c, va) = ai.next().expect("peeked");
                    let (_, vb) = bi.next().expect("peeked");
                    let v = ring.sub(&va, &ring.mul(f, vb));
                    if ring.is_zero(&v) {
                        report(c, false);
                    } else {
                        out.push((c, v));
                    }
                }
            }
        }
    }
    out
}
