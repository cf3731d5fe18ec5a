//! Sparse vectors over a field, incremental echelon bases, kernels and
//! explicit homology bases (cycle representatives plus a coordinate map).

use std::collections::HashMap;

use super::ring::{Field, Ring};
use super::SparseMatrix;

/// Sorted `(index, value)` pairs with no zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// `a + f * b`.
pub fn axpy<F: Ring>(
    field: &F,
    a: &[(usize, F::Elem)],
    f: &F::Elem,
    b: &[(usize, F::Elem)],
) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = field.mul(f, &b[j].1);
            if !field.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = field.add(&a[i].1, &field.mul(f, &b[j].1));
            if !field.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Column `c` of an integer matrix mapped into the field.
pub fn column<F: Ring>(field: &F, m: &SparseMatrix, c: usize) -> SparseVec<F::Elem> {
    m.column(c)
        .iter()
        .map(|(r, v)| (*r, field.from_int(v)))
        .filter(|(_, v)| !field.is_zero(v))
        .collect()
}

/// `m * x` for an integer matrix and a field vector.
pub fn apply<F: Ring>(field: &F, m: &SparseMatrix, x: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    let mut acc: SparseVec<F::Elem> = Vec::new();
    for (c, coeff) in x {
        acc = axpy(field, &acc, coeff, &column(field, m, *c));
    }
    acc
}

/// Echelon basis keyed by leading (smallest) index. Each stored vector
/// carries a label: a sparse combination in some auxiliary coordinate space.
pub struct Echelon<F: Field> {
    field: F,
    by_pivot: HashMap<usize, usize>,
    vectors: Vec<(SparseVec<F::Elem>, SparseVec<F::Elem>)>,
}

impl<F: Field + Clone> Echelon<F> {
    pub fn new(field: F) -> Self {
        Echelon {
            field,
            by_pivot: HashMap::new(),
            vectors: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Subtracts basis vectors while the leading index is a pivot, applying
    /// the same combination to the labels: returns
    /// `(v - sum(alpha_w * w), label - sum(alpha_w * label_w))`.
    pub fn reduce(
        &self,
        mut v: SparseVec<F::Elem>,
        mut label: SparseVec<F::Elem>,
    ) -> (SparseVec<F::Elem>, SparseVec<F::Elem>) {
        let f = &self.field;
        while let Some((lead, val)) = v.first() {
            let Some(&slot) = self.by_pivot.get(lead) else {
                break;
            };
            let (w, wl) = &self.vectors[slot];
            let minus_alpha = f.neg(&f.mul(val, &f.unit_inverse(&w[0].1)));
            v = axpy(f, &v, &minus_alpha, w);
            if !wl.is_empty() {
                label = axpy(f, &label, &minus_alpha, wl);
            }
        }
        (v, label)
    }

    /// Inserts a vector already reduced by [`Echelon::reduce`].
    pub fn insert_reduced(&mut self, v: SparseVec<F::Elem>, label: SparseVec<F::Elem>) {
        let lead = v.first().expect("inserting a zero vector").0;
        debug_assert!(!self.by_pivot.contains_key(&lead));
        self.by_pivot.insert(lead, self.vectors.len());
        self.vectors.push((v, label));
    }

    /// Reduces and inserts; returns false when `v` was already in the span.
    pub fn insert(&mut self, v: SparseVec<F::Elem>) -> bool {
        let (r, l) = self.reduce(v, Vec::new());
        if r.is_empty() {
            return false;
        }
        self.insert_reduced(r, l);
        true
    }
}

/// Kernel basis of `m` over the field, one vector per dependent column, in
/// column order.
pub fn kernel_basis<F: Field + Clone>(field: &F, m: &SparseMatrix) -> Vec<SparseVec<F::Elem>> {
    let mut ech = Echelon::new(field.clone());
    let mut out = Vec::new();
    for c in 0..m.cols() {
        let (r, l) = ech.reduce(column(field, m, c), vec![(c, field.one())]);
        if r.is_empty() {
            out.push(l);
        } else {
            ech.insert_reduced(r, l);
        }
    }
    out
}

/// Homology of `C_{k+1} -> C_k -> C_{k-1}` over a field with chosen cycle
/// representatives and a coordinate map.
pub struct HomologyBasis<F: Field> {
    field: F,
    chain_dim: usize,
    reps: Vec<SparseVec<F::Elem>>,
    echelon: Echelon<F>,
}

impl<F: Field + Clone> HomologyBasis<F> {
    /// `d_in: C_{k+1} -> C_k`, `d_out: C_k -> C_{k-1}`.
    pub fn new(field: &F, d_in: &SparseMatrix, d_out: &SparseMatrix) -> Self {
        assert_eq!(d_in.rows(), d_out.cols(), "d_in and d_out do not compose");
        let mut echelon = Echelon::new(field.clone());
        for c in 0..d_in.cols() {
            echelon.insert(column(field, d_in, c));
        }
        let mut reps = Vec::new();
        for z in kernel_basis(field, d_out) {
            // Labels live in class coordinates: boundaries carry the zero
            // label and the new representative carries e_i.
            let i = reps.len();
            let (r, label) = echelon.reduce(z.clone(), vec![(i, field.one())]);
            if r.is_empty() {
                continue;
            }
            reps.push(z);
            echelon.insert_reduced(r, label);
        }
        HomologyBasis {
            field: field.clone(),
            chain_dim: d_out.cols(),
            reps,
            echelon,
        }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn chain_dim(&self) -> usize {
        self.chain_dim
    }

    pub fn representatives(&self) -> &[SparseVec<F::Elem>] {
        &self.reps
    }

    /// Class coordinates of a cycle, or `None` when `c` is not in the span
    /// of cycles (i.e. not a cycle).
    pub fn coordinates(&self, c: SparseVec<F::Elem>) -> Option<Vec<F::Elem>> {
        // c = sum(alpha w), so its class is minus the reduced label.
        let (r, label) = self.echelon.reduce(c, Vec::new());
        if !r.is_empty() {
            return None;
        }
        let mut out = vec![self.field.zero(); self.reps.len()];
        for (i, v) in label {
            out[i] = self.field.neg(&v);
        }
        Some(out)
    }
}

/// Dense matrix over a field, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldMatrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<E>>,
}

impl<E: Clone> FieldMatrix<E> {
    pub fn from_columns(rows: usize, columns: Vec<Vec<E>>, zero: E) -> Self {
        let cols = columns.len();
        let mut entries = vec![vec![zero; cols]; rows];
        for (j, col) in columns.into_iter().enumerate() {
            for (i, x) in col.into_iter().enumerate() {
                entries[i][j] = x;
            }
        }
        FieldMatrix { rows, cols, entries }
    }

    pub fn mul<F: Ring<Elem = E>>(&self, field: &F, rhs: &FieldMatrix<E>) -> FieldMatrix<E> {
        assert_eq!(self.cols, rhs.rows);
        let entries = (0..self.rows)
            .map(|i| {
                (0..rhs.cols)
                    .map(|j| {
                        (0..self.cols).fold(field.zero(), |acc, k| {
                            field.add(&acc, &field.mul(&self.entries[i][k], &rhs.entries[k][j]))
                        })
                    })
                    .collect()
            })
            .collect();
        FieldMatrix {
            rows: self.rows,
            cols: rhs.cols,
            entries,
        }
    }

    pub fn transpose(&self) -> FieldMatrix<E> {
        let entries = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.entries[i][j].clone()).collect())
            .collect();
        FieldMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn is_zero<F: Ring<Elem = E>>(&self, field: &F) -> bool {
        self.entries.iter().flatten().all(|x| field.is_zero(x))
    }

    pub fn rank<F: Field<Elem = E> + Clone>(&self, field: &F) -> usize {
        let mut ech = Echelon::new(field.clone());
        let mut rank = 0;
        for j in 0..self.cols {
            let v: SparseVec<E> = (0..self.rows)
                .filter(|&i| !field.is_zero(&self.entries[i][j]))
                .map(|i| (i, self.entries[i][j].clone()))
                .collect();
            if ech.insert(v) {
                rank += 1;
            }
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ring::{PrimeField, Rationals};
    use num_rational::BigRational;

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = SparseMatrix::from_dense(&[vec![1, 2, 3, 0], vec![2, 4, 6, 1]]);
        let q = Rationals;
        let k = kernel_basis(&q, &m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(apply(&q, &m, v).is_empty());
        }
        let f2 = PrimeField::new(2).unwrap();
        let k2 = kernel_basis(&f2, &m);
        assert_eq!(k2.len(), 2);
        for v in &k2 {
            assert!(apply(&f2, &m, v).is_empty());
        }
    }

    #[test]
    fn triangle_boundary_homology() {
        // Vertices 0,1,2; edges 01, 12, 02.
        let d1 = SparseMatrix::from_dense(&[vec![-1, 0, -1], vec![1, -1, 0], vec![0, 1, 1]]);
        let q = Rationals;
        let h1 = HomologyBasis::new(&q, &SparseMatrix::zeros(3, 0), &d1);
        assert_eq!(h1.dim(), 1);
        let z = h1.representatives()[0].clone();
        let twice: SparseVec<BigRational> = z
            .iter()
            .map(|(i, v)| (*i, v * BigRational::from_integer(2.into())))
            .collect();
        assert_eq!(
            h1.coordinates(twice),
            Some(vec![BigRational::from_integer(2.into())])
        );
        assert_eq!(
            h1.coordinates(vec![(0, BigRational::from_integer(1.into()))]),
            None
        );

        let h0 = HomologyBasis::new(&q, &d1, &SparseMatrix::zeros(0, 3));
        assert_eq!(h0.dim(), 1);
        let c = h0
            .coordinates(vec![(2, BigRational::from_integer(1.into()))])
            .unwrap();
        assert_eq!(c, vec![BigRational::from_integer(1.into())]);
    }
}
