use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{block_pair, blocks, MagnitudeBasis};
use crate::graph::DistanceMatrix;
use crate::linalg::field::{HomologyBasis, SparseVec};
use crate::linalg::Field;

/// A chain or cochain as a map from tuples to nonzero coefficients.
pub type Chain<E> = BTreeMap<Vec<usize>, E>;

/// Explicit basis of `MH_{k,l}` (or `MH^k_l`) over a field: one homology
/// basis per endpoint block, concatenated in block order.
pub struct ClassBasis<F: Field> {
    k: usize,
    l: usize,
    field: F,
    blocks: Vec<ClassBlock<F>>,
    dim: usize,
}

struct ClassBlock<F: Field> {
    ends: (usize, usize),
    tuples: MagnitudeBasis,
    homology: HomologyBasis<F>,
    offset: usize,
}

impl<F> ClassBasis<F>
where
    F: Field + Clone + Send + Sync,
{
    pub fn homology(d: &DistanceMatrix, k: usize, l: usize, field: &F) -> Self {
        Self::build(d, k, l, field, false)
    }

    /// Classes of the dual complex. Cochains are written in the same tuple
    /// coordinates as chains.
    pub fn cohomology(d: &DistanceMatrix, k: usize, l: usize, field: &F) -> Self {
        Self::build(d, k, l, field, true)
    }

    fn build(d: &DistanceMatrix, k: usize, l: usize, field: &F, dual: bool) -> Self {
        let built: Vec<ClassBlock<F>> = blocks(d, k, l)
            .into_par_iter()
            .filter_map(|(a, b)| {
                let (tuples, d_in, d_out) = block_pair(d, k, l, a, b)?;
                let homology = if dual {
                    HomologyBasis::new(field, &d_out.transpose(), &d_in.transpose())
                } else {
                    HomologyBasis::new(field, &d_in, &d_out)
                };
                Some(ClassBlock {
                    ends: (a, b),
                    tuples,
                    homology,
                    offset: 0,
                })
            })
            .collect();
        let mut dim = 0;
        let blocks = built
            .into_iter()
            .map(|mut b| {
                b.offset = dim;
                dim += b.homology.dim();
                b
            })
            .collect();
        ClassBasis {
            k,
            l,
            field: field.clone(),
            blocks,
            dim,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Cycle (or cocycle) representatives in class order.
    pub fn representatives(&self) -> Vec<Chain<F::Elem>> {
        self.blocks
            .iter()
            .flat_map(|b| {
                b.homology.representatives().iter().map(|rep| {
                    rep.iter()
                        .map(|(i, x)| (b.tuples.get(*i).to_vec(), x.clone()))
                        .collect()
                })
            })
            .collect()
    }

    /// Coordinates of the class of `chain`, or `None` when `chain` is not a
    /// cycle of this bidegree.
    pub fn coordinates(&self, chain: &Chain<F::Elem>) -> Option<Vec<F::Elem>> {
        let mut per_block: BTreeMap<(usize, usize), SparseVec<F::Elem>> = BTreeMap::new();
        for (t, x) in chain {
            if self.field.is_zero(x) {
                continue;
            }
            if t.len() != self.k + 1 {
                return None;
            }
            let ends = (t[0], t[self.k]);
            let block = self
                .blocks
                .binary_search_by_key(&ends, |b| b.ends)
                .ok()
                .map(|i| &self.blocks[i])?;
            let i = block.tuples.index_of(t)?;
            per_block.entry(ends).or_default().push((i, x.clone()));
        }
        let mut out = vec![self.field.zero(); self.dim];
        for (ends, mut v) in per_block {
            let block = &self.blocks[self
                .blocks
                .binary_search_by_key(&ends, |b| b.ends)
                .expect("block seen")];
            v.sort_by_key(|e| e.0);
            let local = block.homology.coordinates(v)?;
            for (j, x) in local.into_iter().enumerate() {
                out[block.offset + j] = x;
            }
        }
        Some(out)
    }
}
