use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::linalg::field::FieldMatrix;
use crate::linalg::Field;
use crate::magnitude::{for_each_face, Chain, ClassBasis};

/// Chain-level `δ′` applied to a chain of `(k+1)`-tuples.
pub(crate) fn apply_delta_prime<F: Field>(
    field: &F,
    d: &DistanceMatrix,
    chain: &Chain<F::Elem>,
) -> Chain<F::Elem> {
    let mut out: Chain<F::Elem> = Chain::new();
    let mut face = Vec::new();
    for (t, x) in chain {
        let neg = field.neg(x);
        for_each_face(d, t, 1, true, &mut face, |f, i| {
            let term = if i % 2 == 0 { x } else { &neg };
            match out.get_mut(f) {
                Some(acc) => *acc = field.add(acc, term),
                None => {
                    out.insert(f.to_vec(), term.clone());
                }
            }
        });
    }
    out.retain(|_, x| !field.is_zero(x));
    out
}

/// Matrix of the map `MH_{k,l} -> MH_{k-1,l-1}` induced by `δ′`, in the
/// class bases of `src` and `dst`.
pub(crate) fn induced_between<F>(
    field: &F,
    d: &DistanceMatrix,
    src: &ClassBasis<F>,
    dst: &ClassBasis<F>,
) -> Result<FieldMatrix<F::Elem>>
where
    F: Field + Clone + Send + Sync,
{
    let columns = src
        .representatives()
        .iter()
        .map(|rep| {
            dst.coordinates(&apply_delta_prime(field, d, rep))
                .ok_or(Error::NotACycleAfterDeltaPrime {
                    k: src.k(),
                    l: src.l(),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FieldMatrix::from_columns(dst.dim(), columns, field.zero()))
}

/// `δ′_*: MH_{k,l} -> MH_{k-1,l-1}` over a field.
pub fn induced_delta_prime<F>(g: &Graph, k: usize, l: usize, field: &F) -> Result<FieldMatrix<F::Elem>>
where
    F: Field + Clone + Send + Sync,
{
    assert!(k >= 1 && l >= 1, "δ′ needs k, l >= 1");
    let d = g.distance_matrix();
    let src = ClassBasis::homology(&d, k, l, field);
    let dst = ClassBasis::homology(&d, k - 1, l - 1, field);
    induced_between(field, &d, &src, &dst)
}

/// The line `MH_{k, k+offset}`, `k = 0..=top`, with the maps induced by `δ′`.
pub struct DerivedComplex<F: Field> {
    field: F,
    offset: usize,
    dims: Vec<usize>,
    /// `maps[k - 1]` is `MH_{k,k+offset} -> MH_{k-1,k-1+offset}`.
    maps: Vec<FieldMatrix<F::Elem>>,
}

impl<F> DerivedComplex<F>
where
    F: Field + Clone + Send + Sync,
{
    pub fn new(g: &Graph, offset: usize, top: usize, field: &F) -> Result<Self> {
        let d = g.distance_matrix();
        let bases: Vec<ClassBasis<F>> = (0..=top)
            .map(|k| ClassBasis::homology(&d, k, k + offset, field))
            .collect();
        let maps = (1..=top)
            .map(|k| induced_between(field, &d, &bases[k], &bases[k - 1]))
            .collect::<Result<Vec<_>>>()?;
        Ok(DerivedComplex {
            field: field.clone(),
            offset,
            dims: bases.iter().map(ClassBasis::dim).collect(),
            maps,
        })
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, k: usize) -> usize {
        self.dims[k]
    }

    /// The induced map out of degree `k >= 1`.
    pub fn map(&self, k: usize) -> &FieldMatrix<F::Elem> {
        &self.maps[k - 1]
    }

    /// Whether every pair of consecutive maps composes to zero.
    pub fn composes_to_zero(&self) -> bool {
        self.maps
            .windows(2)
            .all(|w| w[0].mul(&self.field, &w[1]).is_zero(&self.field))
    }

    /// Homology at degree `k < top`. With `reduced`, degree zero is taken
    /// modulo the augmentation that sends every vertex class to one (this
    /// only makes sense on the diagonal).
    pub fn homology_dim(&self, k: usize, reduced: bool) -> usize {
        assert!(k < self.top(), "degree {k} needs the map out of degree {}", k + 1);
        let rank_out = if k == 0 {
            usize::from(reduced && self.dims[0] > 0)
        } else {
            self.map(k).rank(&self.field)
        };
        self.dims[k] - rank_out - self.map(k + 1).rank(&self.field)
    }
}
