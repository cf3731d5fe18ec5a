//! Maps induced by contractions on magnitude chains, homology and
//! cohomology, and the decomposition of vertex indicators used to show the
//! vertex module is finitely generated.

mod decompose;

pub use decompose::{edge_function, vertex_generator_decomposition, VertexDecomposition};

use crate::error::Result;
use crate::graph::ContractionMorphism;
use crate::linalg::field::FieldMatrix;
use crate::linalg::{Field, Int, SparseMatrix};
use crate::magnitude::{Chain, ClassBasis, MagnitudeBasis};

/// Image of a tuple under the vertex map when it stays in `MC_{k,l}` of the
/// target, i.e. has no consecutive repeats and keeps its length.
fn push_tuple(
    phi: &ContractionMorphism,
    t: &[usize],
    l: usize,
    d_target: &crate::graph::DistanceMatrix,
) -> Option<Vec<usize>> {
    let image: Vec<usize> = t.iter().map(|&v| phi.vertex_map()[v]).collect();
    if image.windows(2).any(|w| w[0] == w[1]) || d_target.tuple_length(&image) as usize != l {
        return None;
    }
    Some(image)
}

/// `φ_#: MC_{k,l}(source) -> MC_{k,l}(target)`.
pub fn induced_chain_map(phi: &ContractionMorphism, k: usize, l: usize) -> SparseMatrix {
    let ds = phi.source().distance_matrix();
    let dt = phi.target().distance_matrix();
    let src = MagnitudeBasis::from_metric(&ds, k, l);
    let dst = MagnitudeBasis::from_metric(&dt, k, l);
    let triplets = src.iter().enumerate().filter_map(|(c, t)| {
        let image = push_tuple(phi, t, l, &dt)?;
        let r = dst
            .index_of(&image)
            .expect("image tuple lies in the target basis");
        Some((r, c, Int::ONE))
    });
    SparseMatrix::from_triplets(dst.len(), src.len(), triplets)
}

/// `φ_*: MH_{k,l}(source) -> MH_{k,l}(target)` over a field, in the class
/// bases chosen by [`ClassBasis::homology`].
pub fn induced_on_homology<F>(
    phi: &ContractionMorphism,
    k: usize,
    l: usize,
    field: &F,
) -> Result<FieldMatrix<F::Elem>>
where
    F: Field + Clone + Send + Sync,
{
    let ds = phi.source().distance_matrix();
    let dt = phi.target().distance_matrix();
    let src = ClassBasis::homology(&ds, k, l, field);
    let dst = ClassBasis::homology(&dt, k, l, field);
    let columns = src
        .representatives()
        .into_iter()
        .map(|rep| {
            let mut image: Chain<F::Elem> = Chain::new();
            for (t, x) in rep {
                if let Some(u) = push_tuple(phi, &t, l, &dt) {
                    let acc = image.entry(u).or_insert_with(|| field.zero());
                    *acc = field.add(acc, &x);
                }
            }
            image.retain(|_, x| !field.is_zero(x));
            dst.coordinates(&image)
                .expect("a chain map sends cycles to cycles")
        })
        .collect();
    Ok(FieldMatrix::from_columns(dst.dim(), columns, field.zero()))
}

/// `φ^*: MH^k_l(target) -> MH^k_l(source)` over a field: a cocycle `c` on
/// the target pulls back to `t -> c(φ(t))`.
pub fn induced_on_cohomology<F>(
    phi: &ContractionMorphism,
    k: usize,
    l: usize,
    field: &F,
) -> Result<FieldMatrix<F::Elem>>
where
    F: Field + Clone + Send + Sync,
{
    let ds = phi.source().distance_matrix();
    let dt = phi.target().distance_matrix();
    let src = ClassBasis::cohomology(&ds, k, l, field);
    let dst = ClassBasis::cohomology(&dt, k, l, field);
    let tuples = MagnitudeBasis::from_metric(&ds, k, l);
    let images: Vec<Option<Vec<usize>>> = tuples.iter().map(|t| push_tuple(phi, t, l, &dt)).collect();
    let columns = dst
        .representatives()
        .into_iter()
        .map(|rep| {
            let pulled: Chain<F::Elem> = tuples
                .iter()
                .zip(&images)
                .filter_map(|(t, image)| Some((t.to_vec(), rep.get(image.as_ref()?)?.clone())))
                .collect();
            src.coordinates(&pulled)
                .expect("pullback of a cocycle is a cocycle")
        })
        .collect();
    Ok(FieldMatrix::from_columns(src.dim(), columns, field.zero()))
}
