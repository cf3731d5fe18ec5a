//! Magnitude chain complexes of graphs, their homology and cohomology, the
//! magnitude power series and the Euler characteristic check.

mod basis;
mod classes;
mod series;

pub use basis::MagnitudeBasis;
pub(crate) use basis::{face_matrix, for_each_face};
pub use classes::{Chain, ClassBasis};
pub use series::{euler_check, magnitude_series, EulerReport, SeriesCoefficients};

use rayon::prelude::*;

use crate::error::Result;
use crate::graph::{DistanceMatrix, Graph};
use crate::linalg::{homology_of_pair, Coefficients, HomologySummary, SparseMatrix};

/// `δ: MC_{k,l} -> MC_{k-1,l}`, the alternating sum of the interior faces
/// that keep the length. For `k = 0` this is the zero map to the zero module.
pub fn boundary_delta(g: &Graph, k: usize, l: usize) -> SparseMatrix {
    let d = g.distance_matrix();
    delta_between(
        &d,
        &MagnitudeBasis::from_metric(&d, k, l),
        k.checked_sub(1).map(|j| MagnitudeBasis::from_metric(&d, j, l)),
    )
}

/// `δ′: MC_{k,l} -> MC_{k-1,l-1}`, the alternating sum of all faces,
/// endpoints included, that shorten the tuple by exactly one.
pub fn boundary_delta_prime(g: &Graph, k: usize, l: usize) -> SparseMatrix {
    assert!(k >= 1 && l >= 1, "δ′ needs k, l >= 1");
    let d = g.distance_matrix();
    let src = MagnitudeBasis::from_metric(&d, k, l);
    let dst = MagnitudeBasis::from_metric(&d, k - 1, l - 1);
    face_matrix(&d, &src, &dst, 1, true)
}

fn delta_between(d: &DistanceMatrix, src: &MagnitudeBasis, dst: Option<MagnitudeBasis>) -> SparseMatrix {
    match dst {
        Some(dst) => face_matrix(d, src, &dst, 0, false),
        None => SparseMatrix::zeros(0, src.len()),
    }
}

/// The middle basis and the two differentials `(δ_{k+1}, δ_k)` around
/// `MC_{k,l}` in one endpoint block, or `None` when the block is empty.
pub(crate) fn block_pair(
    d: &DistanceMatrix,
    k: usize,
    l: usize,
    a: usize,
    b: usize,
) -> Option<(MagnitudeBasis, SparseMatrix, SparseMatrix)> {
    let mid = MagnitudeBasis::block(d, k, l, a, b);
    if mid.is_empty() {
        return None;
    }
    let above = MagnitudeBasis::block(d, k + 1, l, a, b);
    let below = k.checked_sub(1).map(|j| MagnitudeBasis::block(d, j, l, a, b));
    let d_in = face_matrix(d, &above, &mid, 0, false);
    let d_out = delta_between(d, &mid, below);
    Some((mid, d_in, d_out))
}

/// Endpoint pairs `(a, b)` that can carry tuples of length `l`.
pub(crate) fn blocks(d: &DistanceMatrix, k: usize, l: usize) -> Vec<(usize, usize)> {
    let n = d.len();
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| (d.get(a, b) as usize) <= l && (k > 0 || a == b))
        .collect()
}

fn blockwise<F>(g: &Graph, k: usize, l: usize, coeff: Coefficients, per_block: F) -> Result<HomologySummary>
where
    F: Fn(SparseMatrix, SparseMatrix) -> Result<HomologySummary> + Sync,
{
    let d = g.distance_matrix();
    let parts: Vec<HomologySummary> = blocks(&d, k, l)
        .into_par_iter()
        .filter_map(|(a, b)| block_pair(&d, k, l, a, b))
        .map(|(_, d_in, d_out)| per_block(d_in, d_out))
        .collect::<Result<_>>()?;
    let mut total = HomologySummary::zero(coeff);
    for part in parts {
        total.free_rank += part.free_rank;
        total.torsion.extend(part.torsion);
    }
    total.torsion.sort();
    Ok(total)
}

/// `MH_{k,l}(g)` with the given coefficients, computed block by block over
/// endpoint pairs.
pub fn magnitude_homology(g: &Graph, k: usize, l: usize, coeff: Coefficients) -> Result<HomologySummary> {
    blockwise(g, k, l, coeff, |d_in, d_out| {
        Ok(homology_of_pair(&d_in, &d_out, coeff)?)
    })
}

/// `MH^k_l(g)`: cohomology of the dual complex.
pub fn magnitude_cohomology(g: &Graph, k: usize, l: usize, coeff: Coefficients) -> Result<HomologySummary> {
    blockwise(g, k, l, coeff, |d_in, d_out| {
        Ok(homology_of_pair(&d_out.transpose(), &d_in.transpose(), coeff)?)
    })
}
