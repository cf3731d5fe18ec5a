//! Reduced path homology of graphs, computed two ways: from magnitude
//! homology through the maps induced by `δ′` on the diagonal, and directly
//! from the allowed paths of the double orientation.

mod derived;
mod glmy;

pub use derived::{induced_delta_prime, DerivedComplex};
pub use glmy::{path_homology_direct, path_homology_direct_capped, AllowedPaths, DEFAULT_PATH_DEGREE_CAP};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{Coefficients, Field, PrimeField, Rationals};

fn via_mh<F: Field + Clone + Send + Sync>(g: &Graph, k: usize, field: &F) -> Result<usize> {
    Ok(DerivedComplex::new(g, 0, k + 1, field)?.homology_dim(k, true))
}

/// Reduced `PH_k(g)` as the homology of the diagonal
/// `MH_{k+1,k+1} -> MH_{k,k} -> MH_{k-1,k-1}` under `δ′`. Field coefficients only.
pub fn path_homology_via_mh(g: &Graph, k: usize, coeff: Coefficients) -> Result<usize> {
    match coeff {
        Coefficients::Q => via_mh(g, k, &Rationals),
        Coefficients::Fp(p) => via_mh(g, k, &PrimeField::new(u64::from(p))?),
        Coefficients::Z => Err(Error::UnsupportedCoefficients(coeff.to_string())),
    }
}

/// One row of the comparison between the two constructions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathComparison {
    pub k: usize,
    pub field: String,
    pub via_mh: usize,
    pub direct: usize,
    pub agree: bool,
}

/// Compares `path_homology_via_mh(g, k)` with the direct computation in
/// degree `k + shift` (zero in negative degrees).
pub fn compare_path_homology(
    g: &Graph,
    k: usize,
    coeff: Coefficients,
    shift: isize,
) -> Result<PathComparison> {
    let via = path_homology_via_mh(g, k, coeff)?;
    let direct = match k.checked_add_signed(shift) {
        Some(j) => path_homology_direct(g, j, coeff)?.free_rank,
        None => 0,
    };
    Ok(PathComparison {
        k,
        field: coeff.to_string(),
        via_mh: via,
        direct,
        agree: via == direct,
    })
}

/// Shifts tried by [`calibrate_degree_shift`], in order.
pub const CANDIDATE_SHIFTS: [isize; 5] = [0, -1, 1, -2, 2];

/// The first constant shift `s` with `via_mh(k) = direct(k + s)` for every
/// graph in `graphs` and every `k <= k_max`, or `None` if no candidate
/// aligns the two. The calibration set should contain a graph with nonzero
/// reduced path homology, or every shift matches.
pub fn calibrate_degree_shift(graphs: &[Graph], k_max: usize, coeff: Coefficients) -> Result<Option<isize>> {
    for s in CANDIDATE_SHIFTS {
        let mut ok = true;
        'graphs: for g in graphs {
            for k in 0..=k_max {
                if !compare_path_homology(g, k, coeff, s)?.agree {
                    ok = false;
                    break 'graphs;
                }
            }
        }
        if ok {
            return Ok(Some(s));
        }
    }
    Ok(None)
}
