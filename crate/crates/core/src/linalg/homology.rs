use serde::{Deserialize, Serialize};

use super::elim::eliminate;
use super::ring::{Coefficients, PrimeField};
use super::smith::{rational_rank, smith_normal_form};
use super::{Int, SparseMatrix};
use crate::error::{LinalgError, LinalgResult};

/// Free rank and torsion of one homology group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySummary {
    pub free_rank: usize,
    /// Invariant factors greater than one; always empty over a field.
    pub torsion: Vec<Int>,
    pub coeff: Coefficients,
}

impl HomologySummary {
    pub fn zero(coeff: Coefficients) -> Self {
        HomologySummary {
            free_rank: 0,
            torsion: Vec::new(),
            coeff,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Largest invariant factor, or one when there is no torsion.
    pub fn exponent(&self) -> Int {
        self.torsion.iter().max().cloned().unwrap_or(Int::ONE)
    }
}

/// Rank over `Q` or `F_p`. Over `Z` this is the rational rank.
pub fn rank(a: &SparseMatrix, coeff: Coefficients) -> LinalgResult<usize> {
    match coeff {
        Coefficients::Z | Coefficients::Q => Ok(rational_rank(a)),
        Coefficients::Fp(p) => {
            let f = PrimeField::new(u64::from(p))?;
            Ok(eliminate(&f, a).pivots)
        }
    }
}

/// Homology at the middle of `C_{k+1} --d_in--> C_k --d_out--> C_{k-1}`.
///
/// Over `Z` the torsion is read off the Smith form of `d_in` alone: the
/// kernel of `d_out` is a saturated sublattice containing the image of
/// `d_in`, so the cokernel of `d_in` into it has the same torsion as the
/// cokernel into `C_k`.
pub fn homology_of_pair(
    d_in: &SparseMatrix,
    d_out: &SparseMatrix,
    coeff: Coefficients,
) -> LinalgResult<HomologySummary> {
    if d_in.rows() != d_out.cols() {
        return Err(LinalgError::DimensionMismatch(format!(
            "d_in is {}x{} but d_out is {}x{}",
            d_in.rows(),
            d_in.cols(),
            d_out.rows(),
            d_out.cols()
        )));
    }
    let product = d_out.mul(d_in)?;
    let modulus = coeff.prime().map_or(0, u64::from);
    let nonzero = product.count_nonzero_mod(modulus);
    if nonzero > 0 {
        return Err(LinalgError::NotAComplex {
            rows: product.rows(),
            cols: product.cols(),
            nonzero,
        });
    }
    let dim = d_in.rows();
    match coeff {
        Coefficients::Z => {
            let form = smith_normal_form(d_in);
            let r_out = rational_rank(d_out);
            Ok(HomologySummary {
                free_rank: dim - r_out - form.rank(),
                torsion: form.torsion(),
                coeff,
            })
        }
        _ => {
            let r_in = rank(d_in, coeff)?;
            let r_out = rank(d_out, coeff)?;
            Ok(HomologySummary {
                free_rank: dim - r_out - r_in,
                torsion: Vec::new(),
                coeff,
            })
        }
    }
}
