use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::magnitude_homology;
use crate::error::Result;
use crate::graph::Graph;
use crate::linalg::Coefficients;

/// Coefficients `c_0, ..., c_L` of the magnitude power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesCoefficients {
    pub coeffs: Vec<BigRational>,
}

/// Sum of the entries of `Z(q)^{-1}` with `Z = I + M`, `M_ij = q^{d(i,j)}`
/// off the diagonal, expanded as `sum_j (-M)^j` and truncated at degree
/// `max_degree`.
pub fn magnitude_series(g: &Graph, max_degree: usize) -> SeriesCoefficients {
    let d = g.distance_matrix();
    let n = d.len();
    let len = max_degree + 1;
    let zero = BigRational::zero();
    let mut w: Vec<Vec<BigRational>> = vec![
        {
            let mut p = vec![zero.clone(); len];
            p[0] = BigRational::from_integer(BigInt::from(1));
            p
        };
        n
    ];
    let mut total = vec![zero.clone(); len];
    // Each application of M raises the lowest degree by at least one.
    for _ in 0..len {
        for p in &w {
            for (t, x) in total.iter_mut().zip(p) {
                *t += x;
            }
        }
        let mut next = vec![vec![zero.clone(); len]; n];
        for (i, out) in next.iter_mut().enumerate() {
            for (j, p) in w.iter().enumerate() {
                if i == j {
                    continue;
                }
                let shift = d.get(i, j) as usize;
                for e in 0..len.saturating_sub(shift) {
                    if !p[e].is_zero() {
                        out[e + shift] -= &p[e];
                    }
                }
            }
        }
        w = next;
    }
    SeriesCoefficients { coeffs: total }
}

/// Both sides of the Euler characteristic identity in one length degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerReport {
    pub l: usize,
    /// `rank MH_{k,l}(g; Q)` for `k = 0..=l`.
    pub ranks: Vec<usize>,
    pub alternating_sum: BigInt,
    pub series_coefficient: BigRational,
    pub holds: bool,
}

/// Compares `sum_k (-1)^k rank MH_{k,l}(g; Q)` with the series coefficient
/// `c_l`. Ranks vanish for `k > l`, so the sum stops there.
pub fn euler_check(g: &Graph, l: usize) -> Result<EulerReport> {
    let ranks = (0..=l)
        .map(|k| Ok(magnitude_homology(g, k, l, Coefficients::Q)?.free_rank))
        .collect::<Result<Vec<_>>>()?;
    let alternating_sum: BigInt = ranks
        .iter()
        .enumerate()
        .map(|(k, &r)| {
            if k % 2 == 0 {
                BigInt::from(r)
            } else {
                -BigInt::from(r)
            }
        })
        .sum();
    let series_coefficient = magnitude_series(g, l).coeffs[l].clone();
    let holds = BigRational::from_integer(alternating_sum.clone()) == series_coefficient;
    Ok(EulerReport {
        l,
        ranks,
        alternating_sum,
        series_coefficient,
        holds,
    })
}
