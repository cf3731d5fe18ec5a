use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::{rational_string, rational_strings};
use crate::error::{Error, Result};
use crate::graph::cycle;
use crate::linalg::Coefficients;
use crate::magnitude::magnitude_homology;

/// Which cycle lengths to sample for bidegree `(k, l)`: the fit uses
/// `m = l_multiplier * l + offset` and the next value, the remaining
/// `points - 2` lengths validate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CycleScanParams {
    pub k_max: usize,
    pub l_max: usize,
    pub l_multiplier: usize,
    pub offset: usize,
    pub points: usize,
}

impl CycleScanParams {
    pub fn new(k_max: usize, l_max: usize) -> Self {
        CycleScanParams {
            k_max,
            l_max,
            l_multiplier: 1,
            offset: 3,
            points: 5,
        }
    }

    pub fn lengths(&self, l: usize) -> Vec<usize> {
        let start = self.l_multiplier * l + self.offset;
        (start..start + self.points).collect()
    }
}

/// `rank MH_{k,l}(C_m; Q) = a m + b` fitted on the first two lengths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleFit {
    pub k: usize,
    pub l: usize,
    pub lengths: Vec<usize>,
    pub ranks: Vec<usize>,
    #[serde(serialize_with = "rational_string")]
    pub a: BigRational,
    #[serde(serialize_with = "rational_string")]
    pub b: BigRational,
    /// Whether the fit predicts every validation length exactly.
    pub linear: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleScan {
    pub params: CycleScanParams,
    pub fits: Vec<CycleFit>,
    /// `A(k) = sum_l a(k,l)` over the scanned `l`, indexed by `k`.
    #[serde(serialize_with = "rational_strings")]
    pub a_sums: Vec<BigRational>,
    #[serde(serialize_with = "rational_strings")]
    pub b_sums: Vec<BigRational>,
}

impl CycleScan {
    pub fn fit(&self, k: usize, l: usize) -> Option<&CycleFit> {
        self.fits.iter().find(|f| f.k == k && f.l == l)
    }

    /// Bidegrees whose two-point fit failed validation.
    pub fn unstable(&self) -> Vec<(usize, usize)> {
        self.fits
            .iter()
            .filter(|f| !f.linear)
            .map(|f| (f.k, f.l))
            .collect()
    }
}

/// Fits `a(k,l) m + b(k,l)` for every `k <= k_max`, `l <= l_max`.
pub fn cycle_growth_scan(params: CycleScanParams) -> Result<CycleScan> {
    if params.points < 3 {
        return Err(Error::GridTooSmall(format!(
            "{} cycle lengths leave nothing to validate a two-point fit",
            params.points
        )));
    }
    let jobs: Vec<(usize, usize, usize)> = (0..=params.k_max)
        .flat_map(|k| {
            (0..=params.l_max).flat_map(move |l| params.lengths(l).into_iter().map(move |m| (k, l, m)))
        })
        .collect();
    let ranks: Vec<usize> = jobs
        .par_iter()
        .map(|&(k, l, m)| Ok(magnitude_homology(&cycle(m)?, k, l, Coefficients::Q)?.free_rank))
        .collect::<Result<_>>()?;

    let mut fits = Vec::new();
    for (i, chunk) in ranks.chunks(params.points).enumerate() {
        let (k, l, _) = jobs[i * params.points];
        let lengths = params.lengths(l);
        let q = |x: usize| BigRational::from_integer(x.into());
        let a = q(chunk[1]) - q(chunk[0]);
        let b = q(chunk[0]) - &a * q(lengths[0]);
        let linear = lengths
            .iter()
            .zip(chunk)
            .skip(2)
            .all(|(&m, &r)| &a * q(m) + &b == q(r));
        fits.push(CycleFit {
            k,
            l,
            lengths,
            ranks: chunk.to_vec(),
            a,
            b,
            linear,
        });
    }
    let zero = BigRational::from_integer(0.into());
    let mut a_sums = vec![zero.clone(); params.k_max + 1];
    let mut b_sums = vec![zero; params.k_max + 1];
    for f in &fits {
        a_sums[f.k] += &f.a;
        b_sums[f.k] += &f.b;
    }
    Ok(CycleScan {
        params,
        fits,
        a_sums,
        b_sums,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchors() {
        let scan = cycle_growth_scan(CycleScanParams::new(1, 1)).unwrap();
        let f = scan.fit(0, 0).unwrap();
        assert_eq!((f.a.to_integer(), f.b.to_integer()), (1.into(), 0.into()));
        assert!(f.linear);
        let f = scan.fit(1, 1).unwrap();
        assert_eq!((f.a.to_integer(), f.b.to_integer()), (2.into(), 0.into()));
        assert!(f.linear);
        assert_eq!(scan.fit(0, 1).unwrap().ranks, vec![0; 5]);
    }

    #[test]
    fn too_few_points() {
        let mut p = CycleScanParams::new(1, 1);
        p.points = 2;
        assert!(matches!(cycle_growth_scan(p), Err(Error::GridTooSmall(_))));
    }
}
