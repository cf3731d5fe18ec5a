use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::polyfit::{fit_polynomial, PolyFit};
use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph};
use crate::linalg::Coefficients;
use crate::magnitude::magnitude_cohomology;

/// Smallest subdivision count used for fitting.
pub const MIN_FIT_COUNT: usize = 3;

/// Default cap on `l` in the sum `dim MH^k_*`: `2k + 4`.
pub fn default_l_cap(k: usize) -> usize {
    2 * k + 4
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubdivisionPoint {
    pub counts: Vec<usize>,
    pub vertices: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubdivisionScan {
    pub k: usize,
    pub l_cap: usize,
    pub genus: usize,
    pub points: Vec<SubdivisionPoint>,
    pub fit: PolyFit,
    /// Fit is exact and its total degree is at most `genus + 1`.
    pub within_bound: bool,
}

/// `sum_{l <= l_cap} dim MH^k_l(G(e, m); Q)` over a product grid of
/// subdivision counts, with an exact polynomial fit. Grid points with some
/// count below [`MIN_FIT_COUNT`] are computed but not fitted.
pub fn subdivision_scan(
    g: &Graph,
    edges: &[EdgeRef],
    k: usize,
    grid: &[RangeInclusive<usize>],
    l_cap: Option<usize>,
) -> Result<SubdivisionScan> {
    if grid.len() != edges.len() {
        return Err(Error::GridTooSmall(format!(
            "{} grid axes for {} edges",
            grid.len(),
            edges.len()
        )));
    }
    let l_cap = l_cap.unwrap_or_else(|| default_l_cap(k));
    let genus = g.genus();
    let mut counts: Vec<Vec<usize>> = vec![Vec::new()];
    for axis in grid {
        counts = counts
            .into_iter()
            .flat_map(|c| {
                axis.clone().map(move |m| {
                    let mut c = c.clone();
                    c.push(m);
                    c
                })
            })
            .collect();
    }
    let points: Vec<SubdivisionPoint> = counts
        .into_par_iter()
        .map(|c| {
            let h = g.subdivide(edges, &c)?;
            let dim = (0..=l_cap)
                .map(|l| Ok(magnitude_cohomology(&h, k, l, Coefficients::Q)?.free_rank))
                .sum::<Result<usize>>()?;
            Ok(SubdivisionPoint {
                counts: c,
                vertices: h.vertex_count(),
                dim,
            })
        })
        .collect::<Result<_>>()?;

    let data: BTreeMap<Vec<i64>, BigRational> = points
        .iter()
        .filter(|p| p.counts.iter().all(|&m| m >= MIN_FIT_COUNT))
        .map(|p| {
            (
                p.counts.iter().map(|&m| m as i64).collect(),
                BigRational::from_integer(p.dim.into()),
            )
        })
        .collect();
    if data.is_empty() {
        return Err(Error::GridTooSmall(format!(
            "no grid point has every count >= {MIN_FIT_COUNT}"
        )));
    }
    // Try past the bound so that exceeding it is visible.
    let fit = fit_polynomial(&data, genus + 3, 2)?;
    let within_bound = fit.exact() && fit.total_degree <= genus + 1;
    Ok(SubdivisionScan {
        k,
        l_cap,
        genus,
        points,
        fit,
        within_bound,
    })
}
