use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::families::Family;
use crate::error::{Error, Result};
use crate::linalg::{Coefficients, Int};
use crate::magnitude::magnitude_homology;

/// Default largest graph a torsion scan accepts.
pub const DEFAULT_SCAN_VERTEX_CAP: usize = 16;

/// Nontrivial invariant factors of `MH^k_l` for one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionEntry {
    pub graph: String,
    pub genus: usize,
    pub k: usize,
    pub l: usize,
    pub factors: Vec<Int>,
}

/// Exponents within one `(genus, k)` class, in family order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub genus: usize,
    pub k: usize,
    /// `(graph, largest factor over l <= l_max)`, one when torsion-free.
    pub exponents: Vec<(String, Int)>,
    pub max_exponent: Int,
    /// Whether every member has the same exponent.
    pub constant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionScanReport {
    pub family: String,
    pub seed: u64,
    pub k_max: usize,
    pub l_max: usize,
    pub vertex_cap: usize,
    pub members: usize,
    pub entries: Vec<TorsionEntry>,
    pub classes: Vec<ClassSummary>,
}

impl TorsionScanReport {
    pub fn torsion_free(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_exponent(&self) -> Int {
        self.classes
            .iter()
            .map(|c| c.max_exponent.clone())
            .max()
            .unwrap_or(Int::ONE)
    }
}

/// Integral torsion of `MH^k_l` for every member, `k <= k_max`,
/// `l <= l_max`. By universal coefficients the torsion of `MH^k_l` is that
/// of `MH_{k-1,l}`, so only homology is computed.
pub fn torsion_scan(
    family: &Family,
    k_max: usize,
    l_max: usize,
    vertex_cap: usize,
) -> Result<TorsionScanReport> {
    if let Some(m) = family
        .members
        .iter()
        .find(|m| m.graph.vertex_count() > vertex_cap)
    {
        return Err(Error::SizeCap {
            what: format!("graph {}", m.id),
            size: m.graph.vertex_count(),
            cap: vertex_cap,
        });
    }
    let jobs: Vec<(usize, usize, usize)> = (0..family.members.len())
        .flat_map(|i| (1..=k_max).flat_map(move |k| (0..=l_max).map(move |l| (i, k, l))))
        .collect();
    let results: Vec<Vec<Int>> = jobs
        .par_iter()
        .map(|&(i, k, l)| {
            Ok(magnitude_homology(&family.members[i].graph, k - 1, l, Coefficients::Z)?.torsion)
        })
        .collect::<Result<_>>()?;

    let mut entries = Vec::new();
    let mut exponent: BTreeMap<(usize, usize), Int> = BTreeMap::new();
    for (&(i, k, l), factors) in jobs.iter().zip(results) {
        let member = &family.members[i];
        let e = exponent.entry((i, k)).or_insert(Int::ONE);
        if let Some(top) = factors.iter().max() {
            if top > e {
                *e = top.clone();
            }
        }
        if !factors.is_empty() {
            entries.push(TorsionEntry {
                graph: member.id.clone(),
                genus: member.graph.genus(),
                k,
                l,
                factors,
            });
        }
    }

    let mut grouped: BTreeMap<(usize, usize), Vec<(String, Int)>> = BTreeMap::new();
    for (i, member) in family.members.iter().enumerate() {
        for k in 0..=k_max {
            let e = exponent.get(&(i, k)).cloned().unwrap_or(Int::ONE);
            grouped
                .entry((member.graph.genus(), k))
                .or_default()
                .push((member.id.clone(), e));
        }
    }
    let classes = grouped
        .into_iter()
        .map(|((genus, k), exponents)| {
            let max_exponent = exponents.iter().map(|e| e.1.clone()).max().unwrap_or(Int::ONE);
            let constant = exponents.windows(2).all(|w| w[0].1 == w[1].1);
            ClassSummary {
                genus,
                k,
                exponents,
                max_exponent,
                constant,
            }
        })
        .collect();
    Ok(TorsionScanReport {
        family: family.name.clone(),
        seed: family.seed,
        k_max,
        l_max,
        vertex_cap,
        members: family.members.len(),
        entries,
        classes,
    })
}
