//! Growth and torsion experiments: linear growth on cycles, polynomial
//! growth under subdivision, and torsion scans over graph families.

mod cycles;
mod families;
mod polyfit;
mod subdivision;
mod torsion;

pub use cycles::{cycle_growth_scan, CycleFit, CycleScan, CycleScanParams};
pub use families::{
    connected_graphs, random_connected, trees, uniform_subdivision, Family, FamilyMember, FamilySpec,
    SubdivisionBase, CONNECTED_ENUMERATION_CAP, TREE_ENUMERATION_CAP,
};
pub use polyfit::{fit_polynomial, monomials, PolyFit, Term};
pub use subdivision::{default_l_cap, subdivision_scan, SubdivisionPoint, SubdivisionScan, MIN_FIT_COUNT};
pub use torsion::{torsion_scan, ClassSummary, TorsionEntry, TorsionScanReport, DEFAULT_SCAN_VERTEX_CAP};

use num_rational::BigRational;
use serde::Serializer;

/// Exact rationals serialize as `"p/q"` strings, or `"p"` for integers.
pub(crate) fn rational_string<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

pub(crate) fn rational_strings<S: Serializer>(qs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(ToString::to_string))
}
