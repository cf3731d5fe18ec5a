//! Growth experiments in the range where cycles are long compared with the
//! length degree. Short cycles (m <= 2l) carry extra classes, so fits that
//! start there are not expected to be exact.

use magnikit::experiments::{cycle_growth_scan, subdivision_scan, CycleScanParams};
use magnikit::graph::{cycle, theta};
use magnikit::EdgeRef;
use num_rational::BigRational;

#[test]
fn cycles_grow_linearly_past_twice_the_length() {
    let params = CycleScanParams {
        k_max: 2,
        l_max: 4,
        l_multiplier: 2,
        offset: 3,
        points: 5,
    };
    let scan = cycle_growth_scan(params).unwrap();
    assert!(scan.unstable().is_empty(), "{:?}", scan.unstable());
    let q = |n: i64| BigRational::from_integer(n.into());
    let f = scan.fit(0, 0).unwrap();
    assert_eq!((f.a.clone(), f.b.clone()), (q(1), q(0)));
    let f = scan.fit(1, 1).unwrap();
    assert_eq!((f.a.clone(), f.b.clone()), (q(2), q(0)));
}

#[test]
fn short_cycles_break_the_default_fit() {
    let scan = cycle_growth_scan(CycleScanParams::new(2, 4)).unwrap();
    assert_eq!(scan.unstable(), vec![(2, 3), (2, 4)]);
    // C_6 has six extra classes in MH_{2,3} that disappear from C_7 on.
    let f = scan.fit(2, 3).unwrap();
    assert_eq!(f.ranks, vec![6, 0, 0, 0, 0]);
}

#[test]
fn triangle_subdivisions_in_degree_two() {
    let e = [EdgeRef::new(0, 1)];
    // With the default cap l <= 8 the count settles once the cycle has more
    // than 16 vertices.
    let late = subdivision_scan(&cycle(3).unwrap(), &e, 2, &[14..=19], None).unwrap();
    assert!(late.within_bound, "{:?}", late.fit);
    assert_eq!(late.fit.total_degree, 1);
    // A small cap is stable from the start.
    let small = subdivision_scan(&cycle(3).unwrap(), &e, 2, &[3..=8], Some(3)).unwrap();
    assert!(small.within_bound, "{:?}", small.fit);
    let early = subdivision_scan(&cycle(3).unwrap(), &e, 2, &[3..=8], None).unwrap();
    assert!(!early.within_bound);
}

#[test]
fn theta_subdivisions_in_low_degree() {
    let edges = [
        EdgeRef::nth(0, 1, 0),
        EdgeRef::nth(0, 1, 1),
        EdgeRef::nth(0, 1, 2),
    ];
    for k in 0..=1 {
        let s = subdivision_scan(&theta(2), &edges, k, &[3..=6, 3..=6, 3..=6], None).unwrap();
        assert!(s.within_bound, "k = {k}");
        assert_eq!(s.fit.total_degree, 1);
    }
}
