use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use anyhow::{bail, Context, Result};
use magnikit::experiments::{cycle_growth_scan, subdivision_scan, torsion_scan, CycleScanParams};
use magnikit::functor::vertex_generator_decomposition;
use magnikit::graph::{complete, cycle};
use magnikit::magnitude::{euler_check, magnitude_series};
use magnikit::path::{
    calibrate_degree_shift, compare_path_homology, path_homology_direct_capped, path_homology_via_mh,
};
use magnikit::{magnitude_cohomology, magnitude_homology, EdgeRef, Graph, HomologySummary, MagnitudeBasis};
use serde_json::{json, Value};

use crate::args::*;

/// What a command produced: the JSON results, the flat rows used for CSV,
/// the caps in force, and whether every checked identity held.
pub struct Report {
    pub results: Value,
    pub rows: Vec<Value>,
    pub caps: BTreeMap<&'static str, Value>,
    pub ok: bool,
}

impl Report {
    fn table(rows: Vec<Value>) -> Self {
        Report {
            results: Value::Array(rows.clone()),
            rows,
            caps: BTreeMap::new(),
            ok: true,
        }
    }
}

pub fn run(cmd: &Command, seed: u64) -> Result<Report> {
    match cmd {
        Command::Mh(a) => homology(a, false),
        Command::Mhco(a) => homology(a, true),
        Command::Series(a) => series(a),
        Command::Euler(a) => euler(a),
        Command::Pathhom(a) => pathhom(a),
        Command::ComparePh(a) => compare(a),
        Command::Cycles(a) => cycles(a),
        Command::SubdivideScan(a) => subdivide(a),
        Command::TorsionScan(a) => torsion(a, seed),
        Command::DecomposeVertex(a) => decompose(a),
    }
}

fn summary_row(k: usize, l: usize, h: &HomologySummary) -> Value {
    let mut row = json!({ "k": k, "l": l, "coeff": h.coeff.tag() });
    if let Some(p) = h.coeff.prime() {
        row["p"] = json!(p);
    }
    row["rank"] = json!(h.free_rank);
    row["torsion"] = json!(h.torsion);
    row
}

fn homology(a: &HomologyArgs, co: bool) -> Result<Report> {
    let g = a.graph.load()?;
    let d = g.distance_matrix();
    let mut rows = Vec::new();
    for k in a.k.0.clone() {
        for l in a.l.0.clone() {
            // Cohomology in degree k also needs C_{k+1}; homology too.
            for kk in [k, k + 1] {
                let size = MagnitudeBasis::from_metric(&d, kk, l).len();
                if size > a.max_chain {
                    bail!(magnikit::Error::SizeCap {
                        what: format!("MC_{{{kk},{l}}}"),
                        size,
                        cap: a.max_chain
                    });
                }
            }
            let h = if co {
                magnitude_cohomology(&g, k, l, a.coeff)?
            } else {
                magnitude_homology(&g, k, l, a.coeff)?
            };
            rows.push(summary_row(k, l, &h));
        }
    }
    let mut r = Report::table(rows);
    r.caps.insert("max_chain", json!(a.max_chain));
    Ok(r)
}

fn series(a: &SeriesArgs) -> Result<Report> {
    let g = a.graph.load()?;
    let s = magnitude_series(&g, a.max_degree);
    let rows: Vec<Value> = s
        .coeffs
        .iter()
        .enumerate()
        .map(|(l, c)| json!({ "l": l, "coefficient": c.to_string() }))
        .collect();
    Ok(Report::table(rows))
}

fn euler(a: &EulerArgs) -> Result<Report> {
    let g = a.graph.load()?;
    let mut rows = Vec::new();
    let mut ok = true;
    for l in a.l.0.clone() {
        let e = euler_check(&g, l)?;
        ok &= e.holds;
        rows.push(json!({
            "l": l,
            "ranks": e.ranks,
            "alternating_sum": e.alternating_sum.to_string(),
            "series_coefficient": e.series_coefficient.to_string(),
            "holds": e.holds,
        }));
    }
    Ok(Report {
        ok,
        ..Report::table(rows)
    })
}

fn pathhom(a: &PathArgs) -> Result<Report> {
    let g = a.graph.load()?;
    let mut rows = Vec::new();
    for k in a.k.0.clone() {
        let h = match a.method {
            Method::Direct => path_homology_direct_capped(&g, k, a.coeff, a.degree_cap)?,
            Method::ViaMh => {
                if k > a.degree_cap {
                    bail!(magnikit::Error::CapExceeded { k, cap: a.degree_cap });
                }
                HomologySummary {
                    free_rank: path_homology_via_mh(&g, k, a.coeff)?,
                    torsion: vec![],
                    coeff: a.coeff,
                }
            }
        };
        let mut row = json!({ "k": k, "coeff": h.coeff.tag() });
        if let Some(p) = h.coeff.prime() {
            row["p"] = json!(p);
        }
        row["rank"] = json!(h.free_rank);
        row["torsion"] = json!(h.torsion);
        rows.push(row);
    }
    let mut r = Report::table(rows);
    r.caps.insert("degree_cap", json!(a.degree_cap));
    Ok(r)
}

fn compare(a: &CompareArgs) -> Result<Report> {
    let g = a.graph.load()?;
    let (shift, calibrated) = match a.shift {
        Some(s) => (Some(s), false),
        None => {
            let set = [complete(2)?, cycle(5)?];
            (calibrate_degree_shift(&set, *a.k.0.end(), a.coeff)?, true)
        }
    };
    let Some(shift) = shift else {
        return Ok(Report {
            results: json!({ "shift": null, "calibrated": true, "comparisons": [] }),
            rows: vec![],
            caps: BTreeMap::new(),
            ok: false,
        });
    };
    let mut rows = Vec::new();
    let mut ok = true;
    for k in a.k.0.clone() {
        let c = compare_path_homology(&g, k, a.coeff, shift)?;
        ok &= c.agree;
        rows.push(serde_json::to_value(c)?);
    }
    Ok(Report {
        results: json!({ "shift": shift, "calibrated": calibrated, "comparisons": rows }),
        rows,
        caps: BTreeMap::new(),
        ok,
    })
}

fn cycles(a: &CycleArgs) -> Result<Report> {
    let params = CycleScanParams {
        k_max: a.k_max,
        l_max: a.l_max,
        l_multiplier: a.l_multiplier,
        offset: a.offset,
        points: a.points,
    };
    let scan = cycle_growth_scan(params)?;
    let ok = scan.unstable().is_empty();
    let rows = scan
        .fits
        .iter()
        .map(serde_json::to_value)
        .collect::<serde_json::Result<_>>()?;
    Ok(Report {
        results: serde_json::to_value(&scan)?,
        rows,
        caps: BTreeMap::new(),
        ok,
    })
}

fn edge_refs(g: &Graph, spec: &str) -> Result<Vec<EdgeRef>> {
    let edges = parse_edges(spec).map_err(anyhow::Error::msg)?;
    let refs: Vec<EdgeRef> = edges.into_iter().map(|(u, v, c)| EdgeRef::nth(u, v, c)).collect();
    for e in &refs {
        g.edge_index(*e)?;
    }
    Ok(refs)
}

fn subdivide(a: &SubdivideArgs) -> Result<Report> {
    let g = a.graph.load()?;
    let edges = edge_refs(&g, &a.edges)?;
    let axes: Vec<RangeInclusive<usize>> = a
        .grid
        .split(',')
        .map(|s| s.parse::<Span>().map(|s| s.0))
        .collect::<Result<_, _>>()
        .map_err(anyhow::Error::msg)?;
    let grid = match axes.len() {
        1 => vec![axes[0].clone(); edges.len()],
        n if n == edges.len() => axes,
        n => bail!("{n} grid ranges for {} edges", edges.len()),
    };
    let mut scans = Vec::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for k in a.k.0.clone() {
        let scan = subdivision_scan(&g, &edges, k, &grid, a.l_cap)
            .with_context(|| format!("subdivision scan in degree {k}"))?;
        ok &= scan.within_bound;
        for p in &scan.points {
            rows.push(json!({ "k": k, "l_cap": scan.l_cap, "counts": p.counts, "vertices": p.vertices, "dim": p.dim }));
        }
        scans.push(serde_json::to_value(&scan)?);
    }
    let mut r = Report {
        results: Value::Array(scans),
        rows,
        caps: BTreeMap::new(),
        ok,
    };
    r.caps
        .insert("l_cap", a.l_cap.map_or_else(|| json!("2k+4"), |c| json!(c)));
    Ok(r)
}

fn torsion(a: &TorsionArgs, seed: u64) -> Result<Report> {
    let family = a.family.build(seed)?;
    let report = torsion_scan(&family, a.k_max, a.l_max, a.vertex_cap)?;
    let rows = report
        .entries
        .iter()
        .map(serde_json::to_value)
        .collect::<serde_json::Result<_>>()?;
    let mut r = Report {
        results: serde_json::to_value(&report)?,
        rows,
        caps: BTreeMap::new(),
        ok: true,
    };
    r.caps.insert("vertex_cap", json!(a.vertex_cap));
    Ok(r)
}

/// Breadth-first spanning tree of the simple graph from `root`.
fn bfs_tree(g: &Graph, root: usize) -> Vec<(usize, usize)> {
    let adj = g.adjacency();
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = std::collections::VecDeque::from([root]);
    let mut tree = Vec::new();
    seen[root] = true;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                tree.push((u.min(v), u.max(v)));
                queue.push_back(v);
            }
        }
    }
    tree.sort_unstable();
    tree
}

fn decompose(a: &DecomposeArgs) -> Result<Report> {
    let g = a.graph.load()?;
    if a.root >= g.vertex_count() {
        bail!("root {} is not a vertex", a.root);
    }
    let tree = match &a.tree {
        Some(s) => parse_edges(s)
            .map_err(anyhow::Error::msg)?
            .into_iter()
            .map(|(u, v, _)| (u.min(v), u.max(v)))
            .collect(),
        None => bfs_tree(&g, a.root),
    };
    let dec = vertex_generator_decomposition(&g, &tree, a.root, a.vertex)?;
    let values = dec.evaluate(g.vertex_count(), &tree, a.root)?;
    let ok = values
        .iter()
        .enumerate()
        .all(|(w, &x)| x == i64::from(w == a.vertex));
    let rows: Vec<Value> = dec
        .edges
        .iter()
        .map(|(&(u, v), &c)| json!({ "edge": format!("{u}-{v}"), "coefficient": c }))
        .collect();
    Ok(Report {
        results: json!({
            "tree": tree.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>(),
            "iota": dec.iota,
            "edges": rows,
            "values": values,
        }),
        rows,
        caps: BTreeMap::new(),
        ok,
    })
}
