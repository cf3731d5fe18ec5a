use super::Graph;

/// Edge-multiplicity matrix (self-loops on the diagonal).
fn multiplicities(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut m = vec![vec![0u32; n]; n];
    for &(u, v) in g.edges() {
        m[u][v] += 1;
        if u != v {
            m[v][u] += 1;
        }
    }
    m
}

/// Per-vertex invariant used to prune the search: loop count, total
/// multiplicity degree, and the sorted simple degrees of the neighbours.
fn invariants(m: &[Vec<u32>]) -> Vec<(u32, u32, Vec<u32>)> {
    let n = m.len();
    let simple_deg: Vec<u32> = (0..n)
        .map(|u| (0..n).filter(|&v| v != u && m[u][v] > 0).count() as u32)
        .collect();
    (0..n)
        .map(|u| {
            let degree = (0..n).filter(|&v| v != u).map(|v| m[u][v]).sum();
            let mut nbrs: Vec<u32> = (0..n)
                .filter(|&v| v != u && m[u][v] > 0)
                .map(|v| simple_deg[v])
                .collect();
            nbrs.sort_unstable();
            (m[u][u], degree, nbrs)
        })
        .collect()
}

/// All vertex bijections `sigma` with `mult_a(u, v) = mult_b(sigma u, sigma v)`,
/// in lexicographic order of the image vectors.
pub fn isomorphisms(a: &Graph, b: &Graph) -> Vec<Vec<usize>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Vec::new();
    }
    let (ma, mb) = (multiplicities(a), multiplicities(b));
    let (ia, ib) = (invariants(&ma), invariants(&mb));
    let mut sa: Vec<_> = ia.clone();
    let mut sb: Vec<_> = ib.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut sigma = vec![usize::MAX; n];
    let mut used = vec![false; n];
    iso_rec(0, &ma, &mb, &ia, &ib, &mut sigma, &mut used, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn iso_rec(
    u: usize,
    ma: &[Vec<u32>],
    mb: &[Vec<u32>],
    ia: &[(u32, u32, Vec<u32>)],
    ib: &[(u32, u32, Vec<u32>)],
    sigma: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let n = ma.len();
    if u == n {
        out.push(sigma.clone());
        return;
    }
    for t in 0..n {
        if used[t] || ia[u] != ib[t] {
            continue;
        }
        if (0..u).any(|w| ma[u][w] != mb[t][sigma[w]]) {
            continue;
        }
        sigma[u] = t;
        used[t] = true;
        iso_rec(u + 1, ma, mb, ia, ib, sigma, used, out);
        used[t] = false;
    }
    sigma[u] = usize::MAX;
}

/// Isomorphism-invariant key of a multigraph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    key: Vec<u32>,
}

/// Smallest upper-triangular multiplicity sequence over all vertex orders
/// that sort vertices by their invariants.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let m = multiplicities(g);
    let inv = invariants(&m);
    let n = m.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| inv[x].cmp(&inv[y]));
    // Vertices with equal invariants form a class; only permutations inside
    // classes are tried.
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match classes.last_mut() {
            Some(c) if inv[c[0]] == inv[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best: Option<Vec<u32>> = None;
    let mut current = Vec::with_capacity(n);
    canon_rec(&classes, 0, &mut current, &m, &mut best);
    let mut key: Vec<u32> = Vec::new();
    for c in &classes {
        let (l, d, nb) = &inv[c[0]];
        key.extend([c.len() as u32, *l, *d, nb.len() as u32]);
        key.extend(nb);
    }
    key.push(u32::MAX);
    key.extend(best.unwrap_or_default());
    CanonicalForm { n, key }
}

fn canon_rec(
    classes: &[Vec<usize>],
    ci: usize,
    current: &mut Vec<usize>,
    m: &[Vec<u32>],
    best: &mut Option<Vec<u32>>,
) {
    if ci == classes.len() {
        let n = current.len();
        let mut seq = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                seq.push(m[current[i]][current[j]]);
            }
        }
        if best.as_ref().map_or(true, |b| seq < *b) {
            *best = Some(seq);
        }
        return;
    }
    let mut class = classes[ci].clone();
    permute(&mut class, 0, &mut |perm| {
        let len = current.len();
        current.extend_from_slice(perm);
        canon_rec(classes, ci + 1, current, m, best);
        current.truncate(len);
    });
}

fn permute(items: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}
