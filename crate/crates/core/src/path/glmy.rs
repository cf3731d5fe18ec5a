use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::field::{apply, kernel_basis, Echelon, SparseVec};
use crate::linalg::{
    homology_of_pair, integer_kernel_basis, rational_to_int, Coefficients, Field, HomologySummary, Int,
    PrimeField, Rationals, SparseMatrix,
};

/// Highest degree [`path_homology_direct`] accepts by default.
pub const DEFAULT_PATH_DEGREE_CAP: usize = 6;

/// Allowed paths of the double orientation of a graph, with the boundary
/// split into its allowed part and the part that leaves the allowed paths.
pub struct AllowedPaths {
    levels: Vec<Level>,
}

struct Level {
    paths: Vec<Vec<usize>>,
    /// `A_j -> A_{j-1}`.
    boundary: SparseMatrix,
    /// `A_j -> (regular, non-allowed (j-1)-paths)`.
    outside: SparseMatrix,
}

impl AllowedPaths {
    /// Levels `0..=top`.
    pub fn new(g: &Graph, top: usize) -> Self {
        let n = g.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in g.simple_edges() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let mut levels: Vec<Level> = Vec::with_capacity(top + 1);
        let mut prev_index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut paths: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        for j in 0..=top {
            if j > 0 {
                paths = paths
                    .iter()
                    .flat_map(|p| {
                        let last = *p.last().expect("nonempty path");
                        adj[last].iter().map(move |&w| {
                            let mut q = p.clone();
                            q.push(w);
                            q
                        })
                    })
                    .collect();
            }
            let mut allowed = Vec::new();
            let mut outside = Vec::new();
            let mut outside_index: HashMap<Vec<usize>, usize> = HashMap::new();
            if j > 0 {
                for (c, p) in paths.iter().enumerate() {
                    for i in 0..=j {
                        if i > 0 && i < j && p[i - 1] == p[i + 1] {
                            continue;
                        }
                        let mut face = p.clone();
                        face.remove(i);
                        let sign = Int::from(if i % 2 == 0 { 1 } else { -1 });
                        match prev_index.get(&face) {
                            Some(&r) => allowed.push((r, c, sign)),
                            None => {
                                let next = outside_index.len();
                                let r = *outside_index.entry(face).or_insert(next);
                                outside.push((r, c, sign));
                            }
                        }
                    }
                }
            }
            let rows_prev = if j == 0 { 0 } else { prev_index.len() };
            levels.push(Level {
                boundary: SparseMatrix::from_triplets(rows_prev, paths.len(), allowed),
                outside: SparseMatrix::from_triplets(outside_index.len(), paths.len(), outside),
                paths: paths.clone(),
            });
            prev_index = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        }
        AllowedPaths { levels }
    }

    pub fn count(&self, j: usize) -> usize {
        self.levels[j].paths.len()
    }

    pub fn paths(&self, j: usize) -> &[Vec<usize>] {
        &self.levels[j].paths
    }

    /// `Ω_j` over a field, as vectors in the allowed-path basis.
    pub fn omega<F: Field + Clone>(&self, field: &F, j: usize) -> Vec<SparseVec<F::Elem>> {
        kernel_basis(field, &self.levels[j].outside)
    }

    /// `∂` applied to a combination of allowed `j`-paths, `j >= 1`, keeping
    /// only allowed faces.
    pub fn boundary<F: Field>(&self, field: &F, j: usize, x: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        apply(field, &self.levels[j].boundary, x)
    }
}

fn rank_of<F: Field + Clone>(field: &F, vectors: impl IntoIterator<Item = SparseVec<F::Elem>>) -> usize {
    let mut ech = Echelon::new(field.clone());
    vectors
        .into_iter()
        .filter(|v| !v.is_empty() && ech.insert(v.clone()))
        .count()
}

fn field_dim<F: Field + Clone>(field: &F, paths: &AllowedPaths, k: usize) -> usize {
    let omega_k = paths.omega(field, k);
    let rank_out = if k == 0 {
        usize::from(!omega_k.is_empty())
    } else {
        rank_of(field, omega_k.iter().map(|w| paths.boundary(field, k, w)))
    };
    let omega_up = paths.omega(field, k + 1);
    let rank_in = rank_of(field, omega_up.iter().map(|w| paths.boundary(field, k + 1, w)));
    omega_k.len() - rank_out - rank_in
}

/// Matrix of `∂: Ω_j -> Ω_{j-1}` over the integers in kernel-lattice bases;
/// for `j = 0` the augmentation.
fn integer_boundary(paths: &AllowedPaths, bases: &[Vec<Vec<BigInt>>], j: usize) -> SparseMatrix {
    let cols = bases[j].len();
    if j == 0 {
        return SparseMatrix::from_triplets(1, cols, (0..cols).map(|c| (0, c, Int::ONE)));
    }
    let q = Rationals;
    let mut ech = Echelon::new(q);
    for (i, b) in bases[j - 1].iter().enumerate() {
        let v = dense_to_sparse(b);
        let (r, label) = ech.reduce(v, vec![(i, BigRational::from_integer(1.into()))]);
        ech.insert_reduced(r, label);
    }
    let mut triplets = Vec::new();
    for (c, w) in bases[j].iter().enumerate() {
        let image = paths.boundary(&q, j, &dense_to_sparse(w));
        let (rest, label) = ech.reduce(image, Vec::new());
        assert!(
            rest.is_empty(),
            "boundary of an invariant path left the invariant paths"
        );
        for (r, x) in label {
            let x = rational_to_int(&-x).expect("integral coordinates in a saturated lattice");
            triplets.push((r, c, x));
        }
    }
    SparseMatrix::from_triplets(bases[j - 1].len(), cols, triplets)
}

fn dense_to_sparse(v: &[BigInt]) -> SparseVec<BigRational> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
        .map(|(i, x)| (i, BigRational::from_integer(x.clone())))
        .collect()
}

/// Reduced path homology `PH_k` of the double orientation of `g`.
pub fn path_homology_direct(g: &Graph, k: usize, coeff: Coefficients) -> Result<HomologySummary> {
    path_homology_direct_capped(g, k, coeff, DEFAULT_PATH_DEGREE_CAP)
}

pub fn path_homology_direct_capped(
    g: &Graph,
    k: usize,
    coeff: Coefficients,
    cap: usize,
) -> Result<HomologySummary> {
    if k > cap {
        return Err(Error::CapExceeded { k, cap });
    }
    let paths = AllowedPaths::new(g, k + 1);
    match coeff {
        Coefficients::Q => Ok(HomologySummary {
            free_rank: field_dim(&Rationals, &paths, k),
            torsion: vec![],
            coeff,
        }),
        Coefficients::Fp(p) => {
            let f = PrimeField::new(u64::from(p))?;
            Ok(HomologySummary {
                free_rank: field_dim(&f, &paths, k),
                torsion: vec![],
                coeff,
            })
        }
        Coefficients::Z => {
            let bases: Vec<Vec<Vec<BigInt>>> = (0..=k + 1)
                .map(|j| integer_kernel_basis(&paths.levels[j].outside))
                .collect();
            let d_out = integer_boundary(&paths, &bases, k);
            let d_in = integer_boundary(&paths, &bases, k + 1);
            Ok(homology_of_pair(&d_in, &d_out, coeff)?)
        }
    }
}
