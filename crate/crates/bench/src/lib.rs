//! Inputs shared by the benchmarks under `benches/`.

use magnikit::SparseMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded sparse integer matrix with entries in `-2..=2` at the given
/// density (percent).
pub fn random_matrix(seed: u64, rows: usize, cols: usize, percent: u32) -> SparseMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triplets: Vec<(usize, usize, i64)> = (0..rows)
        .flat_map(|r| (0..cols).map(move |c| (r, c)))
        .filter_map(|(r, c)| {
            if rng.gen_range(0..100) < percent {
                let v = rng.gen_range(-2..=2i64);
                (v != 0).then_some((r, c, v))
            } else {
                None
            }
        })
        .collect();
    SparseMatrix::from_triplets(rows, cols, triplets.into_iter().map(|(r, c, v)| (r, c, v.into())))
}
