//! Seeded generators for fuzzing. Identical seeds give identical posets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::pointset::PointSet;
use crate::poset::FinitePoset;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Naturally labelled random poset: each pair `i < j` is related with
/// probability `edge_density`, then the relation is closed transitively.
pub fn random_poset(seed: u64, n: usize, edge_density: f64) -> FinitePoset {
    let mut rng = rng(seed);
    let density = edge_density.clamp(0.0, 1.0);
    let mut down: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(density) {
                let below = down[i];
                down[j] |= below;
            }
        }
    }
    FinitePoset::from_leq(n, |x, y| down[y].contains(x)).expect("closure of a DAG is a partial order")
}

/// Each non-root element picks a parent uniformly among the earlier ones.
pub fn random_tree(seed: u64, n: usize) -> FinitePoset {
    let mut rng = rng(seed);
    let covers: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    FinitePoset::from_covers(n, &covers).expect("parent links form a tree")
}

/// Each element after the first either starts a new tree or picks a parent
/// among the earlier ones.
pub fn random_forest(seed: u64, n: usize) -> FinitePoset {
    let mut rng = rng(seed);
    let covers: Vec<_> = (1..n)
        .filter_map(|i| {
            let p = rng.gen_range(0..=i);
            (p < i).then_some((p, i))
        })
        .collect();
    FinitePoset::from_covers(n, &covers).expect("parent links form a forest")
}

/// Order dual of [`random_forest`].
pub fn random_root_system(seed: u64, n: usize) -> FinitePoset {
    random_forest(seed, n).order_dual()
}
