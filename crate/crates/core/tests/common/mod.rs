//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::HashSet;

/// Every transitively closed relation among pairs `i < j`, deduplicated by
/// minimising the relation code over all `n!` permutations.
pub fn brute_force_classes(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut seen = HashSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut rel = vec![vec![false; n]; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            rel[i][j] = mask >> k & 1 == 1;
        }
        let closed = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(rel[a][b] && rel[b][c]) || rel[a][c])));
        if !closed {
            continue;
        }
        let code = perms
            .iter()
            .map(|p| {
                let mut c = 0u64;
                for a in 0..n {
                    for b in 0..n {
                        c = (c << 1) | u64::from(rel[p[a]][p[b]]);
                    }
                }
                c
            })
            .min()
            .unwrap();
        seen.insert(code);
    }
    seen.len()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}
