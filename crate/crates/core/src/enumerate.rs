//! Canonical forms and exhaustive enumeration of small posets up to
//! isomorphism.

use std::collections::HashSet;

use thiserror::Error;

use crate::pointset::PointSet;
use crate::poset::FinitePoset;

/// Canonical forms pack the strict order into 64 bits.
pub const CANONICAL_LIMIT: usize = 8;
/// Largest size [`enumerate_posets`] will attempt.
pub const ENUMERATION_LIMIT: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("size {n} exceeds the cap of {limit}")]
    SizeCap { n: usize, limit: usize },
}

/// Isomorphism-invariant code of a poset: equal iff isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: u64,
}

fn key(p: &FinitePoset, x: usize) -> (usize, usize, usize, usize) {
    (
        p.down_of(x).len(),
        p.up_of(x).len(),
        p.lower_covers(x).len(),
        p.upper_covers(x).len(),
    )
}

/// Minimum relation code over all relabellings that list elements by
/// ascending invariant key. Bits are emitted shell by shell (position `k`
/// against every earlier position), so a partial labelling fixes a prefix
/// of the code and dominated branches are cut early.
pub fn canonical_form(p: &FinitePoset) -> Result<CanonicalForm, EnumerateError> {
    let n = p.len();
    if n > CANONICAL_LIMIT {
        return Err(EnumerateError::SizeCap {
            n,
            limit: CANONICAL_LIMIT,
        });
    }
    let keys: Vec<_> = (0..n).map(|x| key(p, x)).collect();
    let mut slots = keys.clone();
    slots.sort_unstable();
    let total_bits = n * n.saturating_sub(1);

    struct Search<'a> {
        p: &'a FinitePoset,
        keys: Vec<(usize, usize, usize, usize)>,
        slots: Vec<(usize, usize, usize, usize)>,
        total_bits: usize,
        best: Option<u64>,
        placed: Vec<usize>,
    }

    impl Search<'_> {
        fn run(&mut self, used: PointSet, code: u64, bits: usize) {
            let k = self.placed.len();
            if let Some(best) = self.best {
                let prefix = if bits == 0 { 0 } else { best >> (self.total_bits - bits) };
                if code > prefix {
                    return;
                }
            }
            if k == self.slots.len() {
                self.best = Some(self.best.map_or(code, |b| b.min(code)));
                return;
            }
            for x in 0..self.slots.len() {
                if used.contains(x) || self.keys[x] != self.slots[k] {
                    continue;
                }
                let mut c = code;
                for &w in &self.placed {
                    c = (c << 1) | u64::from(self.p.leq(x, w));
                    c = (c << 1) | u64::from(self.p.leq(w, x));
                }
                self.placed.push(x);
                self.run(used | PointSet::singleton(x), c, bits + 2 * k);
                self.placed.pop();
            }
        }
    }

    let mut search = Search {
        p,
        keys,
        slots,
        total_bits,
        best: None,
        placed: Vec::with_capacity(n),
    };
    search.run(PointSet::empty(), 0, 0);
    Ok(CanonicalForm {
        n,
        code: search.best.unwrap_or(0),
    })
}

/// One representative per isomorphism class of `n`-element posets.
///
/// Every poset arises from a smaller one by adding a maximal element whose
/// strict downset is some downset of the smaller poset, so classes of size
/// `n` are generated from those of size `n - 1` and deduplicated by
/// canonical form.
pub fn enumerate_posets(n: usize) -> Result<Vec<FinitePoset>, EnumerateError> {
    if n > ENUMERATION_LIMIT {
        return Err(EnumerateError::SizeCap {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut classes = vec![FinitePoset::antichain(0)];
    for size in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for p in &classes {
            for d in p.downsets(usize::MAX).expect("no limit was requested") {
                let top = size - 1;
                let extended = FinitePoset::from_leq(size, |x, y| {
                    if x == top {
                        y == top
                    } else if y == top {
                        d.contains(x)
                    } else {
                        p.leq(x, y)
                    }
                })
                .expect("extension by a maximal element is a partial order");
                if seen.insert(canonical_form(&extended)?) {
                    next.push(extended);
                }
            }
        }
        classes = next;
    }
    Ok(classes)
}
