//! The two finite dualities `X ≅ (X⁺)₊` and `A ≅ (A₊)⁺`, checked through
//! their canonical maps, plus generic isomorphism search.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{gamma, is_godel, prime_filters, spectrum, upset_algebra, FiniteLattice, HeytingAlgebra, LatticeError};
use crate::pointset::PointSet;
use crate::poset::FinitePoset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    /// The canonical map failed to be an isomorphism. Never expected.
    #[error("duality failure: {0}")]
    DualityFailure(String),
    #[error("Gödel equation says {godel}, root-system test says {root_system}")]
    HornMismatch { godel: bool, root_system: bool },
}

/// Order isomorphism between two posets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PosetIso {
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

/// Bounded-lattice isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeIso {
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

fn invert(forward: &[usize]) -> Option<Vec<usize>> {
    let mut backward = vec![usize::MAX; forward.len()];
    for (x, &y) in forward.iter().enumerate() {
        if y >= forward.len() || backward[y] != usize::MAX {
            return None;
        }
        backward[y] = x;
    }
    Some(backward)
}

/// Per-element data preserved by any order isomorphism.
fn invariant(p: &FinitePoset, x: usize) -> (usize, usize, usize, usize) {
    (
        p.down_of(x).len(),
        p.up_of(x).len(),
        p.lower_covers(x).len(),
        p.upper_covers(x).len(),
    )
}

/// Whether `forward` is an order isomorphism `p → q`.
pub fn is_poset_iso(p: &FinitePoset, q: &FinitePoset, forward: &[usize]) -> bool {
    p.len() == q.len()
        && invert(forward).is_some()
        && (0..p.len()).all(|x| (0..p.len()).all(|y| p.leq(x, y) == q.leq(forward[x], forward[y])))
}

/// Backtracking search for an order isomorphism, pruned by per-element
/// invariants.
pub fn poset_isomorphism(p: &FinitePoset, q: &FinitePoset) -> Option<PosetIso> {
    let n = p.len();
    if n != q.len() || p.covers().len() != q.covers().len() {
        return None;
    }
    let kp: Vec<_> = (0..n).map(|x| invariant(p, x)).collect();
    let kq: Vec<_> = (0..n).map(|y| invariant(q, y)).collect();
    let mut sp = kp.clone();
    let mut sq = kq.clone();
    sp.sort_unstable();
    sq.sort_unstable();
    if sp != sq {
        return None;
    }
    // Most constrained elements first: smallest candidate sets.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (kq.iter().filter(|&&k| k == kp[x]).count(), x));

    fn extend(
        depth: usize,
        order: &[usize],
        p: &FinitePoset,
        q: &FinitePoset,
        kp: &[(usize, usize, usize, usize)],
        kq: &[(usize, usize, usize, usize)],
        forward: &mut [usize],
        used: &mut PointSet,
    ) -> bool {
        let Some(&x) = order.get(depth) else {
            return true;
        };
        for y in 0..q.len() {
            if used.contains(y) || kq[y] != kp[x] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&w| {
                p.leq(w, x) == q.leq(forward[w], y) && p.leq(x, w) == q.leq(y, forward[w])
            });
            if !consistent {
                continue;
            }
            forward[x] = y;
            used.insert(y);
            if extend(depth + 1, order, p, q, kp, kq, forward, used) {
                return true;
            }
            used.remove(y);
        }
        false
    }

    let mut forward = vec![0; n];
    let mut used = PointSet::empty();
    if extend(0, &order, p, q, &kp, &kq, &mut forward, &mut used) {
        let backward = invert(&forward).expect("search produces a bijection");
        Some(PosetIso { forward, backward })
    } else {
        None
    }
}

fn preserves_operations(a: &FiniteLattice, b: &FiniteLattice, f: &[usize]) -> bool {
    f[a.bottom()] == b.bottom()
        && f[a.top()] == b.top()
        && (0..a.len()).all(|x| {
            (0..a.len()).all(|y| f[a.meet(x, y)] == b.meet(f[x], f[y]) && f[a.join(x, y)] == b.join(f[x], f[y]))
        })
}

/// Lattice isomorphism search. The operations are determined by the order,
/// so this is an order isomorphism search followed by a check.
pub fn lattice_isomorphism(a: &FiniteLattice, b: &FiniteLattice) -> Option<LatticeIso> {
    let iso = poset_isomorphism(&a.order(), &b.order())?;
    debug_assert!(preserves_operations(a, b, &iso.forward));
    Some(LatticeIso {
        forward: iso.forward,
        backward: iso.backward,
    })
}

fn failure(s: impl Into<String>) -> DualityError {
    DualityError::DualityFailure(s.into())
}

/// Checks that `x ↦ {U : x ∈ U}` is an isomorphism from `p` onto the prime
/// spectrum of its upset algebra, and returns it.
pub fn double_dual_poset(p: &FinitePoset) -> Result<PosetIso, DualityError> {
    let algebra = upset_algebra(p)?;
    let lattice = algebra.algebra.lattice();
    let filters = prime_filters(lattice);
    let spec = spectrum(lattice);
    let forward = p
        .carrier()
        .iter()
        .map(|x| {
            let point: PointSet = (0..algebra.sets.len()).filter(|&i| algebra.sets[i].contains(x)).collect();
            filters
                .iter()
                .position(|f| f.members == point)
                .ok_or_else(|| failure(format!("the upsets containing {x} do not form a prime filter")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if !is_poset_iso(p, &spec, &forward) {
        return Err(failure("canonical map is not an order isomorphism onto the spectrum"));
    }
    let backward = invert(&forward).expect("checked bijective");
    Ok(PosetIso { forward, backward })
}

/// Checks that `γ` is an isomorphism from `a` onto the upset algebra of its
/// spectrum, and returns it.
pub fn double_dual_lattice(a: &FiniteLattice) -> Result<LatticeIso, DualityError> {
    let spec = spectrum(a);
    let upsets = upset_algebra(&spec)?;
    let target = upsets.algebra.lattice();
    let forward = (0..a.len())
        .map(|x| {
            let g = gamma(a, x)?;
            upsets
                .index_of(g)
                .ok_or_else(|| failure(format!("γ({x}) is not an upset of the spectrum")))
        })
        .collect::<Result<Vec<_>, DualityError>>()?;
    if forward.len() != target.len() {
        return Err(failure("γ is not onto the upsets of the spectrum"));
    }
    let backward = invert(&forward).ok_or_else(|| failure("γ is not injective"))?;
    if !preserves_operations(a, target, &forward) {
        return Err(failure("γ does not preserve the lattice operations"));
    }
    Ok(LatticeIso { forward, backward })
}

/// As [`double_dual_lattice`], additionally checking that `γ` preserves
/// implication.
pub fn double_dual_heyting(h: &HeytingAlgebra) -> Result<LatticeIso, DualityError> {
    let iso = double_dual_lattice(h.lattice())?;
    let spec = spectrum(h.lattice());
    let upsets = upset_algebra(&spec)?;
    let f = &iso.forward;
    for x in 0..h.len() {
        for y in 0..h.len() {
            if f[h.implies(x, y)] != upsets.algebra.implies(f[x], f[y]) {
                return Err(failure(format!("γ does not preserve {x} → {y}")));
            }
        }
    }
    Ok(iso)
}

/// The upset algebra satisfies the Gödel equation exactly when the poset is
/// a root system. Returns the shared truth value.
pub fn godel_iff_root_system(p: &FinitePoset) -> Result<bool, DualityError> {
    let godel = is_godel(&upset_algebra(p)?.algebra).holds;
    let root_system = p.is_root_system();
    if godel != root_system {
        return Err(DualityError::HornMismatch { godel, root_system });
    }
    Ok(godel)
}
