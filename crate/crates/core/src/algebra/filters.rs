//! Prime filters, the prime spectrum and the map `γ`.
//!
//! In a finite lattice every filter is principal, and `↑a` is prime exactly
//! when `a` is join-prime. So the prime filters are read off the join-prime
//! elements instead of walking candidate upsets, which would be hopeless
//! on, say, the 128-element Boolean lattice.

use serde::Serialize;

use super::{FiniteLattice, LatticeError};
use crate::pointset::PointSet;
use crate::poset::FinitePoset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeFilter {
    pub members: PointSet,
    /// Least element of the filter.
    pub generator: usize,
}

fn is_join_prime(l: &FiniteLattice, a: usize) -> bool {
    if a == l.bottom() {
        return false;
    }
    let n = l.len();
    (0..n).all(|b| {
        l.leq(a, b)
            || (0..n).all(|c| !l.leq(a, l.join(b, c)) || l.leq(a, c))
    })
}

/// All prime filters, canonically sorted by member set.
pub fn prime_filters(l: &FiniteLattice) -> Vec<PrimeFilter> {
    let mut out: Vec<PrimeFilter> = (0..l.len())
        .filter(|&a| is_join_prime(l, a))
        .map(|a| PrimeFilter {
            members: l.up_of(a),
            generator: a,
        })
        .collect();
    out.sort_by_key(|f| f.members);
    out
}

/// The prime filters ordered by inclusion; element `i` is
/// `prime_filters(l)[i]`.
pub fn spectrum(l: &FiniteLattice) -> FinitePoset {
    let filters = prime_filters(l);
    FinitePoset::from_leq(filters.len(), |i, j| filters[i].members.is_subset(filters[j].members))
        .expect("inclusion is a partial order")
}

/// `γ(a) = {F : a ∈ F}` as indices into [`prime_filters`].
pub fn gamma(l: &FiniteLattice, a: usize) -> Result<PointSet, LatticeError> {
    l.check_element(a)?;
    Ok(prime_filters(l)
        .iter()
        .enumerate()
        .filter(|(_, f)| f.members.contains(a))
        .map(|(i, _)| i)
        .collect())
}
