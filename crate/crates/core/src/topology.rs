//! Finite topologies presented by a subbase.
//!
//! The base is the closure of the subbase (plus the full carrier) under
//! pairwise intersection. Openness is decided pointwise: in a finite space
//! every point `x` has a least open neighbourhood `N(x)`, the intersection of
//! the base members containing it, and `S` is open iff `N(x) ⊆ S` for all
//! `x ∈ S`.

use std::collections::HashSet;

use thiserror::Error;

use crate::pointset::PointSet;
use crate::poset::{greedy_subcover, FinitePoset};

/// Upper bound on the number of distinct base members.
pub const BASE_LIMIT: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("subbase member {index} is not contained in the carrier")]
    SubbaseOutOfCarrier { index: usize },
    #[error("base closure exceeds {limit} distinct sets")]
    OversizeSubbase { limit: usize },
    #[error("topology carrier {topology:?} is not inside the poset carrier of size {poset}")]
    CarrierMismatch { poset: usize, topology: PointSet },
    #[error("cover index {index} is out of range")]
    BadIndex { index: usize },
    #[error("family does not cover the carrier; uncovered: {uncovered:?}")]
    NotACover { uncovered: PointSet },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTopology {
    carrier: PointSet,
    subbase: Vec<PointSet>,
    /// Canonically sorted, deduplicated.
    base: Vec<PointSet>,
    /// Least open neighbourhood per index; empty off the carrier.
    nbhd: Vec<PointSet>,
}

/// Topology on `{0, .., n-1}` generated by `subbase`.
pub fn generate_base(subbase: &[PointSet], carrier_size: usize) -> Result<FiniteTopology, TopologyError> {
    generate_base_on(subbase, PointSet::full(carrier_size))
}

/// Topology on an arbitrary carrier set generated by `subbase`.
pub fn generate_base_on(subbase: &[PointSet], carrier: PointSet) -> Result<FiniteTopology, TopologyError> {
    if let Some(index) = subbase.iter().position(|s| !s.is_subset(carrier)) {
        return Err(TopologyError::SubbaseOutOfCarrier { index });
    }
    let mut seen: HashSet<PointSet> = HashSet::new();
    let mut base = Vec::new();
    for &s in std::iter::once(&carrier).chain(subbase) {
        if seen.insert(s) {
            base.push(s);
        }
    }
    // Every intersection of base members is an intersection of a member with
    // a generator, so closing against the generators suffices.
    let generators = base.clone();
    let mut i = 0;
    while i < base.len() {
        let b = base[i];
        for &g in &generators {
            let m = b & g;
            if seen.insert(m) {
                if base.len() >= BASE_LIMIT {
                    return Err(TopologyError::OversizeSubbase { limit: BASE_LIMIT });
                }
                base.push(m);
            }
        }
        i += 1;
    }
    base.sort();

    let width = carrier.last().map_or(0, |m| m + 1);
    let mut nbhd = vec![PointSet::empty(); width];
    for x in carrier {
        nbhd[x] = base
            .iter()
            .filter(|b| b.contains(x))
            .fold(carrier, |acc, &b| acc & b);
    }
    Ok(FiniteTopology {
        carrier,
        subbase: subbase.to_vec(),
        base,
        nbhd,
    })
}

/// Literal definition of openness against an explicit base list, without
/// closing it under intersection first.
pub fn open_in_base(base: &[PointSet], s: PointSet) -> bool {
    s.iter().all(|x| base.iter().any(|b| b.contains(x) && b.is_subset(s)))
}

/// Result of [`FiniteTopology::priestley_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PriestleyReport {
    pub holds: bool,
    /// `(x, y, U)` for each separated pair `x ≰ y`.
    pub witnesses: Vec<(usize, usize, PointSet)>,
    /// First pair (in index order) that no clopen upset separates.
    pub failure: Option<(usize, usize)>,
}

/// Result of [`FiniteTopology::esakia_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EsakiaReport {
    pub holds: bool,
    pub priestley: PriestleyReport,
    /// First base member whose downset is not open.
    pub downset_failure: Option<PointSet>,
}

impl FiniteTopology {
    pub fn carrier(&self) -> PointSet {
        self.carrier
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier.len()
    }

    pub fn subbase(&self) -> &[PointSet] {
        &self.subbase
    }

    pub fn base(&self) -> &[PointSet] {
        &self.base
    }

    /// Least open set containing `x`.
    pub fn neighbourhood(&self, x: usize) -> PointSet {
        self.nbhd.get(x).copied().unwrap_or_default()
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        s.is_subset(self.carrier) && s.iter().all(|x| self.nbhd[x].is_subset(s))
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        s.is_subset(self.carrier) && self.is_open(self.carrier - s)
    }

    pub fn is_clopen(&self, s: PointSet) -> bool {
        self.is_open(s) && self.is_closed(s)
    }

    pub fn is_discrete(&self) -> bool {
        self.carrier.iter().all(|x| self.nbhd[x] == PointSet::singleton(x))
    }

    /// Every open set, as the union-closure of the least neighbourhoods.
    /// `None` once more than `limit` have been found.
    pub fn open_sets(&self, limit: usize) -> Option<Vec<PointSet>> {
        let mut gens: Vec<PointSet> = self.carrier.iter().map(|x| self.nbhd[x]).collect();
        gens.sort();
        gens.dedup();
        let mut seen: HashSet<PointSet> = HashSet::from([PointSet::empty()]);
        let mut opens = vec![PointSet::empty()];
        for g in gens {
            let current = opens.len();
            for i in 0..current {
                let u = opens[i] | g;
                if seen.insert(u) {
                    opens.push(u);
                    if opens.len() > limit {
                        return None;
                    }
                }
            }
        }
        opens.sort();
        Some(opens)
    }

    /// Greedy finite subcover drawn from the indexed subbase members.
    pub fn subbase_subcover(&self, cover: &[usize]) -> Result<Vec<usize>, TopologyError> {
        let sets = cover
            .iter()
            .map(|&i| self.subbase.get(i).copied().ok_or(TopologyError::BadIndex { index: i }))
            .collect::<Result<Vec<_>, _>>()?;
        let union = sets.iter().fold(PointSet::empty(), |acc, &s| acc | s);
        if !self.carrier.is_subset(union) {
            return Err(TopologyError::NotACover {
                uncovered: self.carrier - union,
            });
        }
        Ok(greedy_subcover(&sets, self.carrier)
            .into_iter()
            .map(|k| cover[k])
            .collect())
    }

    fn check_poset(&self, poset: &FinitePoset) -> Result<(), TopologyError> {
        if self.carrier.is_subset(poset.carrier()) {
            Ok(())
        } else {
            Err(TopologyError::CarrierMismatch {
                poset: poset.len(),
                topology: self.carrier,
            })
        }
    }

    /// Least clopen upset (relative to the carrier) containing `x`.
    pub fn smallest_clopen_upset(&self, poset: &FinitePoset, x: usize) -> PointSet {
        let mut s = poset.up_of(x) & self.carrier;
        loop {
            let mut next = s.iter().fold(s, |acc, y| acc | self.nbhd[y]);
            // A point whose neighbourhood meets the set cannot stay outside
            // a set with open complement.
            loop {
                let pulled: PointSet = (self.carrier - next)
                    .iter()
                    .filter(|&p| self.nbhd[p].intersects(next))
                    .collect();
                if pulled.is_empty() {
                    break;
                }
                next |= pulled;
            }
            next = poset.upset(next) & self.carrier;
            if next == s {
                return s;
            }
            s = next;
        }
    }

    /// Priestley separation relative to `poset`: for every `x ≰ y` in the
    /// carrier there is a clopen upset containing `x` but not `y`. The
    /// witness for `(x, y)` is the least clopen upset containing `x`.
    pub fn priestley_check(&self, poset: &FinitePoset) -> Result<PriestleyReport, TopologyError> {
        self.check_poset(poset)?;
        let mut witnesses = Vec::new();
        let mut failure = None;
        for x in self.carrier {
            let u = self.smallest_clopen_upset(poset, x);
            for y in self.carrier - poset.up_of(x) {
                if u.contains(y) {
                    failure.get_or_insert((x, y));
                } else {
                    witnesses.push((x, y, u));
                }
            }
        }
        Ok(PriestleyReport {
            holds: failure.is_none(),
            witnesses,
            failure,
        })
    }

    /// Priestley separation plus openness of `↓B` for every base member `B`.
    pub fn esakia_check(&self, poset: &FinitePoset) -> Result<EsakiaReport, TopologyError> {
        let priestley = self.priestley_check(poset)?;
        let downset_failure = self
            .base
            .iter()
            .copied()
            .find(|&b| !self.is_open(poset.downset(b) & self.carrier));
        Ok(EsakiaReport {
            holds: priestley.holds && downset_failure.is_none(),
            priestley,
            downset_failure,
        })
    }

    /// Upsets (relative to the carrier) that are clopen, canonically sorted.
    pub fn clopen_upsets(&self, poset: &FinitePoset) -> Result<Vec<PointSet>, TopologyError> {
        self.check_poset(poset)?;
        let upsets = poset
            .upsets_in(self.carrier, usize::MAX)
            .expect("no limit was requested");
        Ok(upsets.into_iter().filter(|&u| self.is_clopen(u)).collect())
    }
}
