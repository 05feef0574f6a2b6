//! Finite posets presented by their Hasse covers.

mod heights;
mod order_open;
mod recognize;

use std::borrow::Cow;

use thiserror::Error;

use crate::pointset::PointSet;

pub use heights::HeightProfile;
pub use order_open::{
    check_order_open_complement, order_open_family, order_subcover, OrderOpenFamily, ORDER_OPEN_LIMIT,
};
pub use recognize::WellOrdered;

pub(crate) use order_open::greedy_subcover;

/// Largest carrier accepted for a poset.
pub const MAX_ELEMENTS: usize = PointSet::CAPACITY;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("poset has {n} elements; at most {MAX_ELEMENTS} are supported")]
    TooLarge { n: usize },
    #[error("element {element} is out of range for a carrier of size {n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("cover ({0}, {0}) is a self-loop")]
    SelfLoop(usize),
    #[error("cover ({0}, {1}) is listed twice")]
    DuplicateCover(usize, usize),
    #[error("covers contain a cycle through element {element}")]
    Cycle { element: usize },
    #[error("edge ({lower}, {upper}) is implied by transitivity through {via}")]
    NonHasseEdge { lower: usize, upper: usize, via: usize },
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not transitive at ({0}, {1}, {2})")]
    NotTransitive(usize, usize, usize),
    #[error("expected {expected} labels, got {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("elements {0} and {1} are incomparable")]
    NotAChain(usize, usize),
    #[error("chain is empty")]
    EmptyChain,
    #[error("poset is not a forest of trees")]
    NotATree,
    #[error("order-open family is materialised only for at most {limit} elements (got {n})")]
    OrderOpenTooLarge { n: usize, limit: usize },
    #[error("family does not cover the carrier; uncovered: {uncovered:?}")]
    NotACover { uncovered: PointSet },
    #[error("cover member {index} is not order-open")]
    NotOrderOpen { index: usize },
    #[error("set {0:?} is not contained in the carrier")]
    OutsideCarrier(PointSet),
}

/// A finite poset. The order is the reflexive-transitive closure of the
/// covers, and the covers are exactly its transitive reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    n: usize,
    labels: Option<Vec<String>>,
    /// Hasse edges `(lower, upper)`, sorted.
    covers: Vec<(usize, usize)>,
    up: Vec<PointSet>,
    down: Vec<PointSet>,
    upper_covers: Vec<PointSet>,
    lower_covers: Vec<PointSet>,
}

/// Witness pairs returned by [`FinitePoset::enough_gaps`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapsReport {
    /// `(x, y, x', y')` with `x < y`, `x <= x' ≺ y' <= y`.
    pub witnesses: Vec<(usize, usize, usize, usize)>,
    pub holds: bool,
}

impl GapsReport {
    pub fn witness_for(&self, x: usize, y: usize) -> Option<(usize, usize)> {
        self.witnesses
            .iter()
            .find(|w| w.0 == x && w.1 == y)
            .map(|w| (w.2, w.3))
    }
}

impl FinitePoset {
    /// Builds a poset from Hasse covers `(lower, upper)`.
    ///
    /// Rejects cycles, self-loops, duplicates and any edge that is already
    /// implied by the others.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self, PosetError> {
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge { n });
        }
        let mut upper_covers = vec![PointSet::empty(); n];
        let mut lower_covers = vec![PointSet::empty(); n];
        for &(l, u) in covers {
            for e in [l, u] {
                if e >= n {
                    return Err(PosetError::ElementOutOfRange { element: e, n });
                }
            }
            if l == u {
                return Err(PosetError::SelfLoop(l));
            }
            if upper_covers[l].contains(u) {
                return Err(PosetError::DuplicateCover(l, u));
            }
            upper_covers[l].insert(u);
            lower_covers[u].insert(l);
        }

        // Kahn's algorithm from the minimal elements upwards.
        let mut pending: Vec<usize> = lower_covers.iter().map(|s| s.len()).collect();
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).rev().filter(|&x| pending[x] == 0).collect();
        while let Some(x) = stack.pop() {
            order.push(x);
            for y in upper_covers[x] {
                pending[y] -= 1;
                if pending[y] == 0 {
                    stack.push(y);
                }
            }
        }
        if order.len() < n {
            let element = (0..n).find(|&x| pending[x] > 0).unwrap_or(0);
            return Err(PosetError::Cycle { element });
        }

        let mut down = vec![PointSet::empty(); n];
        for &x in &order {
            let mut d = PointSet::singleton(x);
            for l in lower_covers[x] {
                d |= down[l];
            }
            down[x] = d;
        }
        let mut up = vec![PointSet::empty(); n];
        for (x, d) in down.iter().enumerate() {
            for y in *d {
                up[y].insert(x);
            }
        }

        for (l, uppers) in upper_covers.iter().enumerate() {
            for u in *uppers {
                if let Some(via) = (*uppers - PointSet::singleton(u)).iter().find(|&m| down[u].contains(m)) {
                    return Err(PosetError::NonHasseEdge { lower: l, upper: u, via });
                }
            }
        }

        let mut sorted: Vec<(usize, usize)> = covers.to_vec();
        sorted.sort_unstable();
        Ok(FinitePoset {
            n,
            labels: None,
            covers: sorted,
            up,
            down,
            upper_covers,
            lower_covers,
        })
    }

    /// Builds a poset from an explicit order relation, computing its covers.
    pub fn from_leq(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self, PosetError> {
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge { n });
        }
        let mut up = vec![PointSet::empty(); n];
        for (x, row) in up.iter_mut().enumerate() {
            *row = (0..n).filter(|&y| leq(x, y)).collect();
            if !row.contains(x) {
                return Err(PosetError::NotReflexive(x));
            }
        }
        for x in 0..n {
            for y in up[x] {
                if y != x && up[y].contains(x) {
                    return Err(PosetError::NotAntisymmetric(x, y));
                }
                if let Some(z) = (up[y] - up[x]).first() {
                    return Err(PosetError::NotTransitive(x, y, z));
                }
            }
        }
        let mut down = vec![PointSet::empty(); n];
        for x in 0..n {
            for y in up[x] {
                down[y].insert(x);
            }
        }
        let mut covers = Vec::new();
        for x in 0..n {
            for y in up[x] - PointSet::singleton(x) {
                let strictly_between = (up[x] - PointSet::singleton(x)) & (down[y] - PointSet::singleton(y));
                if strictly_between.is_empty() {
                    covers.push((x, y));
                }
            }
        }
        Self::from_covers(n, &covers)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, PosetError> {
        if labels.len() != self.n {
            return Err(PosetError::LabelCount {
                expected: self.n,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_covers(n, &covers).expect("chain covers are valid")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_covers(n, &[]).expect("antichain is valid")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn carrier(&self) -> PointSet {
        PointSet::full(self.n)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> Cow<'_, str> {
        match &self.labels {
            Some(l) => Cow::Borrowed(l[x].as_str()),
            None => Cow::Owned(x.to_string()),
        }
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `↑x`.
    pub fn up_of(&self, x: usize) -> PointSet {
        self.up[x]
    }

    /// `↓x`.
    pub fn down_of(&self, x: usize) -> PointSet {
        self.down[x]
    }

    /// Immediate successors of `x`.
    pub fn upper_covers(&self, x: usize) -> PointSet {
        self.upper_covers[x]
    }

    /// Immediate predecessors of `x`.
    pub fn lower_covers(&self, x: usize) -> PointSet {
        self.lower_covers[x]
    }

    /// `↑S = {x : ∃ s ∈ S, s <= x}`.
    pub fn upset(&self, s: PointSet) -> PointSet {
        s.iter().fold(PointSet::empty(), |acc, x| acc | self.up[x])
    }

    /// `↓S = {x : ∃ s ∈ S, x <= s}`.
    pub fn downset(&self, s: PointSet) -> PointSet {
        s.iter().fold(PointSet::empty(), |acc, x| acc | self.down[x])
    }

    pub fn is_upset(&self, s: PointSet) -> bool {
        self.upset(s) == s
    }

    pub fn is_downset(&self, s: PointSet) -> bool {
        self.downset(s) == s
    }

    /// `x ≺ y`: `x < y` with nothing strictly in between.
    pub fn immediate_predecessor(&self, x: usize, y: usize) -> bool {
        x < self.n && self.upper_covers[x].contains(y)
    }

    pub fn minimal(&self, s: PointSet) -> PointSet {
        s.iter()
            .filter(|&x| (self.down[x] & s) == PointSet::singleton(x))
            .collect()
    }

    pub fn maximal(&self, s: PointSet) -> PointSet {
        s.iter()
            .filter(|&x| (self.up[x] & s) == PointSet::singleton(x))
            .collect()
    }

    /// First incomparable pair in `s`, if any.
    pub fn incomparable_pair(&self, s: PointSet) -> Option<(usize, usize)> {
        for x in s {
            let others = s - self.up[x] - self.down[x];
            if let Some(y) = others.first() {
                return Some((x.min(y), x.max(y)));
            }
        }
        None
    }

    pub fn is_chain(&self, s: PointSet) -> bool {
        self.incomparable_pair(s).is_none()
    }

    pub fn is_antichain(&self, s: PointSet) -> bool {
        s.iter().all(|x| (self.up[x] & s) == PointSet::singleton(x))
    }

    /// Supremum of a nonempty finite chain (its maximum).
    pub fn chain_sup(&self, chain: PointSet) -> Result<usize, PosetError> {
        self.chain_extreme(chain, true)
    }

    /// Infimum of a nonempty finite chain (its minimum).
    pub fn chain_inf(&self, chain: PointSet) -> Result<usize, PosetError> {
        self.chain_extreme(chain, false)
    }

    fn chain_extreme(&self, chain: PointSet, top: bool) -> Result<usize, PosetError> {
        if let Some(bad) = (chain - self.carrier()).first() {
            return Err(PosetError::ElementOutOfRange { element: bad, n: self.n });
        }
        if chain.is_empty() {
            return Err(PosetError::EmptyChain);
        }
        if let Some((x, y)) = self.incomparable_pair(chain) {
            return Err(PosetError::NotAChain(x, y));
        }
        let extremes = if top { self.maximal(chain) } else { self.minimal(chain) };
        Ok(extremes.first().expect("a nonempty finite chain has extremes"))
    }

    /// Checks the enough-gaps condition and returns, for every `x < y`, the
    /// lexicographically smallest cover `x' ≺ y'` inside `[x, y]`.
    pub fn enough_gaps(&self) -> GapsReport {
        let mut witnesses = Vec::new();
        let mut holds = true;
        for x in 0..self.n {
            for y in self.up[x] - PointSet::singleton(x) {
                let interval = self.up[x] & self.down[y];
                let found = interval.iter().find_map(|lo| {
                    (self.upper_covers[lo] & interval).first().map(|hi| (lo, hi))
                });
                match found {
                    Some((lo, hi)) => witnesses.push((x, y, lo, hi)),
                    None => holds = false,
                }
            }
        }
        GapsReport { witnesses, holds }
    }

    /// Same carrier and labels with every cover reversed.
    pub fn order_dual(&self) -> FinitePoset {
        let covers: Vec<_> = self.covers.iter().map(|&(l, u)| (u, l)).collect();
        let mut dual = Self::from_covers(self.n, &covers).expect("reversed covers stay Hasse");
        dual.labels = self.labels.clone();
        dual
    }

    /// `self ⊔ other`, with `other`'s elements shifted past `self`'s.
    pub fn disjoint_union(&self, other: &FinitePoset) -> Result<FinitePoset, PosetError> {
        let shift = self.n;
        let covers: Vec<_> = self
            .covers
            .iter()
            .copied()
            .chain(other.covers.iter().map(|&(l, u)| (l + shift, u + shift)))
            .collect();
        let mut union = Self::from_covers(self.n + other.n, &covers)?;
        if self.labels.is_some() || other.labels.is_some() {
            let labels = (0..self.n)
                .map(|x| self.label(x).into_owned())
                .chain((0..other.n).map(|x| other.label(x).into_owned()))
                .collect();
            union.labels = Some(labels);
        }
        Ok(union)
    }

    /// The subposet induced on `s`, relabelled to `0..|s|` in increasing order.
    pub fn induced(&self, s: PointSet) -> FinitePoset {
        let members = s.to_vec();
        let sub = Self::from_leq(members.len(), |i, j| self.leq(members[i], members[j]))
            .expect("induced order is a partial order");
        match &self.labels {
            Some(l) => sub
                .with_labels(members.iter().map(|&m| l[m].clone()).collect())
                .expect("label count matches"),
            None => sub,
        }
    }

    /// Connected components of the comparability graph, ordered by least element.
    pub fn components(&self) -> Vec<PointSet> {
        let mut seen = PointSet::empty();
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = PointSet::singleton(start);
            loop {
                let grown = comp.iter().fold(comp, |acc, x| acc | self.up[x] | self.down[x]);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Every antichain, found by backtracking in increasing element order.
    /// Stops and returns `None` once more than `limit` have been produced.
    pub fn antichains(&self, limit: usize) -> Option<Vec<PointSet>> {
        self.antichains_in(self.carrier(), limit)
    }

    /// Antichains whose members all lie in `domain`.
    pub fn antichains_in(&self, domain: PointSet, limit: usize) -> Option<Vec<PointSet>> {
        let mut out = Vec::new();
        // (next candidate, chosen, elements comparable to something chosen)
        let mut stack = vec![(0usize, PointSet::empty(), PointSet::empty())];
        while let Some((next, chosen, blocked)) = stack.pop() {
            out.push(chosen);
            if out.len() > limit {
                return None;
            }
            for x in (domain - blocked).iter().filter(|&x| x >= next).collect::<Vec<_>>().into_iter().rev() {
                stack.push((x + 1, chosen | PointSet::singleton(x), blocked | self.up[x] | self.down[x]));
            }
        }
        Some(out)
    }

    /// All upsets in canonical order, each generated by its antichain of
    /// minimal elements. `None` if there are more than `limit`.
    pub fn upsets(&self, limit: usize) -> Option<Vec<PointSet>> {
        self.upsets_in(self.carrier(), limit)
    }

    /// Upsets of the subposet induced on `domain`.
    pub fn upsets_in(&self, domain: PointSet, limit: usize) -> Option<Vec<PointSet>> {
        let mut all: Vec<_> = self
            .antichains_in(domain, limit)?
            .into_iter()
            .map(|a| self.upset(a) & domain)
            .collect();
        all.sort();
        Some(all)
    }

    /// All downsets in canonical order. `None` if there are more than `limit`.
    pub fn downsets(&self, limit: usize) -> Option<Vec<PointSet>> {
        let mut all: Vec<_> = self.antichains(limit)?.into_iter().map(|a| self.downset(a)).collect();
        all.sort();
        Some(all)
    }

    pub(crate) fn check_subset(&self, s: PointSet) -> Result<(), PosetError> {
        if s.is_subset(self.carrier()) {
            Ok(())
        } else {
            Err(PosetError::OutsideCarrier(s))
        }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::FinitePoset;

    /// `b < t1`, `b < t2` with `b = 0, t1 = 1, t2 = 2`.
    pub fn v_poset() -> FinitePoset {
        FinitePoset::from_covers(3, &[(0, 1), (0, 2)]).unwrap()
    }

    /// `a < t`, `b < t` with `a = 0, b = 1, t = 2`.
    pub fn lambda_poset() -> FinitePoset {
        FinitePoset::from_covers(3, &[(0, 2), (1, 2)]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn set(xs: &[usize]) -> PointSet {
        xs.iter().collect()
    }

    #[test]
    fn upset_and_downset_examples() {
        let c3 = FinitePoset::chain(3);
        assert_eq!(c3.upset(set(&[1])), set(&[1, 2]));
        assert_eq!(c3.upset(PointSet::empty()), PointSet::empty());
        assert_eq!(v_poset().downset(set(&[1])), set(&[0, 1]));
    }

    #[test]
    fn immediate_predecessor_examples() {
        let c3 = FinitePoset::chain(3);
        assert!(c3.immediate_predecessor(0, 1));
        assert!(!c3.immediate_predecessor(0, 2));
        assert!(!FinitePoset::antichain(2).immediate_predecessor(0, 1));
    }

    #[test]
    fn enough_gaps_examples() {
        let r = FinitePoset::chain(2).enough_gaps();
        assert!(r.holds);
        assert_eq!(r.witness_for(0, 1), Some((0, 1)));
        assert!(FinitePoset::chain(1).enough_gaps().holds);
        assert!(FinitePoset::chain(1).enough_gaps().witnesses.is_empty());
        let r4 = FinitePoset::chain(4).enough_gaps();
        assert_eq!(r4.witness_for(0, 3), Some((0, 1)));
        assert_eq!(r4.witness_for(1, 3), Some((1, 2)));
    }

    #[test]
    fn chain_bounds() {
        let c3 = FinitePoset::chain(3);
        assert_eq!(c3.chain_sup(set(&[0, 2])), Ok(2));
        assert_eq!(c3.chain_inf(set(&[0, 2])), Ok(0));
        assert_eq!(c3.chain_sup(set(&[1])), Ok(1));
        assert_eq!(v_poset().chain_sup(set(&[1, 2])), Err(PosetError::NotAChain(1, 2)));
        assert_eq!(c3.chain_inf(PointSet::empty()), Err(PosetError::EmptyChain));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            FinitePoset::from_covers(2, &[(0, 1), (1, 0)]).unwrap_err(),
            PosetError::Cycle { element: 0 }
        );
        assert_eq!(
            FinitePoset::from_covers(3, &[(0, 1), (1, 2), (0, 2)]).unwrap_err(),
            PosetError::NonHasseEdge { lower: 0, upper: 2, via: 1 }
        );
        assert_eq!(FinitePoset::from_covers(2, &[(1, 1)]).unwrap_err(), PosetError::SelfLoop(1));
        assert_eq!(
            FinitePoset::from_covers(2, &[(0, 1), (0, 1)]).unwrap_err(),
            PosetError::DuplicateCover(0, 1)
        );
        assert!(matches!(
            FinitePoset::from_covers(2, &[(0, 5)]),
            Err(PosetError::ElementOutOfRange { element: 5, .. })
        ));
        assert!(matches!(FinitePoset::from_leq(2, |_, _| true), Err(PosetError::NotAntisymmetric(0, 1))));
        assert!(matches!(
            FinitePoset::from_leq(3, |x, y| x == y || (x, y) == (0, 1) || (x, y) == (1, 2)),
            Err(PosetError::NotTransitive(0, 1, 2))
        ));
    }

    #[test]
    fn from_leq_reduces_to_covers() {
        let p = FinitePoset::from_leq(4, |x, y| x <= y).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p, FinitePoset::chain(4));
    }

    #[test]
    fn dual_and_union() {
        let dual = v_poset().order_dual();
        assert_eq!(dual.covers(), &[(1, 0), (2, 0)]);
        assert!(dual.is_root_system() && !dual.is_tree());
        assert_eq!(lambda_poset().order_dual().covers(), &[(2, 0), (2, 1)]);
        let p = v_poset();
        assert_eq!(p.order_dual().order_dual(), p);
        let u = FinitePoset::chain(1).disjoint_union(&FinitePoset::chain(1)).unwrap();
        assert_eq!(u, FinitePoset::antichain(2));
    }

    #[test]
    fn upsets_of_v_poset() {
        let ups = v_poset().upsets(usize::MAX).unwrap();
        assert_eq!(
            ups,
            vec![PointSet::empty(), set(&[1]), set(&[2]), set(&[1, 2]), set(&[0, 1, 2])]
        );
        assert!(v_poset().upsets(3).is_none());
    }

    #[test]
    fn components_and_induced() {
        let p = FinitePoset::chain(2).disjoint_union(&v_poset()).unwrap();
        assert_eq!(p.components(), vec![set(&[0, 1]), set(&[2, 3, 4])]);
        assert_eq!(p.induced(set(&[2, 3, 4])), v_poset());
    }
}
