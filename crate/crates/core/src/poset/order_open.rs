//! Order-open sets: the least family containing every `{x}ᶜ` and closed
//! under the two blur operators `U ↦ (↑Uᶜ)ᶜ`, `U ↦ (↓Uᶜ)ᶜ`, finite
//! intersections and arbitrary unions.

use super::{FinitePoset, PosetError};
use crate::pointset::PointSet;

/// The family is materialised as a bitmap over the powerset.
pub const ORDER_OPEN_LIMIT: usize = 16;

#[derive(Clone, Debug)]
pub struct OrderOpenFamily {
    n: usize,
    member: Vec<bool>,
    count: usize,
}

impl OrderOpenFamily {
    pub fn contains(&self, s: PointSet) -> bool {
        s.is_subset(PointSet::full(self.n)) && self.member[s.bits() as usize]
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// Members in canonical order.
    pub fn sets(&self) -> Vec<PointSet> {
        let mut out: Vec<PointSet> = self
            .member
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(bits, _)| PointSet::from_bits(bits as u128))
            .collect();
        out.sort();
        out
    }
}

/// Computes the order-open family of `poset` as an explicit fixpoint.
pub fn order_open_family(poset: &FinitePoset) -> Result<OrderOpenFamily, PosetError> {
    let n = poset.len();
    if n > ORDER_OPEN_LIMIT {
        return Err(PosetError::OrderOpenTooLarge {
            n,
            limit: ORDER_OPEN_LIMIT,
        });
    }
    let carrier = poset.carrier();
    let total = 1usize << n;
    let mut member = vec![false; total];
    let mut found: Vec<PointSet> = Vec::new();
    let mut add = |s: PointSet, found: &mut Vec<PointSet>| {
        let slot = &mut member[s.bits() as usize];
        if !*slot {
            *slot = true;
            found.push(s);
        }
    };

    // Empty intersection and empty union.
    add(carrier, &mut found);
    add(PointSet::empty(), &mut found);
    for x in 0..n {
        add(PointSet::singleton(x).complement_in(carrier), &mut found);
    }

    let mut i = 0;
    while i < found.len() && found.len() < total {
        let s = found[i];
        let outside = s.complement_in(carrier);
        add(poset.upset(outside).complement_in(carrier), &mut found);
        add(poset.downset(outside).complement_in(carrier), &mut found);
        for j in 0..=i {
            let t = found[j];
            add(s & t, &mut found);
            add(s | t, &mut found);
        }
        i += 1;
    }

    let count = found.len();
    Ok(OrderOpenFamily { n, member, count })
}

/// Whether `(↑Y ∩ ↓Z)ᶜ` is order-open.
pub fn check_order_open_complement(
    poset: &FinitePoset,
    family: &OrderOpenFamily,
    y: PointSet,
    z: PointSet,
) -> Result<bool, PosetError> {
    poset.check_subset(y)?;
    poset.check_subset(z)?;
    let closed = poset.upset(y) & poset.downset(z);
    Ok(family.contains(closed.complement_in(poset.carrier())))
}

/// Extracts a finite subcover from a cover by order-open sets.
///
/// Members are scanned by descending size, then ascending index, and kept
/// whenever they add an uncovered point.
pub fn order_subcover(poset: &FinitePoset, cover: &[PointSet]) -> Result<Vec<PointSet>, PosetError> {
    let family = order_open_family(poset)?;
    if let Some(index) = cover.iter().position(|&u| !family.contains(u)) {
        return Err(PosetError::NotOrderOpen { index });
    }
    let carrier = poset.carrier();
    let union = cover.iter().fold(PointSet::empty(), |acc, &u| acc | u);
    if union != carrier {
        return Err(PosetError::NotACover {
            uncovered: carrier - union,
        });
    }
    Ok(greedy_subcover(cover, carrier)
        .into_iter()
        .map(|i| cover[i])
        .collect())
}

/// Indices of a greedy subcover: descending size, then ascending index.
pub(crate) fn greedy_subcover(cover: &[PointSet], target: PointSet) -> Vec<usize> {
    let mut order: Vec<usize> = (0..cover.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(cover[i].len()), i));
    let mut covered = PointSet::empty();
    let mut picked = Vec::new();
    for i in order {
        if target.is_subset(covered) {
            break;
        }
        if !(cover[i] & target).is_subset(covered) {
            covered |= cover[i];
            picked.push(i);
        }
    }
    picked
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::v_poset;
    use super::*;

    fn set(xs: &[usize]) -> PointSet {
        xs.iter().collect()
    }

    /// Closure of the generators under the four operations, iterated naively
    /// over every pair until nothing changes.
    fn naive_family(p: &FinitePoset) -> Vec<PointSet> {
        let carrier = p.carrier();
        let mut fam: std::collections::BTreeSet<PointSet> = (0..p.len())
            .map(|x| PointSet::singleton(x).complement_in(carrier))
            .collect();
        fam.insert(carrier);
        fam.insert(PointSet::empty());
        loop {
            let cur: Vec<_> = fam.iter().copied().collect();
            let mut next = fam.clone();
            for &s in &cur {
                next.insert(p.upset(s.complement_in(carrier)).complement_in(carrier));
                next.insert(p.downset(s.complement_in(carrier)).complement_in(carrier));
                for &t in &cur {
                    next.insert(s & t);
                    next.insert(s | t);
                }
            }
            if next == fam {
                return fam.into_iter().collect();
            }
            fam = next;
        }
    }

    #[test]
    fn small_families() {
        let one = order_open_family(&FinitePoset::chain(1)).unwrap();
        assert_eq!(one.sets(), vec![PointSet::empty(), set(&[0])]);
        let chain = order_open_family(&FinitePoset::chain(2)).unwrap();
        assert_eq!(chain.len(), 4);
        let anti = order_open_family(&FinitePoset::antichain(2)).unwrap();
        assert_eq!(anti.len(), 4);
    }

    #[test]
    fn matches_naive_closure() {
        for p in [FinitePoset::chain(3), v_poset(), FinitePoset::antichain(3)] {
            assert_eq!(order_open_family(&p).unwrap().sets(), naive_family(&p));
        }
    }

    #[test]
    fn complement_checks() {
        let c2 = FinitePoset::chain(2);
        let f2 = order_open_family(&c2).unwrap();
        assert!(check_order_open_complement(&c2, &f2, set(&[1]), PointSet::empty()).unwrap());
        assert!(check_order_open_complement(&c2, &f2, PointSet::empty(), PointSet::empty()).unwrap());
        let c3 = FinitePoset::chain(3);
        let f3 = order_open_family(&c3).unwrap();
        assert!(check_order_open_complement(&c3, &f3, set(&[0]), set(&[2])).unwrap());
    }

    #[test]
    fn subcover_examples() {
        let c2 = FinitePoset::chain(2);
        let got = order_subcover(&c2, &[set(&[0]), set(&[1]), set(&[0, 1])]).unwrap();
        assert_eq!(got, vec![set(&[0, 1])]);
        assert_eq!(order_subcover(&c2, &[c2.carrier()]).unwrap(), vec![c2.carrier()]);
        assert_eq!(
            order_subcover(&c2, &[set(&[0])]),
            Err(PosetError::NotACover { uncovered: set(&[1]) })
        );
    }

    #[test]
    fn size_cap() {
        assert!(matches!(
            order_open_family(&FinitePoset::antichain(17)),
            Err(PosetError::OrderOpenTooLarge { n: 17, .. })
        ));
    }
}
