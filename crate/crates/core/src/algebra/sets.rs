//! Lattices whose elements are sets: upsets, downsets, clopen upsets.

use std::collections::HashMap;

use super::{validate_lattice, FiniteLattice, HeytingAlgebra, LatticeError, MAX_ELEMENTS};
use crate::pointset::PointSet;
use crate::poset::FinitePoset;

/// A lattice of sets under `∩` and `∪`; element `i` is `sets[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetLattice {
    pub lattice: FiniteLattice,
    pub sets: Vec<PointSet>,
}

/// A Heyting algebra of upsets; element `i` is `sets[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetAlgebra {
    pub algebra: HeytingAlgebra,
    pub sets: Vec<PointSet>,
}

impl SetLattice {
    pub fn index_of(&self, s: PointSet) -> Option<usize> {
        self.sets.binary_search(&s).ok()
    }
}

impl SetAlgebra {
    pub fn index_of(&self, s: PointSet) -> Option<usize> {
        self.sets.binary_search(&s).ok()
    }
}

/// Lattice of a family of sets that contains `∅` and `top` and is closed
/// under `∩` and `∪`. The family is sorted canonically before indexing.
pub fn set_family_lattice(mut sets: Vec<PointSet>, top: PointSet) -> Result<SetLattice, LatticeError> {
    sets.sort();
    sets.dedup();
    if sets.len() > MAX_ELEMENTS {
        return Err(LatticeError::TooLarge { n: sets.len() });
    }
    for bound in [PointSet::empty(), top] {
        if sets.binary_search(&bound).is_err() {
            return Err(LatticeError::MissingBound(bound));
        }
    }
    let index: HashMap<PointSet, usize> = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let n = sets.len();
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (sets[i], sets[j]);
            meet[i][j] = *index.get(&(a & b)).ok_or(LatticeError::NotClosed {
                op: "intersection",
                left: a,
                right: b,
            })?;
            join[i][j] = *index.get(&(a | b)).ok_or(LatticeError::NotClosed {
                op: "union",
                left: a,
                right: b,
            })?;
        }
    }
    Ok(SetLattice {
        lattice: validate_lattice(meet, join)?,
        sets,
    })
}

/// A family of upsets of `poset` with the implication
/// `U → V = {x : U ∩ ↑x ⊆ V}`.
pub fn upset_family_algebra(poset: &FinitePoset, sets: Vec<PointSet>) -> Result<SetAlgebra, LatticeError> {
    let SetLattice { lattice, sets } = set_family_lattice(sets, poset.carrier())?;
    let n = sets.len();
    let mut implies = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let (u, v) = (sets[i], sets[j]);
            let w: PointSet = poset
                .carrier()
                .iter()
                .filter(|&x| (u & poset.up_of(x)).is_subset(v))
                .collect();
            implies[i][j] = sets.binary_search(&w).map_err(|_| LatticeError::ImplicationOutside(u, v))?;
        }
    }
    Ok(SetAlgebra {
        algebra: HeytingAlgebra::new(lattice, implies)?,
        sets,
    })
}

/// The algebra of all upsets of `poset` — the dual algebra of the poset
/// under the discrete topology.
pub fn upset_algebra(poset: &FinitePoset) -> Result<SetAlgebra, LatticeError> {
    let sets = poset.upsets(MAX_ELEMENTS).ok_or(LatticeError::TooLarge { n: MAX_ELEMENTS + 1 })?;
    upset_family_algebra(poset, sets)
}

/// Downsets of `poset` under inclusion. Every finite distributive lattice
/// is the downset lattice of its join-irreducibles.
pub fn downset_lattice(poset: &FinitePoset) -> Result<SetLattice, LatticeError> {
    let sets = poset.downsets(MAX_ELEMENTS).ok_or(LatticeError::TooLarge { n: MAX_ELEMENTS + 1 })?;
    set_family_lattice(sets, poset.carrier())
}

#[cfg(test)]
mod tests {
    use super::super::{heyting_complete, is_godel, spectrum};
    use super::*;

    fn set(xs: &[usize]) -> PointSet {
        xs.iter().collect()
    }

    fn v_poset() -> FinitePoset {
        FinitePoset::from_covers(3, &[(0, 1), (0, 2)]).unwrap()
    }

    fn lambda_poset() -> FinitePoset {
        FinitePoset::from_covers(3, &[(0, 2), (1, 2)]).unwrap()
    }

    /// `b → c` by scanning for the largest `a` with `a ∩ b ⊆ c`.
    fn brute_implies(sets: &[PointSet], b: PointSet, c: PointSet) -> PointSet {
        let fits: Vec<_> = sets.iter().copied().filter(|&a| (a & b).is_subset(c)).collect();
        let max = fits.iter().fold(PointSet::empty(), |acc, &a| acc | a);
        assert!(fits.contains(&max));
        max
    }

    #[test]
    fn upset_algebra_examples() {
        let c2 = upset_algebra(&FinitePoset::chain(2)).unwrap();
        assert_eq!(c2.sets, vec![PointSet::empty(), set(&[1]), set(&[0, 1])]);
        assert_eq!(c2.algebra.lattice().order(), FinitePoset::chain(3));

        let v = upset_algebra(&v_poset()).unwrap();
        assert_eq!(v.sets.len(), 5);
        let (t1, t2) = (v.index_of(set(&[1])).unwrap(), v.index_of(set(&[2])).unwrap());
        assert_eq!(v.sets[v.algebra.implies(t1, t2)], set(&[2]));
        assert_eq!(brute_implies(&v.sets, set(&[1]), set(&[2])), set(&[2]));

        let anti = upset_algebra(&FinitePoset::antichain(2)).unwrap();
        assert_eq!(spectrum(anti.algebra.lattice()), FinitePoset::antichain(2));
    }

    #[test]
    fn displayed_implication_matches_maximum() {
        for p in [v_poset(), lambda_poset(), FinitePoset::chain(3), FinitePoset::antichain(3)] {
            let a = upset_algebra(&p).unwrap();
            let h = heyting_complete(a.algebra.lattice()).unwrap();
            assert_eq!(h.implies_table(), a.algebra.implies_table());
        }
    }

    #[test]
    fn godel_examples() {
        let v = upset_algebra(&v_poset()).unwrap();
        let r = is_godel(&v.algebra);
        let (x, y) = r.counterexample.unwrap();
        assert_eq!((v.sets[x], v.sets[y]), (set(&[1]), set(&[2])));
        assert!(is_godel(&upset_algebra(&lambda_poset()).unwrap().algebra).holds);
    }

    #[test]
    fn downsets_rebuild_the_lattice() {
        let d = downset_lattice(&FinitePoset::antichain(2)).unwrap();
        assert_eq!(d.sets.len(), 4);
        assert_eq!(d.lattice.join_irreducibles().len(), 2);
    }

    #[test]
    fn family_must_be_closed() {
        assert!(matches!(
            set_family_lattice(vec![PointSet::empty(), set(&[0]), set(&[1]), set(&[0, 1, 2])], set(&[0, 1, 2])),
            Err(LatticeError::NotClosed { .. })
        ));
    }
}
