//! Structural recognisers: trees, forests, root systems.

use super::FinitePoset;
use crate::pointset::PointSet;

/// Answer of [`FinitePoset::is_well_ordered`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WellOrdered {
    pub holds: bool,
    pub note: &'static str,
}

impl FinitePoset {
    /// Has a least element.
    pub fn is_rooted(&self) -> bool {
        self.root().is_some()
    }

    /// The least element, when there is one.
    pub fn root(&self) -> Option<usize> {
        (0..self.len()).find(|&x| self.up_of(x) == self.carrier())
    }

    /// Rooted, and every principal downset is a chain.
    pub fn is_tree(&self) -> bool {
        self.is_rooted() && self.principal_downsets_are_chains()
    }

    /// Every connected component is a tree.
    pub fn is_forest(&self) -> bool {
        self.principal_downsets_are_chains()
            && self
                .components()
                .into_iter()
                .all(|c| self.minimal(c).len() == 1)
    }

    /// The order dual is a forest.
    pub fn is_root_system(&self) -> bool {
        self.principal_upsets_are_chains()
            && self
                .components()
                .into_iter()
                .all(|c| self.maximal(c).len() == 1)
    }

    /// A finite poset has no infinite descending chain, so this always holds.
    pub fn is_well_ordered(&self) -> WellOrdered {
        WellOrdered {
            holds: true,
            note: "finite posets contain no infinite descending chain",
        }
    }

    fn principal_downsets_are_chains(&self) -> bool {
        (0..self.len()).all(|x| self.lower_covers(x).len() <= 1)
    }

    fn principal_upsets_are_chains(&self) -> bool {
        (0..self.len()).all(|x| self.upper_covers(x).len() <= 1)
    }

    /// In a forest, the unique immediate predecessor of a non-root element.
    pub fn parent(&self, x: usize) -> Option<usize> {
        let lower = self.lower_covers(x);
        match lower.len() {
            1 => lower.first(),
            _ => None,
        }
    }

    /// Children of `x` (its immediate successors).
    pub fn children(&self, x: usize) -> PointSet {
        self.upper_covers(x)
    }
}
