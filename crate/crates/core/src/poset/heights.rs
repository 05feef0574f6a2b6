//! Heights of elements in a forest and the slices they induce.

use super::{FinitePoset, PosetError};
use crate::pointset::PointSet;

/// Per-element height `|↓x| - 1` in a forest, with the slice views derived
/// from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightProfile {
    height: Vec<usize>,
    max_height: usize,
    slices: Vec<PointSet>,
}

impl FinitePoset {
    /// Heights of a forest (each component measured from its own root).
    pub fn heights(&self) -> Result<HeightProfile, PosetError> {
        if !self.is_forest() {
            return Err(PosetError::NotATree);
        }
        let height: Vec<usize> = (0..self.len()).map(|x| self.down_of(x).len() - 1).collect();
        let max_height = height.iter().copied().max().unwrap_or(0);
        let mut slices = vec![PointSet::empty(); max_height + 1];
        for (x, &h) in height.iter().enumerate() {
            slices[h].insert(x);
        }
        Ok(HeightProfile {
            height,
            max_height,
            slices,
        })
    }
}

impl HeightProfile {
    pub fn of(&self, x: usize) -> usize {
        self.height[x]
    }

    pub fn max_height(&self) -> usize {
        self.max_height
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.height
    }

    /// `X_α`.
    pub fn level(&self, alpha: usize) -> PointSet {
        self.slices.get(alpha).copied().unwrap_or_default()
    }

    /// `X_{≤α}`.
    pub fn up_to(&self, alpha: usize) -> PointSet {
        self.slices
            .iter()
            .take(alpha.saturating_add(1))
            .fold(PointSet::empty(), |acc, &s| acc | s)
    }

    /// `X_{<α}`.
    pub fn below(&self, alpha: usize) -> PointSet {
        self.slices.iter().take(alpha).fold(PointSet::empty(), |acc, &s| acc | s)
    }

    /// `X_{>α}`.
    pub fn above(&self, alpha: usize) -> PointSet {
        self.slices
            .iter()
            .skip(alpha.saturating_add(1))
            .fold(PointSet::empty(), |acc, &s| acc | s)
    }

    /// `↑_α S = X_{≤α} ∩ ↑S`.
    pub fn bounded_upset(&self, poset: &FinitePoset, s: PointSet, alpha: usize) -> PointSet {
        self.up_to(alpha) & poset.upset(s)
    }
}
