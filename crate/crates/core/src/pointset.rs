//! Fixed-width subsets of a finite carrier.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A subset of `{0, .., CAPACITY - 1}` stored as a bitmask.
///
/// Every carrier handled by the toolkit (posets, lattices, spectra) has at
/// most [`PointSet::CAPACITY`] elements, so sets are `Copy` and all set
/// algebra is branch-free.
///
/// The `Ord` instance is the canonical order used for every sorted listing:
/// smaller sets first, and among sets of equal size the one whose sorted
/// member list is lexicographically smaller.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PointSet(u128);

impl PointSet {
    pub const CAPACITY: usize = 128;

    pub const fn empty() -> Self {
        PointSet(0)
    }

    /// `{0, .., n - 1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::CAPACITY, "carrier of size {n} exceeds capacity");
        if n == Self::CAPACITY {
            PointSet(u128::MAX)
        } else {
            PointSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < Self::CAPACITY, "element {i} exceeds capacity");
        PointSet(1u128 << i)
    }

    pub const fn from_bits(bits: u128) -> Self {
        PointSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < Self::CAPACITY && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        *self |= Self::singleton(i);
    }

    pub fn remove(&mut self, i: usize) {
        if i < Self::CAPACITY {
            self.0 &= !(1u128 << i);
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: PointSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn intersects(self, other: PointSet) -> bool {
        !self.is_disjoint(other)
    }

    /// Complement relative to `carrier`.
    pub fn complement_in(self, carrier: PointSet) -> PointSet {
        PointSet(carrier.0 & !self.0)
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest member.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing order of their bitmask.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 >> diff.trailing_zeros() & 1 == 1 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for PointSet {
    fn bitor_assign(&mut self, rhs: PointSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for PointSet {
    fn bitand_assign(&mut self, rhs: PointSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for PointSet {
    type Output = PointSet;
    fn sub(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 & !rhs.0)
    }
}

/// Complement in the full capacity; prefer [`PointSet::complement_in`].
impl Not for PointSet {
    type Output = PointSet;
    fn not(self) -> PointSet {
        PointSet(!self.0)
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for PointSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = members.iter().find(|&&i| i >= PointSet::CAPACITY) {
            return Err(serde::de::Error::custom(format!(
                "element {bad} exceeds capacity {}",
                PointSet::CAPACITY
            )));
        }
        Ok(members.into_iter().collect())
    }
}

/// Iterator over the members of a [`PointSet`] in increasing order.
#[derive(Clone)]
pub struct Members(u128);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Iterator over all subsets of a mask (standard submask walk, ascending).
pub struct Subsets {
    mask: u128,
    next: Option<u128>,
}

impl Iterator for Subsets {
    type Item = PointSet;

    fn next(&mut self) -> Option<PointSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            // Next submask in increasing numeric order.
            Some((cur | !self.mask).wrapping_add(1) & self.mask)
        };
        Some(PointSet(cur))
    }
}
