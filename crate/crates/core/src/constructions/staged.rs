//! The level-by-level topology on a finite tree.
//!
//! Level 0 is the root alone. Level `α+1` lives on `X_{≤α+1}` and is
//! generated by
//!
//! 1. `{x}` for `x ∈ S_{α+1}`,
//! 2. `↓x` for `x ∈ P_α`,
//! 3. `(V ∪ ↑_{α+1}(V ∩ X_α)) ∖ ↓Z` for `V ∈ τ_α`, `Z ⊆ P_α ∪ S_{α+1}`,
//!
//! where `P_α` are the level-`α` points with children, each `x ∈ P_α` picks
//! one child `x⁺`, and `S_{α+1}` are the level-`α+1` points never picked.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::ConstructionError;
use crate::ordinal::{Ordinal, OrdinalKind};
use crate::pointset::PointSet;
use crate::poset::{FinitePoset, HeightProfile};
use crate::topology::{generate_base_on, FiniteTopology};

/// Above this many opens in `τ_α`, family (iii) ranges over base members and
/// pairwise unions of base members only.
pub const EXACT_OPEN_LIMIT: usize = 4096;
/// Above this many candidate points, family (iii) uses `|Z| ≤ 2` only.
pub const EXACT_Z_POINTS: usize = 10;

/// Explicit `x ↦ x⁺` overrides; points not listed use their smallest child.
pub type PlusChoice = BTreeMap<usize, usize>;

/// A witness that a subbase member has shape (iii).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Lift {
    pub v: PointSet,
    pub z: PointSet,
}

#[derive(Clone, Debug)]
pub struct Level {
    pub alpha: usize,
    /// `X_{≤α}`.
    pub carrier: PointSet,
    /// `P_α`.
    pub p: PointSet,
    /// `S_α` (empty at level 0).
    pub s: PointSet,
    /// `(x, x⁺)` for `x ∈ P_α`, ascending in `x`.
    pub plus: Vec<(usize, usize)>,
    /// `𝒮_α`, deduplicated and canonically sorted.
    pub subbase: Vec<PointSet>,
    pub topology: FiniteTopology,
    /// Family (iii) was built from a restricted range of `V`.
    pub restricted_v: bool,
    /// Family (iii) was built from a restricted range of `Z`.
    pub restricted_z: bool,
    lifts: HashMap<PointSet, Lift>,
}

impl Level {
    /// The first `(V, Z)` found that produces `u` through family (iii).
    pub fn lift(&self, u: PointSet) -> Option<Lift> {
        self.lifts.get(&u).copied()
    }

    pub fn index_of(&self, u: PointSet) -> Option<usize> {
        self.subbase.binary_search(&u).ok()
    }

    pub fn contains(&self, u: PointSet) -> bool {
        self.index_of(u).is_some()
    }
}

#[derive(Clone, Debug)]
pub struct StagedTopology {
    poset: FinitePoset,
    heights: HeightProfile,
    root: usize,
    plus: Vec<Option<usize>>,
    levels: Vec<Level>,
}

impl StagedTopology {
    /// Builds every level with the default choice of `x⁺` (smallest child).
    pub fn build(p: &FinitePoset) -> Result<Self, ConstructionError> {
        Self::build_with_choice(p, &PlusChoice::new())
    }

    pub fn build_with_choice(p: &FinitePoset, choice: &PlusChoice) -> Result<Self, ConstructionError> {
        if !p.is_tree() {
            return Err(ConstructionError::NotATree);
        }
        let heights = p.heights()?;
        let root = p.root().ok_or(ConstructionError::NotATree)?;

        let mut plus = vec![None; p.len()];
        for (&x, &c) in choice {
            if x >= p.len() || !p.children(x).contains(c) {
                return Err(ConstructionError::InvalidChoice { x, chosen: Some(c) });
            }
            plus[x] = Some(c);
        }
        for x in 0..p.len() {
            if plus[x].is_none() {
                plus[x] = p.children(x).first();
            }
        }

        let h = heights.max_height();
        let level0_carrier = heights.up_to(0);
        let subbase0 = vec![level0_carrier];
        let mut levels = vec![Level {
            alpha: 0,
            carrier: level0_carrier,
            p: inner(p, heights.level(0)),
            s: PointSet::empty(),
            plus: plus_pairs(p, &plus, heights.level(0)),
            topology: generate_base_on(&subbase0, level0_carrier)?,
            subbase: subbase0,
            restricted_v: false,
            restricted_z: false,
            lifts: HashMap::new(),
        }];
        for alpha in 0..h {
            let next = successor_level(p, &heights, &plus, &levels[alpha])?;
            levels.push(next);
        }
        Ok(StagedTopology {
            poset: p.clone(),
            heights,
            root,
            plus,
            levels,
        })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn heights(&self) -> &HeightProfile {
        &self.heights
    }

    /// `ĥ(X)`.
    pub fn height(&self) -> usize {
        self.heights.max_height()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// `x⁺`, for points with children.
    pub fn plus(&self, x: usize) -> Option<usize> {
        self.plus.get(x).copied().flatten()
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn level(&self, alpha: usize) -> Result<&Level, ConstructionError> {
        self.levels.get(alpha).ok_or(ConstructionError::LevelOutOfRange {
            level: alpha,
            max: self.height(),
        })
    }

    /// Same as [`level`](Self::level) but dispatching on a general stage.
    pub fn level_at(&self, stage: Ordinal) -> Result<&Level, ConstructionError> {
        match stage.kind() {
            OrdinalKind::Limit => Err(ConstructionError::LimitHeightUnsupported { stage }),
            OrdinalKind::Zero => self.level(0),
            OrdinalKind::Successor { predecessor } => self.level(predecessor + 1),
        }
    }

    /// `τ_{ĥ(X)}`.
    pub fn final_topology(&self) -> &FiniteTopology {
        &self.levels[self.height()].topology
    }

    pub fn final_subbase(&self) -> &[PointSet] {
        &self.levels[self.height()].subbase
    }

    /// Whether any level used a restricted family (iii).
    pub fn is_restricted(&self) -> bool {
        self.levels.iter().any(|l| l.restricted_v || l.restricted_z)
    }

    pub(crate) fn check_element(&self, x: usize) -> Result<(), ConstructionError> {
        if x < self.poset.len() {
            Ok(())
        } else {
            Err(ConstructionError::ElementOutOfRange(x))
        }
    }

    pub fn dump(&self) -> StagedDump {
        StagedDump {
            height: self.height(),
            restricted: self.is_restricted(),
            levels: self
                .levels
                .iter()
                .map(|l| LevelDump {
                    alpha: l.alpha,
                    carrier: l.carrier.to_vec(),
                    p: l.p.to_vec(),
                    s: l.s.to_vec(),
                    plus: l.plus.clone(),
                    subbase: l.subbase.iter().map(|s| s.to_vec()).collect(),
                    base_size: l.topology.base().len(),
                    restricted_v: l.restricted_v,
                    restricted_z: l.restricted_z,
                })
                .collect(),
        }
    }
}

/// Serializable per-level summary; sets are sorted index arrays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StagedDump {
    pub height: usize,
    pub restricted: bool,
    pub levels: Vec<LevelDump>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelDump {
    pub alpha: usize,
    pub carrier: Vec<usize>,
    pub p: Vec<usize>,
    pub s: Vec<usize>,
    pub plus: Vec<(usize, usize)>,
    pub subbase: Vec<Vec<usize>>,
    pub base_size: usize,
    pub restricted_v: bool,
    pub restricted_z: bool,
}

fn inner(p: &FinitePoset, slice: PointSet) -> PointSet {
    slice.iter().filter(|&x| !p.children(x).is_empty()).collect()
}

fn plus_pairs(p: &FinitePoset, plus: &[Option<usize>], slice: PointSet) -> Vec<(usize, usize)> {
    inner(p, slice).iter().filter_map(|x| plus[x].map(|c| (x, c))).collect()
}

fn successor_level(
    p: &FinitePoset,
    heights: &HeightProfile,
    plus: &[Option<usize>],
    prev: &Level,
) -> Result<Level, ConstructionError> {
    let alpha = prev.alpha + 1;
    let carrier = heights.up_to(alpha);
    let top = heights.level(alpha);
    let chosen: PointSet = prev.plus.iter().map(|&(_, c)| c).collect();
    let s = top - chosen;

    let mut lifts: HashMap<PointSet, Lift> = HashMap::new();
    let mut members: Vec<PointSet> = s.iter().map(PointSet::singleton).collect();
    members.extend(prev.p.iter().map(|x| p.down_of(x)));

    let (vs, restricted_v) = match prev.topology.open_sets(EXACT_OPEN_LIMIT) {
        Some(opens) => (opens, false),
        None => (base_and_pairwise_unions(prev.topology.base()), true),
    };
    let z_points = prev.p | s;
    let restricted_z = z_points.len() > EXACT_Z_POINTS;
    let zs: Vec<PointSet> = if restricted_z {
        small_subsets(z_points)
    } else {
        z_points.subsets().collect()
    };
    for &v in &vs {
        let lifted = v | heights.bounded_upset(p, v & heights.level(prev.alpha), alpha);
        for &z in &zs {
            let u = lifted - p.downset(z);
            lifts.entry(u).or_insert(Lift { v, z });
        }
    }
    members.extend(lifts.keys().copied());
    members.sort();
    members.dedup();

    let topology = generate_base_on(&members, carrier)?;
    Ok(Level {
        alpha,
        carrier,
        p: inner(p, top),
        s,
        plus: plus_pairs(p, plus, top),
        subbase: members,
        topology,
        restricted_v,
        restricted_z,
        lifts,
    })
}

/// Base members and all pairwise unions of them, canonically sorted, with the
/// empty set included.
fn base_and_pairwise_unions(base: &[PointSet]) -> Vec<PointSet> {
    let mut out = vec![PointSet::empty()];
    for (i, &a) in base.iter().enumerate() {
        out.push(a);
        out.extend(base[i + 1..].iter().map(|&b| a | b));
    }
    out.sort();
    out.dedup();
    out
}

/// Subsets of size at most two, by ascending bitmask.
fn small_subsets(points: PointSet) -> Vec<PointSet> {
    let pts = points.to_vec();
    let mut out = vec![PointSet::empty()];
    for (i, &a) in pts.iter().enumerate() {
        out.push(PointSet::singleton(a));
        out.extend(pts[i + 1..].iter().map(|&b| PointSet::singleton(a) | PointSet::singleton(b)));
    }
    out.sort_by_key(|s| s.bits());
    out
}

/// Every way of choosing `x⁺` for every point with children. Exponential in
/// the number of branching points.
pub fn admissible_choices(p: &FinitePoset) -> Result<Vec<PlusChoice>, ConstructionError> {
    if !p.is_tree() {
        return Err(ConstructionError::NotATree);
    }
    let mut out = vec![PlusChoice::new()];
    for x in 0..p.len() {
        let kids = p.children(x);
        if kids.is_empty() {
            continue;
        }
        out = out
            .into_iter()
            .flat_map(|c| {
                kids.iter().map(move |k| {
                    let mut c = c.clone();
                    c.insert(x, k);
                    c
                })
            })
            .collect();
    }
    Ok(out)
}

/// For `β < α` and `U` open in `τ_β`: is `U ∪ ↑_α(U ∩ X_β)` a member of
/// `𝒮_α`?
pub fn check_lifted_open(
    st: &StagedTopology,
    beta: impl Into<Ordinal>,
    alpha: impl Into<Ordinal>,
    u: PointSet,
) -> Result<bool, ConstructionError> {
    let (beta, alpha) = (beta.into(), alpha.into());
    let lower = st.level_at(beta)?;
    let upper = st.level_at(alpha)?;
    if lower.alpha >= upper.alpha {
        return Err(ConstructionError::LevelOutOfRange {
            level: lower.alpha,
            max: upper.alpha.saturating_sub(1),
        });
    }
    if !u.is_subset(lower.carrier) || !lower.topology.is_open(u) {
        return Err(ConstructionError::NotOpenAtLevel {
            level: lower.alpha,
            set: u,
        });
    }
    let heights = st.heights();
    let lifted = u | heights.bounded_upset(st.poset(), u & heights.level(lower.alpha), upper.alpha);
    Ok(upper.contains(lifted))
}
