//! Clopen upsets separating `x ≰ y`, and openness of downsets.

use serde::Serialize;

use super::{invariant, ConstructionError, StagedTopology};
use crate::ordinal::{Ordinal, OrdinalKind};
use crate::pointset::PointSet;

/// A clopen upset of the final topology containing `x` but not `y`, built
/// level by level.
pub fn separation_witness(st: &StagedTopology, x: usize, y: usize) -> Result<PointSet, ConstructionError> {
    st.check_element(x)?;
    st.check_element(y)?;
    if st.poset().leq(x, y) {
        return Err(ConstructionError::NotComparablePrecondition { x, y });
    }
    separate(st, Ordinal::Finite(st.height()), x, y)
}

fn separate(st: &StagedTopology, stage: Ordinal, x: usize, y: usize) -> Result<PointSet, ConstructionError> {
    let p = st.poset();
    let h = st.heights();
    let u = match stage.kind() {
        OrdinalKind::Zero => return Err(invariant("two distinct points at level 0")),
        OrdinalKind::Limit => return Err(ConstructionError::LimitHeightUnsupported { stage }),
        OrdinalKind::Successor { predecessor: alpha } => {
            let level = alpha + 1;
            let carrier = h.up_to(level);
            // Points of the new slice are replaced by their parents.
            let bar = |z: usize| {
                if h.of(z) <= alpha {
                    z
                } else {
                    p.parent(z).expect("non-root")
                }
            };
            let (bx, by) = (bar(x), bar(y));
            if !p.leq(bx, by) {
                let v = separate(st, Ordinal::Finite(alpha), bx, by)?;
                v | h.bounded_upset(p, v & h.level(alpha), level)
            } else {
                let lower = st.level(alpha)?;
                let upper = st.level(level)?;
                if lower.p.contains(y) || upper.s.contains(y) {
                    carrier - p.down_of(y)
                } else {
                    PointSet::singleton(x)
                }
            }
        }
    };
    let level = stage.finite().expect("successor");
    let t = &st.level(level)?.topology;
    let ok = u.contains(x)
        && !u.contains(y)
        && t.is_clopen(u)
        && (p.upset(u) & h.up_to(level)) == u;
    if ok {
        Ok(u)
    } else {
        Err(invariant(format!("{u:?} does not separate {x} from {y} at level {level}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DownsetOpenReport {
    pub holds: bool,
    /// First base member of the final topology whose downset is not open.
    pub base_failure: Option<PointSet>,
    /// First non-maximal point whose downset is not a top-level subbase member.
    pub subbase_failure: Option<usize>,
}

pub fn downset_open_check(st: &StagedTopology) -> DownsetOpenReport {
    let p = st.poset();
    let t = st.final_topology();
    let top = st.level(st.height()).expect("top level exists");
    let base_failure = t.base().iter().copied().find(|&b| !t.is_open(p.downset(b)));
    let subbase_failure = (0..p.len()).find(|&x| !p.children(x).is_empty() && !top.contains(p.down_of(x)));
    DownsetOpenReport {
        holds: base_failure.is_none() && subbase_failure.is_none(),
        base_failure,
        subbase_failure,
    }
}
