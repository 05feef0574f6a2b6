//! `f_x`: from `x`, step to `x⁺` whenever the current point can grow.

use serde::Serialize;

use super::{ConstructionError, StagedTopology};
use crate::ordinal::{Ordinal, OrdinalKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Climb {
    pub origin: usize,
    /// `ĥ(x)`.
    pub start: usize,
    /// `values[k] = f_x(ĥ(x) + k)` up to `ĥ(X)`.
    pub values: Vec<usize>,
}

impl Climb {
    /// `f_x(α)`, defined for `ĥ(x) ≤ α ≤ ĥ(X)`.
    pub fn at(&self, alpha: usize) -> Option<usize> {
        alpha.checked_sub(self.start).and_then(|k| self.values.get(k).copied())
    }

    /// `f_x(ĥ(X))`.
    pub fn last(&self) -> usize {
        *self.values.last().expect("a climb has at least its origin")
    }
}

pub fn climb(st: &StagedTopology, x: usize) -> Result<Climb, ConstructionError> {
    st.check_element(x)?;
    let start = st.heights().of(x);
    let mut values = vec![x];
    for alpha in start + 1..=st.height() {
        let prev = *values.last().expect("nonempty");
        values.push(step(st, prev, Ordinal::Finite(alpha))?);
    }
    Ok(Climb {
        origin: x,
        start,
        values,
    })
}

/// `f_x(α)` from `f_x(α - 1)`.
fn step(st: &StagedTopology, prev: usize, stage: Ordinal) -> Result<usize, ConstructionError> {
    match stage.kind() {
        OrdinalKind::Successor { predecessor } => {
            let grows = st.level(predecessor)?.p.contains(prev);
            Ok(if grows { st.plus(prev).expect("points of P have a choice") } else { prev })
        }
        // The origin itself sits at `ĥ(x)`, never reached through `step`; a
        // limit stage would need the supremum of the chain climbed so far.
        OrdinalKind::Zero | OrdinalKind::Limit => Err(ConstructionError::LimitHeightUnsupported { stage }),
    }
}
