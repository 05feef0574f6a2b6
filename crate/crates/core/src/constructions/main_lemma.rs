//! Witnesses `(v, Y, Z)` with `↑_α v ∖ (↑_α Y ∪ ↓Z) ⊆ U`, built by the
//! recursion on `α - ĥ(x)` rather than by search.

use std::collections::HashMap;

use serde::Serialize;

use super::{climb, invariant, Climb, ConstructionError, StagedTopology};
use crate::ordinal::{Ordinal, OrdinalKind};
use crate::pointset::PointSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MainLemmaWitness {
    pub x: usize,
    pub level: usize,
    pub u: PointSet,
    pub v: usize,
    pub y: PointSet,
    pub z: PointSet,
}

/// Witness for the `u_index`-th member of `𝒮_α`.
pub fn main_lemma_witness(
    st: &StagedTopology,
    x: usize,
    alpha: impl Into<Ordinal>,
    u_index: usize,
) -> Result<MainLemmaWitness, ConstructionError> {
    let alpha = alpha.into();
    let level = st.level_at(alpha)?;
    let u = *level.subbase.get(u_index).ok_or(ConstructionError::BadIndex {
        level: level.alpha,
        index: u_index,
    })?;
    witness_for_set(st, x, alpha, u)
}

/// Witness for a member `u` of `𝒮_α` given by value.
pub fn witness_for_set(
    st: &StagedTopology,
    x: usize,
    alpha: impl Into<Ordinal>,
    u: PointSet,
) -> Result<MainLemmaWitness, ConstructionError> {
    let stage = alpha.into();
    let level = st.level_at(stage)?;
    let alpha = level.alpha;
    st.check_element(x)?;
    if !level.contains(u) {
        return Err(ConstructionError::NotASubbaseMember { level: alpha, set: u });
    }
    let hx = st.heights().of(x);
    if hx > alpha {
        return Err(ConstructionError::LevelOutOfRange { level: hx, max: alpha });
    }
    let f = climb(st, x)?;
    if !u.contains(f.at(alpha).expect("ĥ(x) ≤ α ≤ ĥ(X)")) {
        return Err(ConstructionError::PreconditionFxNotInU { x, level: alpha });
    }
    let mut memo = HashMap::new();
    Builder { st, climb: &f, memo: &mut memo }.witness(stage, u)
}

struct Builder<'a> {
    st: &'a StagedTopology,
    climb: &'a Climb,
    memo: &'a mut HashMap<(usize, PointSet), MainLemmaWitness>,
}

impl Builder<'_> {
    fn witness(&mut self, stage: Ordinal, u: PointSet) -> Result<MainLemmaWitness, ConstructionError> {
        let x = self.climb.origin;
        let hx = self.climb.start;
        let alpha = stage.finite().ok_or(ConstructionError::LimitHeightUnsupported { stage })?;
        if let Some(w) = self.memo.get(&(alpha, u)) {
            return Ok(*w);
        }
        let w = if alpha == hx {
            // Base case: ↑_α x = {x} and x = f_x(α) ∈ U.
            MainLemmaWitness {
                x,
                level: alpha,
                u,
                v: x,
                y: PointSet::empty(),
                z: PointSet::empty(),
            }
        } else {
            match stage.kind() {
                OrdinalKind::Successor { predecessor } => self.successor(predecessor, u)?,
                _ => return Err(ConstructionError::LimitHeightUnsupported { stage }),
            }
        };
        verify(self.st, &w)?;
        self.memo.insert((alpha, u), w);
        Ok(w)
    }

    fn successor(&mut self, beta: usize, u: PointSet) -> Result<MainLemmaWitness, ConstructionError> {
        let st = self.st;
        let p = st.poset();
        let heights = st.heights();
        let alpha = beta + 1;
        let lift = st
            .level(alpha)?
            .lift(u)
            .ok_or_else(|| invariant(format!("{u:?} at level {alpha} has no lift")))?;
        let f = self.climb.at(beta).expect("ĥ(x) ≤ β");
        if !lift.v.contains(f) {
            return Err(invariant(format!("f_x({beta}) = {f} is not in V = {:?}", lift.v)));
        }

        let ws = basic_neighbourhood(st, beta, f, lift.v)?;
        let mut parts = Vec::with_capacity(ws.len());
        for &w in &ws {
            parts.push(self.witness(Ordinal::Finite(beta), w)?);
        }
        let v = parts
            .iter()
            .map(|w| w.v)
            .max_by_key(|&v| heights.of(v))
            .expect("at least one subbase member is picked");
        let up_v = p.up_of(v);
        let y_star = parts.iter().fold(PointSet::empty(), |acc, w| acc | w.y) & up_v;
        let z_star = parts.iter().fold(PointSet::empty(), |acc, w| acc | w.z) & up_v;

        let meet = ws.iter().fold(heights.up_to(beta), |acc, &w| acc & w);
        let kept = heights.bounded_upset(p, PointSet::singleton(v), beta)
            - heights.bounded_upset(p, y_star, beta)
            - p.downset(z_star);
        if !kept.is_subset(meet) || !meet.is_subset(lift.v) {
            return Err(invariant(format!("refit at level {beta} escapes the chosen neighbourhood")));
        }

        Ok(MainLemmaWitness {
            x: self.climb.origin,
            level: alpha,
            u,
            v,
            y: y_star | (heights.level(alpha) & lift.z & up_v),
            z: z_star | (heights.level(beta) & p.downset(lift.z) & up_v),
        })
    }
}

/// Members `W_1..W_n` of `𝒮_β` with `f ∈ W_1 ∩ … ∩ W_n ⊆ V`. Greedy: each
/// step takes the member containing `f` that leaves the fewest points outside
/// `V`, then the smaller one, then the earlier one.
fn basic_neighbourhood(
    st: &StagedTopology,
    beta: usize,
    f: usize,
    v: PointSet,
) -> Result<Vec<PointSet>, ConstructionError> {
    let level = st.level(beta)?;
    let candidates: Vec<PointSet> = level.subbase.iter().copied().filter(|w| w.contains(f)).collect();
    let mut cur = level.carrier;
    let mut picked = Vec::new();
    while picked.is_empty() || !cur.is_subset(v) {
        let best = candidates
            .iter()
            .copied()
            .min_by_key(|&w| ((cur & w) - v).len() * (PointSet::CAPACITY + 1) + w.len())
            .ok_or_else(|| invariant(format!("no member of 𝒮_{beta} contains {f}")))?;
        let next = cur & best;
        if !picked.is_empty() && next == cur {
            return Err(invariant(format!("{v:?} is not a neighbourhood of {f} at level {beta}")));
        }
        picked.push(best);
        cur = next;
    }
    Ok(picked)
}

/// The four conditions on a witness, checked literally.
fn verify(st: &StagedTopology, w: &MainLemmaWitness) -> Result<(), ConstructionError> {
    let p = st.poset();
    let h = st.heights();
    let up_alpha_v = h.bounded_upset(p, PointSet::singleton(w.v), w.level);
    let checks = [
        (p.leq(w.v, w.x), "v ≤ x"),
        (w.y.is_subset(h.above(h.of(w.x)) & up_alpha_v), "Y ⊆ X_{>ĥ(x)} ∩ ↑_α v"),
        (w.z.is_subset(h.below(w.level) & p.up_of(w.v)), "Z ⊆ X_{<α} ∩ ↑v"),
        (
            (up_alpha_v - h.bounded_upset(p, w.y, w.level) - p.downset(w.z)).is_subset(w.u),
            "↑_α v ∖ (↑_α Y ∪ ↓Z) ⊆ U",
        ),
        (Ordinal::Finite(h.of(w.v)).kind() != OrdinalKind::Limit, "ĥ(v) is not a limit"),
    ];
    match checks.iter().find(|(ok, _)| !ok) {
        Some((_, what)) => Err(invariant(format!("witness {w:?} fails {what}"))),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::FinitePoset;

    fn set(xs: &[usize]) -> PointSet {
        xs.iter().collect()
    }

    /// Every `(v, Y, Z)` meeting the conditions, by direct search.
    fn feasible(st: &StagedTopology, x: usize, alpha: usize, u: PointSet) -> Vec<(usize, PointSet, PointSet)> {
        let p = st.poset();
        let n = p.len();
        let h = |y: usize| p.down_of(y).len() - 1;
        let mut out = Vec::new();
        for v in (0..n).filter(|&v| p.leq(v, x)) {
            let up_v: Vec<usize> = (0..n).filter(|&y| p.leq(v, y) && h(y) <= alpha).collect();
            let ys: PointSet = up_v.iter().copied().filter(|&y| h(y) > h(x)).collect();
            let zs: PointSet = (0..n).filter(|&z| p.leq(v, z) && h(z) < alpha).collect();
            for y in ys.subsets() {
                for z in zs.subsets() {
                    let ok = up_v.iter().all(|&t| {
                        u.contains(t) || y.iter().any(|s| p.leq(s, t)) || z.iter().any(|s| p.leq(t, s))
                    });
                    if ok {
                        out.push((v, y, z));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn two_chain_examples() {
        let st = StagedTopology::build(&FinitePoset::chain(2)).unwrap();
        let w = witness_for_set(&st, 0, 1, set(&[0, 1])).unwrap();
        assert_eq!((w.v, w.y, w.z), (0, PointSet::empty(), PointSet::empty()));
        let w = witness_for_set(&st, 0, 1, set(&[1])).unwrap();
        assert_eq!((w.v, w.y, w.z), (0, PointSet::empty(), set(&[0])));
        let w = witness_for_set(&st, 1, 1, set(&[1])).unwrap();
        assert_eq!((w.v, w.y, w.z), (1, PointSet::empty(), PointSet::empty()));
        assert_eq!(
            witness_for_set(&st, 0, 1, set(&[0])),
            Err(ConstructionError::PreconditionFxNotInU { x: 0, level: 1 })
        );
        assert!(matches!(
            witness_for_set(&st, 0, Ordinal::Limit { omega_multiple: 1 }, set(&[1])),
            Err(ConstructionError::LimitHeightUnsupported { .. })
        ));
        assert!(matches!(
            main_lemma_witness(&st, 0, 1, 99),
            Err(ConstructionError::BadIndex { level: 1, index: 99 })
        ));
    }

    #[test]
    fn witnesses_are_feasible_on_small_trees() {
        for t in crate::enumerate::enumerate_posets(4).unwrap().iter().filter(|p| p.is_tree()) {
            let st = StagedTopology::build(t).unwrap();
            for x in 0..t.len() {
                let f = climb(&st, x).unwrap();
                for alpha in st.heights().of(x)..=st.height() {
                    for (i, &u) in st.level(alpha).unwrap().subbase.iter().enumerate() {
                        if !u.contains(f.at(alpha).unwrap()) {
                            continue;
                        }
                        let w = main_lemma_witness(&st, x, alpha, i).unwrap();
                        assert!(feasible(&st, x, alpha, u).contains(&(w.v, w.y, w.z)), "{t:?} {w:?}");
                    }
                }
            }
        }
    }
}
