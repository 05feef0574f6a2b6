//! Finite subcovers of covers by top-level subbase members, following the
//! `F^α / 𝒰^α` recursion instead of a generic set-cover search.

use std::collections::HashMap;

use serde::Serialize;

use super::{climb, invariant, witness_for_set, ConstructionError, MainLemmaWitness, StagedTopology};
use crate::pointset::PointSet;

/// Per-point data the recursion consulted. Positions are into the cover `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointData {
    pub x: usize,
    /// First member of `C` containing `f_x(ĥ(X))`.
    pub u_position: usize,
    pub witness: MainLemmaWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverRound {
    pub alpha: usize,
    /// `F^α`.
    pub f: PointSet,
    /// `𝒰^α`, as positions into `C`.
    pub family: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverTrace {
    pub rounds: Vec<CoverRound>,
    pub points: Vec<PointData>,
    /// The extracted subcover, as indices into `𝒮_{ĥ(X)}`.
    pub subcover: Vec<usize>,
}

impl CoverTrace {
    /// Successor steps taken (the final `F` is empty).
    pub fn steps(&self) -> usize {
        self.rounds.len() - 1
    }
}

struct Engine<'a> {
    st: &'a StagedTopology,
    sets: Vec<PointSet>,
    downs: HashMap<usize, Vec<usize>>,
}

impl<'a> Engine<'a> {
    fn new(st: &'a StagedTopology, cover: &[usize]) -> Result<Self, ConstructionError> {
        let top = st.final_subbase();
        let sets = cover
            .iter()
            .map(|&i| {
                top.get(i).copied().ok_or(ConstructionError::BadIndex {
                    level: st.height(),
                    index: i,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let carrier = st.poset().carrier();
        let union = sets.iter().fold(PointSet::empty(), |acc, &s| acc | s);
        if !carrier.is_subset(union) {
            return Err(ConstructionError::NotACover {
                uncovered: carrier - union,
            });
        }
        Ok(Engine {
            st,
            sets,
            downs: HashMap::new(),
        })
    }

    fn first_containing(&self, x: usize) -> usize {
        self.sets.iter().position(|s| s.contains(x)).expect("C covers the carrier")
    }

    /// `𝒱_x`: positions covering `↓x`, by induction on the height of `x`.
    fn downset_cover(&mut self, x: usize) -> Vec<usize> {
        if let Some(v) = self.downs.get(&x) {
            return v.clone();
        }
        let mut out = match self.st.poset().parent(x) {
            None => Vec::new(),
            Some(parent) => self.downset_cover(parent),
        };
        push_unique(&mut out, self.first_containing(x));
        self.downs.insert(x, out.clone());
        out
    }
}

fn push_unique(v: &mut Vec<usize>, i: usize) {
    if !v.contains(&i) {
        v.push(i);
    }
}

fn union_of(sets: &[PointSet], positions: &[usize]) -> PointSet {
    positions.iter().fold(PointSet::empty(), |acc, &i| acc | sets[i])
}

/// Members of `C` (given as indices into `𝒮_{ĥ(X)}`) covering `↓x`.
pub fn cover_downset(st: &StagedTopology, cover: &[usize], x: usize) -> Result<Vec<usize>, ConstructionError> {
    st.check_element(x)?;
    let mut engine = Engine::new(st, cover)?;
    Ok(engine.downset_cover(x).into_iter().map(|i| cover[i]).collect())
}

/// Runs the recursion from `F^0 = {root}`, `𝒰^0 = ∅` until `F` is empty (or
/// repeats earlier points) and returns the final family, checked to cover.
pub fn extract_subcover(st: &StagedTopology, cover: &[usize]) -> Result<CoverTrace, ConstructionError> {
    let mut engine = Engine::new(st, cover)?;
    let p = st.poset();
    let n = p.len();
    let top = st.height();
    let carrier = p.carrier();

    let mut f = PointSet::singleton(st.root());
    let mut family: Vec<usize> = Vec::new();
    let mut seen_f = f;
    let mut rounds = vec![CoverRound {
        alpha: 0,
        f,
        family: family.clone(),
    }];
    let mut points: Vec<PointData> = Vec::new();
    let mut known: HashMap<usize, PointData> = HashMap::new();

    loop {
        if rounds.len() > top + n + 1 {
            return Err(ConstructionError::NonTermination { rounds: rounds.len() - 1 });
        }
        let mut a = PointSet::empty();
        let mut next_family = family.clone();
        for y in f {
            let data = match known.get(&y) {
                Some(d) => d.clone(),
                None => {
                    let fy = climb(st, y)?.last();
                    let u_position = engine.first_containing(fy);
                    let witness = witness_for_set(st, y, top, engine.sets[u_position])?;
                    let d = PointData { x: y, u_position, witness };
                    known.insert(y, d.clone());
                    points.push(d.clone());
                    d
                }
            };
            a |= data.witness.y & p.up_of(y);
            push_unique(&mut next_family, data.u_position);
            for z in data.witness.z {
                for i in engine.downset_cover(z) {
                    push_unique(&mut next_family, i);
                }
            }
        }
        // Drop points strictly below some point of an earlier F.
        let a: PointSet = a
            .iter()
            .filter(|&z| !seen_f.iter().any(|w| p.lt(z, w)))
            .collect();
        let next_f = p.minimal(a);

        let covered = union_of(&engine.sets, &next_family);
        if !(carrier - p.upset(next_f)).is_subset(covered) {
            return Err(invariant(format!("X ∖ ↑F is not covered at round {}", rounds.len())));
        }
        if !next_f.is_subset(p.upset(f) - f) {
            return Err(invariant(format!("F at round {} does not lie strictly above its predecessor", rounds.len())));
        }

        rounds.push(CoverRound {
            alpha: rounds.len(),
            f: next_f,
            family: next_family.clone(),
        });
        family = next_family;
        if next_f.is_empty() || next_f.is_subset(seen_f) {
            break;
        }
        seen_f |= next_f;
        f = next_f;
    }

    let covered = union_of(&engine.sets, &family);
    if !carrier.is_subset(covered) {
        return Err(invariant(format!("final family misses {:?}", carrier - covered)));
    }
    Ok(CoverTrace {
        rounds,
        points,
        subcover: family.into_iter().map(|i| cover[i]).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::FinitePoset;

    fn set(xs: &[usize]) -> PointSet {
        xs.iter().collect()
    }

    fn chain2() -> StagedTopology {
        StagedTopology::build(&FinitePoset::chain(2)).unwrap()
    }

    fn idx(st: &StagedTopology, s: PointSet) -> usize {
        st.level(st.height()).unwrap().index_of(s).unwrap()
    }

    #[test]
    fn downset_cover_examples() {
        let st = chain2();
        let (r, a, ra) = (idx(&st, set(&[0])), idx(&st, set(&[1])), idx(&st, set(&[0, 1])));
        assert_eq!(cover_downset(&st, &[ra], 0).unwrap(), vec![ra]);
        assert_eq!(cover_downset(&st, &[r, a], 1).unwrap(), vec![r, a]);
        assert_eq!(
            cover_downset(&st, &[r], 0),
            Err(ConstructionError::NotACover { uncovered: set(&[1]) })
        );
    }

    #[test]
    fn subcover_examples() {
        let st = chain2();
        let (r, a, ra) = (idx(&st, set(&[0])), idx(&st, set(&[1])), idx(&st, set(&[0, 1])));
        let trace = extract_subcover(&st, &[r, a]).unwrap();
        assert_eq!(trace.subcover, vec![a, r]);
        assert_eq!(trace.rounds.last().unwrap().f, PointSet::empty());
        assert_eq!(trace.points[0].witness.z, set(&[0]));
        assert_eq!(extract_subcover(&st, &[r, ra, a]).unwrap().subcover, vec![ra]);
        assert!(matches!(extract_subcover(&st, &[r]), Err(ConstructionError::NotACover { .. })));
    }

    #[test]
    fn every_pair_cover_on_small_trees() {
        for t in crate::enumerate::enumerate_posets(4).unwrap().iter().filter(|p| p.is_tree()) {
            let st = StagedTopology::build(t).unwrap();
            let m = st.final_subbase().len();
            for i in 0..m {
                for j in i..m {
                    for k in j..m {
                        let cover = [i, j, k];
                        if let Ok(trace) = extract_subcover(&st, &cover) {
                            let union = trace
                                .subcover
                                .iter()
                                .fold(PointSet::empty(), |acc, &s| acc | st.final_subbase()[s]);
                            assert_eq!(union, t.carrier());
                            assert!(trace.steps() <= st.height() + 1);
                        }
                    }
                }
            }
        }
    }
}
