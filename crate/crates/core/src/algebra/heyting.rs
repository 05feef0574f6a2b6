//! Heyting implication and the Gödel equation.

use super::{FiniteLattice, LatticeError};

/// A finite distributive lattice with its residual implication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeytingAlgebra {
    lattice: FiniteLattice,
    implies: Vec<Vec<usize>>,
}

impl HeytingAlgebra {
    /// Pairs a lattice with an implication table, checking residuation
    /// `a ∧ b ≤ c ⟺ a ≤ b → c` on every triple.
    pub fn new(lattice: FiniteLattice, implies: Vec<Vec<usize>>) -> Result<Self, LatticeError> {
        let n = lattice.len();
        if implies.len() != n || implies.iter().any(|r| r.len() != n) {
            return Err(LatticeError::NotSquare { table: "implies" });
        }
        for (row, r) in implies.iter().enumerate() {
            if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(LatticeError::EntryOutOfRange {
                    table: "implies",
                    row,
                    col,
                    value,
                });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = lattice.meet(a, b);
                for c in 0..n {
                    if lattice.leq(ab, c) != lattice.leq(a, implies[b][c]) {
                        return Err(LatticeError::NotResiduated(a, b, c));
                    }
                }
            }
        }
        Ok(HeytingAlgebra { lattice, implies })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    /// `b → c`.
    pub fn implies(&self, b: usize, c: usize) -> usize {
        self.implies[b][c]
    }

    pub fn implies_table(&self) -> &[Vec<usize>] {
        &self.implies
    }
}

/// Computes `b → c = max {a : a ∧ b ≤ c}` for every pair.
pub fn heyting_complete(lattice: &FiniteLattice) -> Result<HeytingAlgebra, LatticeError> {
    let n = lattice.len();
    let mut implies = vec![vec![0; n]; n];
    for b in 0..n {
        for c in 0..n {
            let candidates: crate::PointSet = (0..n).filter(|&a| lattice.leq(lattice.meet(a, b), c)).collect();
            let max = lattice.join_all(candidates);
            if !candidates.contains(max) {
                return Err(LatticeError::NoMaximum { b, c });
            }
            implies[b][c] = max;
        }
    }
    HeytingAlgebra::new(lattice.clone(), implies)
}

/// Outcome of [`is_godel`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GodelReport {
    pub holds: bool,
    /// First pair in index order violating `(x → y) ∨ (y → x) = 1`.
    pub counterexample: Option<(usize, usize)>,
}

pub fn is_godel(h: &HeytingAlgebra) -> GodelReport {
    let l = h.lattice();
    let n = l.len();
    let counterexample = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| l.join(h.implies(x, y), h.implies(y, x)) != l.top());
    GodelReport {
        holds: counterexample.is_none(),
        counterexample,
    }
}
