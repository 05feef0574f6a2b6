//! Finite bounded distributive lattices, Heyting algebras and prime filters.

mod filters;
mod heyting;
mod sets;

use thiserror::Error;

use crate::pointset::PointSet;
use crate::poset::FinitePoset;

pub use filters::{gamma, prime_filters, spectrum, PrimeFilter};
pub use heyting::{heyting_complete, is_godel, GodelReport, HeytingAlgebra};
pub use sets::{downset_lattice, set_family_lattice, upset_algebra, upset_family_algebra, SetAlgebra, SetLattice};

/// Largest carrier accepted for a table-based lattice.
pub const MAX_ELEMENTS: usize = PointSet::CAPACITY;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Idempotence,
    Commutativity,
    Associativity,
    Absorption,
    Bounds,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Axiom::Idempotence => "idempotence",
            Axiom::Commutativity => "commutativity",
            Axiom::Associativity => "associativity",
            Axiom::Absorption => "absorption",
            Axiom::Bounds => "bounds",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("lattice has {n} elements; at most {MAX_ELEMENTS} are supported")]
    TooLarge { n: usize },
    #[error("{table} table is not square")]
    NotSquare { table: &'static str },
    #[error("{table}[{row}][{col}] = {value} is out of range")]
    EntryOutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("{axiom} fails at {witness:?}")]
    NotALattice { axiom: Axiom, witness: Vec<usize> },
    #[error("distributivity fails at ({0}, {1}, {2})")]
    NotDistributive(usize, usize, usize),
    #[error("{{a : a ∧ {b} ≤ {c}}} has no maximum")]
    NoMaximum { b: usize, c: usize },
    #[error("residuation fails at ({0}, {1}, {2})")]
    NotResiduated(usize, usize, usize),
    #[error("set family is not closed under {op}: {left:?}, {right:?}")]
    NotClosed {
        op: &'static str,
        left: PointSet,
        right: PointSet,
    },
    #[error("set family lacks {0:?}")]
    MissingBound(PointSet),
    #[error("implication {0:?} → {1:?} leaves the family")]
    ImplicationOutside(PointSet, PointSet),
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
}

/// A bounded distributive lattice given by its operation tables. The order
/// is read off the meet: `a ≤ b` iff `a ∧ b = a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    n: usize,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
    up: Vec<PointSet>,
    down: Vec<PointSet>,
}

fn check_table(table: &[Vec<usize>], name: &'static str, n: usize) -> Result<(), LatticeError> {
    if table.len() != n || table.iter().any(|r| r.len() != n) {
        return Err(LatticeError::NotSquare { table: name });
    }
    for (row, r) in table.iter().enumerate() {
        if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(LatticeError::EntryOutOfRange {
                table: name,
                row,
                col,
                value,
            });
        }
    }
    Ok(())
}

fn check_semilattice(t: &[Vec<usize>]) -> Result<(), LatticeError> {
    let n = t.len();
    let fail = |axiom, witness| Err(LatticeError::NotALattice { axiom, witness });
    if let Some(a) = (0..n).find(|&a| t[a][a] != a) {
        return fail(Axiom::Idempotence, vec![a]);
    }
    for a in 0..n {
        for b in 0..n {
            if t[a][b] != t[b][a] {
                return fail(Axiom::Commutativity, vec![a, b]);
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = t[a][b];
            for c in 0..n {
                if t[ab][c] != t[a][t[b][c]] {
                    return fail(Axiom::Associativity, vec![a, b, c]);
                }
            }
        }
    }
    Ok(())
}

/// Validates meet/join tables as a bounded distributive lattice.
pub fn validate_lattice(meet: Vec<Vec<usize>>, join: Vec<Vec<usize>>) -> Result<FiniteLattice, LatticeError> {
    let n = meet.len();
    if n == 0 {
        return Err(LatticeError::Empty);
    }
    if n > MAX_ELEMENTS {
        return Err(LatticeError::TooLarge { n });
    }
    check_table(&meet, "meet", n)?;
    check_table(&join, "join", n)?;
    check_semilattice(&meet)?;
    check_semilattice(&join)?;
    for a in 0..n {
        for b in 0..n {
            if meet[a][join[a][b]] != a || join[a][meet[a][b]] != a {
                return Err(LatticeError::NotALattice {
                    axiom: Axiom::Absorption,
                    witness: vec![a, b],
                });
            }
        }
    }
    let bottom = (0..n).fold(0, |acc, a| meet[acc][a]);
    let top = (0..n).fold(0, |acc, a| join[acc][a]);
    if let Some(a) = (0..n).find(|&a| join[bottom][a] != a || meet[top][a] != a) {
        return Err(LatticeError::NotALattice {
            axiom: Axiom::Bounds,
            witness: vec![a],
        });
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]] {
                    return Err(LatticeError::NotDistributive(a, b, c));
                }
            }
        }
    }
    let mut up = vec![PointSet::empty(); n];
    let mut down = vec![PointSet::empty(); n];
    for a in 0..n {
        for b in 0..n {
            if meet[a][b] == a {
                up[a].insert(b);
                down[b].insert(a);
            }
        }
    }
    Ok(FiniteLattice {
        n,
        meet,
        join,
        bottom,
        top,
        up,
        down,
    })
}

impl FiniteLattice {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn carrier(&self) -> PointSet {
        PointSet::full(self.n)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn meet_table(&self) -> &[Vec<usize>] {
        &self.meet
    }

    pub fn join_table(&self) -> &[Vec<usize>] {
        &self.join
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet[a][b] == a
    }

    /// `↑a`.
    pub fn up_of(&self, a: usize) -> PointSet {
        self.up[a]
    }

    /// `↓a`.
    pub fn down_of(&self, a: usize) -> PointSet {
        self.down[a]
    }

    /// Join of a set of elements (bottom for the empty set).
    pub fn join_all(&self, s: PointSet) -> usize {
        s.iter().fold(self.bottom, |acc, a| self.join[acc][a])
    }

    /// Meet of a set of elements (top for the empty set).
    pub fn meet_all(&self, s: PointSet) -> usize {
        s.iter().fold(self.top, |acc, a| self.meet[acc][a])
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> PointSet {
        (0..self.n)
            .filter(|&a| {
                let below = self.down[a] - PointSet::singleton(a);
                let covers = below.iter().filter(|&b| (self.up[b] & below) == PointSet::singleton(b));
                covers.count() == 1
            })
            .collect()
    }

    /// The underlying order as a poset.
    pub fn order(&self) -> FinitePoset {
        FinitePoset::from_leq(self.n, |a, b| self.leq(a, b)).expect("lattice order is a partial order")
    }

    /// Relabels the elements: element `a` of `self` becomes `perm[a]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<FiniteLattice, LatticeError> {
        let n = self.n;
        let mut inv = vec![0; n];
        for (a, &p) in perm.iter().enumerate() {
            inv[p] = a;
        }
        let table = |t: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            (0..n)
                .map(|i| (0..n).map(|j| perm[t[inv[i]][inv[j]]]).collect())
                .collect()
        };
        validate_lattice(table(&self.meet), table(&self.join))
    }

    /// The chain `0 < 1 < .. < n-1` as a lattice.
    pub fn chain(n: usize) -> Result<FiniteLattice, LatticeError> {
        let meet = (0..n).map(|a| (0..n).map(|b| a.min(b)).collect()).collect();
        let join = (0..n).map(|a| (0..n).map(|b| a.max(b)).collect()).collect();
        validate_lattice(meet, join)
    }

    pub(crate) fn check_element(&self, a: usize) -> Result<(), LatticeError> {
        if a < self.n {
            Ok(())
        } else {
            Err(LatticeError::ElementOutOfRange(a))
        }
    }
}
