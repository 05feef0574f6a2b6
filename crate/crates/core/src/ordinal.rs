//! Stage indices for the level-by-level constructions.
//!
//! Every finite tree has finite height, so all stages actually reached are
//! natural numbers. The recursive constructions nevertheless dispatch on the
//! full zero / successor / limit trichotomy; a `Limit` stage can be requested
//! explicitly and is rejected with a dedicated error rather than skipped.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ordinal {
    Finite(usize),
    /// `omega * k` for `k >= 1`. Never produced by a finite construction.
    Limit { omega_multiple: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrdinalKind {
    Zero,
    Successor { predecessor: usize },
    Limit,
}

impl Ordinal {
    pub fn kind(self) -> OrdinalKind {
        match self {
            Ordinal::Finite(0) => OrdinalKind::Zero,
            Ordinal::Finite(n) => OrdinalKind::Successor { predecessor: n - 1 },
            Ordinal::Limit { .. } => OrdinalKind::Limit,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Ordinal::Finite(n) => Some(n),
            Ordinal::Limit { .. } => None,
        }
    }
}

impl From<usize> for Ordinal {
    fn from(n: usize) -> Self {
        Ordinal::Finite(n)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Ordinal::Finite(n) => write!(f, "{n}"),
            Ordinal::Limit { omega_multiple: 1 } => write!(f, "ω"),
            Ordinal::Limit { omega_multiple } => write!(f, "ω·{omega_multiple}"),
        }
    }
}
