//! The two Esakia-topology constructions (on root systems and on trees) and
//! the executable versions of their correctness arguments: the climbing
//! function, witness extraction, subcover extraction and separation.
//!
//! Only finite heights occur, so every stage is zero or a successor. The
//! limit branches are still dispatched on and fail with
//! [`ConstructionError::LimitHeightUnsupported`].

mod climb;
mod compactness;
mod gallery;
mod main_lemma;
mod root;
mod separation;
mod staged;

use thiserror::Error;

use crate::ordinal::Ordinal;
use crate::pointset::PointSet;
use crate::poset::PosetError;
use crate::topology::TopologyError;

pub use climb::{climb, Climb};
pub use compactness::{cover_downset, extract_subcover, CoverRound, CoverTrace, PointData};
pub use gallery::{gallery, GALLERY_NAMES};
pub use main_lemma::{main_lemma_witness, witness_for_set, MainLemmaWitness};
pub use root::{root_subbase, root_topology_check, RootSubbase, RootTopology};
pub use separation::{downset_open_check, separation_witness, DownsetOpenReport};
pub use staged::{
    admissible_choices, check_lifted_open, Level, LevelDump, Lift, PlusChoice, StagedDump, StagedTopology,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error("poset is not a root system")]
    NotARootSystem,
    #[error("poset is not a tree")]
    NotATree,
    #[error("stage {stage} is a limit; only finite heights are supported")]
    LimitHeightUnsupported { stage: Ordinal },
    #[error("level {level} is above the height {max}")]
    LevelOutOfRange { level: usize, max: usize },
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("subbase index {index} is out of range at level {level}")]
    BadIndex { level: usize, index: usize },
    #[error("{set:?} is not a subbase member at level {level}")]
    NotASubbaseMember { level: usize, set: PointSet },
    #[error("{set:?} is not open at level {level}")]
    NotOpenAtLevel { level: usize, set: PointSet },
    #[error("choice {chosen:?} for {x} is not an immediate successor of it")]
    InvalidChoice { x: usize, chosen: Option<usize> },
    #[error("the climb of {x} at level {level} is not in the given set")]
    PreconditionFxNotInU { x: usize, level: usize },
    #[error("{x} <= {y}, so they cannot be separated")]
    NotComparablePrecondition { x: usize, y: usize },
    #[error("cover leaves {uncovered:?} uncovered")]
    NotACover { uncovered: PointSet },
    #[error("subcover recursion did not stop after {rounds} rounds")]
    NonTermination { rounds: usize },
    #[error("unknown gallery entry {0:?}")]
    UnknownName(String),
    /// A property the construction guarantees failed to hold. Signals a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub(crate) fn invariant(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::Invariant(msg.into())
}
