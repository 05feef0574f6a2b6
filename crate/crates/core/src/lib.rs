//! Finite-scale Priestley/Esakia duality, with the subbase topologies on root
//! systems and the level-by-level staged topologies on trees.
//!
//! Everything here works on carriers of at most [`PointSet::CAPACITY`]
//! elements. Values are immutable after construction and all operations are
//! pure, so they can be shared freely between threads.

pub mod algebra;
pub mod constructions;
pub mod duality;
pub mod enumerate;
pub mod ordinal;
pub mod pointset;
pub mod poset;
pub mod random;
pub mod topology;

pub use algebra::{FiniteLattice, HeytingAlgebra, LatticeError};
pub use ordinal::Ordinal;
pub use pointset::PointSet;
pub use poset::{FinitePoset, HeightProfile, PosetError};
pub use topology::{FiniteTopology, TopologyError};
