//! JSON documents for posets, lattices and covers.
//!
//! A poset document lists element labels and `[lower, upper]` cover pairs:
//!
//! ```json
//! {"elements": ["r", "a"], "covers": [["r", "a"]], "kind": "tree"}
//! ```
//!
//! Labels `"0", "1", …` in index order are treated as unlabelled, so that
//! emitting and re-parsing any poset gives it back unchanged.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use esakia_core::algebra::{downset_lattice, validate_lattice};
use esakia_core::{FiniteLattice, FinitePoset, LatticeError, PointSet, PosetError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Kind {
    Tree,
    Forest,
    RootSystem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<Kind>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("cover mentions undeclared label {0:?}")]
    UnknownLabel(String),
    #[error("covers contain a cycle through {0:?}")]
    Cycle(String),
    #[error("cover {lower:?} < {upper:?} is implied by transitivity")]
    NonHasseEdge { lower: String, upper: String },
    #[error("document does not match its kind hint {0:?}")]
    KindMismatch(Kind),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        DocumentError::Parse(e.to_string())
    }
}

pub fn parse_poset(text: &str) -> Result<FinitePoset, DocumentError> {
    let doc: PosetDocument = serde_json::from_str(text)?;
    poset_from_document(&doc)
}

pub fn poset_from_document(doc: &PosetDocument) -> Result<FinitePoset, DocumentError> {
    let mut index = HashMap::new();
    for (i, label) in doc.elements.iter().enumerate() {
        if index.insert(label.as_str(), i).is_some() {
            return Err(DocumentError::DuplicateLabel(label.clone()));
        }
    }
    let lookup = |l: &String| index.get(l.as_str()).copied().ok_or_else(|| DocumentError::UnknownLabel(l.clone()));
    let covers = doc
        .covers
        .iter()
        .map(|[l, u]| Ok((lookup(l)?, lookup(u)?)))
        .collect::<Result<Vec<_>, DocumentError>>()?;
    let label = |i: usize| doc.elements[i].clone();
    let p = FinitePoset::from_covers(doc.elements.len(), &covers).map_err(|e| match e {
        PosetError::Cycle { element } => DocumentError::Cycle(label(element)),
        PosetError::SelfLoop(element) => DocumentError::Cycle(label(element)),
        PosetError::NonHasseEdge { lower, upper, .. } => DocumentError::NonHasseEdge {
            lower: label(lower),
            upper: label(upper),
        },
        other => DocumentError::Poset(other),
    })?;
    let default = doc.elements.iter().enumerate().all(|(i, l)| *l == i.to_string());
    let p = if default { p } else { p.with_labels(doc.elements.clone())? };
    if let Some(kind) = doc.kind {
        let ok = match kind {
            Kind::Tree => p.is_tree(),
            Kind::Forest => p.is_forest(),
            Kind::RootSystem => p.is_root_system(),
        };
        if !ok {
            return Err(DocumentError::KindMismatch(kind));
        }
    }
    Ok(p)
}

pub fn poset_document(p: &FinitePoset) -> PosetDocument {
    PosetDocument {
        elements: (0..p.len()).map(|x| p.label(x).into_owned()).collect(),
        covers: p
            .covers()
            .iter()
            .map(|&(l, u)| [p.label(l).into_owned(), p.label(u).into_owned()])
            .collect(),
        kind: None,
    }
}

/// One-line JSON document.
pub fn emit_poset(p: &FinitePoset) -> String {
    serde_json::to_string(&poset_document(p)).expect("documents always serialise")
}

/// Either explicit tables, or a poset whose downset lattice is meant.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum LatticeDocument {
    Tables { meet: Vec<Vec<usize>>, join: Vec<Vec<usize>> },
    JoinIrreducibles { join_irreducibles: PosetDocument },
}

pub fn parse_lattice(text: &str) -> Result<FiniteLattice, DocumentError> {
    match serde_json::from_str::<LatticeDocument>(text)? {
        LatticeDocument::Tables { meet, join } => Ok(validate_lattice(meet, join)?),
        LatticeDocument::JoinIrreducibles { join_irreducibles } => {
            let p = poset_from_document(&join_irreducibles)?;
            Ok(downset_lattice(&p)?.lattice)
        }
    }
}

/// A cover given as a list of label lists.
pub fn parse_cover(text: &str, p: &FinitePoset) -> Result<Vec<PointSet>, DocumentError> {
    let raw: Vec<Vec<String>> = serde_json::from_str(text)?;
    let index: HashMap<String, usize> = (0..p.len()).map(|x| (p.label(x).into_owned(), x)).collect();
    raw.iter()
        .map(|set| {
            set.iter()
                .map(|l| index.get(l).copied().ok_or_else(|| DocumentError::UnknownLabel(l.clone())))
                .collect()
        })
        .collect()
}

pub fn labels_of(p: &FinitePoset, s: PointSet) -> Vec<String> {
    s.iter().map(|x| p.label(x).into_owned()).collect()
}
