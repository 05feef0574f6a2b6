//! The subbase topology on a finite root system: every `↓x` with `x` below
//! something, together with its complement.

use serde::Serialize;

use super::ConstructionError;
use crate::pointset::PointSet;
use crate::poset::FinitePoset;
use crate::topology::{generate_base, EsakiaReport, FiniteTopology};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootSubbase {
    pub sets: Vec<PointSet>,
    /// Component carriers appended after the per-component sets (only when
    /// there are at least two components).
    pub component_sets: usize,
}

/// For each component: `↓x` for every `x` with an immediate successor, then
/// the complements of those sets within the component. With several
/// components each component carrier is appended as well.
pub fn root_subbase(p: &FinitePoset) -> Result<RootSubbase, ConstructionError> {
    if !p.is_root_system() {
        return Err(ConstructionError::NotARootSystem);
    }
    let components = p.components();
    let mut sets = Vec::new();
    for &comp in &components {
        let inner: Vec<usize> = comp.iter().filter(|&x| !p.upper_covers(x).is_empty()).collect();
        sets.extend(inner.iter().map(|&x| p.down_of(x)));
        sets.extend(inner.iter().map(|&x| comp - p.down_of(x)));
    }
    let component_sets = if components.len() > 1 { components.len() } else { 0 };
    if component_sets > 0 {
        sets.extend(components);
    }
    Ok(RootSubbase { sets, component_sets })
}

#[derive(Clone, Debug)]
pub struct RootTopology {
    pub subbase: RootSubbase,
    pub topology: FiniteTopology,
    pub esakia: EsakiaReport,
    pub discrete: bool,
}

impl RootTopology {
    pub fn holds(&self) -> bool {
        self.esakia.holds && self.discrete
    }
}

/// Generates the topology of [`root_subbase`] and runs the Esakia checks.
pub fn root_topology_check(p: &FinitePoset) -> Result<RootTopology, ConstructionError> {
    let subbase = root_subbase(p)?;
    let topology = generate_base(&subbase.sets, p.len())?;
    let esakia = topology.esakia_check(p)?;
    let discrete = topology.is_discrete();
    Ok(RootTopology {
        subbase,
        topology,
        esakia,
        discrete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> PointSet {
        xs.iter().collect()
    }

    #[test]
    fn subbase_examples() {
        let c3 = FinitePoset::chain(3);
        assert_eq!(
            root_subbase(&c3).unwrap().sets,
            vec![set(&[0]), set(&[0, 1]), set(&[1, 2]), set(&[2])]
        );
        assert!(root_subbase(&FinitePoset::chain(1)).unwrap().sets.is_empty());
        let v = FinitePoset::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(root_subbase(&v), Err(ConstructionError::NotARootSystem));
    }

    #[test]
    fn topology_examples() {
        let lambda = FinitePoset::from_covers(3, &[(0, 2), (1, 2)]).unwrap();
        for p in [FinitePoset::chain(3), lambda, FinitePoset::antichain(2), FinitePoset::chain(1)] {
            let r = root_topology_check(&p).unwrap();
            assert!(r.discrete, "{p:?}");
            assert!(r.esakia.holds, "{p:?}");
        }
        let anti = root_subbase(&FinitePoset::antichain(2)).unwrap();
        assert_eq!(anti.sets, vec![set(&[0]), set(&[1])]);
        assert_eq!(anti.component_sets, 2);
    }
}
