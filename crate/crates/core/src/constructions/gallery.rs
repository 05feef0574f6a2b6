//! Finite truncations of two standard infinite examples.

use super::ConstructionError;
use crate::poset::FinitePoset;

pub const GALLERY_NAMES: [&str; 2] = ["chain-with-leaf", "fan-with-tail"];

/// * `chain-with-leaf`: a bottom point carrying a chain of `n` points
///   (bottom included) and one extra leaf directly above the bottom. The
///   infinite version has an infinite descending chain above the bottom;
///   as a tree it is representable but not Esakia representable.
/// * `fan-with-tail`: a top point with `n + 1` points below it, one of
///   which (`x`) has a further point `inf` below it. With infinitely many
///   side points and the cofinite topology at `inf` this root system
///   carries a Priestley topology that is not Esakia.
pub fn gallery(name: &str, n: usize) -> Result<FinitePoset, ConstructionError> {
    let n = n.max(1);
    match name {
        "chain-with-leaf" => {
            // 0 = bottom, 1..n chain above it, n = leaf.
            let mut covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            covers.push((0, n));
            let labels = std::iter::once("bottom".to_string())
                .chain((1..n).map(|i| format!("c{i}")))
                .chain(std::iter::once("leaf".to_string()))
                .collect();
            Ok(FinitePoset::from_covers(n + 1, &covers)?.with_labels(labels)?)
        }
        "fan-with-tail" => {
            // 0 = top, 1 = x, 2 = inf, 3.. = y1..yn.
            let mut covers = vec![(1, 0), (2, 1)];
            covers.extend((0..n).map(|i| (3 + i, 0)));
            let labels = ["top", "x", "inf"]
                .into_iter()
                .map(String::from)
                .chain((1..=n).map(|i| format!("y{i}")))
                .collect();
            Ok(FinitePoset::from_covers(n + 3, &covers)?.with_labels(labels)?)
        }
        other => Err(ConstructionError::UnknownName(other.to_string())),
    }
}
