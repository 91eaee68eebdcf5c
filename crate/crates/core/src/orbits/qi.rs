//! Empirical quasi-isometry constants of vertex maps between finite graphs.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::defgraph::VertexSet;

use super::graph::{CubicalBall, NodeKind, OrbitGraph, WeightedGraph, UNREACHABLE};
use super::OrbitError;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QiFit {
    pub lambda: f64,
    pub c: f64,
    /// `(d1, d2)` for every examined pair: source distance and target
    /// distance of the images.
    pub table: Vec<(f64, f64)>,
}

impl QiFit {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("d1,d2\n");
        for (a, b) in &self.table {
            out.push_str(&format!("{a},{b}\n"));
        }
        out
    }
}

/// Least additive constant for a given multiplicative constant.
fn additive_constant(pairs: &[(f64, f64)], lambda: f64) -> f64 {
    pairs.iter().fold(0.0, |c: f64, &(d1, d2)| {
        c.max(d2 - lambda * d1).max(d1 / lambda - d2)
    })
}

/// Constants `lambda >= 1`, `C >= 0` with `d1 / lambda - C <= d2 <= lambda d1 + C`
/// on every pair, minimising `lambda + C` over `lambda` in `{1}` and the
/// distance ratios of the pairs. Ties go to the smaller `lambda`.
pub fn fit_constants(pairs: &[(f64, f64)]) -> (f64, f64) {
    let distinct: BTreeSet<(u64, u64)> = pairs
        .iter()
        .map(|&(a, b)| (a.to_bits(), b.to_bits()))
        .collect();
    let pairs: Vec<(f64, f64)> = distinct
        .into_iter()
        .map(|(a, b)| (f64::from_bits(a), f64::from_bits(b)))
        .collect();
    let mut candidates = vec![1.0];
    for &(d1, d2) in &pairs {
        if d1 > 0.0 && d2 > 0.0 {
            candidates.push(d2 / d1);
            candidates.push(d1 / d2);
        }
    }
    candidates.retain(|&l| l >= 1.0);
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();
    let mut best = (f64::INFINITY, 1.0, 0.0);
    for lambda in candidates {
        let c = additive_constant(&pairs, lambda);
        if lambda + c < best.0 - 1e-12 {
            best = (lambda + c, lambda, c);
        }
    }
    (best.1, best.2)
}

/// Fits constants for `map` (source vertex to target vertex) over all pairs
/// of distinct `interior` source vertices. Distances are true lengths.
pub fn qi_fit(
    source: &WeightedGraph,
    target: &WeightedGraph,
    map: &[Option<usize>],
    interior: &[usize],
) -> Result<QiFit, OrbitError> {
    let images: Vec<usize> = interior
        .iter()
        .map(|&v| {
            map.get(v)
                .copied()
                .flatten()
                .ok_or(OrbitError::UndefinedVertex(v))
        })
        .collect::<Result<_, _>>()?;
    let mut table = Vec::new();
    for (i, &u) in interior.iter().enumerate() {
        let d1 = source.distances_from(u);
        let d2 = target.distances_from(images[i]);
        for (j, &v) in interior.iter().enumerate().skip(i + 1) {
            if d1[v] == UNREACHABLE || d2[images[j]] == UNREACHABLE {
                return Err(OrbitError::Disconnected);
            }
            table.push((d1[v] as f64 / 2.0, d2[images[j]] as f64 / 2.0));
        }
    }
    let (lambda, c) = fit_constants(&table);
    Ok(QiFit { lambda, c, table })
}

/// The orbit map `g -> g H_empty` from the group vertices of a coned-off
/// Cayley ball to the 1-skeleton of a cubical ball, fitted on elements of
/// word length at most `interior_radius`.
pub fn orbit_map_fit(
    coned: &OrbitGraph,
    complex: &CubicalBall,
    interior_radius: usize,
) -> Result<QiFit, OrbitError> {
    if interior_radius >= coned.radius || interior_radius >= complex.radius {
        return Err(OrbitError::InvalidArgument(format!(
            "interior radius {interior_radius} must be below the ball radii {} and {}",
            coned.radius, complex.radius
        )));
    }
    let map: Vec<Option<usize>> = coned
        .labels
        .iter()
        .map(|l| match l.kind {
            NodeKind::Element => complex.find(&l.word, VertexSet::EMPTY),
            NodeKind::Cone { .. } => None,
        })
        .collect();
    let interior: Vec<usize> = coned
        .elements()
        .into_iter()
        .filter(|&v| coned.labels[v].word.len() <= interior_radius)
        .collect();
    qi_fit(&coned.graph, &complex.skeleton, &map, &interior)
}

/// `|a - b| / max(|a|, |b|)`, zero when both vanish.
pub fn relative_change(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_scalings() {
        let same: Vec<(f64, f64)> = (1..10).map(|d| (d as f64, d as f64)).collect();
        assert_eq!(fit_constants(&same), (1.0, 0.0));
        let doubled: Vec<(f64, f64)> = (1..10).map(|d| (d as f64, 2.0 * d as f64)).collect();
        assert_eq!(fit_constants(&doubled), (2.0, 0.0));
        let halved: Vec<(f64, f64)> = (1..10).map(|d| (2.0 * d as f64, d as f64)).collect();
        assert_eq!(fit_constants(&halved), (2.0, 0.0));
    }

    #[test]
    fn additive_error_is_preferred_when_cheaper() {
        let shifted: Vec<(f64, f64)> = (1..50).map(|d| (d as f64, d as f64 + 0.5)).collect();
        assert_eq!(fit_constants(&shifted), (1.0, 0.5));
    }

    #[test]
    fn relative_change_values() {
        assert_eq!(relative_change(0.0, 0.0), 0.0);
        assert_eq!(relative_change(2.0, 1.0), 0.5);
    }
}
