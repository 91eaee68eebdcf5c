//! Gromov's four-point condition on finite graphs.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::graph::{WeightedGraph, UNREACHABLE};
use super::OrbitError;

/// Quadruple count up to which the scan is exhaustive.
pub const DEFAULT_QUADRUPLE_BUDGET: u64 = 300_000;
/// Seed used for sampled estimates unless another is given.
pub const DEFAULT_SEED: u64 = 20_240_101;
/// Number of base points kept when a graph is too large for all-pairs
/// distances.
pub const DEFAULT_POINT_LIMIT: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sample {
    /// Exhaustive when the quadruple count fits the budget, sampled otherwise.
    Auto,
    /// Every quadruple of vertices.
    All,
    /// This many uniformly random quadruples.
    Count(u64),
}

#[derive(Debug, Clone, Copy)]
pub struct DeltaOptions {
    pub sample: Sample,
    pub seed: u64,
    pub budget: u64,
    pub point_limit: usize,
}

impl Default for DeltaOptions {
    fn default() -> Self {
        DeltaOptions {
            sample: Sample::Auto,
            seed: DEFAULT_SEED,
            budget: DEFAULT_QUADRUPLE_BUDGET,
            point_limit: DEFAULT_POINT_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeltaEstimate {
    pub delta: f64,
    /// Whether every quadruple of vertices was examined.
    pub exact: bool,
    pub vertices: usize,
    /// Vertices quadruples were drawn from.
    pub points: usize,
    pub quadruples: u64,
    /// Vertices of a quadruple attaining the estimate.
    pub witness: [usize; 4],
}

/// `C(n, 4)`, saturating at `u64::MAX`.
fn choose4(n: u64) -> u64 {
    if n < 4 {
        return 0;
    }
    let n = n as u128;
    let c = n * (n - 1) / 2 * (n - 2) / 3 * (n - 3) / 4;
    u64::try_from(c).unwrap_or(u64::MAX)
}

/// Twice the four-point defect of a quadruple, in the units of `d`.
fn defect(d: &[u32], m: usize, q: [usize; 4]) -> u32 {
    let at = |a: usize, b: usize| d[q[a] * m + q[b]];
    let mut sums = [
        at(0, 1) + at(2, 3),
        at(0, 2) + at(1, 3),
        at(0, 3) + at(1, 2),
    ];
    sums.sort_unstable();
    sums[2] - sums[1]
}

/// The least `delta` such that for every examined quadruple
/// `d(w,x) + d(y,z) <= max(d(w,y) + d(x,z), d(w,z) + d(x,y)) + 2 delta`,
/// in true lengths (weights / 2).
pub fn delta_four_point(
    graph: &WeightedGraph,
    options: &DeltaOptions,
) -> Result<DeltaEstimate, OrbitError> {
    let n = graph.node_count();
    if n == 0 {
        return Err(OrbitError::InvalidArgument("empty graph".into()));
    }
    if !graph.is_connected() {
        return Err(OrbitError::Disconnected);
    }
    let exhaustive = match options.sample {
        Sample::All => true,
        Sample::Auto => choose4(n as u64) <= options.budget,
        Sample::Count(_) => false,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let points: Vec<usize> = if exhaustive || n <= options.point_limit {
        (0..n).collect()
    } else {
        let mut p: Vec<usize> = sample(&mut rng, n, options.point_limit).into_vec();
        p.sort_unstable();
        p
    };
    let m = points.len();
    let mut d = vec![0u32; m * m];
    for (i, &p) in points.iter().enumerate() {
        let dist = graph.distances_from(p);
        for (j, &q) in points.iter().enumerate() {
            debug_assert_ne!(dist[q], UNREACHABLE);
            d[i * m + j] = dist[q];
        }
    }

    let mut best = (0u32, [0usize; 4]);
    let mut count = 0u64;
    let mut consider = |q: [usize; 4]| {
        count += 1;
        let v = defect(&d, m, q);
        if v > best.0 {
            best = (v, q);
        }
    };
    if exhaustive {
        for a in 0..m {
            for b in a + 1..m {
                for c in b + 1..m {
                    for e in c + 1..m {
                        consider([a, b, c, e]);
                    }
                }
            }
        }
    } else {
        let samples = match options.sample {
            Sample::Count(k) => k,
            _ => options.budget,
        };
        for _ in 0..samples {
            consider([
                rng.gen_range(0..m),
                rng.gen_range(0..m),
                rng.gen_range(0..m),
                rng.gen_range(0..m),
            ]);
        }
    }
    let (v, q) = best;
    Ok(DeltaEstimate {
        // Distances are in half units, and delta is half the defect.
        delta: v as f64 / 4.0,
        exact: exhaustive,
        vertices: n,
        points: m,
        quadruples: count,
        witness: q.map(|i| points[i]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph(n: usize) -> WeightedGraph {
        let mut g = WeightedGraph::new();
        for i in 0..n {
            g.add_node();
            if i > 0 {
                g.add_edge(i - 1, i, 2);
            }
        }
        g
    }

    #[test]
    fn trees_and_cycles() {
        let opts = DeltaOptions::default();
        assert_eq!(delta_four_point(&path_graph(2), &opts).unwrap().delta, 0.0);
        assert_eq!(delta_four_point(&path_graph(30), &opts).unwrap().delta, 0.0);
        let mut square = path_graph(4);
        square.add_edge(3, 0, 2);
        let est = delta_four_point(&square, &opts).unwrap();
        assert!(est.exact);
        assert_eq!(est.delta, 1.0);
    }

    #[test]
    fn disconnected_graphs_are_rejected() {
        let mut g = path_graph(2);
        g.add_node();
        assert_eq!(
            delta_four_point(&g, &DeltaOptions::default()),
            Err(OrbitError::Disconnected)
        );
    }

    #[test]
    fn choose4_values() {
        assert_eq!(choose4(3), 0);
        assert_eq!(choose4(4), 1);
        assert_eq!(choose4(10), 210);
        assert_eq!(choose4(57), 395_010);
        assert_eq!(choose4(100_000), 4_166_416_671_249_975_000);
        assert_eq!(choose4(1_000_000), u64::MAX);
    }
}
