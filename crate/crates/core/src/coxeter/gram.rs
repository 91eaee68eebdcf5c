use std::f64::consts::PI;
use std::fmt;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::defgraph::{DefiningGraph, VertexSet};

/// Tolerance for the positive-definiteness and kernel tests.
pub const GRAM_TOLERANCE: f64 = 1e-9;

/// Cosine matrix of a Coxeter system: 1 on the diagonal, `-cos(pi/m)` for an
/// edge labelled `m`, and `-1` for a non-edge.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix(DMatrix<f64>);

impl GramMatrix {
    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[(i, j)]
    }

    pub fn as_matrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    /// Cholesky factorization succeeds with every pivot above the tolerance.
    pub fn is_positive_definite(&self) -> bool {
        let n = self.dim();
        let mut l = vec![0.0; n * n];
        for j in 0..n {
            let mut d = self.0[(j, j)];
            for k in 0..j {
                d -= l[j * n + k] * l[j * n + k];
            }
            if d <= GRAM_TOLERANCE {
                return false;
            }
            let d = d.sqrt();
            l[j * n + j] = d;
            for i in j + 1..n {
                let mut s = self.0[(i, j)];
                for k in 0..j {
                    s -= l[i * n + k] * l[j * n + k];
                }
                l[i * n + j] = s / d;
            }
        }
        true
    }

    /// Eigenvalues in increasing order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        if self.dim() == 0 {
            return Vec::new();
        }
        let mut ev: Vec<f64> = SymmetricEigen::new(self.0.clone())
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    /// Positive semidefinite with a one-dimensional kernel.
    pub fn is_affine(&self) -> bool {
        let ev = self.eigenvalues();
        !ev.is_empty()
            && ev[0].abs() <= GRAM_TOLERANCE
            && ev.get(1).is_none_or(|&e| e > GRAM_TOLERANCE)
    }
}

fn entry(label: Option<u32>) -> f64 {
    match label {
        Some(2) => 0.0,
        Some(m) => -(PI / m as f64).cos(),
        None => -1.0,
    }
}

/// Gram matrix of the whole graph, rows in canonical vertex order.
pub fn gram_matrix(graph: &DefiningGraph) -> GramMatrix {
    gram_matrix_of(graph, graph.all_vertices())
}

/// Gram matrix of the full subgraph spanned by `set`.
pub fn gram_matrix_of(graph: &DefiningGraph, set: VertexSet) -> GramMatrix {
    let idx = set.to_vec();
    let n = idx.len();
    GramMatrix(DMatrix::from_fn(n, n, |r, c| {
        if r == c {
            1.0
        } else {
            entry(graph.label(idx[r], idx[c]))
        }
    }))
}

/// Whether the standard parabolic subgroup generated by `set` is finite.
pub fn is_spherical(graph: &DefiningGraph, set: VertexSet) -> bool {
    if set.len() <= 1 {
        return true;
    }
    // Any non-edge gives an infinite dihedral subgroup.
    if !graph.is_clique(set) {
        return false;
    }
    gram_matrix_of(graph, set).is_positive_definite()
}

/// Connected components of `set` in the graph joining generators that do not
/// commute (label other than 2, or no edge). These are the irreducible
/// factors of the parabolic subgroup.
pub fn irreducible_components(graph: &DefiningGraph, set: VertexSet) -> Vec<VertexSet> {
    let mut rest = set;
    let mut out = Vec::new();
    while let Some(start) = rest.first() {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while let Some(v) = frontier.first() {
            frontier = frontier.without(v);
            for u in rest.difference(comp).iter() {
                if graph.label(v, u) != Some(2) {
                    comp = comp.with(u);
                    frontier = frontier.with(u);
                }
            }
        }
        rest = rest.difference(comp);
        out.push(comp);
    }
    out
}

/// Irreducible components of `set` that are affine (Euclidean reflection
/// groups), each with its rank.
pub fn affine_components(graph: &DefiningGraph, set: VertexSet) -> Vec<(VertexSet, usize)> {
    irreducible_components(graph, set)
        .into_iter()
        .filter(|&c| c.len() >= 2 && gram_matrix_of(graph, c).is_affine())
        .map(|c| (c, c.len()))
        .collect()
}

/// Name of an irreducible Coxeter system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
    Affine(usize),
    Indefinite(usize),
}

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => n,
            CoxeterType::E6 => 6,
            CoxeterType::E7 => 7,
            CoxeterType::E8 => 8,
            CoxeterType::F4 | CoxeterType::H4 => 4,
            CoxeterType::H3 => 3,
            CoxeterType::I2(_) => 2,
            CoxeterType::Affine(n) | CoxeterType::Indefinite(n) => n,
        }
    }

    pub fn is_finite(self) -> bool {
        !matches!(self, CoxeterType::Affine(_) | CoxeterType::Indefinite(_))
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E6 => write!(f, "E6"),
            CoxeterType::E7 => write!(f, "E7"),
            CoxeterType::E8 => write!(f, "E8"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::H3 => write!(f, "H3"),
            CoxeterType::H4 => write!(f, "H4"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
            CoxeterType::Affine(n) => write!(f, "affine-irreducible({n})"),
            CoxeterType::Indefinite(n) => write!(f, "indefinite({n})"),
        }
    }
}

/// Classifies every irreducible component of the graph, in the order of
/// their least vertices.
pub fn finite_type_name(graph: &DefiningGraph) -> Vec<CoxeterType> {
    irreducible_components(graph, graph.all_vertices())
        .into_iter()
        .map(|c| classify_component(graph, c))
        .collect()
}

fn classify_component(graph: &DefiningGraph, comp: VertexSet) -> CoxeterType {
    let rank = comp.len();
    let gram = gram_matrix_of(graph, comp);
    if rank <= 1 {
        return CoxeterType::A(rank);
    }
    if !graph.is_clique(comp) || !gram.is_positive_definite() {
        return if gram.is_affine() {
            CoxeterType::Affine(rank)
        } else {
            CoxeterType::Indefinite(rank)
        };
    }
    let verts = comp.to_vec();
    if rank == 2 {
        return match graph.label(verts[0], verts[1]).unwrap() {
            3 => CoxeterType::A(2),
            4 => CoxeterType::B(2),
            m => CoxeterType::I2(m),
        };
    }
    // Finite and irreducible of rank >= 3: the Coxeter diagram (pairs with
    // label >= 3) is a tree with at most one branch point or one label > 3.
    let heavy = |a: usize, b: usize| graph.label(a, b).filter(|&m| m >= 3);
    let degree = |v: usize| {
        verts
            .iter()
            .filter(|&&u| u != v && heavy(u, v).is_some())
            .count()
    };
    let diagram_edges: Vec<(usize, usize, u32)> = verts
        .iter()
        .flat_map(|&a| verts.iter().filter_map(move |&b| (a < b).then_some((a, b))))
        .filter_map(|(a, b)| heavy(a, b).map(|m| (a, b, m)))
        .collect();
    let big: Vec<&(usize, usize, u32)> = diagram_edges.iter().filter(|e| e.2 > 3).collect();
    let branch: Vec<usize> = verts.iter().copied().filter(|&v| degree(v) == 3).collect();

    if let Some(&&(a, b, m)) = big.first() {
        let end_edge = degree(a) == 1 || degree(b) == 1;
        return match (m, rank, end_edge) {
            (4, 4, false) => CoxeterType::F4,
            (4, _, true) => CoxeterType::B(rank),
            (5, 3, _) => CoxeterType::H3,
            (5, 4, true) => CoxeterType::H4,
            _ => CoxeterType::Indefinite(rank),
        };
    }
    match branch.first() {
        None => CoxeterType::A(rank),
        Some(&centre) => {
            // Arm lengths from the branch vertex.
            let mut arms: Vec<usize> = verts
                .iter()
                .copied()
                .filter(|&u| heavy(u, centre).is_some())
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (centre, start, 1);
                    loop {
                        let next = verts
                            .iter()
                            .copied()
                            .find(|&w| w != prev && w != cur && heavy(w, cur).is_some());
                        match next {
                            Some(w) => {
                                prev = cur;
                                cur = w;
                                len += 1;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, _] => CoxeterType::D(rank),
                [1, 2, 2] => CoxeterType::E6,
                [1, 2, 3] => CoxeterType::E7,
                [1, 2, 4] => CoxeterType::E8,
                _ => CoxeterType::Indefinite(rank),
            }
        }
    }
}
