//! Finite graphs with integer edge weights and their exports.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::coxeter::{Letter, Word};
use crate::defgraph::{DefiningGraph, VertexSet};
use crate::hypcube::FaceType;

use super::OrbitError;

/// Unreachable marker in distance vectors.
pub const UNREACHABLE: u32 = u32::MAX;

/// Undirected graph with edge weights in `{1, 2}`. A weight of 2 is a unit
/// edge and a weight of 1 is a half edge, so true lengths are weights / 2.
#[derive(Debug, Clone, Default)]
pub struct WeightedGraph {
    adjacency: Vec<Vec<(u32, u8)>>,
    edges: HashSet<(u32, u32)>,
}

impl WeightedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self) -> usize {
        self.adjacency.push(Vec::new());
        self.adjacency.len() - 1
    }

    /// Adds an edge unless it is a loop or already present.
    pub fn add_edge(&mut self, a: usize, b: usize, weight: u8) {
        assert!(weight == 1 || weight == 2, "edge weights are 1 or 2");
        let key = (a.min(b) as u32, a.max(b) as u32);
        if a == b || !self.edges.insert(key) {
            return;
        }
        self.adjacency[a].push((b as u32, weight));
        self.adjacency[b].push((a as u32, weight));
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, u8)> + '_ {
        self.adjacency[v].iter().map(|&(u, w)| (u as usize, w))
    }

    /// Edges `(a, b, weight)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, u8)> {
        let mut out: Vec<_> = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, nb)| {
                nb.iter()
                    .filter(move |&&(b, _)| a < b as usize)
                    .map(move |&(b, w)| (a, b as usize, w))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Weighted distances from `source` (in weight units) by a bucket queue.
    pub fn distances_from(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.node_count()];
        dist[source] = 0;
        let mut buckets: Vec<Vec<u32>> = vec![vec![source as u32]];
        let mut d = 0;
        while d < buckets.len() {
            let bucket = std::mem::take(&mut buckets[d]);
            for v in bucket {
                if dist[v as usize] != d as u32 {
                    continue;
                }
                for &(u, w) in &self.adjacency[v as usize] {
                    let nd = d + w as usize;
                    if (nd as u32) < dist[u as usize] {
                        dist[u as usize] = nd as u32;
                        if buckets.len() <= nd {
                            buckets.resize(nd + 1, Vec::new());
                        }
                        buckets[nd].push(u);
                    }
                }
            }
            d += 1;
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.node_count() == 0 || self.distances_from(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Flat edge list, one `u v weight` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (a, b, w) in self.edges() {
            writeln!(out, "{a} {b} {w}").unwrap();
        }
        out
    }
}

/// What a vertex of an [`OrbitGraph`] stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum NodeKind {
    /// A group element.
    Element,
    /// The cone vertex of a coset of the `subgroup`-th member of the family.
    Cone { subgroup: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct NodeLabel {
    pub word: Word,
    pub kind: NodeKind,
}

/// A ball in a Cayley graph, possibly coned off along cosets of a family of
/// standard parabolic subgroups.
#[derive(Debug, Clone)]
pub struct OrbitGraph {
    pub graph: WeightedGraph,
    pub labels: Vec<NodeLabel>,
    pub radius: usize,
    pub generators: Vec<Letter>,
    pub family: Vec<VertexSet>,
    index: HashMap<NodeLabel, usize>,
}

impl OrbitGraph {
    pub(crate) fn new(radius: usize, generators: Vec<Letter>, family: Vec<VertexSet>) -> Self {
        OrbitGraph {
            graph: WeightedGraph::new(),
            labels: Vec::new(),
            radius,
            generators,
            family,
            index: HashMap::new(),
        }
    }

    pub(crate) fn intern(&mut self, label: NodeLabel) -> (usize, bool) {
        if let Some(&i) = self.index.get(&label) {
            return (i, false);
        }
        let i = self.graph.add_node();
        self.index.insert(label.clone(), i);
        self.labels.push(label);
        (i, true)
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn find(&self, label: &NodeLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn element(&self, word: &Word) -> Option<usize> {
        self.find(&NodeLabel {
            word: word.clone(),
            kind: NodeKind::Element,
        })
    }

    /// Indices of group-element vertices.
    pub fn elements(&self) -> Vec<usize> {
        (0..self.labels.len())
            .filter(|&i| self.labels[i].kind == NodeKind::Element)
            .collect()
    }

    pub fn label_text(&self, graph: &DefiningGraph, i: usize) -> String {
        let label = &self.labels[i];
        let word = word_text(graph, &label.word);
        match label.kind {
            NodeKind::Element => word,
            NodeKind::Cone { subgroup } => {
                format!("V[{word}; {}]", set_text(graph, self.family[subgroup]))
            }
        }
    }

    /// DOT export with canonical words as labels; cone vertices are boxes
    /// and half edges are dashed.
    pub fn to_dot(&self, graph: &DefiningGraph) -> String {
        let mut out = String::from("graph orbit {\n");
        for i in 0..self.labels.len() {
            let shape = match self.labels[i].kind {
                NodeKind::Element => "ellipse",
                NodeKind::Cone { .. } => "box",
            };
            writeln!(
                out,
                "  n{i} [label=\"{}\", shape={shape}];",
                self.label_text(graph, i)
            )
            .unwrap();
        }
        for (a, b, w) in self.graph.edges() {
            let style = if w == 1 { " [style=dashed]" } else { "" };
            writeln!(out, "  n{a} -- n{b}{style};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn word_text(graph: &DefiningGraph, w: &Word) -> String {
    if w.is_empty() {
        "e".to_string()
    } else {
        w.display(graph).to_string()
    }
}

pub(crate) fn set_text(graph: &DefiningGraph, set: VertexSet) -> String {
    format!("{{{}}}", graph.names_of(set).join(","))
}

/// Which coset complex a [`CubicalBall`] approximates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    Deligne,
    Davis,
}

/// A cube `[g H_T, g H_R]` given by the canonical representative of `g H_T`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cube {
    pub base: usize,
    pub lower: VertexSet,
    pub upper: VertexSet,
}

impl Cube {
    pub fn dimension(&self) -> usize {
        self.upper.len() - self.lower.len()
    }

    pub fn face_type(&self) -> FaceType {
        FaceType {
            k: self.lower.len(),
            l: self.upper.len(),
        }
    }
}

/// A finite piece of the cubical complex of cosets `g H_T`, `T` spherical.
#[derive(Debug, Clone)]
pub struct CubicalBall {
    pub kind: ComplexKind,
    pub radius: usize,
    /// Canonical coset representative and the subset `T`.
    pub vertices: Vec<(Word, VertexSet)>,
    pub cubes: Vec<Cube>,
    /// 1-skeleton; all edges have unit length (weight 2).
    pub skeleton: WeightedGraph,
    index: HashMap<(Word, VertexSet), usize>,
}

impl CubicalBall {
    pub(crate) fn new(kind: ComplexKind, radius: usize) -> Self {
        CubicalBall {
            kind,
            radius,
            vertices: Vec::new(),
            cubes: Vec::new(),
            skeleton: WeightedGraph::new(),
            index: HashMap::new(),
        }
    }

    pub(crate) fn intern(&mut self, rep: Word, t: VertexSet) -> usize {
        if let Some(&i) = self.index.get(&(rep.clone(), t)) {
            return i;
        }
        let i = self.skeleton.add_node();
        self.index.insert((rep.clone(), t), i);
        self.vertices.push((rep, t));
        i
    }

    pub fn find(&self, rep: &Word, t: VertexSet) -> Option<usize> {
        self.index.get(&(rep.clone(), t)).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn max_cube_dimension(&self) -> usize {
        self.cubes.iter().map(Cube::dimension).max().unwrap_or(0)
    }

    pub fn label_text(&self, graph: &DefiningGraph, i: usize) -> String {
        let (w, t) = &self.vertices[i];
        let group = match self.kind {
            ComplexKind::Deligne => "G",
            ComplexKind::Davis => "W",
        };
        format!("{} {group}{}", word_text(graph, w), set_text(graph, *t))
    }

    pub fn to_dot(&self, graph: &DefiningGraph) -> String {
        let mut out = String::from("graph cubical {\n");
        for i in 0..self.vertices.len() {
            writeln!(out, "  n{i} [label=\"{}\"];", self.label_text(graph, i)).unwrap();
        }
        for (a, b, _) in self.skeleton.edges() {
            writeln!(out, "  n{a} -- n{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn check_cap(count: usize, cap: usize, what: &'static str) -> Result<(), OrbitError> {
    if count > cap {
        Err(OrbitError::CapExceeded { what, cap })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_weight_distances() {
        let mut g = WeightedGraph::new();
        for _ in 0..4 {
            g.add_node();
        }
        g.add_edge(0, 1, 2);
        g.add_edge(0, 2, 1);
        g.add_edge(2, 1, 1);
        g.add_edge(1, 0, 2);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.distances_from(0), vec![0, 2, 1, UNREACHABLE]);
        assert!(!g.is_connected());
        assert_eq!(g.to_edge_list(), "0 1 2\n0 2 1\n1 2 1\n");
    }
}
