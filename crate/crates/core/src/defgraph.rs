//! Labelled defining graphs.
//!
//! A defining graph is a simple graph whose edges carry integer labels
//! `m >= 2`. An absent edge means the two generators satisfy no relation.
//! Vertices are kept in lexicographic order so that every derived object
//! (subsets, matrices, reports) is deterministic.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Hard limit imposed by the bitmask representation of [`VertexSet`].
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(String, String),
    #[error("self-loop on vertex {0}")]
    SelfLoop(String),
    #[error("edge {0} {1} has label {2}, labels must be at least 2")]
    LabelTooSmall(String, String, u64),
    #[error("vertex {0} used in an edge but never declared")]
    UndeclaredVertex(String),
    #[error("vertex {0} declared twice")]
    DuplicateVertex(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("invalid vertex name {0:?}")]
    InvalidName(String),
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
}

/// A subset of the vertices of some [`DefiningGraph`], stored as a bitmask
/// over the canonical vertex indices.
///
/// Ordering is lexicographic on the sorted index lists, so `{0,1} < {0,2} < {1}`
/// and the empty set is the least element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        VertexSet(1 << i)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        VertexSet(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        VertexSet(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest index in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing bitmask order (starts with the
    /// empty set, ends with `self`).
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(VertexSet(cur))
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

/// Serialized as the sorted list of vertex indices.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Labelled simple graph encoding an Artin (or Coxeter) presentation.
#[derive(Clone, PartialEq, Eq)]
pub struct DefiningGraph {
    names: Vec<String>,
    // labels[i][j] = Some(m) iff {i, j} is an edge with label m.
    labels: Vec<Vec<Option<u32>>>,
    adjacency: Vec<VertexSet>,
}

impl fmt::Debug for DefiningGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DefiningGraph")
            .field("vertices", &self.names)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl DefiningGraph {
    /// Builds a graph from vertex names and labelled edges. Edge endpoints
    /// not present in `vertices` are added.
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S, u32)>,
        S: AsRef<str>,
    {
        let mut builder = GraphBuilder::default();
        for v in vertices {
            builder.vertex(v.as_ref())?;
        }
        for (a, b, m) in edges {
            builder.edge(a.as_ref(), b.as_ref(), m as u64, false)?;
        }
        builder.finish()
    }

    /// Graph with vertices `names` and every pair joined by an edge with the
    /// label given by `label(i, j)` (None leaves the pair unjoined).
    pub fn from_label_fn<F>(names: &[&str], mut label: F) -> Result<Self, GraphError>
    where
        F: FnMut(usize, usize) -> Option<u32>,
    {
        let mut edges = Vec::new();
        for i in 0..names.len() {
            for j in i + 1..names.len() {
                if let Some(m) = label(i, j) {
                    edges.push((names[i], names[j], m));
                }
            }
        }
        Self::new(names.iter().copied(), edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn label(&self, i: usize, j: usize) -> Option<u32> {
        self.labels[i][j]
    }

    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        self.labels[i][j].is_some()
    }

    pub fn neighbors(&self, i: usize) -> VertexSet {
        self.adjacency[i]
    }

    /// Edges `(i, j, m)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.vertex_count()).flat_map(move |i| {
            (i + 1..self.vertex_count()).filter_map(move |j| self.labels[i][j].map(|m| (i, j, m)))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// True when every edge carries the label 2.
    pub fn is_right_angled(&self) -> bool {
        self.edges().all(|(_, _, m)| m == 2)
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|i| set.without(i).is_subset(self.adjacency[i]))
    }

    /// Resolves vertex names to a [`VertexSet`].
    pub fn vertex_set<S: AsRef<str>>(
        &self,
        names: impl IntoIterator<Item = S>,
    ) -> Result<VertexSet, GraphError> {
        names
            .into_iter()
            .map(|n| {
                self.index_of(n.as_ref())
                    .ok_or_else(|| GraphError::UnknownVertex(n.as_ref().to_string()))
            })
            .collect()
    }

    pub fn names_of(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|i| self.names[i].clone()).collect()
    }

    fn check_set(&self, set: VertexSet) -> Result<(), GraphError> {
        match set.difference(self.all_vertices()).first() {
            Some(i) => Err(GraphError::UnknownVertex(format!("#{i}"))),
            None => Ok(()),
        }
    }

    /// The full labelled subgraph spanned by `set`.
    pub fn full_subgraph(&self, set: VertexSet) -> Result<DefiningGraph, GraphError> {
        self.check_set(set)?;
        let keep = set.to_vec();
        let names = keep.iter().map(|&i| self.names[i].clone()).collect();
        let labels: Vec<Vec<Option<u32>>> = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.labels[i][j]).collect())
            .collect();
        Ok(Self::from_parts(names, labels))
    }

    fn from_parts(names: Vec<String>, labels: Vec<Vec<Option<u32>>>) -> Self {
        let adjacency = labels
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, m)| m.is_some())
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        DefiningGraph {
            names,
            labels,
            adjacency,
        }
    }

    /// Maximal cliques, each sorted, listed in lexicographic order.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.bron_kerbosch(
            VertexSet::EMPTY,
            self.all_vertices(),
            VertexSet::EMPTY,
            &mut out,
        );
        out.sort();
        out
    }

    fn bron_kerbosch(&self, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() && x.is_empty() {
            if !r.is_empty() || self.vertex_count() == 0 {
                out.push(r);
            }
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| p.intersection(self.adjacency[u]).len())
            .unwrap();
        let (mut p, mut x) = (p, x);
        for v in p.difference(self.adjacency[pivot]).iter() {
            let nv = self.adjacency[v];
            self.bron_kerbosch(r.with(v), p.intersection(nv), x.intersection(nv), out);
            p = p.without(v);
            x = x.with(v);
        }
    }

    /// Chordless 4-cycles `a-b-c-d-a`, one per vertex set, oriented so that
    /// `a` is the least vertex and `b < d`.
    pub fn induced_four_cycles(&self) -> Vec<[usize; 4]> {
        self.four_circuits()
            .into_iter()
            .filter(|c| c.chords.is_empty())
            .map(|c| c.cycle)
            .collect()
    }

    /// Every 4-circuit on four distinct vertices, with its chords. A 4-set
    /// can carry up to three circuits (when it spans a complete graph).
    pub fn four_circuits(&self) -> Vec<FourCircuit> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        // The three cyclic orders through a, each with the
                        // second vertex less than the fourth.
                        for cycle in [[a, b, c, d], [a, b, d, c], [a, c, b, d]] {
                            let closed = (0..4).all(|k| self.is_edge(cycle[k], cycle[(k + 1) % 4]));
                            if !closed {
                                continue;
                            }
                            let chords = [(cycle[0], cycle[2]), (cycle[1], cycle[3])]
                                .into_iter()
                                .filter(|&(u, v)| self.is_edge(u, v))
                                .map(|(u, v)| (u.min(v), u.max(v)))
                                .collect();
                            out.push(FourCircuit { cycle, chords });
                        }
                    }
                }
            }
        }
        out
    }

    /// Serializes to the line-oriented text format read by [`parse_defining_graph`].
    pub fn to_dsl(&self) -> String {
        let mut out = String::new();
        for name in &self.names {
            out.push_str("vertex ");
            out.push_str(name);
            out.push('\n');
        }
        for (i, j, m) in self.edges() {
            out.push_str(&format!("edge {} {} {}\n", self.names[i], self.names[j], m));
        }
        out
    }
}

/// A closed walk `cycle[0]-cycle[1]-cycle[2]-cycle[3]-cycle[0]` and the
/// diagonals of it that are also edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourCircuit {
    pub cycle: [usize; 4],
    pub chords: Vec<(usize, usize)>,
}

#[derive(Default)]
struct GraphBuilder {
    declared: BTreeMap<String, bool>,
    edges: BTreeMap<(String, String), u32>,
}

impl GraphBuilder {
    fn vertex(&mut self, name: &str) -> Result<(), GraphError> {
        if !valid_name(name) {
            return Err(GraphError::InvalidName(name.to_string()));
        }
        match self.declared.insert(name.to_string(), true) {
            Some(true) => Err(GraphError::DuplicateVertex(name.to_string())),
            _ => Ok(()),
        }
    }

    fn edge(&mut self, a: &str, b: &str, m: u64, strict: bool) -> Result<(), GraphError> {
        for v in [a, b] {
            if !valid_name(v) {
                return Err(GraphError::InvalidName(v.to_string()));
            }
        }
        if a == b {
            return Err(GraphError::SelfLoop(a.to_string()));
        }
        if m < 2 || m > u32::MAX as u64 {
            return Err(GraphError::LabelTooSmall(a.to_string(), b.to_string(), m));
        }
        for v in [a, b] {
            if strict && !self.declared.contains_key(v) {
                return Err(GraphError::UndeclaredVertex(v.to_string()));
            }
            self.declared.entry(v.to_string()).or_insert(false);
        }
        let key = if a < b {
            (a.to_string(), b.to_string())
        } else {
            (b.to_string(), a.to_string())
        };
        if self.edges.contains_key(&key) {
            return Err(GraphError::DuplicateEdge(key.0, key.1));
        }
        self.edges.insert(key, m as u32);
        Ok(())
    }

    fn finish(self) -> Result<DefiningGraph, GraphError> {
        let names: Vec<String> = self.declared.into_keys().collect();
        if names.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(names.len()));
        }
        let n = names.len();
        let index = |s: &str| names.binary_search_by(|x| x.as_str().cmp(s)).unwrap();
        let mut labels = vec![vec![None; n]; n];
        for ((a, b), m) in &self.edges {
            let (i, j) = (index(a), index(b));
            labels[i][j] = Some(*m);
            labels[j][i] = Some(*m);
        }
        Ok(DefiningGraph::from_parts(names, labels))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Reject edges whose endpoints were not declared by a `vertex` line.
    pub strict: bool,
}

/// Parses the defining-graph DSL: `# comment`, `vertex <name>`,
/// `edge <name> <name> <label>`, one statement per line.
pub fn parse_defining_graph(text: &str) -> Result<DefiningGraph, GraphError> {
    parse_defining_graph_with(text, ParseOptions::default())
}

pub fn parse_defining_graph_with(
    text: &str,
    options: ParseOptions,
) -> Result<DefiningGraph, GraphError> {
    let mut builder = GraphBuilder::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let tokens = tokenize(content);
        let Some(&(col0, keyword)) = tokens.first() else {
            continue;
        };
        let syntax = |column: usize, message: String| GraphError::Syntax {
            line,
            column,
            message,
        };
        let check_name = |(col, tok): (usize, &str)| {
            if valid_name(tok) {
                Ok(())
            } else {
                Err(syntax(col, format!("invalid vertex name {tok:?}")))
            }
        };
        match keyword {
            "vertex" => {
                if tokens.len() != 2 {
                    let col = tokens.get(2).map_or(raw.len() + 1, |t| t.0);
                    return Err(syntax(col, "expected `vertex <name>`".into()));
                }
                check_name(tokens[1])?;
                builder.vertex(tokens[1].1)?;
            }
            "edge" => {
                if tokens.len() != 4 {
                    let col = tokens.get(4).map_or(raw.len() + 1, |t| t.0);
                    return Err(syntax(col, "expected `edge <name> <name> <label>`".into()));
                }
                check_name(tokens[1])?;
                check_name(tokens[2])?;
                let (col, lab) = tokens[3];
                let m: u64 = lab
                    .parse()
                    .map_err(|_| syntax(col, format!("label {lab:?} is not a positive integer")))?;
                builder.edge(tokens[1].1, tokens[2].1, m, options.strict)?;
            }
            other => {
                return Err(syntax(col0, format!("unknown statement {other:?}")));
            }
        }
    }
    builder.finish()
}

// (1-based column, token)
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}
