//! Finite abstract simplicial complexes and the complexes attached to a
//! defining graph: the poset of spherical subsets, its order complex (the
//! fundamental domain K of the Deligne complex) and the nerve L.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::coxeter::is_spherical;
use crate::defgraph::{DefiningGraph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("{0:?} is not a simplex of the complex")]
    NotASimplex(Vec<usize>),
}

/// A simplex is a sorted, non-empty list of vertex indices.
pub type Simplex = Vec<usize>;

/// A finite abstract simplicial complex. Vertex indices refer to `labels`;
/// not every label need be a vertex (links keep the ambient labelling).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    simplices: BTreeSet<Simplex>,
}

impl SimplicialComplex {
    /// The downward closure of `facets`.
    pub fn from_facets<I>(labels: Vec<String>, facets: I) -> Self
    where
        I: IntoIterator<Item = Simplex>,
    {
        let mut simplices = BTreeSet::new();
        for mut f in facets {
            f.sort_unstable();
            f.dedup();
            assert!(f.iter().all(|&v| v < labels.len()), "vertex out of range");
            add_faces(&f, &mut simplices);
        }
        SimplicialComplex { labels, simplices }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        self.simplices.contains(simplex)
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.simplices
            .iter()
            .filter(|s| s.len() == 1)
            .map(|s| s[0])
            .collect()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.simplices.iter().map(|s| s.len() - 1).max()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .map(|s| if s.len() % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    /// Simplices not contained in any larger simplex.
    pub fn facets(&self) -> Vec<Simplex> {
        let adj = self.adjacency();
        self.simplices
            .iter()
            .filter(|s| {
                // s is maximal iff no vertex outside s extends it.
                let common = common_neighbors(&adj, s);
                !common.iter().any(|&v| {
                    let mut t = (*s).clone();
                    t.push(v);
                    t.sort_unstable();
                    self.simplices.contains(&t)
                })
            })
            .cloned()
            .collect()
    }

    /// Neighbour sets of the 1-skeleton, indexed by label.
    pub fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.labels.len()];
        for s in self.simplices.iter().filter(|s| s.len() == 2) {
            adj[s[0]].insert(s[1]);
            adj[s[1]].insert(s[0]);
        }
        adj
    }

    /// Full subcomplex spanned by `vertices`.
    pub fn full_subcomplex(&self, vertices: &BTreeSet<usize>) -> SimplicialComplex {
        SimplicialComplex {
            labels: self.labels.clone(),
            simplices: self
                .simplices
                .iter()
                .filter(|s| s.iter().all(|v| vertices.contains(v)))
                .cloned()
                .collect(),
        }
    }

    /// One facet per line, vertex labels separated by spaces.
    pub fn to_facet_list(&self) -> String {
        let mut out = String::new();
        for f in self.facets() {
            let names: Vec<&str> = f.iter().map(|&v| self.labels[v].as_str()).collect();
            out.push_str(&names.join(" "));
            out.push('\n');
        }
        out
    }

    /// The 1-skeleton in Graphviz DOT.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph complex {\n");
        for v in self.vertices() {
            let _ = writeln!(out, "  \"{}\";", self.labels[v]);
        }
        for s in self.simplices.iter().filter(|s| s.len() == 2) {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\";",
                self.labels[s[0]], self.labels[s[1]]
            );
        }
        out.push_str("}\n");
        out
    }
}

fn add_faces(simplex: &[usize], out: &mut BTreeSet<Simplex>) {
    if simplex.is_empty() || out.contains(simplex) {
        return;
    }
    out.insert(simplex.to_vec());
    if simplex.len() > 1 {
        for skip in 0..simplex.len() {
            let face: Simplex = simplex
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect();
            add_faces(&face, out);
        }
    }
}

fn common_neighbors(adj: &[BTreeSet<usize>], simplex: &[usize]) -> Vec<usize> {
    let Some((&first, rest)) = simplex.split_first() else {
        return Vec::new();
    };
    adj[first]
        .iter()
        .copied()
        .filter(|v| rest.iter().all(|&u| adj[u].contains(v)))
        .collect()
}

/// Link of `simplex` in `complex`: simplices disjoint from it whose union
/// with it is a simplex.
pub fn simplex_link(
    complex: &SimplicialComplex,
    simplex: &[usize],
) -> Result<SimplicialComplex, ComplexError> {
    let mut sigma = simplex.to_vec();
    sigma.sort_unstable();
    if !complex.contains(&sigma) {
        return Err(ComplexError::NotASimplex(sigma));
    }
    let simplices = complex
        .simplices
        .iter()
        .filter(|t| t.len() > sigma.len() && sigma.iter().all(|v| t.binary_search(v).is_ok()))
        .map(|t| {
            t.iter()
                .copied()
                .filter(|v| sigma.binary_search(v).is_err())
                .collect()
        })
        .collect();
    Ok(SimplicialComplex {
        labels: complex.labels.clone(),
        simplices,
    })
}

/// Every set of pairwise adjacent vertices spans a simplex.
pub fn is_flag(complex: &SimplicialComplex) -> bool {
    flag_violation(complex).is_none()
}

/// A clique of the 1-skeleton that is not a simplex, if any. Checking one
/// vertex extensions of simplices suffices: a minimal non-simplex clique is
/// a simplex plus a vertex adjacent to all of it.
pub fn flag_violation(complex: &SimplicialComplex) -> Option<Simplex> {
    let adj = complex.adjacency();
    for s in complex.simplices.iter().filter(|s| s.len() >= 2) {
        for v in common_neighbors(&adj, s) {
            let mut t = s.clone();
            t.push(v);
            t.sort_unstable();
            if !complex.simplices.contains(&t) {
                return Some(t);
            }
        }
    }
    None
}

/// Chordless 4-cycles `a-b-c-d` of the 1-skeleton, each once, with `a` the
/// least vertex and `b < d`.
pub fn induced_four_cycles(complex: &SimplicialComplex) -> Vec<[usize; 4]> {
    let adj = complex.adjacency();
    let verts = complex.vertices();
    let mut out = Vec::new();
    for (i, &a) in verts.iter().enumerate() {
        for &c in &verts[i + 1..] {
            if adj[a].contains(&c) {
                continue;
            }
            let common: Vec<usize> = adj[a].intersection(&adj[c]).copied().collect();
            for (k, &b) in common.iter().enumerate() {
                for &d in &common[k + 1..] {
                    if !adj[b].contains(&d) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    // Each square is found from both diagonals; keep the one starting at its
    // least vertex.
    out.retain(|q| q[0] < q[1] && q[0] < q[3]);
    out.sort();
    out
}

/// Flag with no induced 4-cycle ("no triangles, no squares").
pub fn satisfies_ntns(complex: &SimplicialComplex) -> bool {
    is_flag(complex) && induced_four_cycles(complex).is_empty()
}

/// Whether the link of every simplex is the full subcomplex on its vertices.
pub fn links_are_full_subcomplexes(complex: &SimplicialComplex) -> bool {
    non_full_link(complex).is_none()
}

/// A simplex whose link is not a full subcomplex, if any.
pub fn non_full_link(complex: &SimplicialComplex) -> Option<Simplex> {
    complex.simplices.iter().find_map(|s| {
        let link = simplex_link(complex, s).expect("simplex of the complex");
        let verts: BTreeSet<usize> = link.vertices().into_iter().collect();
        (complex.full_subcomplex(&verts) != link).then(|| s.clone())
    })
}

/// The poset of spherical subsets of the vertices, ordered by inclusion,
/// with the empty set as least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalPoset {
    names: Vec<String>,
    // Sorted by size, then lexicographically.
    elements: Vec<VertexSet>,
    lookup: HashSet<VertexSet>,
}

impl SphericalPoset {
    pub fn elements(&self) -> &[VertexSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, set: VertexSet) -> bool {
        self.lookup.contains(&set)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Maximal elements in lexicographic order.
    pub fn maximal(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self
            .elements
            .iter()
            .copied()
            .filter(|&r| !self.elements.iter().any(|&t| t != r && r.is_subset(t)))
            .collect();
        out.sort();
        out
    }

    pub fn label(&self, set: VertexSet) -> String {
        let names: Vec<&str> = set.iter().map(|i| self.names[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// Spherical subsets, built level by level: a set is tested only when all of
/// its maximal proper subsets are already spherical.
pub fn spherical_poset(graph: &DefiningGraph) -> SphericalPoset {
    let mut levels: Vec<Vec<VertexSet>> = vec![vec![VertexSet::EMPTY]];
    let mut lookup: HashSet<VertexSet> = HashSet::from([VertexSet::EMPTY]);
    let n = graph.vertex_count();
    loop {
        let prev = levels.last().unwrap();
        let mut next = Vec::new();
        for &r in prev {
            let start = r.iter().last().map_or(0, |m| m + 1);
            for v in start..n {
                let t = r.with(v);
                let faces_ok = t.iter().all(|u| lookup.contains(&t.without(u)));
                if faces_ok && is_spherical(graph, t) {
                    next.push(t);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort();
        lookup.extend(next.iter().copied());
        levels.push(next);
    }
    SphericalPoset {
        names: graph.names().to_vec(),
        elements: levels.into_iter().flatten().collect(),
        lookup,
    }
}

/// The order complex of the spherical poset together with the poset element
/// behind each vertex.
#[derive(Debug, Clone)]
pub struct OrderComplex {
    pub complex: SimplicialComplex,
    pub elements: Vec<VertexSet>,
}

impl OrderComplex {
    /// Least element of the chain `simplex`.
    pub fn minimal_element(&self, simplex: &[usize]) -> Option<VertexSet> {
        simplex
            .iter()
            .map(|&v| self.elements[v])
            .min_by_key(|s| s.len())
    }
}

/// Chains of the spherical poset as a simplicial complex. With the empty set
/// included this is the fundamental domain K of the Deligne complex.
pub fn order_complex(poset: &SphericalPoset, include_empty: bool) -> OrderComplex {
    let elements: Vec<VertexSet> = poset
        .elements
        .iter()
        .copied()
        .filter(|s| include_empty || !s.is_empty())
        .collect();
    let labels = elements.iter().map(|&s| poset.label(s)).collect();
    let mut chains = Vec::new();
    // Elements are sorted by size, so extensions only look forward.
    fn extend(elements: &[VertexSet], chain: &mut Vec<usize>, out: &mut Vec<Simplex>) {
        let top = elements[*chain.last().unwrap()];
        let mut extended = false;
        for j in chain.last().unwrap() + 1..elements.len() {
            if top != elements[j] && top.is_subset(elements[j]) {
                chain.push(j);
                extend(elements, chain, out);
                chain.pop();
                extended = true;
            }
        }
        if !extended {
            out.push(chain.clone());
        }
    }
    for i in 0..elements.len() {
        extend(&elements, &mut vec![i], &mut chains);
    }
    OrderComplex {
        complex: SimplicialComplex::from_facets(labels, chains),
        elements,
    }
}

/// The nerve L: vertices are the generators, simplices the non-empty
/// spherical subsets.
pub fn nerve(graph: &DefiningGraph) -> SimplicialComplex {
    nerve_of(&spherical_poset(graph))
}

pub fn nerve_of(poset: &SphericalPoset) -> SimplicialComplex {
    SimplicialComplex {
        labels: poset.names.clone(),
        simplices: poset
            .elements
            .iter()
            .filter(|s| !s.is_empty())
            .map(|s| s.to_vec())
            .collect(),
    }
}
