//! Graph-level hyperbolicity criteria and the combined verdict on the
//! Coxeter group W, the Deligne complex, and weak relative hyperbolicity of
//! the Artin group relative to its finite-type standard parabolics.

use serde::Serialize;
use thiserror::Error;

use crate::complexes::{spherical_poset, SphericalPoset};
use crate::coxeter::{gram_matrix_of, irreducible_components, is_spherical};
use crate::defgraph::{DefiningGraph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("graph has {vertices} vertices, the product search is capped at {cap}")]
    CapExceeded { vertices: usize, cap: usize },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// Evidence that a condition fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// The graph has no edge at all.
    NoEdges,
    Triangle([usize; 3]),
    Square([usize; 4]),
    Clique(VertexSet),
    /// A subset whose parabolic is an irreducible Euclidean reflection group.
    Affine(VertexSet),
    /// Two infinite parabolics commuting with each other.
    Product(VertexSet, VertexSet),
}

impl Witness {
    fn kind(&self) -> &'static str {
        match self {
            Witness::NoEdges => "no-edges",
            Witness::Triangle(_) => "triangle",
            Witness::Square(_) => "square",
            Witness::Clique(_) => "clique",
            Witness::Affine(_) => "affine-subset",
            Witness::Product(..) => "product",
        }
    }

    /// Vertex index lists (two lists for a product, one otherwise).
    pub fn parts(&self) -> Vec<Vec<usize>> {
        match self {
            Witness::NoEdges => vec![vec![]],
            Witness::Triangle(t) => vec![t.to_vec()],
            Witness::Square(s) => vec![s.to_vec()],
            Witness::Clique(c) | Witness::Affine(c) => vec![c.to_vec()],
            Witness::Product(a, b) => vec![a.to_vec(), b.to_vec()],
        }
    }

    pub fn to_json(&self, graph: &DefiningGraph) -> WitnessJson {
        WitnessJson {
            kind: self.kind().to_string(),
            vertices: self
                .parts()
                .into_iter()
                .map(|p| p.into_iter().map(|i| graph.name(i).to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessJson {
    pub kind: String,
    pub vertices: Vec<Vec<String>>,
}

/// Outcome of one condition: `witness` is present exactly when it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Check {
    fn pass() -> Self {
        Check {
            holds: true,
            witness: None,
        }
    }

    fn fail(w: Witness) -> Self {
        Check {
            holds: false,
            witness: Some(w),
        }
    }

    fn from_witness(w: Option<Witness>) -> Self {
        w.map_or_else(Check::pass, Check::fail)
    }
}

fn reciprocal_sum_cmp(m: u32, n: u32, p: u32) -> std::cmp::Ordering {
    // 1/m + 1/n + 1/p compared with 1.
    let (m, n, p) = (m as u64, n as u64, p as u64);
    (n * p + m * p + m * n).cmp(&(m * n * p))
}

fn triangles(graph: &DefiningGraph) -> impl Iterator<Item = ([usize; 3], [u32; 3])> + '_ {
    let n = graph.vertex_count();
    (0..n).flat_map(move |a| {
        (a + 1..n).flat_map(move |b| {
            (b + 1..n).filter_map(move |c| {
                Some((
                    [a, b, c],
                    [graph.label(a, b)?, graph.label(b, c)?, graph.label(a, c)?],
                ))
            })
        })
    })
}

/// At least one edge, and every triangle has labels with `1/m+1/n+1/p <= 1`.
pub fn is_two_dimensional(graph: &DefiningGraph) -> Check {
    if graph.edge_count() == 0 {
        return Check::fail(Witness::NoEdges);
    }
    Check::from_witness(
        triangles(graph)
            .find(|(_, [m, n, p])| reciprocal_sum_cmp(*m, *n, *p).is_gt())
            .map(|(t, _)| Witness::Triangle(t)),
    )
}

/// Every clique spans a finite parabolic.
pub fn is_fc_type(graph: &DefiningGraph) -> Check {
    Check::from_witness(
        graph
            .maximal_cliques()
            .into_iter()
            .find(|&c| !is_spherical(graph, c))
            .map(Witness::Clique),
    )
}

/// No induced 4-cycle.
pub fn has_no_empty_squares(graph: &DefiningGraph) -> Check {
    Check::from_witness(
        graph
            .induced_four_cycles()
            .first()
            .map(|&q| Witness::Square(q)),
    )
}

/// No triangle with `1/m+1/n+1/p = 1` and no 4-circuit (chords allowed)
/// whose four sides are all labelled 2. For two-dimensional graphs this is
/// equivalent to (M1) and (M2).
pub fn no_flat_triangles_or_squares(graph: &DefiningGraph) -> Check {
    if let Some((t, _)) =
        triangles(graph).find(|(_, [m, n, p])| reciprocal_sum_cmp(*m, *n, *p).is_eq())
    {
        return Check::fail(Witness::Triangle(t));
    }
    let square = graph
        .four_circuits()
        .into_iter()
        .find(|c| (0..4).all(|k| graph.label(c.cycle[k], c.cycle[(k + 1) % 4]) == Some(2)));
    Check::from_witness(square.map(|c| Witness::Square(c.cycle)))
}

/// Subsets that are not spherical but all of whose proper subsets are,
/// in lexicographic order. Every non-spherical subset contains one.
pub fn minimal_non_spherical(graph: &DefiningGraph, poset: &SphericalPoset) -> Vec<VertexSet> {
    let n = graph.vertex_count();
    let mut out = Vec::new();
    for &r in poset.elements() {
        let start = r.iter().last().map_or(0, |m| m + 1);
        for v in start..n {
            let t = r.with(v);
            if !poset.contains(t) && t.iter().all(|u| poset.contains(t.without(u))) {
                out.push(t);
            }
        }
    }
    out.sort();
    out
}

/// (M1): no standard parabolic has an irreducible affine factor of rank at
/// least 3.
///
/// An irreducible affine system has all proper parabolics finite, so it is
/// enough to test minimal non-spherical sets.
pub fn moussong_m1(graph: &DefiningGraph) -> Check {
    let poset = spherical_poset(graph);
    moussong_m1_with(graph, &minimal_non_spherical(graph, &poset))
}

fn moussong_m1_with(graph: &DefiningGraph, minimal: &[VertexSet]) -> Check {
    Check::from_witness(
        minimal
            .iter()
            .copied()
            .find(|&t| {
                t.len() >= 3
                    && irreducible_components(graph, t).len() == 1
                    && gram_matrix_of(graph, t).is_affine()
            })
            .map(Witness::Affine),
    )
}

/// Default vertex bound for the product search in (M2).
pub const DEFAULT_M2_VERTEX_CAP: usize = 20;

/// (M2): no standard parabolic is a direct product of two infinite
/// parabolics.
///
/// If `W_A x W_B` is such a product then so is `W_A' x W_B'` for minimal
/// non-spherical `A' ⊆ A`, `B' ⊆ B`, so the search runs over pairs of
/// minimal non-spherical sets joined by label-2 edges.
pub fn moussong_m2(graph: &DefiningGraph, vertex_cap: usize) -> Result<Check, ClassifyError> {
    if graph.vertex_count() > vertex_cap {
        return Err(ClassifyError::CapExceeded {
            vertices: graph.vertex_count(),
            cap: vertex_cap,
        });
    }
    let poset = spherical_poset(graph);
    Ok(moussong_m2_with(
        graph,
        &minimal_non_spherical(graph, &poset),
    ))
}

fn commuting_join(graph: &DefiningGraph, a: VertexSet, b: VertexSet) -> bool {
    a.iter()
        .all(|x| b.iter().all(|y| graph.label(x, y) == Some(2)))
}

fn moussong_m2_with(graph: &DefiningGraph, minimal: &[VertexSet]) -> Check {
    // Label-2 neighbourhoods prune candidates quickly.
    let commuting: Vec<VertexSet> = (0..graph.vertex_count())
        .map(|v| {
            graph
                .neighbors(v)
                .iter()
                .filter(|&u| graph.label(v, u) == Some(2))
                .collect()
        })
        .collect();
    for (i, &a) in minimal.iter().enumerate() {
        let partners = a
            .iter()
            .fold(VertexSet::full(graph.vertex_count()), |acc, x| {
                acc.intersection(commuting[x])
            });
        if partners.len() < 2 {
            continue;
        }
        for &b in &minimal[i + 1..] {
            if b.is_subset(partners) && a.is_disjoint(b) && commuting_join(graph, a, b) {
                return Check::fail(Witness::Product(a, b));
            }
        }
    }
    Check::pass()
}

/// Three-valued verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Citation {
    pub claim: String,
    pub reference: String,
}

pub mod references {
    pub const MOUSSONG: &str = "moussong-criterion";
    pub const DAVIS_EMBEDS: &str = "tits-section-embeds-davis-in-deligne";
    pub const DELIGNE_IFF_RELATIVE: &str = "deligne-hyperbolic-iff-weakly-relatively-hyperbolic";
    pub const TWO_DIMENSIONAL: &str = "two-dimensional-criterion";
    pub const FC_CAT_MINUS_ONE: &str = "fc-no-empty-squares-cat-minus-one";
    pub const FC_RELATIVE: &str = "fc-no-empty-squares-relatively-hyperbolic";
    pub const OPEN_CONJECTURE: &str = "conjecture-deligne-hyperbolic-iff-w-hyperbolic";
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub two_dimensional: Check,
    pub fc_type: Check,
    pub no_empty_squares: Check,
    pub m1: Check,
    pub m2: Check,
    pub no_flat_triangles_or_squares: Check,
    pub w_hyperbolic: Verdict,
    pub deligne_hyperbolic: Verdict,
    pub weakly_rel_hyperbolic: Verdict,
    pub citations: Vec<Citation>,
}

#[derive(Debug, Clone, Copy)]
pub struct ClassifyOptions {
    pub m2_vertex_cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            m2_vertex_cap: DEFAULT_M2_VERTEX_CAP,
        }
    }
}

fn cite(claim: &str, reference: &str) -> Citation {
    Citation {
        claim: claim.to_string(),
        reference: reference.to_string(),
    }
}

/// Runs every check and combines them into verdicts.
pub fn verdict(graph: &DefiningGraph) -> Result<ClassificationReport, ClassifyError> {
    verdict_with(graph, ClassifyOptions::default())
}

pub fn verdict_with(
    graph: &DefiningGraph,
    options: ClassifyOptions,
) -> Result<ClassificationReport, ClassifyError> {
    if graph.vertex_count() > options.m2_vertex_cap {
        return Err(ClassifyError::CapExceeded {
            vertices: graph.vertex_count(),
            cap: options.m2_vertex_cap,
        });
    }
    let poset = spherical_poset(graph);
    let minimal = minimal_non_spherical(graph, &poset);
    let two_dimensional = is_two_dimensional(graph);
    let fc_type = is_fc_type(graph);
    let no_empty_squares = has_no_empty_squares(graph);
    let m1 = moussong_m1_with(graph, &minimal);
    let m2 = moussong_m2_with(graph, &minimal);
    let flat_free = no_flat_triangles_or_squares(graph);

    let w_hyp = m1.holds && m2.holds;
    if two_dimensional.holds && flat_free.holds != w_hyp {
        return Err(ClassifyError::Inconsistent(format!(
            "two-dimensional graph: flat triangle/square test says {}, (M1)&(M2) says {}",
            flat_free.holds, w_hyp
        )));
    }

    if fc_type.holds && no_empty_squares.holds && !w_hyp {
        return Err(ClassifyError::Inconsistent(
            "FC type without empty squares, yet (M1)&(M2) fails".to_string(),
        ));
    }

    let mut citations = vec![cite(
        if w_hyp {
            "W is hyperbolic: (M1) and (M2) hold"
        } else {
            "W is not hyperbolic: (M1) or (M2) fails"
        },
        references::MOUSSONG,
    )];
    let (deligne, weak) = if !w_hyp {
        citations.push(cite(
            "the Davis complex embeds isometrically in the Deligne complex, so a flat in D_W is a flat in D",
            references::DAVIS_EMBEDS,
        ));
        citations.push(cite(
            "weak relative hyperbolicity is equivalent to hyperbolicity of the Deligne complex",
            references::DELIGNE_IFF_RELATIVE,
        ));
        (Verdict::No, Verdict::No)
    } else if two_dimensional.holds || (fc_type.holds && no_empty_squares.holds) {
        if fc_type.holds && no_empty_squares.holds {
            citations.push(cite(
                "FC type with no empty squares: the cubical metric d_epsilon is CAT(-1) for small epsilon",
                references::FC_CAT_MINUS_ONE,
            ));
            citations.push(cite(
                "FC type with no empty squares: hyperbolic relative to finite-type standard parabolics",
                references::FC_RELATIVE,
            ));
        }
        if two_dimensional.holds {
            citations.push(cite(
                "two-dimensional and no triangle with reciprocal sum 1 and no all-2 square: Deligne complex hyperbolic",
                references::TWO_DIMENSIONAL,
            ));
            citations.push(cite(
                "weak relative hyperbolicity is equivalent to hyperbolicity of the Deligne complex",
                references::DELIGNE_IFF_RELATIVE,
            ));
        }
        (Verdict::Yes, Verdict::Yes)
    } else {
        citations.push(cite(
            "not covered by the proven cases; conjecturally equivalent to hyperbolicity of W",
            references::OPEN_CONJECTURE,
        ));
        (Verdict::Unknown, Verdict::Unknown)
    };

    Ok(ClassificationReport {
        two_dimensional,
        fc_type,
        no_empty_squares,
        m1,
        m2,
        no_flat_triangles_or_squares: flat_free,
        w_hyperbolic: if w_hyp { Verdict::Yes } else { Verdict::No },
        deligne_hyperbolic: deligne,
        weakly_rel_hyperbolic: weak,
        citations,
    })
}

/// JSON form of [`ClassificationReport`] with vertex names resolved.
#[derive(Debug, Clone, Serialize)]
pub struct ReportJson {
    pub vertices: Vec<String>,
    pub two_dimensional: bool,
    pub fc_type: bool,
    pub no_empty_squares: bool,
    pub m1: bool,
    pub m2: bool,
    pub no_flat_triangles_or_squares: bool,
    pub w_hyperbolic: Verdict,
    pub deligne_hyperbolic: Verdict,
    pub weakly_rel_hyperbolic: Verdict,
    pub citations: Vec<Citation>,
    pub witnesses: std::collections::BTreeMap<String, WitnessJson>,
}

impl ClassificationReport {
    pub fn checks(&self) -> [(&'static str, &Check); 6] {
        [
            ("two_dimensional", &self.two_dimensional),
            ("fc_type", &self.fc_type),
            ("no_empty_squares", &self.no_empty_squares),
            ("m1", &self.m1),
            ("m2", &self.m2),
            (
                "no_flat_triangles_or_squares",
                &self.no_flat_triangles_or_squares,
            ),
        ]
    }

    pub fn to_json(&self, graph: &DefiningGraph) -> ReportJson {
        ReportJson {
            vertices: graph.names().to_vec(),
            two_dimensional: self.two_dimensional.holds,
            fc_type: self.fc_type.holds,
            no_empty_squares: self.no_empty_squares.holds,
            m1: self.m1.holds,
            m2: self.m2.holds,
            no_flat_triangles_or_squares: self.no_flat_triangles_or_squares.holds,
            w_hyperbolic: self.w_hyperbolic,
            deligne_hyperbolic: self.deligne_hyperbolic,
            weakly_rel_hyperbolic: self.weakly_rel_hyperbolic,
            citations: self.citations.clone(),
            witnesses: self
                .checks()
                .into_iter()
                .filter_map(|(name, c)| {
                    c.witness
                        .as_ref()
                        .map(|w| (name.to_string(), w.to_json(graph)))
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defgraph::parse_defining_graph;

    fn g(text: &str) -> DefiningGraph {
        parse_defining_graph(text).unwrap()
    }

    fn triangle(m: u32, n: u32, p: u32) -> DefiningGraph {
        DefiningGraph::new(
            ["a", "b", "c"],
            [("a", "b", m), ("b", "c", n), ("a", "c", p)],
        )
        .unwrap()
    }

    fn cycle(n: usize, label: u32) -> DefiningGraph {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        DefiningGraph::from_label_fn(&refs, |i, j| {
            (j == i + 1 || (i == 0 && j == n - 1)).then_some(label)
        })
        .unwrap()
    }

    #[test]
    fn two_dimensional_examples() {
        assert!(is_two_dimensional(&triangle(3, 3, 3)).holds);
        let c = is_two_dimensional(&triangle(2, 3, 5));
        assert_eq!(c.witness, Some(Witness::Triangle([0, 1, 2])));
        let c = is_two_dimensional(&g("vertex a\nvertex b"));
        assert_eq!(c.witness, Some(Witness::NoEdges));
    }

    #[test]
    fn fc_examples() {
        assert!(is_fc_type(&cycle(5, 7)).holds);
        let c = is_fc_type(&triangle(5, 5, 5));
        assert_eq!(c.witness, Some(Witness::Clique(VertexSet::full(3))));
        assert!(is_fc_type(&triangle(2, 3, 3)).holds);
    }

    #[test]
    fn empty_square_examples() {
        let c = has_no_empty_squares(&cycle(4, 2));
        assert_eq!(c.witness, Some(Witness::Square([0, 1, 2, 3])));
        let chorded = g("edge a b 2\nedge b c 2\nedge c d 2\nedge d a 2\nedge a c 2");
        assert!(has_no_empty_squares(&chorded).holds);
        assert!(has_no_empty_squares(&cycle(5, 2)).holds);
    }

    #[test]
    fn m1_examples() {
        let c = moussong_m1(&triangle(2, 3, 6));
        assert_eq!(c.witness, Some(Witness::Affine(VertexSet::full(3))));
        assert!(moussong_m1(&triangle(2, 3, 5)).holds);
        assert!(moussong_m1(&triangle(7, 8, 9)).holds);
        assert!(moussong_m1(&cycle(6, 7)).holds);
        // The infinite dihedral group alone does not violate (M1).
        assert!(moussong_m1(&g("vertex a\nvertex b")).holds);
        // Affine A3~: 4-cycle of 3's with commuting diagonals.
        let a3 = g("edge a b 3\nedge b c 3\nedge c d 3\nedge d a 3\nedge a c 2\nedge b d 2");
        assert_eq!(
            moussong_m1(&a3).witness,
            Some(Witness::Affine(VertexSet::full(4)))
        );
    }

    #[test]
    fn m2_examples() {
        let c = moussong_m2(&cycle(4, 2), 20).unwrap();
        assert_eq!(
            c.witness,
            Some(Witness::Product(
                VertexSet::from_iter([0, 2]),
                VertexSet::from_iter([1, 3])
            ))
        );
        assert!(moussong_m2(&cycle(5, 2), 20).unwrap().holds);
        assert!(moussong_m2(&cycle(4, 3), 20).unwrap().holds);
        assert!(moussong_m2(&cycle(5, 2), 4).is_err());
    }

    #[test]
    fn flat_triangle_or_square_examples() {
        let c = no_flat_triangles_or_squares(&triangle(3, 3, 3));
        assert_eq!(c.witness, Some(Witness::Triangle([0, 1, 2])));
        let c = no_flat_triangles_or_squares(&cycle(4, 2));
        assert_eq!(c.witness, Some(Witness::Square([0, 1, 2, 3])));
        assert!(no_flat_triangles_or_squares(&triangle(7, 7, 7)).holds);
    }

    #[test]
    fn verdict_examples() {
        let r = verdict(&triangle(7, 7, 7)).unwrap();
        assert_eq!(r.weakly_rel_hyperbolic, Verdict::Yes);
        assert_eq!(r.citations[1].reference, references::TWO_DIMENSIONAL);

        let r = verdict(&cycle(4, 2)).unwrap();
        assert_eq!(
            (
                r.w_hyperbolic,
                r.deligne_hyperbolic,
                r.weakly_rel_hyperbolic
            ),
            (Verdict::No, Verdict::No, Verdict::No)
        );
        assert!(r.m2.witness.is_some());

        let r = verdict(&cycle(5, 2)).unwrap();
        assert_eq!(r.weakly_rel_hyperbolic, Verdict::Yes);
        assert!(
            !r.two_dimensional.holds
                || r.citations
                    .iter()
                    .any(|c| c.reference == references::TWO_DIMENSIONAL)
        );

        // Right-angled pentagon with a pendant triangle of commuting
        // generators is not two-dimensional, but is FC with no empty squares.
        let r = verdict(&g(
            "edge a b 2\nedge b c 2\nedge c d 2\nedge d e 2\nedge e a 2\nedge a x 2\nedge b x 2",
        ))
        .unwrap();
        assert!(!r.two_dimensional.holds);
        assert_eq!(r.weakly_rel_hyperbolic, Verdict::Yes);
        assert!(r
            .citations
            .iter()
            .any(|c| c.reference == references::FC_CAT_MINUS_ONE));

        // Non-FC triangle (5,5,5) plus a triangle (2,3,5): not 2-dimensional,
        // not FC, W hyperbolic, verdict open.
        let r = verdict(&g(
            "edge a b 5\nedge b c 5\nedge a c 5\nedge c d 2\nedge d e 3\nedge c e 5",
        ))
        .unwrap();
        assert_eq!(r.w_hyperbolic, Verdict::Yes);
        assert_eq!(r.deligne_hyperbolic, Verdict::Unknown);
        assert!(r
            .citations
            .iter()
            .any(|c| c.reference == references::OPEN_CONJECTURE));
    }

    #[test]
    fn json_report_has_witnesses_for_failures() {
        let graph = cycle(4, 2);
        let json = verdict(&graph).unwrap().to_json(&graph);
        assert!(!json.m2);
        assert_eq!(
            json.witnesses["m2"].vertices,
            vec![vec!["v0", "v2"], vec!["v1", "v3"]]
        );
        assert_eq!(json.witnesses["no_empty_squares"].kind, "square");
    }
}
