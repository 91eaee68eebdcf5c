//! Checklist certificate for the CAT(-1) cubical metric on the Deligne
//! complex of an FC-type Artin group without empty squares.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use crate::classify::{has_no_empty_squares, is_fc_type, references, Check, WitnessJson};
use crate::complexes::{
    flag_violation, induced_four_cycles, nerve, non_full_link, satisfies_ntns, simplex_link,
    spherical_poset, SimplicialComplex,
};
use crate::defgraph::{DefiningGraph, VertexSet};
use crate::orbits::{deligne_ball, RightAngledArtin, WordOracle, DEFAULT_BALL_CAP};

use super::{check_epsilon, dihedral_angle, upward_link_margin, HypError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ItemStatus {
    Pass,
    Fail,
    /// A measured quantity, not a pass/fail condition.
    Reported,
    /// The check needs data that cannot be built for this graph.
    Unavailable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificateItem {
    pub id: &'static str,
    pub description: &'static str,
    pub status: ItemStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub epsilon: f64,
    pub theta: f64,
    /// `pi/2 - theta(eps)`.
    pub margin: f64,
    pub granted: bool,
    pub items: Vec<CertificateItem>,
    pub citation: &'static str,
}

impl Certificate {
    pub fn item(&self, id: &str) -> Option<&CertificateItem> {
        self.items.iter().find(|i| i.id == id)
    }
}

fn from_check(
    id: &'static str,
    description: &'static str,
    check: Check,
    graph: &DefiningGraph,
) -> CertificateItem {
    CertificateItem {
        id,
        description,
        status: if check.holds {
            ItemStatus::Pass
        } else {
            ItemStatus::Fail
        },
        witness: check.witness.map(|w| w.to_json(graph)),
        value: None,
    }
}

fn names(complex: &SimplicialComplex, simplex: &[usize]) -> Vec<String> {
    simplex
        .iter()
        .map(|&v| complex.labels()[v].clone())
        .collect()
}

/// The first simplex (the empty simplex standing for the complex itself)
/// whose link has a non-flag clique or an induced square.
fn ntns_failure(l: &SimplicialComplex) -> Option<WitnessJson> {
    let witness = |sigma: &[usize], link: &SimplicialComplex| {
        let (kind, bad) = match flag_violation(link) {
            Some(clique) => ("non-flag-clique", clique),
            None => ("induced-square", induced_four_cycles(link)[0].to_vec()),
        };
        WitnessJson {
            kind: kind.to_string(),
            vertices: vec![names(l, sigma), names(l, &bad)],
        }
    };
    if !satisfies_ntns(l) {
        return Some(witness(&[], l));
    }
    l.simplices().find_map(|sigma| {
        let link = simplex_link(l, sigma).expect("simplex of the complex");
        (!satisfies_ntns(&link)).then(|| witness(sigma, &link))
    })
}

/// Checks that the downward links of the vertices `G_T` in a Deligne ball of
/// a right-angled graph are flag, returning the first offending `T`.
fn downward_link_failure(graph: &DefiningGraph) -> Result<Option<WitnessJson>, HypError> {
    let oracle = RightAngledArtin::new(graph)?;
    let ball = deligne_ball(graph, 2, DEFAULT_BALL_CAP)?;
    for &t in spherical_poset(graph).elements() {
        if t.len() < 2 {
            continue;
        }
        // Link vertices are the cosets g G_{T - s} inside G_T; simplices come
        // from cubes [g G_{T'}, G_T].
        let mut index: BTreeMap<usize, usize> = BTreeMap::new();
        let mut facets = Vec::new();
        for cube in ball.cubes.iter().filter(|c| c.upper == t && c.lower != t) {
            let g = &ball.vertices[cube.base].0;
            if !oracle.coset_normal_form(g, t)?.is_empty() {
                continue;
            }
            let mut facet = Vec::new();
            for s in t.difference(cube.lower).iter() {
                let lower = t.without(s);
                let rep = oracle.coset_normal_form(g, lower)?;
                let v = ball.find(&rep, lower).expect("face of a cube in the ball");
                let next = index.len();
                facet.push(*index.entry(v).or_insert(next));
            }
            facets.push(facet);
        }
        let mut labels = vec![String::new(); index.len()];
        for (&v, &i) in &index {
            labels[i] = ball.label_text(graph, v);
        }
        let link = SimplicialComplex::from_facets(labels, facets);
        if let Some(clique) = flag_violation(&link) {
            return Ok(Some(WitnessJson {
                kind: "non-flag-downward-link".to_string(),
                vertices: vec![graph.names_of(t), names(&link, &clique)],
            }));
        }
    }
    Ok(None)
}

/// Runs the combinatorial checklist for the cubical metric `d_eps` on the
/// Deligne complex and reports the deformation margin.
pub fn cat_certificate(graph: &DefiningGraph, eps: f64) -> Result<Certificate, HypError> {
    check_epsilon(eps)?;
    let theta = dihedral_angle(eps);
    let l = nerve(graph);
    let mut items = vec![
        from_check(
            "fc",
            "every clique of the defining graph generates a finite Coxeter group",
            is_fc_type(graph),
            graph,
        ),
        from_check(
            "no_empty_squares",
            "every induced square has a diagonal",
            has_no_empty_squares(graph),
            graph,
        ),
    ];
    let ntns = ntns_failure(&l);
    items.push(CertificateItem {
        id: "nerve_ntns",
        description: "the nerve and all its simplex links are flag with no induced squares",
        status: if ntns.is_none() {
            ItemStatus::Pass
        } else {
            ItemStatus::Fail
        },
        witness: ntns,
        value: None,
    });
    let non_full = non_full_link(&l);
    items.push(CertificateItem {
        id: "links_full",
        description: "every simplex link of the nerve is a full subcomplex",
        status: if non_full.is_none() {
            ItemStatus::Pass
        } else {
            ItemStatus::Fail
        },
        witness: non_full.map(|s| WitnessJson {
            kind: "non-full-link".to_string(),
            vertices: vec![names(&l, &s)],
        }),
        value: None,
    });

    let max_rank = spherical_poset(graph)
        .elements()
        .iter()
        .map(|s: &VertexSet| s.len())
        .max()
        .unwrap_or(0);
    let measured = upward_link_margin(max_rank.min(8), eps)?;
    items.push(CertificateItem {
        id: "metric_margin",
        description: "largest deviation of an upward-link edge length from pi/2",
        status: ItemStatus::Reported,
        witness: None,
        value: Some(measured.unwrap_or(0.0)),
    });

    let downward = if graph.is_right_angled() {
        let failure = downward_link_failure(graph)?;
        CertificateItem {
            id: "downward_links_flag",
            description: "downward links in a radius-2 Deligne ball are flag",
            status: if failure.is_none() {
                ItemStatus::Pass
            } else {
                ItemStatus::Fail
            },
            witness: failure,
            value: None,
        }
    } else {
        CertificateItem {
            id: "downward_links_flag",
            description: "downward links in a Deligne ball are flag (needs a right-angled graph)",
            status: ItemStatus::Unavailable,
            witness: None,
            value: None,
        }
    };
    items.push(downward);

    let granted = items[..4].iter().all(|i| i.status == ItemStatus::Pass);
    Ok(Certificate {
        epsilon: eps,
        theta,
        margin: FRAC_PI_2 - theta,
        granted,
        items,
        citation: references::FC_CAT_MINUS_ONE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defgraph::parse_defining_graph;

    fn cycle(n: usize, label: u32) -> DefiningGraph {
        let text: String = (0..n)
            .map(|i| format!("edge v{i} v{} {label}\n", (i + 1) % n))
            .collect();
        parse_defining_graph(&text).unwrap()
    }

    #[test]
    fn pentagon_is_granted() {
        let c = cat_certificate(&cycle(5, 2), 0.1).unwrap();
        assert!(c.granted);
        assert_eq!(c.item("nerve_ntns").unwrap().status, ItemStatus::Pass);
        assert_eq!(c.item("links_full").unwrap().status, ItemStatus::Pass);
        assert_eq!(
            c.item("downward_links_flag").unwrap().status,
            ItemStatus::Pass
        );
        let expected = FRAC_PI_2 - (0.1f64.tanh().powi(2)).acos();
        assert!((c.margin - expected).abs() < 1e-12);
        assert!((c.item("metric_margin").unwrap().value.unwrap() - expected).abs() < 1e-9);
    }

    #[test]
    fn square_is_refused() {
        let c = cat_certificate(&cycle(4, 2), 0.1).unwrap();
        assert!(!c.granted);
        let item = c.item("no_empty_squares").unwrap();
        assert_eq!(item.status, ItemStatus::Fail);
        assert_eq!(item.witness.as_ref().unwrap().kind, "square");
    }

    #[test]
    fn large_triangle_is_refused_at_fc() {
        let c = cat_certificate(&cycle(3, 5), 0.1).unwrap();
        assert!(!c.granted);
        let item = c.item("fc").unwrap();
        assert_eq!(item.status, ItemStatus::Fail);
        assert_eq!(item.witness.as_ref().unwrap().kind, "clique");
        assert_eq!(
            c.item("downward_links_flag").unwrap().status,
            ItemStatus::Unavailable
        );
        assert!(cat_certificate(&cycle(3, 5), -1.0).is_err());
    }
}
