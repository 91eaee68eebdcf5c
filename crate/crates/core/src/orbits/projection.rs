//! The projection from Deligne cosets to Davis cosets and the section
//! induced by lifting reduced Coxeter words to positive Artin words.

use serde::Serialize;

use crate::coxeter::{project_to_coxeter, tits_section, Word};
use crate::defgraph::{DefiningGraph, VertexSet};

use super::graph::{ComplexKind, CubicalBall, UNREACHABLE};
use super::oracle::{CoxeterOracle, RightAngledArtin, WordOracle};
use super::OrbitError;

/// Comparison of `d_Davis(x, y)` with `d_Deligne(s(x), s(y))` on 1-skeleta.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceComparison {
    pub pairs: u64,
    pub equal: u64,
    pub deligne_shorter: u64,
    pub deligne_longer: u64,
    pub max_gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProjectionReport {
    pub davis_vertices: usize,
    /// `p(s(x)) = x` for every Davis vertex `x`.
    pub section_right_inverse: bool,
    pub section_injective: bool,
    /// Each Davis cube is sent onto the vertex set of a Deligne cube.
    pub section_cubes_to_cubes: Option<bool>,
    /// Each Deligne cube is sent onto the vertex set of a Davis cube.
    pub projection_cubes_to_cubes: Option<bool>,
    pub distances: Option<DistanceComparison>,
    /// Positive Artin word and subset for `s(x)`, per Davis vertex.
    #[serde(skip)]
    pub section: Vec<(Word, VertexSet)>,
    /// Index of `s(x)` in the Deligne ball, per Davis vertex.
    #[serde(skip)]
    pub section_index: Vec<Option<usize>>,
    /// Index of `p(y)` in the Davis ball, per Deligne vertex.
    #[serde(skip)]
    pub projection_index: Vec<Option<usize>>,
}

/// Subsets `T'` with `lower ⊆ T' ⊆ upper`.
fn interval(lower: VertexSet, upper: VertexSet) -> impl Iterator<Item = VertexSet> {
    upper
        .difference(lower)
        .subsets()
        .map(move |s| s.union(lower))
}

/// Maps `p: g G_T -> rho(g) W_T` and `s: w W_T -> lift(w) G_T` between a
/// Davis ball and, when given, a Deligne ball of a right-angled graph.
pub fn projection_and_section(
    graph: &DefiningGraph,
    davis: &CubicalBall,
    deligne: Option<&CubicalBall>,
) -> Result<ProjectionReport, OrbitError> {
    if davis.kind != ComplexKind::Davis {
        return Err(OrbitError::IncompatibleBalls(
            "first ball is not a Davis ball".into(),
        ));
    }
    let coxeter = CoxeterOracle::new(graph);
    let artin = match deligne {
        Some(ball) => {
            if ball.kind != ComplexKind::Deligne {
                return Err(OrbitError::IncompatibleBalls(
                    "second ball is not a Deligne ball".into(),
                ));
            }
            if ball.radius < davis.radius {
                return Err(OrbitError::IncompatibleBalls(format!(
                    "Deligne radius {} is below Davis radius {}",
                    ball.radius, davis.radius
                )));
            }
            Some(RightAngledArtin::new(graph)?)
        }
        None => None,
    };

    let mut section = Vec::with_capacity(davis.vertex_count());
    let mut right_inverse = true;
    for (w, t) in &davis.vertices {
        let lift = tits_section(graph, w)?;
        let back = coxeter.coset_normal_form(&project_to_coxeter(&lift), *t)?;
        right_inverse &= back == *w;
        section.push((lift, *t));
    }

    let mut report = ProjectionReport {
        davis_vertices: davis.vertex_count(),
        section_right_inverse: right_inverse,
        section_injective: {
            let mut seen = std::collections::HashSet::new();
            section.iter().all(|x| seen.insert(x.clone()))
        },
        section_cubes_to_cubes: None,
        projection_cubes_to_cubes: None,
        distances: None,
        section,
        section_index: Vec::new(),
        projection_index: Vec::new(),
    };
    let (Some(deligne), Some(artin)) = (deligne, artin) else {
        return Ok(report);
    };

    report.section_index = report
        .section
        .iter()
        .map(|(lift, t)| Ok(deligne.find(&artin.coset_normal_form(lift, *t)?, *t)))
        .collect::<Result<_, OrbitError>>()?;
    if report.section_index.iter().any(Option::is_none) {
        return Err(OrbitError::IncompatibleBalls(
            "section leaves the Deligne ball".into(),
        ));
    }
    report.projection_index = deligne
        .vertices
        .iter()
        .map(|(g, t)| {
            let image = coxeter.coset_normal_form(&project_to_coxeter(g), *t)?;
            Ok(davis.find(&image, *t))
        })
        .collect::<Result<_, OrbitError>>()?;

    let mut section_ok = true;
    for cube in &davis.cubes {
        let lift = &report.section[cube.base].0;
        for t in interval(cube.lower, cube.upper) {
            let vertex = davis.find(
                &coxeter.coset_normal_form(&davis.vertices[cube.base].0, t)?,
                t,
            );
            let image = vertex.and_then(|v| report.section_index[v]);
            let expected = deligne.find(&artin.coset_normal_form(lift, t)?, t);
            section_ok &= image.is_some() && image == expected;
        }
    }
    report.section_cubes_to_cubes = Some(section_ok);

    let mut projection_ok = true;
    for cube in &deligne.cubes {
        let g = &deligne.vertices[cube.base].0;
        let rho = project_to_coxeter(g);
        for t in interval(cube.lower, cube.upper) {
            let vertex = deligne.find(&artin.coset_normal_form(g, t)?, t);
            let image = vertex.and_then(|v| report.projection_index[v]);
            let expected = davis.find(&coxeter.coset_normal_form(&rho, t)?, t);
            projection_ok &= image.is_some() && image == expected;
        }
    }
    report.projection_cubes_to_cubes = Some(projection_ok);

    let mut cmp = DistanceComparison {
        pairs: 0,
        equal: 0,
        deligne_shorter: 0,
        deligne_longer: 0,
        max_gap: 0.0,
    };
    for x in 0..davis.vertex_count() {
        let dd = davis.skeleton.distances_from(x);
        let sx = report.section_index[x].expect("checked above");
        let dl = deligne.skeleton.distances_from(sx);
        for (y, &dxy) in dd.iter().enumerate().skip(x + 1) {
            let sy = report.section_index[y].expect("checked above");
            if dxy == UNREACHABLE || dl[sy] == UNREACHABLE {
                return Err(OrbitError::Disconnected);
            }
            let (a, b) = (dxy as f64 / 2.0, dl[sy] as f64 / 2.0);
            cmp.pairs += 1;
            match b.partial_cmp(&a).expect("finite distances") {
                std::cmp::Ordering::Equal => cmp.equal += 1,
                std::cmp::Ordering::Less => cmp.deligne_shorter += 1,
                std::cmp::Ordering::Greater => cmp.deligne_longer += 1,
            }
            cmp.max_gap = cmp.max_gap.max((a - b).abs());
        }
    }
    report.distances = Some(cmp);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defgraph::parse_defining_graph;
    use crate::orbits::{davis_ball, deligne_ball, DEFAULT_BALL_CAP};

    #[test]
    fn section_inverts_projection_for_dihedral_group() {
        let g = parse_defining_graph("edge s t 3").unwrap();
        let davis = davis_ball(&g, 3, DEFAULT_BALL_CAP).unwrap();
        let report = projection_and_section(&g, &davis, None).unwrap();
        assert!(report.section_right_inverse && report.section_injective);
        assert_eq!(report.section[0], (Word::empty(), VertexSet::EMPTY));
    }

    #[test]
    fn right_angled_pentagon() {
        let g = parse_defining_graph("edge a b 2\nedge b c 2\nedge c d 2\nedge d e 2\nedge e a 2")
            .unwrap();
        let davis = davis_ball(&g, 2, DEFAULT_BALL_CAP).unwrap();
        let deligne = deligne_ball(&g, 2, DEFAULT_BALL_CAP).unwrap();
        let report = projection_and_section(&g, &davis, Some(&deligne)).unwrap();
        assert!(report.section_right_inverse);
        assert_eq!(report.section_cubes_to_cubes, Some(true));
        assert_eq!(report.projection_cubes_to_cubes, Some(true));
        let d = report.distances.unwrap();
        assert_eq!(d.deligne_longer, 0);
        assert!(projection_and_section(&g, &deligne, None).is_err());
    }
}
