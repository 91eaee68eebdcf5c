//! Breadth-first construction of balls in Cayley graphs, coned-off Cayley
//! graphs and cubical coset complexes.

use std::collections::HashSet;

use crate::complexes::spherical_poset;
use crate::coxeter::Word;
use crate::defgraph::{DefiningGraph, VertexSet};

use super::graph::{check_cap, ComplexKind, Cube, CubicalBall, NodeKind, NodeLabel, OrbitGraph};
use super::oracle::{CoxeterOracle, RightAngledArtin, WordOracle};
use super::OrbitError;

/// Default bound on the number of vertices of a constructed ball.
pub const DEFAULT_BALL_CAP: usize = 1_000_000;

/// Canonical words of all elements of word length at most `radius`, in
/// breadth-first order.
pub fn group_ball(
    oracle: &dyn WordOracle,
    radius: usize,
    cap: usize,
) -> Result<Vec<Word>, OrbitError> {
    let gens = oracle.generators();
    let identity = oracle.normal_form(&Word::empty())?;
    let mut seen: HashSet<Word> = HashSet::from([identity.clone()]);
    let mut out = vec![identity];
    let mut layer_start = 0;
    for _ in 0..radius {
        let layer_end = out.len();
        for i in layer_start..layer_end {
            for &x in &gens {
                let next = oracle.normal_form(&out[i].push(x))?;
                if seen.insert(next.clone()) {
                    out.push(next);
                    check_cap(out.len(), cap, "ball vertices")?;
                }
            }
        }
        layer_start = layer_end;
    }
    Ok(out)
}

pub fn cayley_ball(
    oracle: &dyn WordOracle,
    radius: usize,
    cap: usize,
) -> Result<OrbitGraph, OrbitError> {
    coned_off_cayley_ball(oracle, &[], radius, cap)
}

/// Ball of radius `radius` around the identity in the Cayley graph, with a
/// cone vertex for every coset `gH` (`H` in `family`, `g` in the ball)
/// joined by half edges to the elements of `gH` inside the ball.
pub fn coned_off_cayley_ball(
    oracle: &dyn WordOracle,
    family: &[VertexSet],
    radius: usize,
    cap: usize,
) -> Result<OrbitGraph, OrbitError> {
    let n = oracle.defining_graph().vertex_count();
    if let Some(h) = family.iter().find(|h| !h.is_subset(VertexSet::full(n))) {
        return Err(OrbitError::InvalidArgument(format!(
            "subgroup generators {:?} are not vertices of the graph",
            h.to_vec()
        )));
    }
    let words = group_ball(oracle, radius, cap)?;
    let gens = oracle.generators();
    let mut ball = OrbitGraph::new(radius, gens.clone(), family.to_vec());
    for w in &words {
        ball.intern(NodeLabel {
            word: w.clone(),
            kind: NodeKind::Element,
        });
    }
    for (i, w) in words.iter().enumerate() {
        for &x in &gens {
            if let Some(j) = ball.element(&oracle.normal_form(&w.push(x))?) {
                ball.graph.add_edge(i, j, 2);
            }
        }
        for (subgroup, &h) in family.iter().enumerate() {
            let (c, _) = ball.intern(NodeLabel {
                word: oracle.coset_normal_form(w, h)?,
                kind: NodeKind::Cone { subgroup },
            });
            check_cap(ball.node_count(), cap, "ball vertices")?;
            ball.graph.add_edge(i, c, 1);
        }
    }
    Ok(ball)
}

/// Cosets `g H_T` with `T` spherical and `|g| <= radius`, the cubes
/// `[g H_T, g H_R]` between them, and the 1-skeleton.
pub fn cubical_ball(
    oracle: &dyn WordOracle,
    kind: ComplexKind,
    radius: usize,
    cap: usize,
) -> Result<CubicalBall, OrbitError> {
    let graph = oracle.defining_graph();
    let spherical = spherical_poset(graph).elements().to_vec();
    let words = group_ball(oracle, radius, cap)?;
    let mut ball = CubicalBall::new(kind, radius);
    for w in &words {
        for &t in &spherical {
            ball.intern(oracle.coset_normal_form(w, t)?, t);
        }
        check_cap(ball.vertex_count(), cap, "ball vertices")?;
    }
    for i in 0..ball.vertex_count() {
        let (rep, t) = ball.vertices[i].clone();
        for &r in spherical.iter().filter(|r| t.is_subset(**r)) {
            ball.cubes.push(Cube {
                base: i,
                lower: t,
                upper: r,
            });
            if r.len() == t.len() + 1 {
                let up = oracle.coset_normal_form(&rep, r)?;
                let j = ball.find(&up, r).ok_or_else(|| {
                    OrbitError::Inconsistent(format!(
                        "coset {} of {:?} missing from the ball",
                        up.display(graph),
                        r.to_vec()
                    ))
                })?;
                ball.skeleton.add_edge(i, j, 2);
            }
        }
    }
    Ok(ball)
}

/// Ball in the cubical Deligne complex of a right-angled Artin group.
pub fn deligne_ball(
    graph: &DefiningGraph,
    radius: usize,
    cap: usize,
) -> Result<CubicalBall, OrbitError> {
    let oracle = RightAngledArtin::new(graph)?;
    cubical_ball(&oracle, ComplexKind::Deligne, radius, cap)
}

/// Ball in the cubical Davis complex of the Coxeter group.
pub fn davis_ball(
    graph: &DefiningGraph,
    radius: usize,
    cap: usize,
) -> Result<CubicalBall, OrbitError> {
    cubical_ball(&CoxeterOracle::new(graph), ComplexKind::Davis, radius, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defgraph::parse_defining_graph;

    #[test]
    fn free_group_ball_is_a_tree() {
        let g = parse_defining_graph("vertex a\nvertex b").unwrap();
        let o = RightAngledArtin::new(&g).unwrap();
        let ball = cayley_ball(&o, 2, DEFAULT_BALL_CAP).unwrap();
        assert_eq!(ball.node_count(), 17);
        assert_eq!(ball.graph.edge_count(), 16);
        assert_eq!(
            cayley_ball(&o, 0, DEFAULT_BALL_CAP).unwrap().node_count(),
            1
        );
        assert!(matches!(
            cayley_ball(&o, 5, 100),
            Err(OrbitError::CapExceeded { .. })
        ));
    }

    #[test]
    fn dihedral_group_of_order_six() {
        let g = parse_defining_graph("edge s t 3").unwrap();
        let ball = cayley_ball(&CoxeterOracle::new(&g), 3, DEFAULT_BALL_CAP).unwrap();
        assert_eq!(ball.node_count(), 6);
        assert_eq!(ball.graph.edge_count(), 6);
    }

    #[test]
    fn davis_ball_of_finite_group_is_complete() {
        let g = parse_defining_graph("edge s t 3").unwrap();
        let ball = davis_ball(&g, 3, DEFAULT_BALL_CAP).unwrap();
        let count = |t: usize| ball.vertices.iter().filter(|v| v.1.len() == t).count();
        assert_eq!((count(0), count(1), count(2)), (6, 6, 1));
        assert_eq!(ball.max_cube_dimension(), 2);
        assert_eq!(
            davis_ball(&g, 0, DEFAULT_BALL_CAP).unwrap().vertex_count(),
            4
        );
    }

    #[test]
    fn deligne_ball_cube_dimensions() {
        let square =
            parse_defining_graph("edge a b 2\nedge b c 2\nedge c d 2\nedge d a 2").unwrap();
        let ball = deligne_ball(&square, 2, DEFAULT_BALL_CAP).unwrap();
        assert_eq!(ball.max_cube_dimension(), 2);
        let edge = parse_defining_graph("edge a b 2").unwrap();
        let ball = deligne_ball(&edge, 1, DEFAULT_BALL_CAP).unwrap();
        assert!(ball.cubes.iter().any(|c| c.dimension() == 2));
        assert!(deligne_ball(&parse_defining_graph("edge a b 3").unwrap(), 1, 10).is_err());
    }
}
