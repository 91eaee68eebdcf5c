use artinhyp::coxeter::{Letter, Word};
use artinhyp::orbits::{
    coned_off_cayley_ball, davis_ball, deligne_ball, delta_four_point, projection_and_section,
    DeltaOptions, NodeKind, RightAngledArtin, WordOracle, DEFAULT_BALL_CAP,
};
use artinhyp::{parse_defining_graph, DefiningGraph, VertexSet};
use proptest::prelude::*;

const NAMES: [&str; 5] = ["a", "b", "c", "d", "e"];

fn pentagon() -> DefiningGraph {
    parse_defining_graph("edge a b 2\nedge b c 2\nedge c d 2\nedge d e 2\nedge e a 2").unwrap()
}

fn arb_raag() -> impl Strategy<Value = DefiningGraph> {
    (1usize..=5)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, edges)| {
            // Pairs are visited in the same order the labels were drawn.
            let mut it = edges.into_iter();
            DefiningGraph::from_label_fn(&NAMES[..n], |_, _| it.next().unwrap().then_some(2))
                .unwrap()
        })
}

fn arb_word(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec((0..n, any::<bool>()), 0..=max_len).prop_map(|letters| {
        Word(
            letters
                .into_iter()
                .map(|(generator, inverse)| Letter { generator, inverse })
                .collect(),
        )
    })
}

fn arb_case() -> impl Strategy<Value = (DefiningGraph, Word, u64, Word)> {
    arb_raag().prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), arb_word(n, 16), 0u64..(1 << n), arb_word(n, 8))
    })
}

proptest! {
    #[test]
    fn normal_form_is_idempotent_and_geodesic((g, w, _, _) in arb_case()) {
        let oracle = RightAngledArtin::new(&g).unwrap();
        let nf = oracle.normal_form(&w).unwrap();
        prop_assert_eq!(oracle.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(nf.len() <= w.len());
        prop_assert!(oracle.normal_form(&w.concat(&w.inverse())).unwrap().is_empty());
    }

    #[test]
    fn coset_normal_form_is_constant_on_cosets((g, w, bits, h) in arb_case()) {
        let oracle = RightAngledArtin::new(&g).unwrap();
        let t = VertexSet::from_bits(bits);
        let h = Word(h.0.into_iter().filter(|l| t.contains(l.generator)).collect());
        let rep = oracle.coset_normal_form(&w, t).unwrap();
        prop_assert_eq!(oracle.coset_normal_form(&w.concat(&h), t).unwrap(), rep.clone());
        prop_assert_eq!(oracle.coset_normal_form(&rep, t).unwrap(), rep.clone());
        prop_assert!(rep.letters().last().is_none_or(|l| !t.contains(l.generator)));
    }
}

#[test]
fn coned_off_ball_cones_every_element_once_per_subgroup() {
    let g = pentagon();
    let oracle = RightAngledArtin::new(&g).unwrap();
    let family: Vec<VertexSet> = artinhyp::complexes::spherical_poset(&g).maximal();
    let ball = coned_off_cayley_ball(&oracle, &family, 3, DEFAULT_BALL_CAP).unwrap();
    for v in 0..ball.node_count() {
        let half: Vec<usize> = ball
            .graph
            .neighbors(v)
            .filter(|&(_, w)| w == 1)
            .map(|(u, _)| u)
            .collect();
        match ball.labels[v].kind {
            NodeKind::Element => assert_eq!(half.len(), family.len()),
            NodeKind::Cone { subgroup } => {
                assert!(!half.is_empty());
                let t = family[subgroup];
                let rep = &ball.labels[v].word;
                let dist = ball.graph.distances_from(half[0]);
                for &u in &half {
                    let word = &ball.labels[u].word;
                    assert_eq!(&oracle.coset_normal_form(word, t).unwrap(), rep);
                    // Two elements of one coset are one unit apart through the cone.
                    assert!(dist[u] <= 2);
                }
            }
        }
    }
}

#[test]
fn deligne_ball_labels_are_distinct_cosets() {
    let g = pentagon();
    let oracle = RightAngledArtin::new(&g).unwrap();
    let ball = deligne_ball(&g, 3, DEFAULT_BALL_CAP).unwrap();
    let mut seen = std::collections::HashSet::new();
    for (rep, t) in &ball.vertices {
        assert_eq!(&oracle.coset_normal_form(rep, *t).unwrap(), rep);
        assert!(
            seen.insert((rep.clone(), *t)),
            "duplicate coset {rep:?} {t:?}"
        );
    }
    assert!(ball.skeleton.is_connected());
    assert_eq!(ball.max_cube_dimension(), 2);
}

#[test]
fn pentagon_delta_grows_slower_than_radius() {
    let g = pentagon();
    let ratios: Vec<f64> = (3..=5)
        .map(|r| {
            let ball = deligne_ball(&g, r, DEFAULT_BALL_CAP).unwrap();
            delta_four_point(&ball.skeleton, &DeltaOptions::default())
                .unwrap()
                .delta
                / r as f64
        })
        .collect();
    assert!(ratios.windows(2).all(|w| w[1] < w[0]), "{ratios:?}");
}

#[test]
fn projection_and_section_invariants() {
    for text in [
        "edge a b 2\nedge b c 2\nedge c d 2\nedge d e 2\nedge e a 2",
        "edge a b 2\nedge b c 2\nedge c d 2\nedge d a 2",
    ] {
        let g = parse_defining_graph(text).unwrap();
        let davis = davis_ball(&g, 3, DEFAULT_BALL_CAP).unwrap();
        let deligne = deligne_ball(&g, 3, DEFAULT_BALL_CAP).unwrap();
        let report = projection_and_section(&g, &davis, Some(&deligne)).unwrap();
        assert!(report.section_right_inverse && report.section_injective);
        assert_eq!(report.section_cubes_to_cubes, Some(true));
        assert_eq!(report.projection_cubes_to_cubes, Some(true));
        let d = report.distances.unwrap();
        assert_eq!(d.deligne_shorter + d.deligne_longer, 0, "{d:?}");
    }
}
