use artinhyp::coxeter::{
    coxeter_equal, coxeter_reduce, enumerate_coxeter, is_spherical, project_to_coxeter,
    tits_section, Word,
};
use artinhyp::{parse_defining_graph, DefiningGraph};
use proptest::prelude::*;

const NAMES: [&str; 4] = ["a", "b", "c", "d"];

fn arb_graph(max_vertices: usize) -> impl Strategy<Value = DefiningGraph> {
    (1..=max_vertices)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(
                    prop_oneof![Just(None), (2u32..=5).prop_map(Some)],
                    n * (n - 1) / 2,
                ),
            )
        })
        .prop_map(|(n, labels)| {
            // Pairs are visited in the same order the labels were drawn.
            let mut it = labels.into_iter();
            DefiningGraph::from_label_fn(&NAMES[..n], |_, _| it.next().unwrap()).unwrap()
        })
}

fn arb_word(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0..n, 0..=max_len).prop_map(Word::from_generators)
}

proptest! {
    #[test]
    fn reduction_is_idempotent_and_keeps_parity(
        (g, w) in arb_graph(4).prop_flat_map(|g| { let n = g.vertex_count(); (Just(g), arb_word(n, 10)) })
    ) {
        let r = coxeter_reduce(&g, &w).unwrap();
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!(r.len() % 2, w.len() % 2);
        prop_assert_eq!(coxeter_reduce(&g, &r).unwrap(), r.clone());
        prop_assert!(coxeter_equal(&g, &w, &r).unwrap());
    }

    #[test]
    fn reduction_matches_enumeration_on_finite_groups(
        (g, w) in arb_graph(3).prop_filter("finite", |g| is_spherical(g, g.all_vertices()))
            .prop_flat_map(|g| { let n = g.vertex_count(); (Just(g), arb_word(n, 16)) })
    ) {
        let group = enumerate_coxeter(&g, 10_000).closed().unwrap();
        let r = coxeter_reduce(&g, &w).unwrap();
        let element = group.evaluate(&w);
        prop_assert_eq!(group.evaluate(&r), element);
        prop_assert_eq!(r.len(), group.word(element).len());
    }

    #[test]
    fn tits_section_lifts_reduced_words(
        (g, w) in arb_graph(4).prop_flat_map(|g| { let n = g.vertex_count(); (Just(g), arb_word(n, 8)) })
    ) {
        let reduced = coxeter_reduce(&g, &w).unwrap();
        let lift = tits_section(&g, &reduced).unwrap();
        prop_assert!(lift.letters().iter().all(|l| !l.inverse));
        prop_assert!(coxeter_equal(&g, &project_to_coxeter(&lift), &reduced).unwrap());
    }
}

#[test]
fn spherical_subsets_of_larger_graphs_match_enumeration() {
    // Tetrahedra and pyramids mixing finite and affine pieces.
    let graphs = [
        "edge a b 3\nedge b c 3\nedge c d 3",
        "edge a b 3\nedge b c 4\nedge c d 3",
        "edge a b 5\nedge b c 3\nedge c d 3",
        "edge a b 3\nedge b c 3\nedge c d 3\nedge a c 2\nedge b d 2\nedge a d 2",
        "edge a b 4\nedge b c 3\nedge c d 4\nedge a c 2\nedge b d 2\nedge a d 2",
        "edge a b 3\nedge b c 3\nedge c d 3\nedge d a 3",
    ];
    for text in graphs {
        let g = parse_defining_graph(text).unwrap();
        for t in g.all_vertices().subsets() {
            let sub = g.full_subgraph(t).unwrap();
            let finite = enumerate_coxeter(&sub, 20_000).order().is_some();
            assert_eq!(is_spherical(&g, t), finite, "{text:?} subset {t:?}");
        }
    }
    let order =
        |text: &str| enumerate_coxeter(&parse_defining_graph(text).unwrap(), 20_000).order();
    let path = |p: u32, q: u32, r: u32| {
        format!("edge a b {p}\nedge b c {q}\nedge c d {r}\nedge a c 2\nedge b d 2\nedge a d 2")
    };
    assert_eq!(order(&path(3, 3, 3)), Some(120));
    assert_eq!(order(&path(4, 3, 3)), Some(384));
    assert_eq!(order(&path(3, 4, 3)), Some(1152));
    assert_eq!(order("edge a b 3\nedge b c 3\nedge c d 3"), None);
}
