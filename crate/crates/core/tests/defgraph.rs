use artinhyp::{parse_defining_graph, DefiningGraph, GraphError, VertexSet};
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = DefiningGraph> {
    (1usize..=7)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                proptest::collection::vec(
                    prop_oneof![Just(None), (2u32..=9).prop_map(Some)],
                    pairs,
                ),
            )
        })
        .prop_map(|(n, labels)| {
            let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            // Pairs are visited in the same order the labels were drawn.
            let mut it = labels.into_iter();
            DefiningGraph::from_label_fn(&names, |_, _| it.next().unwrap()).unwrap()
        })
}

proptest! {
    #[test]
    fn dsl_round_trips(g in arb_graph()) {
        let text = g.to_dsl();
        let back = parse_defining_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.to_dsl(), text);
    }

    #[test]
    fn vertex_set_serializes_as_sorted_indices(bits in 0u64..(1 << 12)) {
        let set = VertexSet::from_bits(bits);
        let json = serde_json::to_string(&set).unwrap();
        let indices: Vec<usize> = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(indices, set.to_vec());
    }
}

#[test]
fn edge_order_and_comments_do_not_matter() {
    let a = parse_defining_graph("edge a b 3\nedge b c 2 # right angle\n").unwrap();
    let b = parse_defining_graph("# same graph\nedge c b 2\n\nedge b a 3\n").unwrap();
    assert_eq!(a, b);
}

#[test]
fn malformed_input_is_rejected() {
    let cases = [
        ("edge a b 1", "label"),
        ("edge a a 2", "self-loop"),
        ("edge a b 2\nedge b a 3", "duplicate"),
        ("vertex a\nvertex a", "twice"),
        ("edge a b", "line 1"),
        ("frobnicate a", "line 1"),
    ];
    for (text, needle) in cases {
        let err = parse_defining_graph(text).unwrap_err();
        assert!(err.to_string().contains(needle), "{text:?}: {err}");
    }
    assert!(matches!(
        parse_defining_graph("edge a b 1"),
        Err(GraphError::LabelTooSmall(_, _, 1))
    ));
}
