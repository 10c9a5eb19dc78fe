use meglab_core::graph::{parse_graph, Format};
use meglab_core::{Error, Graph};
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=20).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::new(n, edges).unwrap()
        })
    })
}

#[test]
fn graph6_known_strings() {
    let k3 = Graph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
    assert_eq!(k3.to_graph6().unwrap(), "Bw");
    let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
    assert_eq!(p3.to_graph6().unwrap(), "Bg");
    assert_eq!(parse_graph("Bw", Format::Graph6).unwrap(), k3);
    assert_eq!(parse_graph("?", Format::Graph6).unwrap().n(), 0);
}

#[test]
fn edge_list_accepts_comments_and_blank_lines() {
    let g = parse_graph(
        "# triangle\n3 3\n0 1\n\n1 2\n# closing\n2 0\n",
        Format::EdgeList,
    )
    .unwrap();
    assert_eq!((g.n(), g.m()), (3, 3));
    assert!(g.has_edge(0, 2));
}

#[test]
fn malformed_inputs_are_rejected() {
    let bad = |text: &str| parse_graph(text, Format::EdgeList).unwrap_err();
    assert!(matches!(bad("3\n"), Error::Parse { .. }));
    assert!(matches!(bad("2 1\n0\n"), Error::Parse { .. }));
    assert!(matches!(bad("2 2\n0 1\n"), Error::Parse { .. }));
    assert_eq!(bad("2 1\n1 1\n"), Error::SelfLoop(1));
    assert_eq!(
        bad("2 1\n0 5\n"),
        Error::VertexOutOfRange { index: 5, n: 2 }
    );
    assert!(parse_graph("B~~", Format::Graph6).is_err());
}

#[test]
fn graph6_size_limit() {
    let g = Graph::empty(63);
    assert_eq!(g.to_graph6(), Err(Error::Graph6TooLarge(63)));
}

proptest! {
    #[test]
    fn edge_list_round_trip(g in arb_graph()) {
        let back = parse_graph(&g.to_edge_list(), Format::EdgeList).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn graph6_round_trip(g in arb_graph()) {
        let text = g.to_graph6().unwrap();
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph(&text, Format::Graph6).unwrap(), g);
    }

    #[test]
    fn degrees_sum_to_twice_the_edges(g in arb_graph()) {
        let total: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.m());
    }
}
