mod common;

use common::{mask, Oracle};
use meglab_core::generators::{gen_random_connected, gen_standard};
use meglab_core::geodesic::{
    apsp, covered_edges, covered_vertices, enumerate_shortest_paths, monitored_edges,
    pair_monitors_edge, DEFAULT_PATH_CAP,
};
use meglab_core::{Edge, Error, Graph, VertexSet};
use proptest::prelude::*;

fn connected() -> impl Strategy<Value = Graph> {
    (2usize..=8, 20u32..=90, any::<u64>())
        .prop_map(|(n, p, seed)| gen_random_connected(n, p as f64 / 100.0, seed).unwrap())
}

#[test]
fn path_counts_on_grids() {
    let q3 = gen_standard("hypercube", &[3]).unwrap();
    let t = apsp(&q3).unwrap();
    assert_eq!(t.dist(0, 7), Some(3));
    assert_eq!(t.sigma(0, 7), 6);
    assert_eq!(t.sigma(0, 3), 2);
    assert_eq!(t.eccentricity(0), Some(3));
}

#[test]
fn disconnected_pairs_have_no_distance() {
    let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
    let t = apsp(&g).unwrap();
    assert_eq!(t.dist(0, 3), None);
    assert_eq!(t.sigma(0, 3), 0);
    assert_eq!(
        pair_monitors_edge(&t, 0, 3, Edge::new(0, 1)),
        Err(Error::DifferentComponents(0, 3))
    );
}

#[test]
fn cycle_pairs() {
    let c4 = gen_standard("cycle", &[4]).unwrap();
    let t = apsp(&c4).unwrap();
    assert!(!pair_monitors_edge(&t, 0, 2, Edge::new(0, 1)).unwrap());
    assert!(pair_monitors_edge(&t, 0, 1, Edge::new(0, 1)).unwrap());
    let c5 = gen_standard("cycle", &[5]).unwrap();
    let t = apsp(&c5).unwrap();
    assert!(pair_monitors_edge(&t, 0, 2, Edge::new(1, 2)).unwrap());
    let three = VertexSet::from_indices(5, [0, 1, 3]);
    assert!(monitored_edges(&c5, &t, &three).is_full());
}

#[test]
fn path_enumeration_respects_the_cap() {
    let q4 = gen_standard("hypercube", &[4]).unwrap();
    let t = apsp(&q4).unwrap();
    assert_eq!(
        enumerate_shortest_paths(&q4, &t, 0, 15, DEFAULT_PATH_CAP)
            .unwrap()
            .len(),
        24
    );
    assert!(matches!(
        enumerate_shortest_paths(&q4, &t, 0, 15, 10),
        Err(Error::PathCapExceeded { count: 24, .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distances_and_counts_match_the_oracle(g in connected()) {
        let t = apsp(&g).unwrap();
        let o = Oracle::new(&g);
        for a in 0..g.n() {
            for b in 0..g.n() {
                prop_assert_eq!(t.dist(a, b), o.dist(a, b));
                prop_assert_eq!(t.sigma(a, b), o.shortest_paths(a, b).len() as u128);
                prop_assert_eq!(t.dist(a, b), t.dist(b, a));
            }
        }
    }

    #[test]
    fn monitoring_matches_the_oracle(g in connected()) {
        let t = apsp(&g).unwrap();
        let o = Oracle::new(&g);
        for (i, &e) in g.edges().iter().enumerate() {
            for a in 0..g.n() {
                for b in a + 1..g.n() {
                    prop_assert_eq!(
                        pair_monitors_edge(&t, a, b, e).unwrap(),
                        o.mon[i].contains(&(a, b))
                    );
                }
            }
        }
    }

    #[test]
    fn coverage_matches_the_oracle(g in connected(), bits in any::<u8>()) {
        let t = apsp(&g).unwrap();
        let o = Oracle::new(&g);
        let set = VertexSet::from_indices(g.n(), (0..g.n()).filter(|&v| bits >> v & 1 == 1));
        let m = mask(set.iter());
        prop_assert_eq!(covered_vertices(&g, &t, &set).is_full(), o.geodetic_covers(m));
        prop_assert_eq!(covered_edges(&g, &t, &set).is_full(), o.edge_geodetic_covers(m));
        prop_assert_eq!(monitored_edges(&g, &t, &set).is_full(), o.is_meg_set(m));
    }
}
