mod common;

use common::{mask, Oracle};
use meglab_core::generators::{fig1, gen_random_connected, gen_standard};
use meglab_core::geodesic::{apsp, check_strong_assignment};
use meglab_core::solvers::{
    compute_report, excluded_min_meg_vertices, forced_meg_vertices, minimum_seg, minimum_set,
    Param, ParamKind,
};
use meglab_core::{Error, Graph};
use proptest::prelude::*;

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (2usize..=max_n, 20u32..=90, any::<u64>())
        .prop_map(|(n, p, seed)| gen_random_connected(n, p as f64 / 100.0, seed).unwrap())
}

fn dem_oracle(o: &Oracle) -> usize {
    o.minimum_by(|s| {
        (0..o.edges.len()).all(|e| {
            o.mon[e]
                .iter()
                .any(|&(a, b)| s >> a & 1 == 1 || s >> b & 1 == 1)
        })
    })
}

/// Smallest set admitting one shortest path per pair whose union covers
/// every edge, by trying every combination of path choices.
fn seg_oracle(o: &Oracle) -> usize {
    fn pick(o: &Oracle, choices: &[Vec<Vec<usize>>], i: usize, hit: &mut Vec<usize>) -> bool {
        if i == choices.len() {
            return hit.iter().all(|&h| h > 0);
        }
        for path in &choices[i] {
            let used: Vec<usize> = (0..o.edges.len())
                .filter(|&e| {
                    let (u, v) = o.edges[e];
                    path.windows(2)
                        .any(|w| (w[0], w[1]) == (u, v) || (w[0], w[1]) == (v, u))
                })
                .collect();
            for &e in &used {
                hit[e] += 1;
            }
            let ok = pick(o, choices, i + 1, hit);
            for &e in &used {
                hit[e] -= 1;
            }
            if ok {
                return true;
            }
        }
        false
    }
    o.minimum_by(|s| {
        let members: Vec<usize> = (0..o.n).filter(|&v| s >> v & 1 == 1).collect();
        let mut choices = Vec::new();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                choices.push(o.shortest_paths(a, b));
            }
        }
        pick(o, &choices, 0, &mut vec![0; o.edges.len()])
    })
}

#[test]
fn fig1_values_and_chain() {
    let r = compute_report(&fig1(), &Param::ALL).unwrap();
    let v = |p| r.value(p).unwrap();
    assert_eq!(
        (v(Param::G), v(Param::Eg), v(Param::Seg), v(Param::Meg)),
        (2, 3, 4, 5)
    );
    assert!(v(Param::Dem) < v(Param::Meg));
    assert_eq!(seg_oracle(&Oracle::new(&fig1())), 4);
}

#[test]
fn lexicographic_witnesses() {
    let c7 = gen_standard("cycle", &[7]).unwrap();
    assert_eq!(
        minimum_set(&c7, ParamKind::Meg).unwrap().1.to_vec(),
        vec![0, 1, 4]
    );
    let p4 = gen_standard("path", &[4]).unwrap();
    assert_eq!(
        minimum_set(&p4, ParamKind::Meg).unwrap().1.to_vec(),
        vec![0, 3]
    );
}

#[test]
fn preconditions() {
    let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
    assert_eq!(
        minimum_set(&split, ParamKind::Meg),
        Err(Error::Disconnected)
    );
    assert_eq!(
        minimum_set(&Graph::empty(1), ParamKind::Meg),
        Err(Error::NoEdges)
    );
    assert_eq!(
        compute_report(&split, &[Param::G]).unwrap_err(),
        Error::Disconnected
    );
    assert!(Param::parse_list("g,meg").is_ok());
    assert_eq!(Param::parse_list("all").unwrap(), Param::ALL.to_vec());
    assert!(Param::parse_list("g,width").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exact_values_match_the_oracle(g in connected(8)) {
        let o = Oracle::new(&g);
        let r = compute_report(&g, &[Param::G, Param::Eg, Param::Dem, Param::Meg]).unwrap();
        prop_assert_eq!(r.value(Param::G), Some(o.minimum_by(|s| o.geodetic_covers(s))));
        prop_assert_eq!(r.value(Param::Eg), Some(o.minimum_by(|s| o.edge_geodetic_covers(s))));
        prop_assert_eq!(r.value(Param::Dem), Some(dem_oracle(&o)));
        prop_assert_eq!(r.value(Param::Meg), Some(o.meg()));
        prop_assert!(o.is_meg_set(mask(r.witnesses[&Param::Meg].iter())));
    }

    #[test]
    fn seg_matches_the_oracle(g in connected(6)) {
        let o = Oracle::new(&g);
        let s = minimum_seg(&g).unwrap();
        prop_assert_eq!(s.count, seg_oracle(&o));
        let t = apsp(&g).unwrap();
        prop_assert!(check_strong_assignment(&g, &t, &s.set, &s.assignment).unwrap());
    }

    #[test]
    fn forced_and_excluded_vertices(g in connected(8)) {
        let o = Oracle::new(&g);
        let all = o.all_meg_sets();
        let best = all.iter().map(|s| s.count_ones()).min().unwrap();
        let forced = mask(forced_meg_vertices(&g).iter());
        let excluded = mask(excluded_min_meg_vertices(&g).unwrap().iter());
        for &s in &all {
            prop_assert_eq!(s & forced, forced);
            if s.count_ones() == best {
                prop_assert_eq!(s & excluded, 0);
            }
        }
    }
}
