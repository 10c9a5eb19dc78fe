//! Strong edge-geodetic sets: one assigned shortest path per pair.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet};

use crate::bits::{words_for, BitSet, VertexSet};
use crate::error::{Error, Result};
use crate::geodesic::{
    apsp, enumerate_shortest_paths, DistanceTable, PathAssignment, DEFAULT_PATH_CAP,
};
use crate::graph::{simplicial_vertices, Graph};

use super::search::{CoverTable, SubsetSearch};

/// A minimum strong edge-geodetic set with a covering assignment.
#[derive(Debug, Clone)]
pub struct SegSolution {
    pub count: usize,
    pub set: VertexSet,
    pub assignment: PathAssignment,
    pub examined: u64,
}

pub fn minimum_seg(g: &Graph) -> Result<SegSolution> {
    let t = apsp(g)?;
    minimum_seg_with(g, &t, DEFAULT_PATH_CAP)
}

/// Path choices for one pair: distinct edge masks, none contained in another.
struct PairOptions {
    masks: Vec<Vec<u64>>,
    paths: Vec<Vec<usize>>,
}

fn pair_options(
    g: &Graph,
    t: &DistanceTable,
    a: usize,
    b: usize,
    cap: usize,
) -> Result<PairOptions> {
    let words = words_for(g.m());
    let mut found: Vec<(Vec<u64>, Vec<usize>)> = Vec::new();
    for path in enumerate_shortest_paths(g, t, a, b, cap)? {
        let mut mask = vec![0u64; words];
        for w in path.windows(2) {
            let id = g.edge_id(w[0], w[1]).expect("path edges exist");
            mask[id / 64] |= 1 << (id % 64);
        }
        if !found.iter().any(|(m, _)| m == &mask) {
            found.push((mask, path));
        }
    }
    let dominated = |i: usize| {
        found
            .iter()
            .enumerate()
            .any(|(j, (other, _))| j != i && found[i].0.iter().zip(other).all(|(x, y)| x & !y == 0))
    };
    let keep: Vec<bool> = (0..found.len()).map(|i| !dominated(i)).collect();
    let (masks, paths) = found
        .into_iter()
        .zip(keep)
        .filter_map(|(opt, k)| k.then_some(opt))
        .unzip();
    Ok(PairOptions { masks, paths })
}

struct Assigner<'a> {
    options: Vec<&'a PairOptions>,
    suffix: Vec<Vec<u64>>,
    full: Vec<u64>,
    failed: HashSet<(usize, Vec<u64>)>,
    choice: Vec<usize>,
}

impl Assigner<'_> {
    fn solve(&mut self, i: usize, cov: &[u64]) -> bool {
        if i == self.options.len() {
            return cov == self.full.as_slice();
        }
        let reachable = cov
            .iter()
            .zip(&self.suffix[i])
            .zip(&self.full)
            .all(|((c, s), f)| c | s == *f);
        if !reachable || self.failed.contains(&(i, cov.to_vec())) {
            return false;
        }
        for k in 0..self.options[i].masks.len() {
            let next: Vec<u64> = cov
                .iter()
                .zip(&self.options[i].masks[k])
                .map(|(c, m)| c | m)
                .collect();
            self.choice[i] = k;
            if self.solve(i + 1, &next) {
                return true;
            }
        }
        self.failed.insert((i, cov.to_vec()));
        false
    }
}

/// Tries to cover `E(G)` with one path per pair of `members`.
fn find_assignment(
    g: &Graph,
    t: &DistanceTable,
    members: &[usize],
    cache: &mut HashMap<(usize, usize), PairOptions>,
    cap: usize,
) -> Result<Option<PathAssignment>> {
    let mut pairs = Vec::new();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            let key = (a.min(b), a.max(b));
            if let Entry::Vacant(slot) = cache.entry(key) {
                slot.insert(pair_options(g, t, key.0, key.1, cap)?);
            }
            pairs.push(key);
        }
    }
    pairs.sort_by_key(|p| (cache[p].masks.len(), *p));
    let options: Vec<&PairOptions> = pairs.iter().map(|p| &cache[p]).collect();
    let words = words_for(g.m());
    let mut suffix = vec![vec![0u64; words]; options.len() + 1];
    for i in (0..options.len()).rev() {
        let mut acc = suffix[i + 1].clone();
        for m in &options[i].masks {
            for (a, w) in acc.iter_mut().zip(m) {
                *a |= w;
            }
        }
        suffix[i] = acc;
    }
    let mut solver = Assigner {
        choice: vec![0; options.len()],
        options,
        suffix,
        full: BitSet::full(g.m()).words().to_vec(),
        failed: HashSet::new(),
    };
    if !solver.solve(0, &vec![0u64; words]) {
        return Ok(None);
    }
    let mut assignment = PathAssignment::new();
    for (i, opts) in solver.options.iter().enumerate() {
        assignment.assign(opts.paths[solver.choice[i]].clone());
    }
    Ok(Some(assignment))
}

/// Minimum strong edge-geodetic set over a precomputed table, enumerating at
/// most `cap` shortest paths per pair.
pub fn minimum_seg_with(g: &Graph, t: &DistanceTable, cap: usize) -> Result<SegSolution> {
    g.require_connected()?;
    g.require_edges()?;
    let n = g.n();
    let table = CoverTable::edge_geodetic(g, t);
    let base = simplicial_vertices(g);
    let candidates: Vec<usize> = (0..n).filter(|&v| !base.contains(v)).collect();
    let mut search = SubsetSearch::new(&table, base.to_vec(), candidates);
    let mut cache = HashMap::new();
    for size in base.count().max(2)..=n {
        let mut failure = None;
        let mut found = None;
        let hit = search.find(size, |members| {
            match find_assignment(g, t, members, &mut cache, cap) {
                Ok(Some(a)) => {
                    found = Some(a);
                    true
                }
                Ok(None) => false,
                Err(e) => {
                    failure = Some(e);
                    true
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        if let (Some(members), Some(assignment)) = (hit, found) {
            return Ok(SegSolution {
                count: size,
                set: VertexSet::from_indices(n, members),
                assignment,
                examined: search.examined,
            });
        }
    }
    Err(Error::ContractBreach(
        "no strong edge-geodetic set found".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{fig1, gen_standard};
    use crate::geodesic::check_strong_assignment;

    fn seg(g: &Graph) -> SegSolution {
        let s = minimum_seg(g).unwrap();
        let t = apsp(g).unwrap();
        assert!(check_strong_assignment(g, &t, &s.set, &s.assignment).unwrap());
        s
    }

    #[test]
    fn small_values() {
        assert_eq!(seg(&gen_standard("cycle", &[4]).unwrap()).count, 3);
        assert_eq!(seg(&gen_standard("complete", &[3]).unwrap()).count, 3);
        assert_eq!(seg(&gen_standard("path", &[5]).unwrap()).count, 2);
        assert_eq!(seg(&fig1()).count, 4);
    }

    #[test]
    fn dominated_paths_are_dropped() {
        let g = gen_standard("cycle", &[4]).unwrap();
        let t = apsp(&g).unwrap();
        let opts = pair_options(&g, &t, 0, 2, 10).unwrap();
        assert_eq!(opts.masks.len(), 2);
        assert_eq!(opts.paths, vec![vec![0, 1, 2], vec![0, 3, 2]]);
    }

    #[test]
    fn path_cap_is_reported() {
        let g = gen_standard("hypercube", &[4]).unwrap();
        let t = apsp(&g).unwrap();
        assert!(matches!(
            minimum_seg_with(&g, &t, 3),
            Err(Error::PathCapExceeded { .. })
        ));
    }
}
