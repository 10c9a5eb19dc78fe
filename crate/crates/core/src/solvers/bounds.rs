//! Constructive upper bounds on meg for graphs of large girth.

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::geodesic::{apsp, monitored_edges, DistanceTable};
use crate::graph::{girth, is_two_connected, Graph};

fn verify(g: &Graph, t: &DistanceTable, m: &VertexSet, what: &str) -> Result<()> {
    if monitored_edges(g, t, m).is_full() {
        Ok(())
    } else {
        Err(Error::ContractBreach(format!(
            "{what} {:?} does not monitor every edge",
            m.to_vec()
        )))
    }
}

/// The complement of an independent set, which is a vertex cover and, for
/// connected graphs of girth at least 5 and minimum degree at least 2, an
/// MEG-set.
///
/// Up to 64 vertices the independent set is the lexicographically first
/// maximum one, so the cover is as small as possible; larger graphs fall back
/// to a greedy maximal set taken lowest index first.
pub fn vertex_cover_meg_set(g: &Graph) -> Result<VertexSet> {
    g.require_connected()?;
    if g.min_degree() < 2 {
        return Err(Error::Precondition(format!(
            "minimum degree {} < 2",
            g.min_degree()
        )));
    }
    match girth(g) {
        Some(gi) if gi >= 5 => {}
        other => {
            return Err(Error::Precondition(format!(
                "girth {} < 5",
                other.map_or("inf".into(), |x| x.to_string())
            )))
        }
    }
    let independent = if g.n() <= 64 {
        maximum_independent_set(g)
    } else {
        greedy_independent_set(g)
    };
    let cover = independent.complement();
    let t = apsp(g)?;
    verify(g, &t, &cover, "vertex cover")?;
    Ok(cover)
}

fn greedy_independent_set(g: &Graph) -> VertexSet {
    let mut independent = VertexSet::new(g.n());
    for v in 0..g.n() {
        if g.neighbors(v).iter().all(|&u| !independent.contains(u)) {
            independent.insert(v);
        }
    }
    independent
}

/// Branches on the lowest remaining vertex, taking it before skipping it,
/// so the first maximum set found is the lexicographically smallest.
fn maximum_independent_set(g: &Graph) -> VertexSet {
    fn grow(closed: &[u64], current: u64, cand: u64, best: &mut (u32, u64)) {
        if current.count_ones() + cand.count_ones() <= best.0 {
            return;
        }
        if cand == 0 {
            *best = (current.count_ones(), current);
            return;
        }
        let v = cand.trailing_zeros() as usize;
        grow(closed, current | 1 << v, cand & !closed[v], best);
        grow(closed, current, cand & !(1 << v), best);
    }
    let n = g.n();
    let closed: Vec<u64> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u64 << v, |acc, &u| acc | 1 << u)
        })
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = (0, 0);
    grow(&closed, 0, all, &mut best);
    VertexSet::from_indices(n, (0..n).filter(|&v| best.1 >> v & 1 == 1))
}

/// Greedy packing of vertices pairwise at distance at least `(girth - 3) / 4`,
/// lowest index first. Requires a 2-connected graph of girth at least 4.
///
/// The result has at most `⌈4n / (girth - 3)⌉` vertices.
pub fn girth_greedy_meg(g: &Graph) -> Result<VertexSet> {
    if !is_two_connected(g) {
        return Err(Error::Precondition("graph is not 2-connected".into()));
    }
    let gi = girth(g).expect("2-connected graphs have cycles");
    if gi < 4 {
        return Err(Error::Precondition(format!("girth {gi} < 4")));
    }
    let t = apsp(g)?;
    let mut chosen: Vec<usize> = Vec::new();
    while let Some(v) = (0..g.n()).find(|&v| {
        chosen
            .iter()
            .all(|&m| 4 * t.dist(v, m).expect("connected") >= gi - 3)
    }) {
        chosen.push(v);
    }
    let m = VertexSet::from_indices(g.n(), chosen);
    verify(g, &t, &m, "greedy set")?;
    Ok(m)
}
