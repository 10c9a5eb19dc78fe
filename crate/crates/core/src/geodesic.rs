//! All-pairs distances with shortest-path counts, and the geodesic coverage
//! predicates behind every parameter.
//!
//! An edge `xy` lies on *every* shortest `a`-`b` path exactly when, for one
//! orientation, `d(a,x) + 1 + d(y,b) = d(a,b)` and `σ(a,x)·σ(y,b) = σ(a,b)`:
//! the left side counts the shortest paths through `xy`, and it matches the
//! total only if no shortest path avoids the edge.

use std::collections::{BTreeMap, VecDeque};

use crate::bits::{EdgeSet, VertexSet};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

const INF: u32 = u32::MAX;

/// Default bound on the number of shortest paths enumerated for one pair.
pub const DEFAULT_PATH_CAP: usize = 100_000;

/// Hop distances and shortest-path counts between all vertex pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
    sigma: Vec<u128>,
}

impl DistanceTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `None` when `u` and `v` lie in different components.
    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> Option<usize> {
        match self.dist[u * self.n + v] {
            INF => None,
            d => Some(d as usize),
        }
    }

    #[inline]
    fn raw(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Number of distinct shortest `u`-`v` paths; zero across components.
    #[inline]
    pub fn sigma(&self, u: usize, v: usize) -> u128 {
        self.sigma[u * self.n + v]
    }

    pub fn eccentricity(&self, u: usize) -> Option<usize> {
        (0..self.n)
            .map(|v| self.dist(u, v))
            .try_fold(0, |acc, d| Some(acc.max(d?)))
    }
}

/// BFS from every source, accumulating σ level by level.
pub fn apsp(g: &Graph) -> Result<DistanceTable> {
    let n = g.n();
    let mut dist = vec![INF; n * n];
    let mut sigma = vec![0u128; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = s * n;
        dist[row + s] = 0;
        sigma[row + s] = 1;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = dist[row + u];
            let su = sigma[row + u];
            for &v in g.neighbors(u) {
                if dist[row + v] == INF {
                    dist[row + v] = du + 1;
                    queue.push_back(v);
                }
                if dist[row + v] == du + 1 {
                    sigma[row + v] = sigma[row + v]
                        .checked_add(su)
                        .ok_or(Error::CountOverflow(s, v))?;
                }
            }
        }
    }
    Ok(DistanceTable { n, dist, sigma })
}

#[inline]
fn monitors_unchecked(t: &DistanceTable, a: usize, b: usize, x: usize, y: usize) -> bool {
    let dab = t.raw(a, b);
    if a == b || dab == INF {
        return false;
    }
    let total = t.sigma(a, b);
    [(x, y), (y, x)].into_iter().any(|(p, q)| {
        let (dp, dq) = (t.raw(a, p), t.raw(q, b));
        dp != INF
            && dq != INF
            && dp as u64 + 1 + dq as u64 == dab as u64
            && t.sigma(a, p).checked_mul(t.sigma(q, b)) == Some(total)
    })
}

#[inline]
fn on_some_geodesic(t: &DistanceTable, a: usize, b: usize, x: usize, y: usize) -> bool {
    let dab = t.raw(a, b);
    if a == b || dab == INF {
        return false;
    }
    [(x, y), (y, x)].into_iter().any(|(p, q)| {
        let (dp, dq) = (t.raw(a, p), t.raw(q, b));
        dp != INF && dq != INF && dp as u64 + 1 + dq as u64 == dab as u64
    })
}

/// Whether every shortest `a`-`b` path traverses the edge `e`.
pub fn pair_monitors_edge(t: &DistanceTable, a: usize, b: usize, e: Edge) -> Result<bool> {
    for v in [a, b, e.0, e.1] {
        if v >= t.n {
            return Err(Error::VertexOutOfRange { index: v, n: t.n });
        }
    }
    if t.dist(e.0, e.1) != Some(1) {
        return Err(Error::NotAnEdge(e.0, e.1));
    }
    if t.dist(a, b).is_none() {
        return Err(Error::DifferentComponents(a, b));
    }
    Ok(monitors_unchecked(t, a, b, e.0, e.1))
}

/// Edges lying on all shortest `a`-`b` paths.
pub fn pair_monitor_set(g: &Graph, t: &DistanceTable, a: usize, b: usize) -> EdgeSet {
    let mut out = EdgeSet::new(g.m());
    if a == b || t.dist(a, b).is_none() {
        return out;
    }
    for (id, e) in g.edges().iter().enumerate() {
        if monitors_unchecked(t, a, b, e.0, e.1) {
            out.insert(id);
        }
    }
    out
}

/// Edges lying on at least one shortest `a`-`b` path.
pub fn pair_geodesic_edges(g: &Graph, t: &DistanceTable, a: usize, b: usize) -> EdgeSet {
    let mut out = EdgeSet::new(g.m());
    for (id, e) in g.edges().iter().enumerate() {
        if on_some_geodesic(t, a, b, e.0, e.1) {
            out.insert(id);
        }
    }
    out
}

/// The interval `I(a,b)`: vertices on at least one shortest `a`-`b` path.
pub fn pair_interval(g: &Graph, t: &DistanceTable, a: usize, b: usize) -> VertexSet {
    let Some(dab) = t.dist(a, b) else {
        return VertexSet::new(g.n());
    };
    VertexSet::from_indices(
        g.n(),
        (0..g.n()).filter(
            |&w| matches!((t.dist(a, w), t.dist(w, b)), (Some(x), Some(y)) if x + y == dab),
        ),
    )
}

fn pairs(members: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    members
        .iter()
        .enumerate()
        .flat_map(move |(i, &a)| members[i + 1..].iter().map(move |&b| (a, b)))
}

/// `{ e : some pair of M monitors e }`.
pub fn monitored_edges(g: &Graph, t: &DistanceTable, m: &VertexSet) -> EdgeSet {
    let members = m.to_vec();
    let mut out = EdgeSet::new(g.m());
    for (a, b) in pairs(&members) {
        out.union_with(&pair_monitor_set(g, t, a, b));
    }
    out
}

/// Vertices on some shortest path between two members of `S` (members included).
pub fn covered_vertices(g: &Graph, t: &DistanceTable, s: &VertexSet) -> VertexSet {
    let members = s.to_vec();
    let mut out = s.clone();
    for (a, b) in pairs(&members) {
        out.union_with(&pair_interval(g, t, a, b));
    }
    out
}

/// Edges on some shortest path between two members of `S`.
pub fn covered_edges(g: &Graph, t: &DistanceTable, s: &VertexSet) -> EdgeSet {
    let members = s.to_vec();
    let mut out = EdgeSet::new(g.m());
    for (a, b) in pairs(&members) {
        out.union_with(&pair_geodesic_edges(g, t, a, b));
    }
    out
}

/// Edges monitored by a pair `(x, y)` with `x ∈ S` and `y` anywhere.
pub fn dem_reach(g: &Graph, t: &DistanceTable, x: usize) -> EdgeSet {
    let mut out = EdgeSet::new(g.m());
    for y in 0..g.n() {
        out.union_with(&pair_monitor_set(g, t, x, y));
    }
    out
}

/// `{ e : ∃ x ∈ S, y ∈ V with (x, y) monitoring e }`.
pub fn dem_monitored_edges(g: &Graph, t: &DistanceTable, s: &VertexSet) -> EdgeSet {
    let mut out = EdgeSet::new(g.m());
    for x in s.iter() {
        out.union_with(&dem_reach(g, t, x));
    }
    out
}

/// All shortest `a`-`b` paths in lexicographic order of their vertex sequences.
pub fn enumerate_shortest_paths(
    g: &Graph,
    t: &DistanceTable,
    a: usize,
    b: usize,
    cap: usize,
) -> Result<Vec<Vec<usize>>> {
    let dab = t.dist(a, b).ok_or(Error::DifferentComponents(a, b))?;
    let count = t.sigma(a, b);
    if count > cap as u128 {
        return Err(Error::PathCapExceeded { a, b, count, cap });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut path = vec![a];
    fn extend(
        g: &Graph,
        t: &DistanceTable,
        b: usize,
        remaining: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let u = *path.last().expect("non-empty");
        if remaining == 0 {
            out.push(path.clone());
            return;
        }
        for &v in g.neighbors(u) {
            if t.dist(v, b) == Some(remaining - 1) {
                path.push(v);
                extend(g, t, b, remaining - 1, path, out);
                path.pop();
            }
        }
    }
    extend(g, t, b, dab, &mut path, &mut out);
    Ok(out)
}

/// One chosen shortest path per unordered pair, keyed `(min, max)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathAssignment {
    paths: BTreeMap<(usize, usize), Vec<usize>>,
}

impl PathAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Stores `path` for its endpoints; the path is kept oriented from the
    /// smaller endpoint.
    pub fn assign(&mut self, mut path: Vec<usize>) {
        let (first, last) = (path[0], *path.last().expect("non-empty path"));
        if first > last {
            path.reverse();
        }
        self.paths.insert((first.min(last), first.max(last)), path);
    }

    pub fn get(&self, a: usize, b: usize) -> Option<&[usize]> {
        self.paths.get(&(a.min(b), a.max(b))).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<usize>)> {
        self.paths.iter()
    }
}

/// Whether the assigned paths for all pairs of `S` jointly cover `E(G)`.
pub fn check_strong_assignment(
    g: &Graph,
    t: &DistanceTable,
    s: &VertexSet,
    assignment: &PathAssignment,
) -> Result<bool> {
    let members = s.to_vec();
    let mut covered = EdgeSet::new(g.m());
    for (a, b) in pairs(&members) {
        let path = assignment.get(a, b).ok_or(Error::MissingPair(a, b))?;
        let shortest = t.dist(a, b) == Some(path.len() - 1)
            && path.first() == Some(&a.min(b))
            && path.last() == Some(&a.max(b));
        if !shortest {
            return Err(Error::NotShortest(a, b));
        }
        for w in path.windows(2) {
            let id = g.edge_id(w[0], w[1]).ok_or(Error::NotShortest(a, b))?;
            covered.insert(id);
        }
    }
    Ok(covered.is_full())
}
