//! Slow reference implementations that share no code with the library's
//! engine: distances by plain BFS, geodesics by explicit DFS, and minimum
//! sets by enumerating every vertex subset.

#![allow(dead_code)]

use std::collections::VecDeque;

use meglab_core::Graph;

pub struct Oracle {
    pub n: usize,
    adj: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
    dist: Vec<Vec<Option<usize>>>,
    /// `mon[e]` lists the pairs `(a, b)`, `a < b`, whose every shortest path
    /// uses edge `e`.
    pub mon: Vec<Vec<(usize, usize)>>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.0, e.1)).collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let dist = (0..n).map(|s| bfs(&adj, s)).collect();
        let mut o = Oracle {
            n,
            adj,
            edges,
            dist,
            mon: Vec::new(),
        };
        let mut mon = vec![Vec::new(); o.edges.len()];
        for a in 0..n {
            for b in a + 1..n {
                let paths = o.shortest_paths(a, b);
                if paths.is_empty() {
                    continue;
                }
                for (i, &(u, v)) in o.edges.iter().enumerate() {
                    if paths.iter().all(|p| uses(p, u, v)) {
                        mon[i].push((a, b));
                    }
                }
            }
        }
        o.mon = mon;
        o
    }

    pub fn dist(&self, a: usize, b: usize) -> Option<usize> {
        self.dist[a][b]
    }

    /// Every shortest `a`-`b` path, found by DFS along strictly decreasing
    /// distance to `b`.
    pub fn shortest_paths(&self, a: usize, b: usize) -> Vec<Vec<usize>> {
        let Some(_) = self.dist[a][b] else {
            return Vec::new();
        };
        let mut out = Vec::new();
        let mut path = vec![a];
        self.extend(b, &mut path, &mut out);
        out
    }

    fn extend(&self, b: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let x = *path.last().unwrap();
        if x == b {
            out.push(path.clone());
            return;
        }
        let here = self.dist[x][b].unwrap();
        for &y in &self.adj[x] {
            if self.dist[y][b] == Some(here - 1) {
                path.push(y);
                self.extend(b, path, out);
                path.pop();
            }
        }
    }

    pub fn monitors(&self, set: u64, edge: usize) -> bool {
        self.mon[edge]
            .iter()
            .any(|&(a, b)| set >> a & 1 == 1 && set >> b & 1 == 1)
    }

    pub fn is_meg_set(&self, set: u64) -> bool {
        (0..self.edges.len()).all(|e| self.monitors(set, e))
    }

    /// All MEG-sets as bitmasks; only sensible for small `n`.
    pub fn all_meg_sets(&self) -> Vec<u64> {
        assert!(self.n <= 20, "oracle enumeration is exponential");
        (0..1u64 << self.n)
            .filter(|&s| self.is_meg_set(s))
            .collect()
    }

    /// Smallest MEG-set size.
    pub fn meg(&self) -> usize {
        assert!(self.n <= 24, "oracle enumeration is exponential");
        (0..1u64 << self.n)
            .filter(|&s| self.is_meg_set(s))
            .map(|s| s.count_ones() as usize)
            .min()
            .expect("the full vertex set monitors every edge")
    }

    /// Intersection of all MEG-sets.
    pub fn in_every_meg_set(&self) -> Vec<usize> {
        let common = self
            .all_meg_sets()
            .into_iter()
            .fold(u64::MAX, |acc, s| acc & s);
        (0..self.n).filter(|&v| common >> v & 1 == 1).collect()
    }

    /// Smallest geodetic-type set size: `covers(set)` decides membership.
    pub fn minimum_by(&self, covers: impl Fn(u64) -> bool) -> usize {
        (1..1u64 << self.n)
            .filter(|&s| covers(s))
            .map(|s| s.count_ones() as usize)
            .min()
            .expect("the full vertex set covers")
    }

    pub fn geodetic_covers(&self, set: u64) -> bool {
        let mut seen = set;
        for (a, b) in self.pairs(set) {
            for p in self.shortest_paths(a, b) {
                for v in p {
                    seen |= 1 << v;
                }
            }
        }
        seen.count_ones() as usize == self.n
    }

    pub fn edge_geodetic_covers(&self, set: u64) -> bool {
        let mut hit = vec![false; self.edges.len()];
        for (a, b) in self.pairs(set) {
            for p in self.shortest_paths(a, b) {
                for (i, &(u, v)) in self.edges.iter().enumerate() {
                    hit[i] |= uses(&p, u, v);
                }
            }
        }
        hit.into_iter().all(|h| h)
    }

    fn pairs(&self, set: u64) -> Vec<(usize, usize)> {
        let members: Vec<usize> = (0..self.n).filter(|&v| set >> v & 1 == 1).collect();
        let mut out = Vec::new();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                out.push((a, b));
            }
        }
        out
    }
}

fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<Option<usize>> {
    let mut d = vec![None; adj.len()];
    d[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        for &y in &adj[x] {
            if d[y].is_none() {
                d[y] = Some(d[x].unwrap() + 1);
                q.push_back(y);
            }
        }
    }
    d
}

fn uses(path: &[usize], u: usize, v: usize) -> bool {
    path.windows(2)
        .any(|w| (w[0] == u && w[1] == v) || (w[0] == v && w[1] == u))
}

pub fn mask(vs: impl IntoIterator<Item = usize>) -> u64 {
    vs.into_iter().fold(0, |acc, v| acc | 1 << v)
}
