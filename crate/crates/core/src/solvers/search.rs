//! Cardinality-ascending subset search over precomputed coverage tables.
//!
//! Every parameter reduces to "the union of what the chosen vertices cover,
//! alone or in pairs, is everything". A [`CoverTable`] stores those
//! contributions as flat bit masks; [`SubsetSearch`] walks combinations in
//! lexicographic order, extending the coverage incrementally and cutting a
//! branch once even every remaining candidate together could not finish it.

use crate::bits::{words_for, BitSet};
use crate::geodesic::{
    dem_reach, pair_geodesic_edges, pair_interval, pair_monitor_set, DistanceTable,
};
use crate::graph::Graph;

/// Coverage contributed by single vertices and by vertex pairs.
pub(crate) struct CoverTable {
    n: usize,
    universe: usize,
    words: usize,
    single: Vec<u64>,
    pair: Option<Vec<u64>>,
    /// Upper bound on what a vertex can contribute with any partner.
    reach: Vec<u64>,
}

impl CoverTable {
    fn build(
        n: usize,
        universe: usize,
        single: impl Fn(usize) -> BitSet,
        pair: Option<&dyn Fn(usize, usize) -> BitSet>,
    ) -> Self {
        let words = words_for(universe);
        let mut s = vec![0u64; n * words];
        for v in 0..n {
            s[v * words..(v + 1) * words].copy_from_slice(single(v).words());
        }
        let mut reach = s.clone();
        let pair = pair.map(|f| {
            let mut p = vec![0u64; n * n * words];
            for a in 0..n {
                for b in a + 1..n {
                    let mask = f(a, b);
                    for (i, &w) in mask.words().iter().enumerate() {
                        p[(a * n + b) * words + i] = w;
                        p[(b * n + a) * words + i] = w;
                        reach[a * words + i] |= w;
                        reach[b * words + i] |= w;
                    }
                }
            }
            p
        });
        Self {
            n,
            universe,
            words,
            single: s,
            pair,
            reach,
        }
    }

    /// Pairs cover the vertices of their intervals; a lone vertex covers itself.
    pub fn geodetic(g: &Graph, t: &DistanceTable) -> Self {
        let n = g.n();
        let single = |v| BitSet::from_indices(n, [v]);
        let pair = |a, b| pair_interval(g, t, a, b).as_bits().clone();
        Self::build(n, n, single, Some(&pair))
    }

    pub fn edge_geodetic(g: &Graph, t: &DistanceTable) -> Self {
        let pair = |a, b| pair_geodesic_edges(g, t, a, b).as_bits().clone();
        Self::build(g.n(), g.m(), |_| BitSet::new(g.m()), Some(&pair))
    }

    pub fn monitoring(g: &Graph, t: &DistanceTable) -> Self {
        let pair = |a, b| pair_monitor_set(g, t, a, b).as_bits().clone();
        Self::build(g.n(), g.m(), |_| BitSet::new(g.m()), Some(&pair))
    }

    pub fn dem(g: &Graph, t: &DistanceTable) -> Self {
        let single = |x| dem_reach(g, t, x).as_bits().clone();
        Self::build(g.n(), g.m(), single, None)
    }

    fn single(&self, v: usize) -> &[u64] {
        &self.single[v * self.words..(v + 1) * self.words]
    }

    fn pair(&self, a: usize, b: usize) -> Option<&[u64]> {
        let p = self.pair.as_ref()?;
        let at = (a * self.n + b) * self.words;
        Some(&p[at..at + self.words])
    }

    fn reach(&self, v: usize) -> &[u64] {
        &self.reach[v * self.words..(v + 1) * self.words]
    }

    /// Coverage of an explicit vertex list.
    pub fn coverage(&self, members: &[usize]) -> BitSet {
        let mut acc = vec![0u64; self.words];
        for (i, &a) in members.iter().enumerate() {
            or_into(&mut acc, self.single(a));
            for &b in &members[..i] {
                if let Some(p) = self.pair(a, b) {
                    or_into(&mut acc, p);
                }
            }
        }
        BitSet::from_words(self.universe, &acc)
    }
}

#[inline]
fn or_into(acc: &mut [u64], src: &[u64]) {
    for (a, s) in acc.iter_mut().zip(src) {
        *a |= s;
    }
}

/// Lexicographic combination walk over `candidates` on top of a fixed base.
pub(crate) struct SubsetSearch<'a> {
    table: &'a CoverTable,
    base: Vec<usize>,
    candidates: Vec<usize>,
    /// `suffix[i]`: OR of `reach` over `candidates[i..]`.
    suffix: Vec<Vec<u64>>,
    full: Vec<u64>,
    pub examined: u64,
}

impl<'a> SubsetSearch<'a> {
    pub fn new(table: &'a CoverTable, base: Vec<usize>, candidates: Vec<usize>) -> Self {
        let w = table.words;
        let mut suffix = vec![vec![0u64; w]; candidates.len() + 1];
        for i in (0..candidates.len()).rev() {
            let mut acc = suffix[i + 1].clone();
            or_into(&mut acc, table.reach(candidates[i]));
            suffix[i] = acc;
        }
        let full = BitSet::full(table.universe).words().to_vec();
        Self {
            table,
            base,
            candidates,
            suffix,
            full,
            examined: 0,
        }
    }

    /// Calls `accept` on every covering set of exactly `size` vertices
    /// (base included) in lexicographic order of the added candidates,
    /// stopping at the first set it accepts. Returns that set, sorted.
    pub fn find<F>(&mut self, size: usize, mut accept: F) -> Option<Vec<usize>>
    where
        F: FnMut(&[usize]) -> bool,
    {
        if size < self.base.len() || size - self.base.len() > self.candidates.len() {
            return None;
        }
        let extra = size - self.base.len();
        let base_cov = self.table.coverage(&self.base);
        let mut chosen = self.base.clone();
        let mut levels = vec![vec![0u64; self.table.words]; extra + 1];
        levels[0].copy_from_slice(base_cov.words());
        let hit = self.descend(0, 0, extra, &mut chosen, &mut levels, &mut accept);
        hit.then(|| {
            chosen.sort_unstable();
            chosen
        })
    }

    fn covers(&self, cov: &[u64]) -> bool {
        cov == self.full.as_slice()
    }

    fn descend<F>(
        &mut self,
        depth: usize,
        start: usize,
        extra: usize,
        chosen: &mut Vec<usize>,
        levels: &mut [Vec<u64>],
        accept: &mut F,
    ) -> bool
    where
        F: FnMut(&[usize]) -> bool,
    {
        if depth == extra {
            self.examined += 1;
            return self.covers(&levels[depth]) && accept(chosen);
        }
        let remaining = extra - depth;
        let last_start = self.candidates.len() - remaining;
        for i in start..=last_start {
            // suffix[i] shrinks as i grows, so a failed bound ends the loop
            let reachable = levels[depth]
                .iter()
                .zip(&self.suffix[i])
                .zip(&self.full)
                .all(|((c, s), f)| (c | s) == *f);
            if !reachable {
                break;
            }
            let c = self.candidates[i];
            let (lo, hi) = levels.split_at_mut(depth + 1);
            let next = &mut hi[0];
            next.copy_from_slice(&lo[depth]);
            or_into(next, self.table.single(c));
            if self.table.pair.is_some() {
                for &s in chosen.iter() {
                    or_into(next, self.table.pair(c, s).expect("pair table"));
                }
            }
            chosen.push(c);
            if self.descend(depth + 1, i + 1, extra, chosen, levels, accept) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}
