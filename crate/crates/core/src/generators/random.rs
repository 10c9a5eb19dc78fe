//! Seeded random graphs. All randomness comes from ChaCha8 seeded with a
//! single `u64` (`ChaCha8Rng::seed_from_u64`), which is stable across
//! platforms.

use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_RETRIES: usize = 1000;

pub(crate) fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GraphClass {
    Cograph,
    Block,
    WpChordal,
    Split,
    ProperInterval,
}

impl GraphClass {
    pub const ALL: [GraphClass; 5] = [
        GraphClass::Cograph,
        GraphClass::Block,
        GraphClass::WpChordal,
        GraphClass::Split,
        GraphClass::ProperInterval,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Cograph => "cograph",
            GraphClass::Block => "block",
            GraphClass::WpChordal => "wpchordal",
            GraphClass::Split => "split",
            GraphClass::ProperInterval => "properinterval",
        }
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == s.to_ascii_lowercase().replace(['-', '_'], ""))
            .ok_or_else(|| Error::InvalidFamily(format!("unknown graph class {s:?}")))
    }
}

/// Erdős–Rényi `G(n, p)` samples, rejected until connected.
pub fn gen_random_connected(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidFamily("random graph needs n >= 2".into()));
    }
    if !(edge_prob > 0.0 && edge_prob <= 1.0) {
        return Err(Error::InvalidFamily(format!(
            "edge probability {edge_prob} outside (0, 1]"
        )));
    }
    let mut rng = rng_for(seed);
    for _ in 0..MAX_RETRIES {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(edge_prob) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::new(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RetriesExhausted(MAX_RETRIES))
}

/// Random recursive tree: vertex `i` attaches to a uniform earlier vertex.
pub fn gen_random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidFamily("tree needs n >= 1".into()));
    }
    let mut rng = rng_for(seed);
    let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::new(n, edges)
}

/// A random member of `class` with `size` vertices, connected by construction.
pub fn gen_class_random(class: GraphClass, size: usize, seed: u64) -> Result<Graph> {
    if size < 2 {
        return Err(Error::InvalidFamily("class graphs need size >= 2".into()));
    }
    let mut rng = rng_for(seed);
    let edges = match class {
        GraphClass::Cograph => cograph(&mut rng, size),
        GraphClass::Block => block(&mut rng, size),
        GraphClass::WpChordal => wp_chordal(&mut rng, size),
        GraphClass::Split => split(&mut rng, size),
        GraphClass::ProperInterval => proper_interval(&mut rng, size),
    };
    let g = Graph::new(size, edges)?;
    debug_assert!(g.is_connected());
    Ok(g)
}

fn clique_edges(vs: &[usize], out: &mut Vec<(usize, usize)>) {
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            out.push((a, b));
        }
    }
}

/// Splits `total` into `parts` positive summands.
fn composition(rng: &mut ChaCha8Rng, total: usize, parts: usize) -> Vec<usize> {
    let mut cuts: Vec<usize> = (1..total).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts[..parts - 1].to_vec();
    cuts.sort_unstable();
    let mut sizes = Vec::with_capacity(parts);
    let mut prev = 0;
    for c in cuts.into_iter().chain([total]) {
        sizes.push(c - prev);
        prev = c;
    }
    sizes
}

/// Random cotree with alternating union/join nodes and a join at the root.
fn cograph(rng: &mut ChaCha8Rng, size: usize) -> Vec<(usize, usize)> {
    fn build(
        rng: &mut ChaCha8Rng,
        count: usize,
        join: bool,
        next: &mut usize,
        edges: &mut Vec<(usize, usize)>,
    ) -> Vec<usize> {
        if count == 1 {
            *next += 1;
            return vec![*next - 1];
        }
        let parts = rng.gen_range(2..=count.min(3));
        let sizes = composition(rng, count, parts);
        let children: Vec<Vec<usize>> = sizes
            .into_iter()
            .map(|s| build(rng, s, !join, next, edges))
            .collect();
        if join {
            for (i, a) in children.iter().enumerate() {
                for b in &children[i + 1..] {
                    for &x in a {
                        for &y in b {
                            edges.push((x, y));
                        }
                    }
                }
            }
        }
        children.concat()
    }
    let mut edges = Vec::new();
    let mut next = 0;
    build(rng, size, true, &mut next, &mut edges);
    edges
}

/// Cliques glued at single vertices along a random tree.
fn block(rng: &mut ChaCha8Rng, size: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    let first = rng.gen_range(2..=size.min(4));
    clique_edges(&(0..first).collect::<Vec<_>>(), &mut edges);
    let mut count = first;
    while count < size {
        let anchor = rng.gen_range(0..count);
        let extra = rng.gen_range(1..=(size - count).min(3));
        let mut members = vec![anchor];
        members.extend(count..count + extra);
        clique_edges(&members, &mut edges);
        count += extra;
    }
    edges
}

/// Clique bags on a random tree; adjacent bags are joined by a complete
/// bipartite graph between non-empty subsets of each.
fn wp_chordal(rng: &mut ChaCha8Rng, size: usize) -> Vec<(usize, usize)> {
    let mut bags: Vec<Vec<usize>> = Vec::new();
    let mut count = 0;
    while count < size {
        let s = rng.gen_range(1..=(size - count).min(3));
        bags.push((count..count + s).collect());
        count += s;
    }
    let mut edges = Vec::new();
    for bag in &bags {
        clique_edges(bag, &mut edges);
    }
    for i in 1..bags.len() {
        let parent = rng.gen_range(0..i);
        let a = random_nonempty_subset(rng, &bags[i]);
        let b = random_nonempty_subset(rng, &bags[parent]);
        for &x in &a {
            for &y in &b {
                edges.push((x, y));
            }
        }
    }
    edges
}

fn random_nonempty_subset(rng: &mut ChaCha8Rng, from: &[usize]) -> Vec<usize> {
    loop {
        let pick: Vec<usize> = from.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if !pick.is_empty() {
            return pick;
        }
    }
}

/// A clique plus an independent set whose members each see a non-empty
/// subset of the clique.
fn split(rng: &mut ChaCha8Rng, size: usize) -> Vec<(usize, usize)> {
    let c = rng.gen_range(1..size);
    let clique: Vec<usize> = (0..c).collect();
    let mut edges = Vec::new();
    clique_edges(&clique, &mut edges);
    for v in c..size {
        // bias towards small neighborhoods so pendants show up
        let nb = if rng.gen_bool(0.4) {
            vec![clique[rng.gen_range(0..c)]]
        } else {
            random_nonempty_subset(rng, &clique)
        };
        for u in nb {
            edges.push((u, v));
        }
    }
    edges
}

/// Unit intervals `[l, l + 10]` with consecutive left ends 1..=`max_gap`
/// apart; consecutive intervals always overlap, so the graph is connected.
fn proper_interval(rng: &mut ChaCha8Rng, size: usize) -> Vec<(usize, usize)> {
    const LEN: u32 = 10;
    let max_gap = rng.gen_range(2..LEN);
    let mut left = vec![0u32];
    for _ in 1..size {
        let last = *left.last().expect("non-empty");
        left.push(last + rng.gen_range(1..=max_gap));
    }
    let mut edges = Vec::new();
    for i in 0..size {
        for j in i + 1..size {
            if left[j] - left[i] <= LEN {
                edges.push((i, j));
            }
        }
    }
    edges
}
