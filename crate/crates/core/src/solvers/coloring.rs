use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph [`chromatic_number`] accepts.
pub const CHROMATIC_GUARD: usize = 30;

/// Exact chromatic number by DSATUR-ordered backtracking between a clique
/// lower bound and a greedy upper bound.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > CHROMATIC_GUARD {
        return Err(Error::GuardExceeded {
            n,
            guard: CHROMATIC_GUARD,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    if g.m() == 0 {
        return Ok(1);
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &u| acc | 1 << u))
        .collect();
    let lower = max_clique(&adj);
    let upper = greedy_colors(g);
    for k in lower..upper {
        if colorable(g, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn max_clique(adj: &[u32]) -> usize {
    fn grow(adj: &[u32], size: usize, cand: u32, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grow(adj, size + 1, rest & adj[v], best);
        }
    }
    let mut best = 0;
    grow(adj, 0, (1u32 << adj.len()) - 1, &mut best);
    best
}

/// Colors used by first-fit in order of decreasing degree.
fn greedy_colors(g: &Graph) -> usize {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut color = vec![usize::MAX; g.n()];
    for &v in &order {
        let used: Vec<usize> = g.neighbors(v).iter().map(|&u| color[u]).collect();
        color[v] = (0..).find(|c| !used.contains(c)).expect("unbounded range");
    }
    color.iter().max().map_or(0, |&c| c + 1)
}

fn colorable(g: &Graph, k: usize) -> bool {
    fn step(g: &Graph, k: usize, color: &mut [usize], left: usize) -> bool {
        if left == 0 {
            return true;
        }
        let saturation = |v: usize| {
            let mut seen = 0u64;
            for &u in g.neighbors(v) {
                if color[u] != usize::MAX {
                    seen |= 1 << color[u];
                }
            }
            seen
        };
        let v = (0..g.n())
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| {
                (
                    saturation(v).count_ones(),
                    g.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("an uncolored vertex remains");
        let blocked = saturation(v);
        let used = color
            .iter()
            .filter(|&&c| c != usize::MAX)
            .max()
            .map_or(0, |&c| c + 1);
        for c in 0..k.min(used + 1) {
            if blocked & (1 << c) == 0 {
                color[v] = c;
                if step(g, k, color, left - 1) {
                    return true;
                }
                color[v] = usize::MAX;
            }
        }
        false
    }
    let mut color = vec![usize::MAX; g.n()];
    step(g, k, &mut color, g.n())
}
