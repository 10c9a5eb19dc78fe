//! Classical structure queries: cut vertices, bridges, girth, simplicial
//! vertices and twin classes.

use std::collections::{BTreeMap, VecDeque};

use super::{Edge, Graph};
use crate::bits::VertexSet;
use crate::error::Result;

/// DFS discovery times and low points over every component.
struct LowLink {
    disc: Vec<usize>,
    low: Vec<usize>,
    parent: Vec<Option<usize>>,
    /// DFS children counts, used for the root rule.
    children: Vec<usize>,
    cut: Vec<bool>,
    bridges: Vec<Edge>,
}

impl LowLink {
    fn run(g: &Graph) -> Self {
        let n = g.n();
        let mut ll = LowLink {
            disc: vec![usize::MAX; n],
            low: vec![usize::MAX; n],
            parent: vec![None; n],
            children: vec![0; n],
            cut: vec![false; n],
            bridges: Vec::new(),
        };
        let mut time = 0;
        for root in 0..n {
            if ll.disc[root] != usize::MAX {
                continue;
            }
            // (vertex, next neighbor position)
            let mut stack = vec![(root, 0usize)];
            ll.disc[root] = time;
            ll.low[root] = time;
            time += 1;
            while let Some(&mut (u, ref mut pos)) = stack.last_mut() {
                if let Some(&v) = g.neighbors(u).get(*pos) {
                    *pos += 1;
                    if ll.disc[v] == usize::MAX {
                        ll.parent[v] = Some(u);
                        ll.children[u] += 1;
                        ll.disc[v] = time;
                        ll.low[v] = time;
                        time += 1;
                        stack.push((v, 0));
                    } else if ll.parent[u] != Some(v) {
                        ll.low[u] = ll.low[u].min(ll.disc[v]);
                    }
                } else {
                    stack.pop();
                    if let Some(p) = ll.parent[u] {
                        ll.low[p] = ll.low[p].min(ll.low[u]);
                        if ll.low[u] > ll.disc[p] {
                            ll.bridges.push(Edge::new(p, u));
                        }
                        if ll.parent[p].is_some() && ll.low[u] >= ll.disc[p] {
                            ll.cut[p] = true;
                        }
                    }
                }
            }
            if ll.children[root] >= 2 {
                ll.cut[root] = true;
            }
        }
        ll
    }
}

/// Vertices whose removal disconnects the (connected) graph.
pub fn cut_vertices(g: &Graph) -> Result<VertexSet> {
    g.require_connected()?;
    let ll = LowLink::run(g);
    Ok(VertexSet::from_indices(
        g.n(),
        (0..g.n()).filter(|&v| ll.cut[v]),
    ))
}

/// Edges whose removal increases the number of components, sorted.
pub fn bridges(g: &Graph) -> Vec<Edge> {
    let mut b = LowLink::run(g).bridges;
    b.sort_unstable();
    b
}

/// Length of a shortest cycle, or `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                // closing edges seen from here on give cycles of length >= 2*dist[u]
                if 2 * dist[u] >= b {
                    break;
                }
            }
            for &v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let len = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Vertices whose neighborhood induces a clique (including degree 0 and 1).
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    let simplicial = (0..g.n()).filter(|&v| {
        let nb = g.neighbors(v);
        nb.iter()
            .enumerate()
            .all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    });
    VertexSet::from_indices(g.n(), simplicial)
}

/// Maximal classes of mutually twin vertices (open or closed), each sorted
/// and ordered by smallest member. Non-twins form singleton classes.
///
/// Open and closed twinship cannot mix inside a class of size three or more,
/// so grouping by open and by closed neighborhood separately yields exactly
/// the equivalence classes.
pub fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut class_of: Vec<usize> = (0..n).collect();

    fn find(c: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while c[r] != r {
            r = c[r];
        }
        let mut y = x;
        while c[y] != r {
            let next = c[y];
            c[y] = r;
            y = next;
        }
        r
    }

    let mut open: BTreeMap<VertexSet, usize> = BTreeMap::new();
    let mut closed: BTreeMap<VertexSet, usize> = BTreeMap::new();
    for v in 0..n {
        for (map, key) in [
            (&mut open, g.open_neighborhood(v)),
            (&mut closed, g.closed_neighborhood(v)),
        ] {
            if let Some(&rep) = map.get(&key) {
                let (a, b) = (find(&mut class_of, rep), find(&mut class_of, v));
                class_of[a.max(b)] = a.min(b);
            } else {
                map.insert(key, v);
            }
        }
    }

    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let r = find(&mut class_of, v);
        groups.entry(r).or_default().push(v);
    }
    groups.into_values().collect()
}

/// Connected, at least three vertices, and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && LowLink::run(g).cut.iter().all(|&c| !c)
}
