//! Undirected simple graphs on dense vertex ids `0..n`.

mod io;
mod structure;

pub use io::{parse_graph, Format};
pub use structure::{
    bridges, cut_vertices, girth, is_two_connected, simplicial_vertices, twin_classes,
};

use std::collections::VecDeque;

use serde::Serialize;

use crate::bits::{EdgeSet, VertexSet};
use crate::error::{Error, Result};

/// An edge in canonical orientation, `0 < 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    /// Canonicalizes the endpoint order.
    pub fn new(u: usize, v: usize) -> Self {
        if u < v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.0 {
            self.1
        } else {
            self.0
        }
    }
}

/// Equality compares structure only; labels are ignored.
#[derive(Debug, Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    /// Edge ids aligned with `adj`: `adj_ids[u][i]` is the id of `{u, adj[u][i]}`.
    adj_ids: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

/// Builds a graph from an edge list, dropping duplicate edges.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges.iter().copied())
}

impl Graph {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut canon = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { index: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            canon.push(Edge::new(u, v));
        }
        canon.sort_unstable();
        canon.dedup();

        let mut adj = vec![Vec::new(); n];
        for e in &canon {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let adj_ids = adj
            .iter()
            .enumerate()
            .map(|(u, list)| {
                list.iter()
                    .map(|&v| canon.binary_search(&Edge::new(u, v)).expect("edge indexed"))
                    .collect()
            })
            .collect();
        Ok(Self {
            adj,
            adj_ids,
            edges: canon,
            labels: None,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, std::iter::empty()).expect("edgeless graph is valid")
    }

    /// Attaches vertex labels. Labels are metadata and never affect identity.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Looks up a vertex by its label.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges sorted lexicographically; an edge's position is its id.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let pos = self.adj.get(u)?.binary_search(&v).ok()?;
        Some(self.adj_ids[u][pos])
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet::full(self.m())
    }

    pub fn closed_neighborhood(&self, u: usize) -> VertexSet {
        let mut s = VertexSet::from_indices(self.n(), self.adj[u].iter().copied());
        s.insert(u);
        s
    }

    pub fn open_neighborhood(&self, u: usize) -> VertexSet {
        VertexSet::from_indices(self.n(), self.adj[u].iter().copied())
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Induced subgraph on `vertices` (in the given order); labels carry over.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.0] != usize::MAX && index[e.1] != usize::MAX)
            .map(|e| (index[e.0], index[e.1]));
        let g = Graph::new(vertices.len(), edges).expect("induced subgraph is simple");
        match &self.labels {
            Some(l) => g.with_labels(vertices.iter().map(|&v| l[v].clone()).collect()),
            None => g,
        }
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub(crate) fn require_edges(&self) -> Result<()> {
        if self.m() == 0 {
            Err(Error::NoEdges)
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_path_and_cycle() {
        let p3 = build_graph(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.m(), 2);
        assert_eq!(p3.neighbors(1), &[0, 2]);
        let c4 = build_graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(
            c4.edges(),
            &[Edge(0, 1), Edge(0, 3), Edge(1, 2), Edge(2, 3)]
        );
        assert!(c4.neighbors(0).windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rejects_self_loop_and_out_of_range() {
        assert_eq!(build_graph(1, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            build_graph(2, &[(0, 5)]),
            Err(Error::VertexOutOfRange { index: 5, n: 2 })
        );
    }

    #[test]
    fn deduplicates_parallel_edges() {
        let g = build_graph(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.edge_id(1, 0), Some(0));
        assert_eq!(g.edge_id(0, 0), None);
    }

    #[test]
    fn components_and_induced_subgraph() {
        let g = build_graph(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(!g.is_connected());
        let h = g.induced_subgraph(&[3, 4]);
        assert_eq!(h.edges(), &[Edge(0, 1)]);
    }
}
