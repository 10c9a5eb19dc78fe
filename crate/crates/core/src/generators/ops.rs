use std::str::FromStr;

use serde::Serialize;

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ProductKind {
    Cartesian,
    Strong,
    Tensor,
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cartesian" | "box" => Ok(Self::Cartesian),
            "strong" => Ok(Self::Strong),
            "tensor" | "direct" | "categorical" => Ok(Self::Tensor),
            other => Err(Error::InvalidFamily(format!("unknown product {other:?}"))),
        }
    }
}

/// Product graph on `V(G) × V(H)`; `(a, b)` gets id `a·|V(H)| + b`.
pub fn product(g: &Graph, h: &Graph, kind: ProductKind) -> Graph {
    let nh = h.n();
    let id = |a: usize, b: usize| a * nh + b;
    let mut edges = Vec::new();
    let g_moves = matches!(kind, ProductKind::Cartesian | ProductKind::Strong);
    let diag = matches!(kind, ProductKind::Strong | ProductKind::Tensor);
    for a in 0..g.n() {
        for b in 0..nh {
            // a = a', bb' ∈ E(H)
            if g_moves {
                for &b2 in h.neighbors(b) {
                    edges.push((id(a, b), id(a, b2)));
                }
            }
            for &a2 in g.neighbors(a) {
                // aa' ∈ E(G), b = b'
                if g_moves {
                    edges.push((id(a, b), id(a2, b)));
                }
                // aa' ∈ E(G), bb' ∈ E(H)
                if diag {
                    for &b2 in h.neighbors(b) {
                        edges.push((id(a, b), id(a2, b2)));
                    }
                }
            }
        }
    }
    let labels = (0..g.n())
        .flat_map(|a| (0..nh).map(move |b| (a, b)))
        .map(|(a, b)| format!("({},{})", g.label(a), h.label(b)))
        .collect();
    Graph::new(g.n() * nh, edges)
        .expect("product of simple graphs is simple")
        .with_labels(labels)
}

/// Replaces every edge by a path with `l` new internal vertices. New
/// vertices follow the originals, edge by edge in canonical edge order.
pub fn subdivide(g: &Graph, l: usize) -> Graph {
    if l == 0 {
        return g.clone();
    }
    let n = g.n();
    let mut labels: Vec<String> = (0..n).map(|v| g.label(v)).collect();
    let mut edges = Vec::with_capacity(g.m() * (l + 1));
    let mut next = n;
    for e in g.edges() {
        let mut prev = e.0;
        for j in 1..=l {
            labels.push(format!("s[{},{}]_{j}", g.label(e.0), g.label(e.1)));
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, e.1));
    }
    Graph::new(next, edges)
        .expect("subdivision is simple")
        .with_labels(labels)
}

fn check_clique(g: &Graph, c: &[usize], which: &str) -> Result<()> {
    for (i, &a) in c.iter().enumerate() {
        if a >= g.n() {
            return Err(Error::VertexOutOfRange { index: a, n: g.n() });
        }
        for &b in &c[i + 1..] {
            if a == b || !g.has_edge(a, b) {
                return Err(Error::Precondition(format!(
                    "{which} does not induce a clique ({a}, {b})"
                )));
            }
        }
    }
    Ok(())
}

/// k-clique-sum without edge deletion. `c1[i]` is identified with `c2[i]`.
///
/// `G1` keeps its ids; the vertices of `G2` outside `C2` follow in order.
pub fn clique_sum(g1: &Graph, c1: &[usize], g2: &Graph, c2: &[usize]) -> Result<Graph> {
    if c1.len() != c2.len() {
        return Err(Error::Precondition(format!(
            "clique sizes differ: {} vs {}",
            c1.len(),
            c2.len()
        )));
    }
    if c1.len() < 2 {
        return Err(Error::Precondition("clique-sum needs k >= 2".into()));
    }
    check_clique(g1, c1, "C1")?;
    check_clique(g2, c2, "C2")?;

    let mut map = vec![usize::MAX; g2.n()];
    for (&a, &b) in c1.iter().zip(c2) {
        map[b] = a;
    }
    let mut labels: Vec<String> = (0..g1.n()).map(|v| g1.label(v)).collect();
    let mut next = g1.n();
    for (v, slot) in map.iter_mut().enumerate() {
        if *slot == usize::MAX {
            *slot = next;
            labels.push(format!("{}'", g2.label(v)));
            next += 1;
        }
    }
    let edges = g1
        .edges()
        .iter()
        .map(|e| (e.0, e.1))
        .chain(g2.edges().iter().map(|e| (map[e.0], map[e.1])));
    Ok(Graph::new(next, edges)?.with_labels(labels))
}

/// Clique-sum matching the two cliques in ascending vertex order.
pub fn clique_sum_sorted(g1: &Graph, c1: &VertexSet, g2: &Graph, c2: &VertexSet) -> Result<Graph> {
    clique_sum(g1, &c1.to_vec(), g2, &c2.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_hk, gen_kk_star, gen_standard};
    use crate::graph::{girth, is_two_connected};

    fn std(name: &str, p: &[usize]) -> Graph {
        gen_standard(name, p).unwrap()
    }

    #[test]
    fn cartesian_k2_k2_is_c4() {
        let g = product(
            &std("path", &[2]),
            &std("path", &[2]),
            ProductKind::Cartesian,
        );
        assert_eq!((g.n(), g.m()), (4, 4));
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
    }

    #[test]
    fn tensor_k2_p3_is_two_paths() {
        let g = product(&std("path", &[2]), &std("path", &[3]), ProductKind::Tensor);
        assert_eq!((g.n(), g.m()), (6, 4));
        assert_eq!(g.components().len(), 2);
        assert_eq!((0..6).filter(|&v| g.degree(v) == 1).count(), 4);
    }

    #[test]
    fn product_sizes() {
        let (a, b) = (std("complete", &[3]), std("cycle", &[5]));
        let cart = product(&a, &b, ProductKind::Cartesian);
        let strong = product(&a, &b, ProductKind::Strong);
        let tensor = product(&a, &b, ProductKind::Tensor);
        for g in [&cart, &strong, &tensor] {
            assert_eq!(g.n(), 15);
        }
        // |E| formulas: n_G m_H + m_G n_H, plus 2 m_G m_H for the strong product
        assert_eq!(cart.m(), 3 * 5 + 3 * 5);
        assert_eq!(tensor.m(), 2 * 3 * 5);
        assert_eq!(strong.m(), cart.m() + tensor.m());
    }

    #[test]
    fn subdivision_counts() {
        let c5 = std("cycle", &[5]);
        let s = subdivide(&c5, 2);
        assert_eq!((s.n(), s.m()), (15, 15));
        assert_eq!(girth(&s), Some(15));
        assert_eq!(subdivide(&c5, 0), c5);
        let k4 = std("complete", &[4]);
        let s = subdivide(&k4, 3);
        assert_eq!((s.n(), s.m()), (4 + 6 * 3, 6 * 4));
        assert_eq!(girth(&s), Some(12));
        assert!(is_two_connected(&s));
    }

    #[test]
    fn clique_sum_kk_star() {
        let g1 = gen_kk_star(3).unwrap();
        let g = clique_sum(&g1, &[0, 1, 2], &g1, &[0, 1, 2]).unwrap();
        assert_eq!(g.n(), 9);
        assert!((0..3).all(|v| g.degree(v) == 4));
    }

    #[test]
    fn clique_sum_hk() {
        let h = gen_hk(3).unwrap();
        let g = clique_sum(&h, &[1, 2, 3], &h, &[1, 2, 3]).unwrap();
        assert_eq!(g.n(), 2 * h.n() - 3);
        assert_eq!(g.m(), 2 * h.m() - 3);
        assert_eq!((0..g.n()).filter(|&v| g.degree(v) == 1).count(), 8);
    }

    #[test]
    fn clique_sum_rejects_bad_input() {
        let c4 = std("cycle", &[4]);
        assert!(matches!(
            clique_sum(&c4, &[0, 2], &c4, &[0, 1]),
            Err(Error::Precondition(_))
        ));
        assert!(clique_sum(&c4, &[0, 1], &c4, &[0]).is_err());
        assert!(clique_sum(&c4, &[0], &c4, &[0]).is_err());
    }
}
