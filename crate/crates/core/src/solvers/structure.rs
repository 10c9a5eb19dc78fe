use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{bridges, cut_vertices, Graph};

/// Vertices contained in every MEG-set.
///
/// `v` qualifies when some neighbor `u` has the property that every induced
/// 2-path `u v x` closes into a 4-cycle `u v x w u`. Degree-1 vertices qualify
/// vacuously; isolated vertices never do.
pub fn forced_meg_vertices(g: &Graph) -> VertexSet {
    let n = g.n();
    let nbhd: Vec<VertexSet> = (0..n).map(|v| g.open_neighborhood(v)).collect();
    VertexSet::from_indices(n, (0..n).filter(|&v| is_locally_forced(g, &nbhd, v)))
}

fn is_locally_forced(g: &Graph, nbhd: &[VertexSet], v: usize) -> bool {
    g.neighbors(v).iter().any(|&u| {
        g.neighbors(v).iter().all(|&x| {
            if x == u || g.has_edge(u, x) {
                return true;
            }
            let mut common = nbhd[u].intersection(&nbhd[x]);
            common.remove(v);
            !common.is_empty()
        })
    })
}

/// Vertices that no minimum MEG-set contains: cut vertices, together with
/// vertices of degree at least two whose incident edges are all bridges.
pub fn excluded_min_meg_vertices(g: &Graph) -> Result<VertexSet> {
    let mut out = cut_vertices(g)?;
    let mut bridge_degree = vec![0usize; g.n()];
    for e in bridges(g) {
        bridge_degree[e.0] += 1;
        bridge_degree[e.1] += 1;
    }
    for (v, &count) in bridge_degree.iter().enumerate() {
        if g.degree(v) >= 2 && count == g.degree(v) {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Whether `meg(G) = n`, decided by the local condition alone.
///
/// Disconnected graphs are handled componentwise, since monitoring pairs
/// never span components.
pub fn is_meg_extremal(g: &Graph) -> Result<bool> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(forced_meg_vertices(g).is_full())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_standard, product, ProductKind};

    fn std(name: &str, p: &[usize]) -> Graph {
        gen_standard(name, p).unwrap()
    }

    #[test]
    fn forced_examples() {
        assert_eq!(
            forced_meg_vertices(&std("star", &[3])).to_vec(),
            vec![1, 2, 3]
        );
        assert!(forced_meg_vertices(&std("cycle", &[4])).is_full());
        assert!(forced_meg_vertices(&std("cycle", &[5])).is_empty());
        assert!(forced_meg_vertices(&Graph::empty(2)).is_empty());
    }

    #[test]
    fn excluded_examples() {
        let p5 = std("path", &[5]);
        assert_eq!(
            excluded_min_meg_vertices(&p5).unwrap().to_vec(),
            vec![1, 2, 3]
        );
        assert!(excluded_min_meg_vertices(&std("cycle", &[5]))
            .unwrap()
            .is_empty());
        let paw = Graph::new(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        assert_eq!(excluded_min_meg_vertices(&paw).unwrap().to_vec(), vec![0]);
        assert!(excluded_min_meg_vertices(&std("path", &[2]))
            .unwrap()
            .is_empty());
        assert_eq!(
            excluded_min_meg_vertices(&Graph::empty(2)),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn extremality_examples() {
        assert!(is_meg_extremal(&std("multipartite", &[3, 3])).unwrap());
        assert!(is_meg_extremal(&std("hypercube", &[3])).unwrap());
        assert!(!is_meg_extremal(&std("cycle", &[5])).unwrap());
        assert!(!is_meg_extremal(&std("star", &[4])).unwrap());
        let fig4 = product(&std("path", &[2]), &std("path", &[3]), ProductKind::Tensor);
        assert!(!is_meg_extremal(&fig4).unwrap());
        assert_eq!(
            is_meg_extremal(&Graph::empty(1)),
            Err(Error::IsolatedVertex(0))
        );
    }
}
