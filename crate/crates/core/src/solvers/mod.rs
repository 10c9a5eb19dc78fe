//! Exact minimum-cardinality solvers for g, eg, seg, dem and meg, plus the
//! structural rules and constructive bounds that support them.

mod bounds;
mod coloring;
mod search;
mod seg;
mod structure;

pub use bounds::{girth_greedy_meg, vertex_cover_meg_set};
pub use coloring::{chromatic_number, CHROMATIC_GUARD};
pub use seg::{minimum_seg, minimum_seg_with, SegSolution};
pub use structure::{excluded_min_meg_vertices, forced_meg_vertices, is_meg_extremal};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::geodesic::{apsp, DistanceTable, DEFAULT_PATH_CAP};
use crate::graph::{simplicial_vertices, Graph};
use search::{CoverTable, SubsetSearch};

/// The five monitoring parameters, in chain order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    G,
    Eg,
    Seg,
    Dem,
    Meg,
}

impl Param {
    pub const ALL: [Param; 5] = [Param::G, Param::Eg, Param::Seg, Param::Dem, Param::Meg];

    pub fn name(self) -> &'static str {
        match self {
            Param::G => "g",
            Param::Eg => "eg",
            Param::Seg => "seg",
            Param::Dem => "dem",
            Param::Meg => "meg",
        }
    }

    /// Parses a comma-separated list; `all` selects every parameter.
    pub fn parse_list(s: &str) -> Result<Vec<Param>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part.eq_ignore_ascii_case("all") {
                out.extend(Param::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Param::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidFamily(format!("unknown parameter {s:?}")))
    }
}

/// Parameters solved by plain subset search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Geodetic,
    EdgeGeodetic,
    Dem,
    Meg,
}

/// A minimum set together with the number of candidate sets examined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub count: usize,
    pub set: VertexSet,
    pub examined: u64,
}

/// The lexicographically smallest minimum set of the given kind.
pub fn minimum_set(g: &Graph, kind: ParamKind) -> Result<(usize, VertexSet)> {
    let t = apsp(g)?;
    let s = minimum_set_with(g, &t, kind)?;
    Ok((s.count, s.set))
}

/// [`minimum_set`] over a precomputed distance table.
pub fn minimum_set_with(g: &Graph, t: &DistanceTable, kind: ParamKind) -> Result<Solution> {
    g.require_connected()?;
    if kind != ParamKind::Geodetic {
        g.require_edges()?;
    }
    let n = g.n();
    let (table, base, excluded, start) = match kind {
        ParamKind::Geodetic => (
            CoverTable::geodetic(g, t),
            VertexSet::new(n),
            VertexSet::new(n),
            1,
        ),
        ParamKind::Dem => (
            CoverTable::dem(g, t),
            VertexSet::new(n),
            VertexSet::new(n),
            1,
        ),
        ParamKind::EdgeGeodetic => {
            let base = simplicial_vertices(g);
            let start = base.count().max(2);
            (
                CoverTable::edge_geodetic(g, t),
                base,
                VertexSet::new(n),
                start,
            )
        }
        ParamKind::Meg => {
            let base = forced_meg_vertices(g);
            let start = base.count().max(2);
            (
                CoverTable::monitoring(g, t),
                base,
                excluded_min_meg_vertices(g)?,
                start,
            )
        }
    };
    let candidates: Vec<usize> = (0..n)
        .filter(|&v| !base.contains(v) && !excluded.contains(v))
        .collect();
    let mut search = SubsetSearch::new(&table, base.to_vec(), candidates);
    for size in start..=n {
        if let Some(members) = search.find(size, |_| true) {
            return Ok(Solution {
                count: size,
                set: VertexSet::from_indices(n, members),
                examined: search.examined,
            });
        }
    }
    Err(Error::ContractBreach(format!("no {kind:?} set found")))
}

/// meg of a possibly disconnected graph: the sum over its components, with
/// the union of the component witnesses. Every component needs an edge.
pub fn meg_by_components(g: &Graph) -> Result<(usize, VertexSet)> {
    let mut total = 0;
    let mut set = VertexSet::new(g.n());
    for comp in g.components() {
        let h = g.induced_subgraph(&comp);
        if h.m() == 0 {
            return Err(Error::IsolatedVertex(comp[0]));
        }
        let (count, local) = minimum_set(&h, ParamKind::Meg)?;
        total += count;
        for v in local.iter() {
            set.insert(comp[v]);
        }
    }
    Ok((total, set))
}

/// Values and canonical witnesses for a selection of parameters.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ParameterReport {
    pub values: BTreeMap<Param, usize>,
    pub witnesses: BTreeMap<Param, VertexSet>,
    /// Assigned path per pair of the seg witness, keyed `"a-b"`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seg_paths: Option<BTreeMap<String, Vec<usize>>>,
    pub examined: BTreeMap<Param, u64>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ParameterReport {
    pub fn value(&self, p: Param) -> Option<usize> {
        self.values.get(&p).copied()
    }
}

/// Computes every parameter in `params` on a connected graph with an edge.
pub fn compute_report(g: &Graph, params: &[Param]) -> Result<ParameterReport> {
    let started = Instant::now();
    g.require_connected()?;
    g.require_edges()?;
    let t = apsp(g)?;
    let mut report = ParameterReport::default();
    for &p in params {
        let (count, set, examined) = match p {
            Param::Seg => {
                let s = minimum_seg_with(g, &t, DEFAULT_PATH_CAP)?;
                report.seg_paths = Some(
                    s.assignment
                        .iter()
                        .map(|(&(a, b), path)| (format!("{a}-{b}"), path.clone()))
                        .collect(),
                );
                (s.count, s.set, s.examined)
            }
            _ => {
                let kind = match p {
                    Param::G => ParamKind::Geodetic,
                    Param::Eg => ParamKind::EdgeGeodetic,
                    Param::Dem => ParamKind::Dem,
                    _ => ParamKind::Meg,
                };
                let s = minimum_set_with(g, &t, kind)?;
                (s.count, s.set, s.examined)
            }
        };
        report.values.insert(p, count);
        report.witnesses.insert(p, set);
        report.examined.insert(p, examined);
    }
    report.elapsed = started.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{fig1, gen_g_pq, gen_standard};

    fn std(name: &str, p: &[usize]) -> Graph {
        gen_standard(name, p).unwrap()
    }

    fn meg(g: &Graph) -> (usize, Vec<usize>) {
        let (c, s) = minimum_set(g, ParamKind::Meg).unwrap();
        (c, s.to_vec())
    }

    #[test]
    fn meg_examples() {
        assert_eq!(meg(&std("complete", &[4])).0, 4);
        assert_eq!(meg(&std("path", &[4])), (2, vec![0, 3]));
        assert_eq!(meg(&std("cycle", &[7])).0, 3);
        assert_eq!(meg(&std("cycle", &[4])).0, 4);
        assert_eq!(meg(&std("path", &[2])), (2, vec![0, 1]));
    }

    #[test]
    fn fig1_values() {
        let r = compute_report(&fig1(), &Param::ALL).unwrap();
        assert_eq!(r.value(Param::G), Some(2));
        assert_eq!(r.value(Param::Eg), Some(3));
        assert_eq!(r.value(Param::Seg), Some(4));
        assert_eq!(r.value(Param::Meg), Some(5));
    }

    #[test]
    fn dem_of_star_and_pq() {
        let star = std("star", &[4]);
        assert_eq!(minimum_set(&star, ParamKind::Dem).unwrap().0, 1);
        let g = gen_g_pq(3, 5).unwrap();
        assert_eq!(minimum_set(&g, ParamKind::Dem).unwrap().0, 3);
        assert_eq!(minimum_set(&g, ParamKind::Meg).unwrap().0, 5);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            minimum_set(&Graph::empty(2), ParamKind::Meg),
            Err(Error::Disconnected)
        );
        assert_eq!(
            minimum_set(&Graph::empty(1), ParamKind::Meg),
            Err(Error::NoEdges)
        );
        assert_eq!(
            minimum_set(&Graph::empty(1), ParamKind::Geodetic)
                .unwrap()
                .0,
            1
        );
    }

    #[test]
    fn componentwise_meg() {
        let two_p3 = Graph::new(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let (c, s) = meg_by_components(&two_p3).unwrap();
        assert_eq!((c, s.to_vec()), (4, vec![0, 2, 3, 5]));
        assert!(meg_by_components(&Graph::empty(3)).is_err());
    }

    #[test]
    fn param_lists() {
        assert_eq!(
            Param::parse_list("meg,g").unwrap(),
            vec![Param::G, Param::Meg]
        );
        assert_eq!(Param::parse_list("all").unwrap(), Param::ALL.to_vec());
        assert!(Param::parse_list("foo").is_err());
    }
}
