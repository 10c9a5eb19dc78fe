//! Exact computation of monitoring edge-geodetic sets and the related
//! geodetic parameters on small undirected graphs.
//!
//! A set `M` of vertices is a *monitoring edge-geodetic set* (MEG-set) when
//! every edge lies on all shortest paths between some pair of `M`; `meg(G)`
//! is the smallest size of such a set. The crate computes `meg` alongside the
//! geodetic number `g`, the edge-geodetic number `eg`, the strong
//! edge-geodetic number `seg` and the distance edge-monitoring number `dem`,
//! builds the graph families these parameters are studied on, and checks
//! the known relations between them.
//!
//! ```
//! use meglab_core::generators::gen_standard;
//! use meglab_core::solvers::{minimum_set, ParamKind};
//!
//! let c7 = gen_standard("cycle", &[7]).unwrap();
//! let (meg, witness) = minimum_set(&c7, ParamKind::Meg).unwrap();
//! assert_eq!(meg, 3);
//! assert_eq!(witness.to_vec(), vec![0, 1, 4]);
//! ```

pub mod bits;
pub mod error;
pub mod generators;
pub mod geodesic;
pub mod graph;
pub mod harness;
pub mod rules;
pub mod solvers;

pub use bits::{EdgeSet, VertexSet};
pub use error::{Error, Result};
pub use graph::{build_graph, Edge, Graph};
