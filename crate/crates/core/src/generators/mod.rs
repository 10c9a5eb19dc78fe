//! Graph families: standard fixtures, the prescribed-value constructions,
//! tightness families, graph operations, and seeded random classes.

mod ops;
mod random;

pub use ops::{clique_sum, clique_sum_sorted, product, subdivide, ProductKind};
pub(crate) use random::rng_for;
pub use random::{gen_class_random, gen_random_connected, gen_random_tree, GraphClass};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

/// A named family plus its integer arguments and, for random families, a seed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub name: String,
    pub args: Vec<usize>,
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn new(name: &str, args: &[usize]) -> Self {
        Self {
            name: name.to_string(),
            args: args.to_vec(),
            seed: None,
        }
    }

    pub fn seeded(name: &str, args: &[usize], seed: u64) -> Self {
        Self {
            seed: Some(seed),
            ..Self::new(name, args)
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        let a = &self.args;
        let seed = || {
            self.seed
                .ok_or_else(|| invalid(format!("family {} needs a seed", self.name)))
        };
        let want = |k: usize| {
            if a.len() == k {
                Ok(())
            } else {
                Err(invalid(format!(
                    "family {} takes {k} arguments, got {}",
                    self.name,
                    a.len()
                )))
            }
        };
        match self.name.as_str() {
            "gabcd" => {
                want(4)?;
                gen_g_abcd(a[0], a[1], a[2], a[3])
            }
            "gpq" => {
                want(2)?;
                gen_g_pq(a[0], a[1])
            }
            "kkstar" => {
                want(1)?;
                gen_kk_star(a[0])
            }
            "hk" => {
                want(1)?;
                gen_hk(a[0])
            }
            "fig1" => {
                want(0)?;
                Ok(fig1())
            }
            "random" => {
                // edge probability given in percent
                want(2)?;
                gen_random_connected(a[0], a[1] as f64 / 100.0, seed()?)
            }
            "tree" => {
                want(1)?;
                gen_random_tree(a[0], seed()?)
            }
            name => {
                if let Ok(class) = name.parse::<GraphClass>() {
                    want(1)?;
                    gen_class_random(class, a[0], seed()?)
                } else {
                    gen_standard(name, a)
                }
            }
        }
    }
}

/// Family names accepted by [`FamilySpec::generate`].
pub const FAMILY_NAMES: &[&str] = &[
    "path",
    "cycle",
    "complete",
    "multipartite",
    "star",
    "hypercube",
    "grid2",
    "petersen",
    "fan",
    "fig1",
    "gabcd",
    "gpq",
    "kkstar",
    "hk",
    "random",
    "tree",
    "cograph",
    "block",
    "wpchordal",
    "split",
    "properinterval",
];

fn edges_complete(vs: &[usize]) -> Vec<(usize, usize)> {
    vs.iter()
        .enumerate()
        .flat_map(|(i, &a)| vs[i + 1..].iter().map(move |&b| (a, b)))
        .collect()
}

/// Standard graphs with canonical numbering.
///
/// * `path n`, `cycle n`, `complete n`, `star q` (center 0)
/// * `multipartite a b ...`: parts numbered consecutively
/// * `hypercube d`: vertex ids are the bit strings
/// * `grid2 k`: `P_k □ P_2`, vertex `(i, j)` is `2i + j`
/// * `petersen`: outer 5-cycle `0..5`, spokes `i ~ i+5`, inner pentagram
/// * `fan k`: vertex 0 joined to every vertex of the path `1..=k`
pub fn gen_standard(name: &str, params: &[usize]) -> Result<Graph> {
    let one = || match params {
        [k] => Ok(*k),
        _ => Err(invalid(format!("{name} takes one argument"))),
    };
    match name {
        "path" => {
            let n = one()?;
            if n == 0 {
                return Err(invalid("path needs n >= 1"));
            }
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        "cycle" => {
            let n = one()?;
            if n < 3 {
                return Err(invalid("cycle needs n >= 3"));
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        "complete" => {
            let n = one()?;
            if n == 0 {
                return Err(invalid("complete needs n >= 1"));
            }
            Graph::new(n, edges_complete(&(0..n).collect::<Vec<_>>()))
        }
        "star" => {
            let q = one()?;
            if q == 0 {
                return Err(invalid("star needs q >= 1"));
            }
            Graph::new(q + 1, (1..=q).map(|i| (0, i)))
        }
        "multipartite" => {
            if params.is_empty() || params.contains(&0) {
                return Err(invalid("multipartite needs non-empty parts"));
            }
            let mut part = Vec::new();
            for (p, &size) in params.iter().enumerate() {
                part.extend(std::iter::repeat_n(p, size));
            }
            let n = part.len();
            Graph::new(
                n,
                (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| part[i] != part[j]),
            )
        }
        "hypercube" => {
            let d = one()?;
            if d == 0 || d > 6 {
                return Err(invalid("hypercube dimension must be in 1..=6"));
            }
            let n = 1 << d;
            Graph::new(
                n,
                (0..n)
                    .flat_map(|v| (0..d).map(move |b| (v, v ^ (1 << b))))
                    .filter(|&(u, v)| u < v),
            )
        }
        "grid2" => {
            let k = one()?;
            if k == 0 {
                return Err(invalid("grid2 needs k >= 1"));
            }
            let pk = gen_standard("path", &[k])?;
            let p2 = gen_standard("path", &[2])?;
            Ok(product(&pk, &p2, ProductKind::Cartesian))
        }
        "petersen" => {
            if !params.is_empty() {
                return Err(invalid("petersen takes no arguments"));
            }
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            Graph::new(10, outer.chain(spokes).chain(inner))
        }
        "fan" => {
            let k = one()?;
            if k == 0 {
                return Err(invalid("fan needs a path of at least one vertex"));
            }
            let spokes = (1..=k).map(|i| (0, i));
            let rim = (2..=k).map(|i| (i - 1, i));
            Graph::new(k + 1, spokes.chain(rim))
        }
        other => Err(invalid(format!("unknown family {other:?}"))),
    }
}

/// The five-vertex graph separating all four geodetic parameters: the cycle
/// `v1..v5` with chords `v1v3` and `v2v5`.
pub fn fig1() -> Graph {
    Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 4)])
        .expect("valid fixture")
        .with_labels((1..=5).map(|i| format!("v{i}")).collect())
}

/// Incremental builder that tracks labels.
#[derive(Default)]
struct Labeled {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Labeled {
    fn add(&mut self, label: impl Into<String>) -> usize {
        self.labels.push(label.into());
        self.labels.len() - 1
    }

    fn join(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn finish(self) -> Graph {
        Graph::new(self.labels.len(), self.edges)
            .expect("constructions are simple graphs")
            .with_labels(self.labels)
    }
}

/// The construction targeting `g = a`, `eg = b`, `seg = c`, `meg = d`, for
/// `4 <= a <= b <= c <= d` and `d != c + 1`. It attains `g`, `eg` and `seg`
/// exactly but gives `meg = d + 1`: no pair outside `z_2` monitors `x_1 z_2`
/// or `y z_2`, so `z_2` joins every MEG-set.
///
/// Layout: `K_{2,2+b-a}` between `{x_1, y}` and `{z_1, z_2} ∪ W`, with `W`
/// a clique and the extra edge `z_2 w_1`; `c - b + 1` internally disjoint
/// 2-paths `z_1 v_i z_2`; pendants `u_1..u_{a-3}` on `y` and `u_{a-2}` on
/// `z_1`; the tail `x_1 .. x_r u_{a-1}` with `r = 3⌊(d-c)/2⌋ + 1`, a false
/// twin `x'_{3i}` for each `x_{3i}`, and a second twin `x''_3` when `d - c`
/// is odd.
pub fn gen_g_abcd(a: usize, b: usize, c: usize, d: usize) -> Result<Graph> {
    if !(4 <= a && a <= b && b <= c && c <= d) {
        return Err(invalid(format!(
            "gabcd needs 4 <= a <= b <= c <= d, got ({a},{b},{c},{d})"
        )));
    }
    if d == c + 1 {
        return Err(invalid(format!(
            "gabcd excludes d = c + 1, got ({a},{b},{c},{d})"
        )));
    }
    let half = (d - c) / 2;
    let r = 3 * half + 1;

    let mut g = Labeled::default();
    let x1 = g.add("x_1");
    let y = g.add("y");
    let z1 = g.add("z_1");
    let z2 = g.add("z_2");
    let w: Vec<usize> = (1..=b - a).map(|i| g.add(format!("w_{i}"))).collect();
    let v: Vec<usize> = (1..=c - b + 1).map(|i| g.add(format!("v_{i}"))).collect();
    let u: Vec<usize> = (1..=a - 1).map(|i| g.add(format!("u_{i}"))).collect();

    for &left in &[x1, y] {
        for &right in [z1, z2].iter().chain(&w) {
            g.join(left, right);
        }
    }
    for (i, &wi) in w.iter().enumerate() {
        for &wj in &w[i + 1..] {
            g.join(wi, wj);
        }
    }
    if let Some(&w1) = w.first() {
        g.join(z2, w1);
    }
    for &vi in &v {
        g.join(z1, vi);
        g.join(vi, z2);
    }
    for &ui in &u[..a - 3] {
        g.join(y, ui);
    }
    g.join(z1, u[a - 3]);

    // tail x_1 .. x_r u_{a-1}; tail[i] is x_{i+1}
    let mut tail = vec![x1];
    for i in 2..=r {
        tail.push(g.add(format!("x_{i}")));
    }
    for pair in tail.windows(2) {
        g.join(pair[0], pair[1]);
    }
    g.join(tail[r - 1], u[a - 2]);
    for i in 1..=half {
        let t = g.add(format!("x'_{}", 3 * i));
        g.join(tail[3 * i - 2], t);
        g.join(t, tail[3 * i]);
    }
    if (d - c) % 2 == 1 {
        let t = g.add("x''_3");
        g.join(tail[1], t);
        g.join(t, tail[3]);
    }
    Ok(g.finish())
}

/// Connected graph with `dem = p` and `meg = q` for `1 <= p < q`.
///
/// `p = 1` gives the star `K_{1,q}`; otherwise `K_{p+1}` with `q - p`
/// pendants on `u_1`.
pub fn gen_g_pq(p: usize, q: usize) -> Result<Graph> {
    if !(1 <= p && p < q) {
        return Err(invalid(format!("gpq needs 1 <= p < q, got ({p},{q})")));
    }
    let mut g = Labeled::default();
    if p == 1 {
        let y = g.add("y");
        for i in 1..=q {
            let leaf = g.add(format!("u_{i}"));
            g.join(y, leaf);
        }
        return Ok(g.finish());
    }
    let clique: Vec<usize> = (1..=p + 1).map(|i| g.add(format!("u_{i}"))).collect();
    for (a, b) in edges_complete(&clique) {
        g.join(a, b);
    }
    for i in 1..=q - p {
        let leaf = g.add(format!("v_{i}"));
        g.join(clique[0], leaf);
    }
    Ok(g.finish())
}

/// `K_k` with one pendant neighbor per clique vertex. Clique vertices are
/// `0..k`.
pub fn gen_kk_star(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(invalid("kkstar needs k >= 2"));
    }
    let mut g = Labeled::default();
    let clique: Vec<usize> = (1..=k).map(|i| g.add(format!("c_{i}"))).collect();
    for (a, b) in edges_complete(&clique) {
        g.join(a, b);
    }
    for (i, &c) in clique.iter().enumerate() {
        let p = g.add(format!("p_{}", i + 1));
        g.join(c, p);
    }
    Ok(g.finish())
}

/// `H_k`: the clique `v_0..v_k` (ids `0..=k`), a 3-path
/// `v_{i,1} v_{i,2} v_{i,3} v_i` hanging from each `v_i`, and a clique on the
/// `v_{i,2}` whose edges are each subdivided once.
pub fn gen_hk(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(invalid("hk needs k >= 2"));
    }
    let mut g = Labeled::default();
    let core: Vec<usize> = (0..=k).map(|i| g.add(format!("v_{i}"))).collect();
    for (a, b) in edges_complete(&core) {
        g.join(a, b);
    }
    let mut middle = Vec::with_capacity(k + 1);
    for (i, &vi) in core.iter().enumerate() {
        let p1 = g.add(format!("v_{{{i},1}}"));
        let p2 = g.add(format!("v_{{{i},2}}"));
        let p3 = g.add(format!("v_{{{i},3}}"));
        g.join(p1, p2);
        g.join(p2, p3);
        g.join(p3, vi);
        middle.push(p2);
    }
    for i in 0..=k {
        for j in i + 1..=k {
            let s = g.add(format!("s_{{{i},{j}}}"));
            g.join(middle[i], s);
            g.join(s, middle[j]);
        }
    }
    Ok(g.finish())
}
