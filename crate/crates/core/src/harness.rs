//! Verification campaigns: deterministic instance lists, parallel checking,
//! and JSON-lines / CSV reports.
//!
//! All randomness derives from the campaign seed through ChaCha8
//! (`ChaCha8Rng::seed_from_u64`): instance parameters and per-instance seeds
//! are drawn sequentially from that master generator before any work starts,
//! so reports do not depend on scheduling.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::generators::rng_for;
use crate::generators::{
    clique_sum, fig1, gen_class_random, gen_g_abcd, gen_g_pq, gen_hk, gen_kk_star,
    gen_random_connected, gen_random_tree, gen_standard, product, subdivide, GraphClass,
    ProductKind,
};
use crate::graph::{cut_vertices, girth, Graph};
use crate::rules::{
    check_chain, check_chromatic_bound, check_class_formula, check_cliquesum_bounds, check_engine,
    check_extremality, check_forced_vertices, check_girth_bound, check_meg_set,
    check_product_extremality, check_subdivision_bounds, check_values, error_verdict, BoundMode,
    CheckOptions, TheoremVerdict,
};
use crate::solvers::Param;

/// The campaigns `verify` can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Campaign {
    Fixtures,
    Constructions,
    Forced,
    Chain,
    Classes,
    Products,
    Girth,
    Chromatic,
    CliqueSum,
    Subdivision,
    Engine,
}

impl Campaign {
    pub const ALL: [Campaign; 11] = [
        Campaign::Fixtures,
        Campaign::Constructions,
        Campaign::Forced,
        Campaign::Chain,
        Campaign::Classes,
        Campaign::Products,
        Campaign::Girth,
        Campaign::Chromatic,
        Campaign::CliqueSum,
        Campaign::Subdivision,
        Campaign::Engine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Campaign::Fixtures => "fixtures",
            Campaign::Constructions => "constructions",
            Campaign::Forced => "forced",
            Campaign::Chain => "chain",
            Campaign::Classes => "classes",
            Campaign::Products => "products",
            Campaign::Girth => "girth",
            Campaign::Chromatic => "chromatic",
            Campaign::CliqueSum => "cliquesum",
            Campaign::Subdivision => "subdivision",
            Campaign::Engine => "engine",
        }
    }

    /// `(n_max, samples)` used when the config leaves them unset.
    pub fn defaults(self) -> (usize, usize) {
        match self {
            Campaign::Forced => (7, 300),
            Campaign::Chain => (8, 200),
            Campaign::Classes => (14, 25),
            Campaign::CliqueSum => (7, 10),
            Campaign::Engine => (8, 100),
            _ => (0, 0),
        }
    }

    /// Whether the campaign draws random instances.
    pub fn is_random(self) -> bool {
        !matches!(self.defaults(), (0, 0))
    }
}

impl fmt::Display for Campaign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Campaign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace(['-', '_'], "");
        Campaign::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| Error::InvalidFamily(format!("unknown campaign {s:?}")))
    }
}

/// Everything that determines a campaign's report.
#[derive(Debug, Clone, PartialEq)]
pub struct CampaignConfig {
    pub campaign: Campaign,
    pub seed: u64,
    pub n_max: Option<usize>,
    pub samples: Option<usize>,
    /// Fixed edge probability for random graphs; drawn per instance if unset.
    pub edge_prob: Option<f64>,
    /// Factor pairs for the products campaign, e.g. `("k3", "p4")`.
    pub pairs: Option<Vec<(String, String)>>,
    pub options: CheckOptions,
    /// Record wall-clock time per instance. Off by default so that reports
    /// are reproducible byte for byte.
    pub timing: bool,
}

impl CampaignConfig {
    pub fn new(campaign: Campaign, seed: u64) -> Self {
        Self {
            campaign,
            seed,
            n_max: None,
            samples: None,
            edge_prob: None,
            pairs: None,
            options: CheckOptions::from_env(),
            timing: false,
        }
    }

    fn n_max(&self) -> usize {
        self.n_max.unwrap_or(self.campaign.defaults().0)
    }

    fn samples(&self) -> usize {
        self.samples.unwrap_or(self.campaign.defaults().1)
    }

    fn validate(&self) -> Result<()> {
        if self.campaign.is_random() {
            let n = self.n_max();
            if n < 2 {
                return Err(Error::InvalidFamily(format!("n-max {n} < 2")));
            }
            if n > self.options.guard_n {
                return Err(Error::GuardExceeded {
                    n,
                    guard: self.options.guard_n,
                });
            }
        }
        if let Some(p) = self.edge_prob {
            if !(p > 0.0 && p <= 1.0) {
                return Err(Error::InvalidFamily(format!(
                    "edge probability {p} outside (0, 1]"
                )));
            }
        }
        Ok(())
    }
}

/// One line of a campaign report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub instance_id: String,
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub girth: Option<usize>,
    pub cut_vertices: usize,
    /// Short-form graph6 encoding (absent above 62 vertices).
    pub graph6: Option<String>,
    pub values: BTreeMap<Param, usize>,
    pub witnesses: BTreeMap<Param, Vec<usize>>,
    pub verdicts: Vec<TheoremVerdict>,
    pub verdict: Outcome,
    pub millis: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Observed,
    Fail,
}

impl Outcome {
    fn name(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Observed => "observed",
            Outcome::Fail => "fail",
        }
    }
}

/// A finished campaign.
#[derive(Debug, Clone, PartialEq)]
pub struct CampaignReport {
    pub campaign: Campaign,
    pub rows: Vec<ReportRow>,
}

pub const CSV_HEADER: &str = "instance_id,n,m,girth,cut_vertices,g,eg,seg,dem,meg,verdict,millis";

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.verdict != Outcome::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| r.verdict == Outcome::Fail)
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&serde_json::to_string(row).expect("rows serialize"));
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        let opt = |v: Option<usize>| v.map_or(String::new(), |x| x.to_string());
        for r in &self.rows {
            let mut fields = vec![
                r.instance_id.clone(),
                r.n.to_string(),
                r.m.to_string(),
                opt(r.girth),
                r.cut_vertices.to_string(),
            ];
            fields.extend(Param::ALL.iter().map(|p| opt(r.values.get(p).copied())));
            fields.push(r.verdict.name().to_string());
            fields.push(r.millis.map_or(String::new(), |x| x.to_string()));
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    /// Writes `<stem>.jsonl`, `<stem>.csv`, and the edge list of every
    /// failing instance under `<dir>/failures/`. Returns the written paths.
    pub fn write(&self, dir: &Path, stem: &str) -> std::io::Result<Vec<PathBuf>> {
        fs::create_dir_all(dir)?;
        let jsonl = dir.join(format!("{stem}.jsonl"));
        let csv = dir.join(format!("{stem}.csv"));
        fs::write(&jsonl, self.to_jsonl())?;
        fs::write(&csv, self.to_csv())?;
        let mut written = vec![jsonl, csv];
        for row in self.failures() {
            let failures = dir.join("failures");
            fs::create_dir_all(&failures)?;
            let path = failures.join(format!("{}.edgelist", row.instance_id));
            let text = row
                .verdicts
                .iter()
                .find_map(|v| v.witness.clone())
                .unwrap_or_default();
            fs::write(&path, text)?;
            written.push(path);
        }
        Ok(written)
    }
}

/// A graph plus the checks to run on it.
struct Instance {
    family: String,
    graph: Graph,
    job: Job,
}

enum Job {
    Values(Vec<(Param, usize)>),
    MegSet(VertexSet),
    Extremal(bool),
    Forced,
    Chain,
    Class(GraphClass),
    /// Factors, product kind, and whether to run in observe mode.
    Product(Graph, Graph, ProductKind, bool),
    Girth(BoundMode),
    Chromatic,
    CliqueSum(Graph, Vec<usize>, Graph, Vec<usize>),
    Subdivision(usize),
    Engine,
}

fn std_graph(name: &str, params: &[usize]) -> Graph {
    gen_standard(name, params).expect("built-in fixture parameters are valid")
}

fn instance(family: impl Into<String>, graph: Graph, job: Job) -> Instance {
    Instance {
        family: family.into(),
        graph,
        job,
    }
}

/// Parses a short factor name: `k<n>` (one digit), `k<a><b>` (complete
/// bipartite), `p<n>`, `c<n>`, `q<d>`, `s<q>` (star).
pub fn parse_factor(name: &str) -> Result<Graph> {
    let bad = || Error::InvalidFamily(format!("unknown factor {name:?}"));
    let lower = name.to_ascii_lowercase();
    let (head, digits) = lower.split_at(1.min(lower.len()));
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let k: usize = digits.parse().map_err(|_| bad())?;
    match (head, digits.len()) {
        ("k", 1) => gen_standard("complete", &[k]),
        ("k", 2) => {
            let d = digits.as_bytes();
            gen_standard(
                "multipartite",
                &[(d[0] - b'0') as usize, (d[1] - b'0') as usize],
            )
        }
        ("p", _) => gen_standard("path", &[k]),
        ("c", _) => gen_standard("cycle", &[k]),
        ("q", _) => gen_standard("hypercube", &[k]),
        ("s", _) => gen_standard("star", &[k]),
        _ => Err(bad()),
    }
}

fn leaves(g: &Graph) -> Vec<(Param, usize)> {
    vec![(Param::Meg, (0..g.n()).filter(|&v| g.degree(v) == 1).count())]
}

fn fixture_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    let all = |v: usize| {
        Param::ALL
            .iter()
            .filter(|&&p| p != Param::Dem)
            .map(|&p| (p, v))
            .collect()
    };
    for n in 2..=6 {
        out.push(instance(
            format!("complete {n}"),
            std_graph("complete", &[n]),
            Job::Values(all(n)),
        ));
    }
    for n in 2..=8 {
        let g = std_graph("path", &[n]);
        let job = Job::Values(leaves(&g));
        out.push(instance(format!("path {n}"), g, job));
    }
    for n in 4..=10 {
        let meg = if n == 4 { 4 } else { 3 };
        out.push(instance(
            format!("cycle {n}"),
            std_graph("cycle", &[n]),
            Job::Values(vec![(Param::Meg, meg)]),
        ));
    }
    for k in 2..=5 {
        out.push(instance(
            format!("grid2 {k}"),
            std_graph("grid2", &[k]),
            Job::Values(vec![(Param::Meg, 2 * k)]),
        ));
    }
    out.push(instance(
        "fig1",
        fig1(),
        Job::Values(vec![
            (Param::G, 2),
            (Param::Eg, 3),
            (Param::Seg, 4),
            (Param::Meg, 5),
        ]),
    ));
    out.push(instance(
        "fan 6",
        std_graph("fan", &[6]),
        Job::Values(vec![(Param::Meg, 6)]),
    ));
    for (a, b) in [(2, 2), (2, 3), (3, 3), (2, 4)] {
        out.push(instance(
            format!("multipartite {a} {b}"),
            std_graph("multipartite", &[a, b]),
            Job::Extremal(true),
        ));
    }
    for d in 2..=4 {
        out.push(instance(
            format!("hypercube {d}"),
            std_graph("hypercube", &[d]),
            Job::Extremal(true),
        ));
    }
    for q in 2..=5 {
        out.push(instance(
            format!("star {q}"),
            std_graph("star", &[q]),
            Job::Extremal(false),
        ));
    }
    out.push(instance(
        "cycle 5",
        std_graph("cycle", &[5]),
        Job::Extremal(false),
    ));
    let fig4 = product(
        &std_graph("path", &[2]),
        &std_graph("path", &[3]),
        ProductKind::Tensor,
    );
    let pendants =
        VertexSet::from_indices(fig4.n(), (0..fig4.n()).filter(|&v| fig4.degree(v) == 1));
    out.push(instance("tensor k2 p3", fig4, Job::MegSet(pendants)));
    out
}

fn construction_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for (a, b, c, d) in [(4, 4, 4, 4), (4, 5, 6, 6), (4, 5, 6, 8), (5, 5, 7, 9)] {
        let g = gen_g_abcd(a, b, c, d).expect("valid quadruple");
        let job = Job::Values(vec![
            (Param::G, a),
            (Param::Eg, b),
            (Param::Seg, c),
            (Param::Meg, d),
        ]);
        out.push(instance(format!("gabcd {a} {b} {c} {d}"), g, job));
    }
    for (p, q) in [(1, 4), (2, 4), (3, 5)] {
        let g = gen_g_pq(p, q).expect("valid pair");
        out.push(instance(
            format!("gpq {p} {q}"),
            g,
            Job::Values(vec![(Param::Dem, p), (Param::Meg, q)]),
        ));
    }
    out
}

fn draw_random(
    rng: &mut ChaCha8Rng,
    cfg: &CampaignConfig,
    n_min: usize,
) -> Result<(String, Graph)> {
    let n = rng.gen_range(n_min..=cfg.n_max().max(n_min));
    let p = cfg
        .edge_prob
        .unwrap_or_else(|| rng.gen_range(30..=80) as f64 / 100.0);
    let seed: u64 = rng.gen();
    let g = gen_random_connected(n, p, seed)?;
    Ok((format!("random {n} {p} {seed}"), g))
}

fn random_instances(
    cfg: &CampaignConfig,
    make: impl Fn() -> Job,
    fixtures: Vec<Instance>,
) -> Result<Vec<Instance>> {
    let mut rng = rng_for(cfg.seed);
    let mut out = Vec::new();
    for _ in 0..cfg.samples() {
        let (family, g) = draw_random(&mut rng, cfg, 2)?;
        out.push(instance(family, g, make()));
    }
    out.extend(fixtures);
    Ok(out)
}

fn product_instance(
    a: &str,
    g: Graph,
    b: &str,
    h: Graph,
    kind: ProductKind,
    observe: bool,
) -> Instance {
    let family = format!("{kind:?} {a} {b}").to_lowercase();
    let p = product(&g, &h, kind);
    instance(family, p, Job::Product(g, h, kind, observe))
}

fn product_instances(cfg: &CampaignConfig) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    let pairs = match &cfg.pairs {
        Some(p) => p.clone(),
        None => ["k3", "k23", "q2"]
            .iter()
            .flat_map(|a| ["p3", "p4", "c5"].map(|b| (a.to_string(), b.to_string())))
            .collect(),
    };
    for (a, b) in &pairs {
        let (g, h) = (parse_factor(a)?, parse_factor(b)?);
        for kind in [ProductKind::Cartesian, ProductKind::Strong] {
            out.push(product_instance(a, g.clone(), b, h.clone(), kind, false));
        }
        let both = crate::solvers::is_meg_extremal(&g)? && crate::solvers::is_meg_extremal(&h)?;
        if both || cfg.options.observe {
            out.push(product_instance(a, g, b, h, ProductKind::Tensor, false));
        }
    }
    if cfg.pairs.is_none() {
        let (k3, k4) = (std_graph("complete", &[3]), std_graph("complete", &[4]));
        out.push(product_instance(
            "k3",
            k3,
            "k4",
            k4,
            ProductKind::Tensor,
            false,
        ));
        let (k2, p3) = (std_graph("path", &[2]), std_graph("path", &[3]));
        out.push(product_instance(
            "k2",
            k2,
            "p3",
            p3,
            ProductKind::Tensor,
            true,
        ));
    }
    Ok(out)
}

fn girth_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for g in 4..=14 {
        out.push(instance(
            format!("cycle {g}"),
            std_graph("cycle", &[g]),
            Job::Girth(BoundMode::Exact),
        ));
    }
    for (name, params) in [
        ("complete", &[4][..]),
        ("hypercube", &[3][..]),
        ("petersen", &[][..]),
    ] {
        let s = subdivide(&std_graph(name, params), 3);
        out.push(instance(
            format!("subdivide3 {name}"),
            s,
            Job::Girth(BoundMode::GreedyOnly),
        ));
    }
    out
}

fn chromatic_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for n in [5, 7, 9] {
        out.push(instance(
            format!("cycle {n}"),
            std_graph("cycle", &[n]),
            Job::Chromatic,
        ));
    }
    out.push(instance(
        "petersen",
        std_graph("petersen", &[]),
        Job::Chromatic,
    ));
    let pendant = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).expect("valid");
    out.push(instance("cycle 5 + pendant", pendant, Job::Chromatic));
    let mut edges: Vec<(usize, usize)> = std_graph("petersen", &[])
        .edges()
        .iter()
        .map(|e| (e.0, e.1))
        .collect();
    edges.extend([(0, 10), (10, 11), (5, 12)]);
    out.push(instance(
        "petersen + tails",
        Graph::new(13, edges).expect("valid"),
        Job::Chromatic,
    ));
    out.push(instance(
        "subdivide1 k4",
        subdivide(&std_graph("complete", &[4]), 1),
        Job::Chromatic,
    ));
    for seed in 0..3 {
        out.push(instance(
            format!("tree 10 {seed}"),
            gen_random_tree(10, seed).expect("n >= 1"),
            Job::Chromatic,
        ));
    }
    out
}

fn random_clique(rng: &mut ChaCha8Rng, g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut cliques = Vec::new();
    for e in g.edges() {
        if k == 2 {
            cliques.push(vec![e.0, e.1]);
            continue;
        }
        for &w in g.neighbors(e.1) {
            if w > e.1 && g.has_edge(e.0, w) {
                cliques.push(vec![e.0, e.1, w]);
            }
        }
    }
    if cliques.is_empty() {
        return None;
    }
    let i = rng.gen_range(0..cliques.len());
    Some(cliques.swap_remove(i))
}

fn sum_instance(
    family: String,
    g1: Graph,
    c1: Vec<usize>,
    g2: Graph,
    c2: Vec<usize>,
) -> Result<Instance> {
    let sum = clique_sum(&g1, &c1, &g2, &c2)?;
    Ok(instance(family, sum, Job::CliqueSum(g1, c1, g2, c2)))
}

fn cliquesum_instances(cfg: &CampaignConfig) -> Result<Vec<Instance>> {
    let mut rng = rng_for(cfg.seed);
    let mut out = Vec::new();
    for _ in 0..cfg.samples() {
        let (f1, g1) = draw_random(&mut rng, cfg, 3)?;
        let (f2, g2) = draw_random(&mut rng, cfg, 3)?;
        let k = if rng.gen_bool(0.5) { 3 } else { 2 };
        let pick = |rng: &mut ChaCha8Rng, k| {
            let c1 = random_clique(rng, &g1, k)?;
            let c2 = random_clique(rng, &g2, k)?;
            Some((c1, c2))
        };
        let (c1, c2) = pick(&mut rng, k)
            .or_else(|| pick(&mut rng, 2))
            .expect("connected graphs on 3+ vertices have edges");
        let family = format!("({f1}) + ({f2}) on {c1:?} {c2:?}");
        out.push(sum_instance(family, g1, c1, g2, c2)?);
    }
    for k in [3, 4] {
        let star = gen_kk_star(k).expect("k >= 2");
        let core: Vec<usize> = (0..k).collect();
        out.push(sum_instance(
            format!("kkstar {k} twice"),
            star.clone(),
            core.clone(),
            star,
            core,
        )?);
        let h = gen_hk(k).expect("k >= 2");
        let glue: Vec<usize> = (1..=k).collect();
        out.push(sum_instance(
            format!("hk {k} twice"),
            h.clone(),
            glue.clone(),
            h,
            glue,
        )?);
    }
    let c4 = std_graph("cycle", &[4]);
    out.push(sum_instance(
        "cycle 4 twice on an edge".into(),
        c4.clone(),
        vec![0, 1],
        c4,
        vec![0, 1],
    )?);
    Ok(out)
}

fn subdivision_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    let bases = [
        ("cycle 5", std_graph("cycle", &[5])),
        ("complete 4", std_graph("complete", &[4])),
        ("grid2 3", std_graph("grid2", &[3])),
        ("grid2 4", std_graph("grid2", &[4])),
        ("grid2 5", std_graph("grid2", &[5])),
    ];
    for (name, g) in bases {
        for l in [2, 3] {
            out.push(instance(
                format!("{name} subdivided {l}"),
                g.clone(),
                Job::Subdivision(l),
            ));
        }
    }
    out
}

fn class_instances(cfg: &CampaignConfig) -> Result<Vec<Instance>> {
    let mut rng = rng_for(cfg.seed);
    let mut out = Vec::new();
    let top = cfg.n_max().max(4);
    for class in GraphClass::ALL {
        for _ in 0..cfg.samples() {
            let size = rng.gen_range(4..=top);
            let seed: u64 = rng.gen();
            let g = gen_class_random(class, size, seed)?;
            out.push(instance(
                format!("{} {size} {seed}", class.name()),
                g,
                Job::Class(class),
            ));
        }
    }
    out.push(instance(
        "fan 6",
        std_graph("fan", &[6]),
        Job::Values(vec![(Param::Meg, 6)]),
    ));
    Ok(out)
}

fn instances(cfg: &CampaignConfig) -> Result<Vec<Instance>> {
    Ok(match cfg.campaign {
        Campaign::Fixtures => fixture_instances(),
        Campaign::Constructions => construction_instances(),
        Campaign::Forced => {
            let mut fixtures: Vec<Instance> = fixture_instances()
                .into_iter()
                .chain(construction_instances())
                .filter(|i| i.graph.is_connected())
                .collect();
            for i in &mut fixtures {
                i.job = Job::Forced;
            }
            random_instances(cfg, || Job::Forced, fixtures)?
        }
        Campaign::Chain => random_instances(cfg, || Job::Chain, Vec::new())?,
        Campaign::Engine => random_instances(cfg, || Job::Engine, Vec::new())?,
        Campaign::Classes => class_instances(cfg)?,
        Campaign::Products => product_instances(cfg)?,
        Campaign::Girth => girth_instances(),
        Campaign::Chromatic => chromatic_instances(),
        Campaign::CliqueSum => cliquesum_instances(cfg)?,
        Campaign::Subdivision => subdivision_instances(),
    })
}

fn stats(g: &Graph) -> (Option<usize>, usize) {
    let cuts = g
        .components()
        .iter()
        .map(|c| cut_vertices(&g.induced_subgraph(c)).map_or(0, |s| s.count()))
        .sum();
    (girth(g), cuts)
}

fn run_job(inst: &Instance, id: &str, opts: &CheckOptions) -> Result<TheoremVerdict> {
    let g = &inst.graph;
    match &inst.job {
        Job::Values(expected) => check_values(g, expected, id, opts),
        Job::MegSet(set) => check_meg_set(g, set, id),
        Job::Extremal(want) => check_extremality(g, *want, id),
        Job::Forced => check_forced_vertices(g, id),
        Job::Chain => check_chain(g, id),
        Job::Class(class) => check_class_formula(g, *class, id, opts),
        Job::Product(a, b, kind, observe) => {
            let opts = CheckOptions {
                observe: *observe || opts.observe,
                ..*opts
            };
            check_product_extremality(a, b, *kind, id, &opts)
        }
        Job::Girth(mode) => check_girth_bound(g, *mode, id, opts),
        Job::Chromatic => check_chromatic_bound(g, id, opts),
        Job::CliqueSum(g1, c1, g2, c2) => check_cliquesum_bounds(g1, c1, g2, c2, id, opts),
        Job::Subdivision(l) => check_subdivision_bounds(g, *l, id, opts),
        Job::Engine => check_engine(g, id),
    }
}

/// Runs a campaign. Instances are checked in parallel; rows come back in
/// instance order.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    cfg.validate()?;
    let list = instances(cfg)?;
    let width = list.len().to_string().len().max(4);
    let rows = list
        .par_iter()
        .enumerate()
        .map(|(i, inst)| {
            let id = format!("{}-{:0width$}", cfg.campaign, i, width = width);
            let started = Instant::now();
            let result = run_job(inst, &id, &cfg.options);
            let millis = cfg.timing.then(|| started.elapsed().as_millis() as u64);
            let v = match result {
                Err(e @ Error::GuardExceeded { .. }) => return Err(e),
                Err(e) => {
                    let mut v = error_verdict(cfg.campaign.name(), &id, &e);
                    v.witness = Some(inst.graph.to_edge_list());
                    v
                }
                Ok(v) => v,
            };
            Ok(row(id, inst, v, millis))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CampaignReport {
        campaign: cfg.campaign,
        rows,
    })
}

fn row(id: String, inst: &Instance, v: TheoremVerdict, millis: Option<u64>) -> ReportRow {
    let g = &inst.graph;
    let (girth, cuts) = stats(g);
    let (values, witnesses) = extract_values(&v);
    let verdict = if !v.pass {
        Outcome::Fail
    } else if v.observe_only {
        Outcome::Observed
    } else {
        Outcome::Pass
    };
    ReportRow {
        instance_id: id,
        family: inst.family.clone(),
        n: g.n(),
        m: g.m(),
        girth,
        cut_vertices: cuts,
        graph6: g.to_graph6().ok(),
        values,
        witnesses,
        verdicts: vec![v],
        verdict,
        millis,
    }
}

/// Parameter values a verdict observed, lifted into the row's columns.
fn extract_values(v: &TheoremVerdict) -> (BTreeMap<Param, usize>, BTreeMap<Param, Vec<usize>>) {
    let mut values = BTreeMap::new();
    if let Some(obj) = v.observed.get("values").and_then(|x| x.as_object()) {
        for (k, x) in obj {
            if let (Ok(p), Some(x)) = (k.parse::<Param>(), x.as_u64()) {
                values.insert(p, x as usize);
            }
        }
    } else if let Some(x) = v.observed.get("meg").and_then(|x| x.as_u64()) {
        values.insert(Param::Meg, x as usize);
    }
    let mut witnesses = BTreeMap::new();
    if let Some(obj) = v.observed.get("witnesses").and_then(|x| x.as_object()) {
        for (k, x) in obj {
            if let (Ok(p), Some(list)) = (k.parse::<Param>(), x.as_array()) {
                let members = list
                    .iter()
                    .filter_map(|i| i.as_u64())
                    .map(|i| i as usize)
                    .collect();
                witnesses.insert(p, members);
            }
        }
    }
    (values, witnesses)
}
