use meglab_core::generators::{gen_standard, product, ProductKind};
use meglab_core::harness::{run_campaign, Campaign, CampaignConfig, CSV_HEADER};
use meglab_core::rules::{
    check_chain, check_product_extremality, check_subdivision_bounds, check_values, CheckOptions,
};
use meglab_core::solvers::Param;
use meglab_core::{Error, Graph};

fn opts() -> CheckOptions {
    CheckOptions {
        guard_n: 64,
        observe: false,
    }
}

#[test]
fn csv_and_jsonl_shapes() {
    let mut cfg = CampaignConfig::new(Campaign::Chain, 3);
    cfg.samples = Some(5);
    cfg.n_max = Some(6);
    let rep = run_campaign(&cfg).unwrap();
    assert_eq!(rep.rows.len(), 5);
    let csv = rep.to_csv();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    for line in lines {
        assert_eq!(line.split(',').count(), 12);
        assert!(line.ends_with(",pass,"), "{line}");
    }
    for line in rep.to_jsonl().lines() {
        let row: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(row["graph6"].is_string());
        assert!(row["millis"].is_null());
    }
}

#[test]
fn seeds_change_instances() {
    let run = |seed| {
        let mut cfg = CampaignConfig::new(Campaign::Engine, seed);
        cfg.samples = Some(10);
        run_campaign(&cfg).unwrap().to_jsonl()
    };
    assert_eq!(run(5), run(5));
    assert_ne!(run(5), run(6));
}

#[test]
fn reports_are_written_with_failure_dumps() {
    let dir = tempfile::tempdir().unwrap();
    let rep = run_campaign(&CampaignConfig::new(Campaign::Constructions, 0)).unwrap();
    let written = rep.write(dir.path(), "constructions").unwrap();
    assert!(dir.path().join("constructions.jsonl").exists());
    assert!(dir.path().join("constructions.csv").exists());
    let dumps: Vec<_> = written
        .iter()
        .filter(|p| p.parent().unwrap().ends_with("failures"))
        .collect();
    assert_eq!(dumps.len(), rep.failures().count());
    for dump in dumps {
        let text = std::fs::read_to_string(dump).unwrap();
        let g = meglab_core::graph::parse_graph(&text, meglab_core::graph::Format::EdgeList);
        assert!(g.is_ok());
    }
}

#[test]
fn guard_is_enforced() {
    let mut cfg = CampaignConfig::new(Campaign::Chain, 0);
    cfg.n_max = Some(100);
    assert_eq!(
        run_campaign(&cfg).unwrap_err(),
        Error::GuardExceeded {
            n: 100,
            guard: cfg.options.guard_n
        }
    );
    let big = gen_standard("cycle", &[70]).unwrap();
    assert!(matches!(
        check_values(&big, &[(Param::Meg, 3)], "c70", &opts()),
        Err(Error::GuardExceeded { .. })
    ));
}

#[test]
fn verdicts() {
    let c6 = gen_standard("cycle", &[6]).unwrap();
    assert!(check_chain(&c6, "c6").unwrap().ok());
    let wrong = check_values(&c6, &[(Param::Meg, 4)], "c6", &opts()).unwrap();
    assert!(!wrong.pass);
    assert!(wrong.witness.is_some());
    let c5 = gen_standard("cycle", &[5]).unwrap();
    let sub = check_subdivision_bounds(&c5, 2, "c5", &opts()).unwrap();
    assert!(sub.pass);
    assert_eq!(sub.observed["meg_subdivided"], 3);
    assert!(matches!(
        check_subdivision_bounds(&c5, 1, "c5", &opts()),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn product_preconditions() {
    let k2 = gen_standard("path", &[2]).unwrap();
    let p3 = gen_standard("path", &[3]).unwrap();
    assert!(check_product_extremality(&k2, &p3, ProductKind::Tensor, "t", &opts()).is_err());
    let observed =
        check_product_extremality(&k2, &p3, ProductKind::Tensor, "t", &opts().observing()).unwrap();
    assert!(observed.observe_only && observed.ok());
    let k3: Graph = gen_standard("complete", &[3]).unwrap();
    let v = check_product_extremality(&k3, &p3, ProductKind::Cartesian, "c", &opts()).unwrap();
    assert!(v.pass);
    assert_eq!(product(&k3, &p3, ProductKind::Cartesian).n(), 9);
}
