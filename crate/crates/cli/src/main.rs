use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use meglab_core::generators::{FamilySpec, FAMILY_NAMES};
use meglab_core::graph::{parse_graph, Format};
use meglab_core::harness::{run_campaign, Campaign, CampaignConfig};
use meglab_core::rules::{CheckOptions, GUARD_ENV};
use meglab_core::solvers::{compute_report, Param};
use meglab_core::Error;

/// Exact monitoring edge-geodetic computations and verification campaigns.
#[derive(Parser)]
#[command(name = "meglab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Graph6,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => Format::EdgeList,
            FormatArg::Graph6 => Format::Graph6,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute parameters of a graph read from a file ("-" for stdin).
    Compute {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
        /// Comma-separated subset of g,eg,seg,dem,meg, or "all".
        #[arg(long, default_value = "meg")]
        params: String,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a family member and write it in canonical form.
    Generate {
        family: String,
        args: Vec<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
        /// Output file; the vertex labels go to `<out>.labels.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification campaign and write JSONL and CSV reports.
    Verify {
        campaign: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        /// Fixed edge probability for random instances.
        #[arg(long)]
        edge_prob: Option<f64>,
        /// Product factor pairs, e.g. `k3:p4,k33:k2`.
        #[arg(long)]
        pairs: Option<String>,
        /// Record precondition violations instead of rejecting them.
        #[arg(long)]
        observe: bool,
        /// Fill the millis column (makes reports run-dependent).
        #[arg(long)]
        timing: bool,
        /// Report directory.
        #[arg(long, default_value = "reports")]
        out: PathBuf,
    },
    /// List the accepted formats, families, parameters and campaigns.
    Formats,
}

enum Failure {
    Core(Error),
    Io(String),
    Theorem(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Theorem(_) => 1,
            Failure::Io(_) => 2,
            Failure::Core(e) => match e {
                Error::Parse { .. }
                | Error::Graph6TooLarge(_)
                | Error::SelfLoop(_)
                | Error::VertexOutOfRange { .. } => 2,
                Error::GuardExceeded { .. } => 3,
                Error::Disconnected | Error::NoEdges => 4,
                Error::InvalidFamily(_) | Error::Precondition(_) => 5,
                _ => 1,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e @ Error::GuardExceeded { .. }) => {
                format!("{e} (raise {GUARD_ENV} to allow it; this may take long)")
            }
            Failure::Core(e) => e.to_string(),
            Failure::Io(msg) => msg.clone(),
            Failure::Theorem(k) => format!("{k} instance(s) failed"),
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Failure + '_ {
    move |e| Failure::Io(format!("{}: {e}", path.display()))
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(io_err(path))
    } else {
        fs::read_to_string(path).map_err(io_err(path))
    }
}

fn compute(input: &Path, format: Format, params: &str, out: Option<&Path>) -> Result<(), Failure> {
    let params = Param::parse_list(params).map_err(|e| match e {
        Error::InvalidFamily(msg) => Failure::Io(msg),
        other => Failure::Core(other),
    })?;
    let g = parse_graph(&read_input(input)?, format)?;
    let guard = CheckOptions::from_env().guard_n;
    if g.n() > guard {
        return Err(Error::GuardExceeded { n: g.n(), guard }.into());
    }
    let report = compute_report(&g, &params)?;
    let body = json!({ "n": g.n(), "m": g.m(), "report": report });
    let text = serde_json::to_string_pretty(&body).expect("report serializes") + "\n";
    match out {
        Some(path) => fs::write(path, text).map_err(io_err(path))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn generate(
    family: &str,
    args: &[usize],
    seed: Option<u64>,
    format: Format,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let spec = FamilySpec {
        name: family.to_string(),
        args: args.to_vec(),
        seed,
    };
    let g = spec.generate()?;
    let text = match format {
        Format::EdgeList => g.to_edge_list(),
        Format::Graph6 => g.to_graph6()? + "\n",
    };
    let labels = json!({
        "family": spec,
        "labels": (0..g.n()).map(|v| g.label(v)).collect::<Vec<_>>(),
    });
    match out {
        Some(path) => {
            fs::write(path, text).map_err(io_err(path))?;
            let mut sidecar = path.as_os_str().to_owned();
            sidecar.push(".labels.json");
            let sidecar = PathBuf::from(sidecar);
            fs::write(&sidecar, labels.to_string() + "\n").map_err(io_err(&sidecar))?;
        }
        None => {
            print!("{text}");
            eprintln!("{labels}");
        }
    }
    Ok(())
}

fn parse_pairs(s: &str) -> Result<Vec<(String, String)>, Failure> {
    s.split(',')
        .map(|pair| match pair.split_once(':') {
            Some((a, b)) => Ok((a.trim().to_string(), b.trim().to_string())),
            None => Err(Failure::Core(Error::InvalidFamily(format!(
                "pair {pair:?} is not of the form a:b"
            )))),
        })
        .collect()
}

fn verify(cfg: CampaignConfig, out: &Path) -> Result<(), Failure> {
    let report = run_campaign(&cfg)?;
    let stem = cfg.campaign.name();
    let written = report.write(out, stem).map_err(io_err(out))?;
    let failed = report.failures().count();
    eprintln!(
        "{stem}: {} instances, {failed} failed; wrote {}",
        report.rows.len(),
        written
            .iter()
            .map(|p| p.display().to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    if failed > 0 {
        return Err(Failure::Theorem(failed));
    }
    Ok(())
}

fn formats() {
    println!("formats: edgelist (\"n m\" header, one \"u v\" per line, # comments), graph6 (short form, n <= 62)");
    println!("parameters: {}", Param::ALL.map(|p| p.name()).join(","));
    println!("families: {}", FAMILY_NAMES.join(", "));
    println!("campaigns: {}", Campaign::ALL.map(|c| c.name()).join(", "));
    println!("product factors: k<n>, k<a><b>, p<n>, c<n>, q<d>, s<q>");
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Compute {
            input,
            format,
            params,
            out,
        } => compute(&input, format.into(), &params, out.as_deref()),
        Command::Generate {
            family,
            args,
            seed,
            format,
            out,
        } => generate(&family, &args, seed, format.into(), out.as_deref()),
        Command::Verify {
            campaign,
            seed,
            n_max,
            samples,
            edge_prob,
            pairs,
            observe,
            timing,
            out,
        } => {
            let campaign: Campaign = campaign.parse()?;
            let mut cfg = CampaignConfig::new(campaign, seed);
            cfg.n_max = n_max;
            cfg.samples = samples;
            cfg.edge_prob = edge_prob;
            cfg.pairs = pairs.as_deref().map(parse_pairs).transpose()?;
            cfg.options.observe = observe;
            cfg.timing = timing;
            verify(cfg, &out)
        }
        Command::Formats => {
            formats();
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
