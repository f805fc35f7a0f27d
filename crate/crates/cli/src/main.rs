use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use starspec::factors::{
    find_star_factor, isolated_toughness, kano_saito_max_deficiency, parse_star_factor, verify_star_factor,
    FactorStatus, IsolatedToughness, SearchLimits,
};
use starspec::graph::{parse_edge_list, to_edge_list};
use starspec::harness::{
    extremal_summary, graph_spectra, run_search, small_oracle, to_csv, verify_bounds, verify_identities,
    BoundsGrid, ExtremalKind, IdentityGrid, SearchConfig, SmallOracleConfig, Theorem, VerifyReport,
};
use starspec::spectral::{adjacency_matrix, distance_matrix, signless_laplacian};
use starspec::{Error, ExtremalParams, Graph};

#[derive(Parser, Debug)]
#[command(name = "starspec", version, about = "Spectral conditions for star factors: builders, checks and searches")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Directory for report files; reports go to stdout when absent
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Master seed for randomized commands
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Wall-clock limit per exponential search, in milliseconds
    #[arg(long, global = true)]
    budget_ms: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Gstar,
    G1,
    G2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    Adjacency,
    Signless,
    Distance,
    All,
}

impl TheoremArg {
    fn theorems(self) -> Vec<Theorem> {
        match self {
            TheoremArg::Adjacency => vec![Theorem::Adjacency],
            TheoremArg::Signless => vec![Theorem::Signless],
            TheoremArg::Distance => vec![Theorem::Distance],
            TheoremArg::All => Theorem::ALL.to_vec(),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build G*, G1 or G2 and summarize its blocks and spectral radii
    Extremal {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        m: usize,
        #[arg(short)]
        b: Option<usize>,
        #[arg(short)]
        i: Option<usize>,
    },
    /// Spectral radii and classical bounds of a graph
    Spectra {
        #[arg(long)]
        graph: PathBuf,
        /// Also write adjacency, signless Laplacian and distance matrices as CSV
        #[arg(long)]
        matrices: bool,
    },
    /// Isolated toughness with a minimizing witness
    Toughness {
        #[arg(long)]
        graph: PathBuf,
        /// Also report the max deficiency m|T| - |N(T)|
        #[arg(short)]
        m: Option<usize>,
        /// Fail unless I(G) >= p/q
        #[arg(long, value_name = "P/Q")]
        at_least: Option<String>,
    },
    /// Search for (or verify) a {K_{1,j}: m <= j <= 2m}-factor
    Factor {
        #[arg(long)]
        graph: PathBuf,
        #[arg(short)]
        m: usize,
        /// Check this factor instead of searching
        #[arg(long)]
        verify: Option<PathBuf>,
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Exact polynomial and quotient identities over a parameter grid
    VerifyIdentities {
        #[arg(long, value_delimiter = ',', default_values_t = [2, 3, 4])]
        m_values: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3])]
        b_values: Vec<usize>,
        #[arg(long, default_value_t = 60)]
        n_max: usize,
        /// Skip the full spectral radius comparisons
        #[arg(long)]
        no_radii: bool,
    },
    /// Inequality chains behind each theorem from its threshold upward
    VerifyBounds {
        #[arg(long, value_enum, default_value_t = TheoremArg::All)]
        theorem: TheoremArg,
        #[arg(long, value_delimiter = ',', default_values_t = [2, 3, 4])]
        m_values: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3])]
        b_values: Vec<usize>,
        #[arg(long, default_value_t = 20)]
        span: usize,
        /// Start below the threshold (failures there become warnings)
        #[arg(long)]
        n_start: Option<usize>,
    },
    /// Randomized counterexample search near the extremal graph
    Search {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        m: usize,
        #[arg(short)]
        b: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Node budget per factor search
        #[arg(long, default_value_t = SearchConfig::DEFAULT_FACTOR_NODES)]
        max_nodes: u64,
        /// Node budget per toughness computation
        #[arg(long, default_value_t = SearchConfig::DEFAULT_TOUGHNESS_NODES)]
        toughness_nodes: u64,
        /// Record per-instance wall time
        #[arg(long)]
        timings: bool,
    },
    /// Exhaustive small-graph check of the deficiency criterion
    SmallOracle {
        #[arg(short, value_delimiter = ',', default_values_t = [2, 3])]
        m: Vec<usize>,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, default_value_t = 1000)]
        toughness_samples: usize,
        #[arg(long, default_value_t = 10)]
        toughness_n_max: usize,
    },
}

/// Outcome of a command: whether all of its checks passed.
type Outcome = Result<bool, Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let c = &cli.common;
    if let Some(dir) = &c.out {
        fs::create_dir_all(dir)?;
    }
    match &cli.command {
        Command::Extremal { kind, n, m, b, i } => extremal(c, *kind, *n, *m, *b, *i),
        Command::Spectra { graph, matrices } => spectra(c, graph, *matrices),
        Command::Toughness { graph, m, at_least } => toughness(c, graph, *m, at_least.as_deref()),
        Command::Factor {
            graph,
            m,
            verify,
            max_nodes,
        } => factor(c, graph, *m, verify.as_deref(), *max_nodes),
        Command::VerifyIdentities {
            m_values,
            b_values,
            n_max,
            no_radii,
        } => {
            let grid = IdentityGrid {
                m_values: m_values.clone(),
                b_values: b_values.clone(),
                n_max: *n_max,
                quotient_radii: !no_radii,
            };
            emit_verify(c, "identities", &verify_identities(&grid))
        }
        Command::VerifyBounds {
            theorem,
            m_values,
            b_values,
            span,
            n_start,
        } => {
            let grid = BoundsGrid {
                theorems: theorem.theorems(),
                m_values: m_values.clone(),
                b_values: b_values.clone(),
                span: *span,
                n_start: *n_start,
            };
            emit_verify(c, "bounds", &verify_bounds(&grid))
        }
        Command::Search {
            theorem,
            n,
            m,
            b,
            trials,
            max_nodes,
            toughness_nodes,
            timings,
        } => {
            let theorem = match theorem.theorems().as_slice() {
                [t] => *t,
                _ => return Err(Error::InvalidParams("search takes a single theorem".into())),
            };
            let mut cfg = SearchConfig::new(theorem, ExtremalParams::new(*n, *m, *b)?);
            cfg.trials = *trials;
            cfg.seed = c.seed;
            cfg.timings = *timings;
            cfg.factor_limits = SearchLimits::factor().with_nodes(*max_nodes);
            cfg.toughness_limits = SearchLimits::toughness().with_nodes(*toughness_nodes);
            if let Some(ms) = c.budget_ms {
                cfg = cfg.with_time_budget(Duration::from_millis(ms));
            }
            search(c, &cfg)
        }
        Command::SmallOracle {
            m,
            n_max,
            toughness_samples,
            toughness_n_max,
        } => {
            let cfg = SmallOracleConfig {
                m_values: m.clone(),
                n_max: *n_max,
                toughness_samples: *toughness_samples,
                toughness_n_max: *toughness_n_max,
                seed: c.seed,
            };
            oracle(c, &cfg)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Error> {
    parse_edge_list(&fs::read_to_string(path)?)
}

fn write(c: &Common, name: &str, contents: &str) -> Result<(), Error> {
    if let Some(dir) = &c.out {
        fs::write(dir.join(name), contents)?;
    }
    Ok(())
}

/// Writes `summary` to `<out>/summary.json` and prints it.
fn emit_summary(c: &Common, summary: &serde_json::Value) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(summary).expect("json value serializes");
    write(c, "summary.json", &text)?;
    println!("{text}");
    Ok(())
}

fn limits(c: &Common, base: SearchLimits) -> SearchLimits {
    match c.budget_ms {
        Some(ms) => base.with_time(Duration::from_millis(ms)),
        None => base,
    }
}

fn extremal(c: &Common, kind: Kind, n: usize, m: usize, b: Option<usize>, i: Option<usize>) -> Outcome {
    let (kind, param) = match kind {
        Kind::Gstar => (ExtremalKind::GStar, b),
        Kind::G1 => (ExtremalKind::G1, i),
        Kind::G2 => (ExtremalKind::G2, None),
    };
    let (g, summary) = extremal_summary(kind, n, m, param)?;
    write(c, &format!("{kind}.edges"), &to_edge_list(&g))?;
    emit_summary(c, &serde_json::to_value(&summary).expect("summary serializes"))?;
    Ok(true)
}

fn spectra(c: &Common, path: &Path, matrices: bool) -> Outcome {
    let g = read_graph(path)?;
    let s = graph_spectra(&g)?;
    if matrices {
        if c.out.is_none() {
            return Err(Error::InvalidParams("--matrices needs --out".into()));
        }
        write(c, "adjacency.csv", &adjacency_matrix(&g).to_csv())?;
        write(c, "signless.csv", &signless_laplacian(&g).to_csv())?;
        if s.connected {
            write(c, "distance.csv", &distance_matrix(&g)?.to_csv())?;
        }
    }
    emit_summary(c, &serde_json::to_value(&s).expect("spectra serialize"))?;
    Ok(true)
}

fn parse_ratio(s: &str) -> Result<(u64, u64), Error> {
    let bad = || Error::InvalidParams(format!("expected p/q, got {s:?}"));
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: u64 = p.trim().parse().map_err(|_| bad())?;
    let q: u64 = q.trim().parse().map_err(|_| bad())?;
    if q == 0 {
        return Err(bad());
    }
    Ok((p, q))
}

fn toughness(c: &Common, path: &Path, m: Option<usize>, at_least: Option<&str>) -> Outcome {
    let g = read_graph(path)?;
    let threshold = at_least.map(parse_ratio).transpose()?;
    let lim = limits(c, SearchLimits::toughness());
    let t = isolated_toughness(&g, &lim)?;
    let mut out = json!({
        "n": g.order(),
        "toughness": t.display(),
        "witness": match &t {
            IsolatedToughness::Infinite => serde_json::Value::Null,
            IsolatedToughness::Finite(w) => serde_json::to_value(w).expect("witness serializes"),
        },
    });
    if let Some(m) = m {
        let (d, w) = kano_saito_max_deficiency(&g, m, &lim)?;
        out["m"] = json!(m);
        out["deficiency"] = json!(d);
        out["deficiency_witness"] = serde_json::to_value(w).expect("witness serializes");
    }
    let ok = threshold.is_none_or(|(p, q)| t.at_least(p, q));
    if let Some((p, q)) = threshold {
        out["at_least"] = json!(format!("{p}/{q}"));
        out["pass"] = json!(ok);
    }
    emit_summary(c, &out)?;
    Ok(ok)
}

fn factor(c: &Common, path: &Path, m: usize, verify: Option<&Path>, max_nodes: Option<u64>) -> Outcome {
    let g = read_graph(path)?;
    if let Some(fpath) = verify {
        let f = parse_star_factor(&fs::read_to_string(fpath)?)?;
        let ok = verify_star_factor(&g, m, &f);
        emit_summary(c, &json!({ "m": m, "valid": ok }))?;
        return Ok(ok);
    }
    let mut lim = limits(c, SearchLimits::factor());
    if let Some(nodes) = max_nodes {
        lim = lim.with_nodes(nodes);
    }
    let result = find_star_factor(&g, m, &lim);
    let status = FactorStatus::of(&result);
    let found = match result {
        Ok(f) => f,
        Err(Error::Timeout) => None,
        Err(e) => return Err(e),
    };
    if let Some(f) = &found {
        write(c, "factor.json", &f.to_json())?;
    }
    emit_summary(
        c,
        &json!({
            "m": m,
            "status": status.map(|s| s.as_str()),
            "factor": found,
        }),
    )?;
    Ok(status == Some(FactorStatus::Yes))
}

fn emit_verify(c: &Common, name: &str, report: &VerifyReport) -> Outcome {
    let body = match c.format {
        Format::Csv => report.to_csv()?,
        Format::Json => report.to_json(),
    };
    let summary = serde_json::to_value(report.summary()).expect("summary serializes");
    emit_report(c, name, &body, &summary)?;
    Ok(report.passed())
}

/// With `--out`: report file plus `summary.json`, summary on stdout.
/// Without: report on stdout, summary on stderr.
fn emit_report(c: &Common, name: &str, body: &str, summary: &serde_json::Value) -> Result<(), Error> {
    let ext = match c.format {
        Format::Csv => "csv",
        Format::Json => "json",
    };
    if c.out.is_some() {
        write(c, &format!("{name}.{ext}"), body)?;
        emit_summary(c, summary)
    } else {
        print!("{body}");
        if !body.ends_with('\n') {
            println!();
        }
        eprintln!("{}", serde_json::to_string_pretty(summary).expect("json value serializes"));
        Ok(())
    }
}

fn search(c: &Common, cfg: &SearchConfig) -> Outcome {
    let report = run_search(cfg)?;
    if report.summary.below_threshold {
        eprintln!(
            "warning: n = {} is below the {} threshold {}",
            report.summary.n, report.summary.theorem, report.summary.threshold
        );
    }
    for (idx, g) in &report.counterexamples {
        write(c, &format!("counterexample-{idx}.edges"), &to_edge_list(g))?;
    }
    let body = match c.format {
        Format::Csv => report.to_csv()?,
        Format::Json => report.records_json(),
    };
    let summary = serde_json::to_value(&report.summary).expect("summary serializes");
    emit_report(c, "search", &body, &summary)?;
    Ok(report.summary.counterexamples.is_empty())
}

fn oracle(c: &Common, cfg: &SmallOracleConfig) -> Outcome {
    let report = small_oracle(cfg)?;
    let body = match c.format {
        Format::Csv => to_csv(&report.rows)?,
        Format::Json => serde_json::to_string_pretty(&report.rows).expect("rows serialize"),
    };
    let missing: Vec<usize> = cfg
        .m_values
        .iter()
        .copied()
        .filter(|&m| m < cfg.n_max && report.exhibit_for(m).is_none())
        .collect();
    let summary = json!({
        "m_values": cfg.m_values,
        "n_max": cfg.n_max,
        "violations": report.violations,
        "exhibits": report.exhibits,
        "missing_exhibits": missing,
        "toughness": report.toughness,
        "pass": report.passed() && missing.is_empty(),
    });
    emit_report(c, "small-oracle", &body, &summary)?;
    Ok(report.passed() && missing.is_empty())
}
