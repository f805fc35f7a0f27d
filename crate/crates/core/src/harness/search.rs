use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{instance_seed, to_csv, Theorem};
use crate::factors::{find_star_factor, isolated_toughness, kano_saito_max_deficiency, FactorStatus, SearchLimits};
use crate::graph::{extremal_g_star, ExtremalParams, Graph};
use crate::spectral::{adjacency_radius, distance_radius, signless_radius};
use crate::Result;

/// Relative half-width of the band in which a spectral comparison counts as
/// a tie.
pub const GUARD_BAND: f64 = 1e-9;

const ER_DENSITIES: [f64; 3] = [0.5, 0.7, 0.9];
const MAX_EXTRA_EDGES: usize = 10;
const CONNECT_ATTEMPTS: usize = 1000;

#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    pub theorem: Theorem,
    pub params: ExtremalParams,
    /// Random instances, not counting the extremal graph itself.
    pub trials: usize,
    pub seed: u64,
    pub factor_limits: SearchLimits,
    pub toughness_limits: SearchLimits,
    /// Record per-instance wall time (makes reports machine-dependent).
    pub timings: bool,
}

impl SearchConfig {
    pub const DEFAULT_FACTOR_NODES: u64 = 2_000_000;
    pub const DEFAULT_TOUGHNESS_NODES: u64 = 20_000_000;

    pub fn new(theorem: Theorem, params: ExtremalParams) -> Self {
        SearchConfig {
            theorem,
            params,
            trials: 1000,
            seed: 0,
            factor_limits: SearchLimits::factor().with_nodes(Self::DEFAULT_FACTOR_NODES),
            toughness_limits: SearchLimits::toughness().with_nodes(Self::DEFAULT_TOUGHNESS_NODES),
            timings: false,
        }
    }

    /// Adds a wall-clock budget to every exponential search.
    pub fn with_time_budget(mut self, budget: Duration) -> Self {
        self.factor_limits = self.factor_limits.with_time(budget);
        self.toughness_limits = self.toughness_limits.with_time(budget);
        self
    }

    /// `(mb − 1, b)`: the isolated toughness threshold as a fraction.
    pub fn toughness_threshold(&self) -> (u64, u64) {
        let ExtremalParams { m, b, .. } = self.params;
        ((m * b - 1) as u64, b as u64)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectralSide {
    Met,
    NotMet,
    /// Within the guard band of the extremal radius.
    Boundary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Hypotheses hold and a factor exists.
    Consistent,
    /// Some hypothesis fails; no conclusion to check.
    Excluded,
    /// A search ran out of budget.
    Unknown,
    /// Spectral tie with the extremal graph and no factor.
    Boundary,
    /// Hypotheses hold strictly and no factor exists.
    Counterexample,
}

/// One CSV row per instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub instance: usize,
    pub seed: u64,
    pub generator: String,
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
    pub rho: f64,
    pub q: f64,
    pub mu: Option<f64>,
    pub hypothesis_margin: Option<f64>,
    pub spectral: SpectralSide,
    pub toughness: String,
    pub tough: Option<bool>,
    pub deficiency: Option<i64>,
    pub factor: String,
    pub verdict: Verdict,
    pub wall_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchSummary {
    pub theorem: Theorem,
    pub n: usize,
    pub m: usize,
    pub b: usize,
    pub threshold: usize,
    pub below_threshold: bool,
    pub seed: u64,
    pub trials: usize,
    pub instances: usize,
    pub extremal_radius: f64,
    pub spectral_met: usize,
    pub spectral_boundary: usize,
    pub spectral_not_met: usize,
    pub disconnected: usize,
    pub not_tough: usize,
    pub toughness_timeouts: usize,
    pub factor_searches: usize,
    pub factor_yes: usize,
    pub factor_no: usize,
    pub factor_timeout: usize,
    /// Timed-out searches over searches run (toughness and factor).
    pub timeout_rate: f64,
    pub counterexamples: Vec<usize>,
    /// Factor status of the extremal graph itself (instance 0).
    pub extremal_factor: String,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub summary: SearchSummary,
    pub records: Vec<InstanceRecord>,
    /// Graphs of counterexample instances, for replay.
    pub counterexamples: Vec<(usize, Graph)>,
}

impl SearchReport {
    pub fn to_csv(&self) -> Result<String> {
        to_csv(&self.records)
    }

    pub fn records_json(&self) -> String {
        serde_json::to_string_pretty(&self.records).expect("records serialize")
    }

    pub fn summary_json(&self) -> String {
        serde_json::to_string_pretty(&self.summary).expect("summary serializes")
    }
}

/// Instance 0 is `G*` itself; instances `1..=trials` are random samples,
/// each drawn from its own seed so the run can be split across threads
/// without changing any record.
pub fn run_search(cfg: &SearchConfig) -> Result<SearchReport> {
    let (g_star, _) = extremal_g_star(&cfg.params)?;
    cfg.factor_limits.check_order(&g_star)?;
    cfg.toughness_limits.check_order(&g_star)?;
    let extremal = cfg.theorem.radius(&g_star)?;

    let results: Vec<(InstanceRecord, Graph)> = (0..=cfg.trials)
        .into_par_iter()
        .map(|idx| {
            let seed = instance_seed(cfg.seed, idx as u64);
            let (label, g) = if idx == 0 {
                ("gstar".to_string(), g_star.clone())
            } else {
                sample_instance(&g_star, seed)
            };
            let record = evaluate_instance(cfg, extremal, idx, seed, &label, &g);
            (record, g)
        })
        .collect();

    let mut records = Vec::with_capacity(results.len());
    let mut counterexamples = Vec::new();
    for (record, g) in results {
        if record.verdict == Verdict::Counterexample {
            counterexamples.push((record.instance, g));
        }
        records.push(record);
    }
    let summary = summarize(cfg, extremal, &records);
    Ok(SearchReport {
        summary,
        records,
        counterexamples,
    })
}

/// Draws one random instance: `G(n, p)` conditioned on connectivity, or
/// `G*` plus `k ∈ [1, 10]` random extra edges, each with probability 1/2.
fn sample_instance(g_star: &Graph, seed: u64) -> (String, Graph) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g_star.order();
    if rng.gen_bool(0.5) {
        let p = ER_DENSITIES[rng.gen_range(0..ER_DENSITIES.len())];
        let mut g = erdos_renyi(n, p, &mut rng);
        for _ in 1..CONNECT_ATTEMPTS {
            if g.is_connected() {
                break;
            }
            g = erdos_renyi(n, p, &mut rng);
        }
        (format!("er-{p}"), g)
    } else {
        let non_edges = g_star.non_edges();
        let k = rng.gen_range(1..=MAX_EXTRA_EDGES.min(non_edges.len()).max(1));
        let mut g = g_star.clone();
        for idx in sample(&mut rng, non_edges.len(), k.min(non_edges.len())).into_iter() {
            let (u, v) = non_edges[idx];
            g.insert_edge(u, v).expect("non-edge of the extremal graph");
        }
        (format!("gstar+{k}"), g)
    }
}

fn erdos_renyi(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n).expect("order already validated");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.insert_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

fn classify(margin: f64, extremal: f64) -> SpectralSide {
    let band = GUARD_BAND * extremal.abs().max(1.0);
    if margin.abs() <= band {
        SpectralSide::Boundary
    } else if margin > 0.0 {
        SpectralSide::Met
    } else {
        SpectralSide::NotMet
    }
}

/// Computes every quantity and the verdict for one graph. Re-running this on
/// a reloaded counterexample reproduces its record.
pub fn evaluate_instance(
    cfg: &SearchConfig,
    extremal: f64,
    instance: usize,
    seed: u64,
    generator: &str,
    g: &Graph,
) -> InstanceRecord {
    let start = Instant::now();
    let connected = g.is_connected();
    let rho = adjacency_radius(g).unwrap_or(f64::NAN);
    let q = signless_radius(g).unwrap_or(f64::NAN);
    let mu = if connected { distance_radius(g).ok() } else { None };
    let value = match cfg.theorem {
        Theorem::Adjacency => Some(rho),
        Theorem::Signless => Some(q),
        Theorem::Distance => mu,
    };
    let hypothesis_margin = value.map(|v| cfg.theorem.hypothesis_margin(v, extremal));
    let spectral = match hypothesis_margin {
        Some(margin) if connected => classify(margin, extremal),
        _ => SpectralSide::NotMet,
    };

    let (p, qq) = cfg.toughness_threshold();
    let exact = isolated_toughness(g, &cfg.toughness_limits).ok();
    let tough = exact.as_ref().map(|t| t.at_least(p, qq));
    let toughness = exact.map_or("timeout".to_string(), |t| t.display());
    let deficiency = kano_saito_max_deficiency(g, cfg.params.m, &cfg.toughness_limits)
        .ok()
        .map(|(d, _)| d);

    let eligible = connected && spectral != SpectralSide::NotMet;
    let factor = match (eligible, tough) {
        (true, Some(true)) => FactorStatus::of(&find_star_factor(g, cfg.params.m, &cfg.factor_limits)),
        _ => None,
    };
    let verdict = match (eligible, tough, factor) {
        (false, _, _) | (true, Some(false), _) => Verdict::Excluded,
        (true, None, _) | (true, Some(true), Some(FactorStatus::Timeout)) => Verdict::Unknown,
        (true, Some(true), Some(FactorStatus::Yes)) => Verdict::Consistent,
        (true, Some(true), Some(FactorStatus::No)) if spectral == SpectralSide::Boundary => Verdict::Boundary,
        (true, Some(true), Some(FactorStatus::No)) => Verdict::Counterexample,
        (true, Some(true), None) => Verdict::Unknown,
    };

    InstanceRecord {
        instance,
        seed,
        generator: generator.to_string(),
        n: g.order(),
        edges: g.edge_count(),
        connected,
        rho,
        q,
        mu,
        hypothesis_margin,
        spectral,
        toughness,
        tough,
        deficiency,
        factor: factor.map_or("skipped", |f| f.as_str()).to_string(),
        verdict,
        wall_ms: cfg.timings.then(|| start.elapsed().as_millis() as u64),
    }
}

fn summarize(cfg: &SearchConfig, extremal: f64, records: &[InstanceRecord]) -> SearchSummary {
    let count = |f: &dyn Fn(&InstanceRecord) -> bool| records.iter().filter(|r| f(r)).count();
    let factor_yes = count(&|r| r.factor == "yes");
    let factor_no = count(&|r| r.factor == "no");
    let factor_timeout = count(&|r| r.factor == "timeout");
    let factor_searches = factor_yes + factor_no + factor_timeout;
    let eligible = |r: &InstanceRecord| r.connected && r.spectral != SpectralSide::NotMet;
    let toughness_timeouts = count(&|r| eligible(r) && r.tough.is_none());
    let attempted = factor_searches + toughness_timeouts;
    let ExtremalParams { n, m, b } = cfg.params;
    let threshold = cfg.theorem.threshold(m, b);
    SearchSummary {
        theorem: cfg.theorem,
        n,
        m,
        b,
        threshold,
        below_threshold: n < threshold,
        seed: cfg.seed,
        trials: cfg.trials,
        instances: records.len(),
        extremal_radius: extremal,
        spectral_met: count(&|r| r.connected && r.spectral == SpectralSide::Met),
        spectral_boundary: count(&|r| r.connected && r.spectral == SpectralSide::Boundary),
        spectral_not_met: count(&|r| r.spectral == SpectralSide::NotMet),
        disconnected: count(&|r| !r.connected),
        not_tough: count(&|r| r.tough == Some(false)),
        toughness_timeouts,
        factor_searches,
        factor_yes,
        factor_no,
        factor_timeout,
        timeout_rate: if attempted == 0 {
            0.0
        } else {
            (factor_timeout + toughness_timeouts) as f64 / attempted as f64
        },
        counterexamples: records
            .iter()
            .filter(|r| r.verdict == Verdict::Counterexample)
            .map(|r| r.instance)
            .collect(),
        extremal_factor: records.first().map_or("skipped".to_string(), |r| r.factor.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_edge_list, to_edge_list};
    use crate::Error;

    fn cfg(n: usize, trials: usize) -> SearchConfig {
        let mut c = SearchConfig::new(Theorem::Adjacency, ExtremalParams::new(n, 2, 1).unwrap());
        c.trials = trials;
        c.seed = 7;
        c
    }

    #[test]
    fn extremal_instance_is_boundary() {
        let report = run_search(&cfg(12, 6)).unwrap();
        let first = &report.records[0];
        assert_eq!(first.generator, "gstar");
        assert_eq!(first.spectral, SpectralSide::Boundary);
        assert_eq!(first.tough, Some(true));
        assert_ne!(first.factor, "skipped");
        assert_eq!(report.records.len(), 7);
        assert!(report.summary.below_threshold);
    }

    #[test]
    fn hypothesis_filter_is_consistent() {
        let report = run_search(&cfg(12, 40)).unwrap();
        for r in &report.records {
            if r.spectral == SpectralSide::Met {
                assert!(r.hypothesis_margin.unwrap() > 0.0);
            }
            if r.verdict == Verdict::Consistent || r.verdict == Verdict::Counterexample {
                assert_eq!(r.tough, Some(true));
                assert!(r.connected);
                assert_ne!(r.spectral, SpectralSide::NotMet);
            }
            if r.spectral == SpectralSide::NotMet {
                assert_eq!(r.verdict, Verdict::Excluded);
                assert_eq!(r.factor, "skipped");
            }
        }
    }

    #[test]
    fn runs_are_reproducible() {
        let a = run_search(&cfg(12, 30)).unwrap().to_csv().unwrap();
        let b = run_search(&cfg(12, 30)).unwrap().to_csv().unwrap();
        assert_eq!(a, b);
        let mut other = cfg(12, 30);
        other.seed = 8;
        assert_ne!(a, run_search(&other).unwrap().to_csv().unwrap());
    }

    #[test]
    fn record_replays_from_edge_list() {
        let c = cfg(12, 10);
        let report = run_search(&c).unwrap();
        let (g_star, _) = extremal_g_star(&c.params).unwrap();
        let extremal = c.theorem.radius(&g_star).unwrap();
        for (idx, r) in report.records.iter().enumerate().skip(1) {
            let (label, g) = sample_instance(&g_star, r.seed);
            let reloaded = parse_edge_list(&to_edge_list(&g)).unwrap();
            let again = evaluate_instance(&c, extremal, idx, r.seed, &label, &reloaded);
            assert_eq!(&again, r);
        }
    }

    #[test]
    fn perturbed_samples_contain_extremal_graph() {
        let (g_star, _) = extremal_g_star(&ExtremalParams::new(12, 2, 1).unwrap()).unwrap();
        for s in 0..20 {
            let (label, g) = sample_instance(&g_star, s);
            if let Some(k) = label.strip_prefix("gstar+") {
                let k: usize = k.parse().unwrap();
                assert_eq!(g.edge_count(), g_star.edge_count() + k);
                assert!(g_star.edges().all(|(u, v)| g.has_edge(u, v)));
            } else {
                assert!(label.starts_with("er-"));
                assert!(g.is_connected());
            }
        }
    }

    #[test]
    fn classification_band() {
        assert_eq!(classify(0.0, 25.0), SpectralSide::Boundary);
        assert_eq!(classify(1e-9, 25.0), SpectralSide::Boundary);
        assert_eq!(classify(1e-6, 25.0), SpectralSide::Met);
        assert_eq!(classify(-1e-6, 25.0), SpectralSide::NotMet);
    }

    #[test]
    fn oversized_order_rejected() {
        let c = cfg(40, 1);
        assert!(matches!(run_search(&c), Err(Error::CapExceeded { .. })));
    }
}
