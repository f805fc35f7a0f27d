use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::instance_seed;
use crate::factors::{
    brute_force_isolated_toughness, brute_force_max_deficiency, find_star_factor, isolated_toughness,
    kano_saito_max_deficiency, SearchLimits, StarFactor,
};
use crate::graph::{to_edge_list, Graph};
use crate::spectral::{adjacency_radius, distance_radius, signless_radius};
use crate::{Error, Result};

/// Largest order for exhaustive labeled enumeration (`2^28` graphs).
pub const MAX_ENUMERATION_ORDER: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallOracleConfig {
    pub m_values: Vec<usize>,
    pub n_max: usize,
    /// Random graphs for the toughness dual check.
    pub toughness_samples: usize,
    pub toughness_n_max: usize,
    pub seed: u64,
}

impl Default for SmallOracleConfig {
    fn default() -> Self {
        SmallOracleConfig {
            m_values: vec![2, 3],
            n_max: 7,
            toughness_samples: 1000,
            toughness_n_max: 10,
            seed: 0,
        }
    }
}

/// Counts over all connected labeled graphs of one order, for one `m`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OracleRow {
    pub n: usize,
    pub m: usize,
    pub graphs: u64,
    /// Max deficiency `≤ 0`.
    pub hypothesis_holds: u64,
    pub factor_under_hypothesis: u64,
    /// Hypothesis holds but no factor exists.
    pub violations: u64,
    pub positive_with_factor: u64,
    pub positive_without_factor: u64,
    /// Independent-set deficiency differs from the all-subsets maximum.
    pub deficiency_mismatches: u64,
}

/// A graph with positive deficiency that still has a factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleExhibit {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
    pub deficiency: i64,
    pub factor: StarFactor,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ToughnessCrossCheck {
    pub label: String,
    pub graphs: u64,
    /// Edge lists of graphs where the two formulations disagree.
    pub mismatches: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SmallOracleReport {
    pub rows: Vec<OracleRow>,
    pub exhibits: Vec<OracleExhibit>,
    /// Edge lists of graphs violating the implication.
    pub violations: Vec<String>,
    pub toughness: Vec<ToughnessCrossCheck>,
}

impl SmallOracleReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
            && self.rows.iter().all(|r| r.deficiency_mismatches == 0)
            && self.toughness.iter().all(|t| t.mismatches.is_empty())
    }

    pub fn exhibit_for(&self, m: usize) -> Option<&OracleExhibit> {
        self.exhibits.iter().find(|e| e.m == m)
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
    Graph::from_edges(n, edges).expect("pairs are valid")
}

#[derive(Clone, Default)]
struct Acc {
    rows: Vec<OracleRow>,
    exhibit: Vec<Option<u64>>,
    violations: Vec<u64>,
    tough_graphs: u64,
    tough_mismatches: Vec<u64>,
}

impl Acc {
    fn new(n: usize, ms: &[usize]) -> Self {
        Acc {
            rows: ms
                .iter()
                .map(|&m| OracleRow {
                    n,
                    m,
                    ..OracleRow::default()
                })
                .collect(),
            exhibit: vec![None; ms.len()],
            ..Acc::default()
        }
    }

    fn merge(mut self, other: Acc) -> Acc {
        for (a, b) in self.rows.iter_mut().zip(&other.rows) {
            a.graphs += b.graphs;
            a.hypothesis_holds += b.hypothesis_holds;
            a.factor_under_hypothesis += b.factor_under_hypothesis;
            a.violations += b.violations;
            a.positive_with_factor += b.positive_with_factor;
            a.positive_without_factor += b.positive_without_factor;
            a.deficiency_mismatches += b.deficiency_mismatches;
        }
        for (a, b) in self.exhibit.iter_mut().zip(&other.exhibit) {
            *a = match (*a, *b) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, y) => x.or(y),
            };
        }
        self.violations.extend(other.violations);
        self.tough_graphs += other.tough_graphs;
        self.tough_mismatches.extend(other.tough_mismatches);
        self
    }
}

fn toughness_agrees(g: &Graph) -> Result<bool> {
    let fast = isolated_toughness(g, &SearchLimits::toughness())?.value();
    Ok(fast == brute_force_isolated_toughness(g)?)
}

fn visit(acc: &mut Acc, g: &Graph, mask: u64, ms: &[usize]) -> Result<()> {
    let limits = SearchLimits::toughness();
    acc.tough_graphs += 1;
    if !toughness_agrees(g)? {
        acc.tough_mismatches.push(mask);
    }
    for (k, &m) in ms.iter().enumerate() {
        let (deficiency, _) = kano_saito_max_deficiency(g, m, &limits)?;
        let row = &mut acc.rows[k];
        row.graphs += 1;
        if deficiency != brute_force_max_deficiency(g, m)? {
            row.deficiency_mismatches += 1;
        }
        let has_factor = find_star_factor(g, m, &SearchLimits::factor())?.is_some();
        match (deficiency <= 0, has_factor) {
            (true, true) => {
                row.hypothesis_holds += 1;
                row.factor_under_hypothesis += 1;
            }
            (true, false) => {
                row.hypothesis_holds += 1;
                row.violations += 1;
                acc.violations.push(mask);
            }
            (false, true) => {
                row.positive_with_factor += 1;
                if acc.exhibit[k].is_none_or(|e| mask < e) {
                    acc.exhibit[k] = Some(mask);
                }
            }
            (false, false) => row.positive_without_factor += 1,
        }
    }
    Ok(())
}

fn enumerate_order(n: usize, ms: &[usize]) -> Result<Acc> {
    let pairs = pairs(n);
    let total = 1u64 << pairs.len();
    (0..total)
        .into_par_iter()
        .try_fold(
            || Acc::new(n, ms),
            |mut acc, mask| {
                let g = graph_from_mask(n, &pairs, mask);
                if g.is_connected() {
                    visit(&mut acc, &g, mask, ms)?;
                }
                Ok(acc)
            },
        )
        .try_reduce(|| Acc::new(n, ms), |a, b| Ok(a.merge(b)))
}

/// Exhaustive check, over every connected labeled graph with at most
/// `n_max` vertices, that max deficiency `≤ 0` forces a factor, plus the
/// two toughness and deficiency formulations agreeing. Also runs the
/// toughness comparison on random graphs up to `toughness_n_max` vertices.
pub fn small_oracle(cfg: &SmallOracleConfig) -> Result<SmallOracleReport> {
    if cfg.n_max > MAX_ENUMERATION_ORDER {
        return Err(Error::CapExceeded {
            n: cfg.n_max,
            cap: MAX_ENUMERATION_ORDER,
        });
    }
    if cfg.m_values.contains(&0) {
        return Err(Error::InvalidParams("m must be positive".into()));
    }
    let mut report = SmallOracleReport::default();
    for n in 1..=cfg.n_max {
        let acc = enumerate_order(n, &cfg.m_values)?;
        let pairs = pairs(n);
        for (k, &m) in cfg.m_values.iter().enumerate() {
            if let Some(mask) = acc.exhibit[k] {
                let g = graph_from_mask(n, &pairs, mask);
                let (deficiency, _) = kano_saito_max_deficiency(&g, m, &SearchLimits::toughness())?;
                let factor = find_star_factor(&g, m, &SearchLimits::factor())?.expect("recorded with a factor");
                report.exhibits.push(OracleExhibit {
                    n,
                    m,
                    edges: g.edges().collect(),
                    deficiency,
                    factor,
                });
            }
        }
        let mut violations = acc.violations;
        violations.sort_unstable();
        violations.dedup();
        report
            .violations
            .extend(violations.into_iter().map(|mask| to_edge_list(&graph_from_mask(n, &pairs, mask))));
        let mut mismatches = acc.tough_mismatches;
        mismatches.sort_unstable();
        report.toughness.push(ToughnessCrossCheck {
            label: format!("connected n={n}"),
            graphs: acc.tough_graphs,
            mismatches: mismatches
                .into_iter()
                .map(|mask| to_edge_list(&graph_from_mask(n, &pairs, mask)))
                .collect(),
        });
        report.rows.extend(acc.rows);
    }
    if cfg.toughness_samples > 0 {
        report
            .toughness
            .push(toughness_cross_check(cfg.toughness_samples, cfg.toughness_n_max, cfg.seed)?);
    }
    Ok(report)
}

fn erdos_renyi<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<(usize, usize)> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).expect("pairs are valid")
}

/// Random graph on `n ≥ 1` vertices: a random recursive tree (vertex `v`
/// attaches to a uniform earlier vertex) plus every other pair with
/// probability `p`.
pub fn random_connected_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for (u, v) in pairs(n) {
        if rng.gen_bool(p) {
            edges.push((u, v));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, edges).expect("deduplicated pairs")
}

/// Compares the independent-set formulation of isolated toughness with the
/// all-subsets formulation on `samples` random graphs, `2 ≤ n ≤ n_max`.
pub fn toughness_cross_check(samples: usize, n_max: usize, seed: u64) -> Result<ToughnessCrossCheck> {
    if !(2..=20).contains(&n_max) {
        return Err(Error::InvalidParams(format!("toughness n_max {n_max} outside 2..=20")));
    }
    let results: Vec<(bool, String)> = (0..samples)
        .into_par_iter()
        .map(|idx| {
            let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(seed, idx as u64));
            let n = rng.gen_range(2..=n_max);
            let p = rng.gen_range(0.1..0.9);
            let g = erdos_renyi(n, p, &mut rng);
            Ok((toughness_agrees(&g)?, to_edge_list(&g)))
        })
        .collect::<Result<_>>()?;
    Ok(ToughnessCrossCheck {
        label: format!("random n<={n_max}"),
        graphs: samples as u64,
        mismatches: results.into_iter().filter(|(ok, _)| !ok).map(|(_, g)| g).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonotonicityReport {
    pub samples: usize,
    /// Edge list of the base graph and the added edge, per failure.
    pub failures: Vec<String>,
    pub min_rho_gain: f64,
    pub min_q_gain: f64,
    pub min_mu_drop: f64,
}

/// Margin below which a change does not count as strict.
pub const MONOTONE_MARGIN: f64 = 1e-9;

/// Adds one random non-edge to `samples` random connected graphs with
/// `3 ≤ n ≤ n_max` and checks `ρ` and `q` strictly grow while `μ` strictly
/// shrinks.
pub fn monotonicity_probe(samples: usize, n_max: usize, seed: u64) -> Result<MonotonicityReport> {
    if n_max < 3 {
        return Err(Error::InvalidParams("monotonicity probe needs n_max >= 3".into()));
    }
    let gains: Vec<(f64, f64, f64, String)> = (0..samples)
        .into_par_iter()
        .map(|idx| {
            let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(seed, idx as u64));
            let n = rng.gen_range(3..=n_max);
            let (g, (u, v)) = loop {
                let p = rng.gen_range(0.0..0.6);
                let g = random_connected_graph(n, p, &mut rng);
                let non_edges = g.non_edges();
                if !non_edges.is_empty() {
                    let e = non_edges[rng.gen_range(0..non_edges.len())];
                    break (g, e);
                }
            };
            let h = g.with_edge(u, v)?;
            let rho = adjacency_radius(&h)? - adjacency_radius(&g)?;
            let q = signless_radius(&h)? - signless_radius(&g)?;
            let mu = distance_radius(&g)? - distance_radius(&h)?;
            Ok((rho, q, mu, format!("{}+ {u} {v}", to_edge_list(&g))))
        })
        .collect::<Result<_>>()?;
    let min = |f: fn(&(f64, f64, f64, String)) -> f64| gains.iter().map(f).fold(f64::INFINITY, f64::min);
    Ok(MonotonicityReport {
        samples,
        failures: gains
            .iter()
            .filter(|(a, b, c, _)| a.min(*b).min(*c) <= MONOTONE_MARGIN)
            .map(|g| g.3.clone())
            .collect(),
        min_rho_gain: min(|g| g.0),
        min_q_gain: min(|g| g.1),
        min_mu_drop: min(|g| g.2),
    })
}
