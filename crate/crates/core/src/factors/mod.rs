//! Exact search for `{K_{1,j}: m ≤ j ≤ 2m}`-factors, the Kano–Saito
//! deficiency, and isolated toughness.
//!
//! Everything here is exponential in the order of the graph and works on
//! 64-bit vertex masks, so each entry point enforces a vertex cap and a
//! work budget. Running out of budget is reported as [`Error::Timeout`],
//! never as a negative answer.

mod oracle;
mod star;
mod toughness;

use std::time::{Duration, Instant};

use num_rational::Ratio;
use serde::{Deserialize, Serialize, Serializer};

use crate::graph::Graph;
use crate::{Error, Result};

pub use oracle::{brute_force_isolated_toughness, brute_force_max_deficiency};
pub use star::{find_star_factor, parse_star_factor, verify_star_factor, Star, StarFactor};
pub use toughness::{
    independent_sets, is_isolated_tough, isolated_toughness, kano_saito_max_deficiency,
    DeficiencyWitness, IsolatedToughness, ToughnessWitness,
};

pub const DEFAULT_FACTOR_CAP: usize = 32;
pub const DEFAULT_TOUGHNESS_CAP: usize = 28;

/// Exact non-negative rational used for toughness ratios.
pub type Fraction = Ratio<u64>;

/// Vertex cap and work budget for one exponential search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub vertex_cap: usize,
    /// Deterministic budget in search nodes.
    pub max_nodes: Option<u64>,
    /// Wall-clock budget; results under this limit depend on machine speed.
    pub time_budget: Option<Duration>,
}

impl SearchLimits {
    pub fn factor() -> Self {
        SearchLimits {
            vertex_cap: DEFAULT_FACTOR_CAP,
            max_nodes: None,
            time_budget: None,
        }
    }

    pub fn toughness() -> Self {
        SearchLimits {
            vertex_cap: DEFAULT_TOUGHNESS_CAP,
            ..Self::factor()
        }
    }

    pub fn with_nodes(mut self, nodes: u64) -> Self {
        self.max_nodes = Some(nodes);
        self
    }

    pub fn with_time(mut self, budget: Duration) -> Self {
        self.time_budget = Some(budget);
        self
    }

    pub(crate) fn check_order(&self, g: &Graph) -> Result<()> {
        let cap = self.vertex_cap.min(64);
        if g.order() > cap {
            return Err(Error::CapExceeded { n: g.order(), cap });
        }
        Ok(())
    }
}

pub(crate) struct Budget {
    nodes: u64,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
}

impl Budget {
    pub(crate) fn new(limits: &SearchLimits) -> Self {
        Budget {
            nodes: 0,
            max_nodes: limits.max_nodes,
            deadline: limits.time_budget.map(|d| Instant::now() + d),
        }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.max_nodes.is_some_and(|max| self.nodes > max) {
            return Err(Error::Timeout);
        }
        if self.nodes.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(Error::Timeout);
        }
        Ok(())
    }
}

/// Vertices of a mask in ascending order.
pub(crate) fn mask_vertices(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

pub(crate) fn serialize_fraction<S: Serializer>(r: &Fraction, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

pub(crate) fn deserialize_fraction<'de, D>(d: D) -> std::result::Result<Fraction, D::Error>
where
    D: serde::Deserializer<'de>,
{
    use serde::de::Error as _;
    let s = String::deserialize(d)?;
    let (p, q) = s
        .split_once('/')
        .ok_or_else(|| D::Error::custom(format!("expected p/q, got {s:?}")))?;
    let p: u64 = p.parse().map_err(D::Error::custom)?;
    let q: u64 = q.parse().map_err(D::Error::custom)?;
    if q == 0 {
        return Err(D::Error::custom("zero denominator"));
    }
    Ok(Fraction::new(p, q))
}

/// Outcome of a factor search: found, proven absent, or out of budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorStatus {
    Yes,
    No,
    Timeout,
}

impl FactorStatus {
    pub fn of(result: &Result<Option<StarFactor>>) -> Option<Self> {
        match result {
            Ok(Some(_)) => Some(FactorStatus::Yes),
            Ok(None) => Some(FactorStatus::No),
            Err(Error::Timeout) => Some(FactorStatus::Timeout),
            Err(_) => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            FactorStatus::Yes => "yes",
            FactorStatus::No => "no",
            FactorStatus::Timeout => "timeout",
        }
    }
}
