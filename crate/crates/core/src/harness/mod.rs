//! Verification suites over the extremal families and randomized probes of
//! the spectral factor theorems.
//!
//! Every suite returns plain records; nothing here touches the filesystem.
//! Failures are report content, not errors, so a run always produces a full
//! report. Records never contain wall-clock data unless asked for, which
//! keeps repeated runs byte-identical.

mod bounds;
mod identities;
mod oracle;
mod search;
mod summary;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::spectral::{adjacency_radius, distance_radius, signless_radius};
use crate::{Error, Result};

pub use bounds::{verify_bounds, BoundsGrid};
pub use identities::{verify_identities, IdentityGrid};
pub use oracle::{
    monotonicity_probe, random_connected_graph, small_oracle, toughness_cross_check, MonotonicityReport,
    OracleExhibit, OracleRow, SmallOracleConfig, SmallOracleReport, ToughnessCrossCheck,
};
pub use search::{
    evaluate_instance, run_search, InstanceRecord, SearchConfig, SearchReport, SearchSummary, SpectralSide, Verdict,
};
pub use summary::{extremal_summary, graph_spectra, BlockSummary, ExtremalKind, ExtremalSummary, GraphSpectra};

/// Which spectral quantity a theorem constrains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// `ρ(G) ≥ ρ(G*)`.
    Adjacency,
    /// `q(G) ≥ q(G*)`.
    Signless,
    /// `μ(G) ≤ μ(G*)`.
    Distance,
}

impl Theorem {
    pub const ALL: [Theorem; 3] = [Theorem::Adjacency, Theorem::Signless, Theorem::Distance];

    pub fn as_str(&self) -> &'static str {
        match self {
            Theorem::Adjacency => "adjacency",
            Theorem::Signless => "signless",
            Theorem::Distance => "distance",
        }
    }

    /// Smallest order at which the theorem applies for the given `m`, `b`.
    pub fn threshold(&self, m: usize, b: usize) -> usize {
        let (m, b) = (m as i64, b as i64);
        let common = (2 * b + 2) * m * m + (4 * b + 1) * m + 2 * b - 1;
        let t = match self {
            Theorem::Adjacency => ((b * b + 2 * b + 1) * m).max(common),
            Theorem::Signless => ((b * b + 2 * b + 1) * m + b * b - b).max(common),
            Theorem::Distance => (2 * b * b * m + b * b - b + 1).max(3 * m * m * b + 3 * m * b + m + 4 * b),
        };
        t as usize
    }

    /// The constrained spectral radius of `g`.
    pub fn radius(&self, g: &Graph) -> Result<f64> {
        match self {
            Theorem::Adjacency => adjacency_radius(g),
            Theorem::Signless => signless_radius(g),
            Theorem::Distance => distance_radius(g),
        }
    }

    /// Signed distance by which `value` satisfies the hypothesis against the
    /// extremal radius: positive means strictly inside.
    pub fn hypothesis_margin(&self, value: f64, extremal: f64) -> f64 {
        match self {
            Theorem::Adjacency | Theorem::Signless => value - extremal,
            Theorem::Distance => extremal - value,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adjacency" | "a" | "rho" => Ok(Theorem::Adjacency),
            "signless" | "q" => Ok(Theorem::Signless),
            "distance" | "d" | "mu" => Ok(Theorem::Distance),
            other => Err(Error::InvalidParams(format!("unknown theorem {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Failed at a grid point below the theorem's threshold; exploration
    /// only, not counted as a failure.
    Warn,
}

/// One evaluated check at one grid point. The parameter tuple is the
/// witness for a failure.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRow {
    pub point: usize,
    pub theorem: Option<Theorem>,
    pub n: usize,
    pub m: usize,
    pub b: Option<usize>,
    pub i: Option<usize>,
    pub check: String,
    pub status: Status,
    pub margin: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub warn: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifySummary {
    pub points: usize,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub warned: usize,
    pub by_check: BTreeMap<String, Tally>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerifyReport {
    pub rows: Vec<CheckRow>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.rows.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn rows_for<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a CheckRow> + 'a {
        self.rows.iter().filter(move |r| r.check == check)
    }

    pub fn summary(&self) -> VerifySummary {
        let mut by_check: BTreeMap<String, Tally> = BTreeMap::new();
        for row in &self.rows {
            let t = by_check.entry(row.check.clone()).or_default();
            match row.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::Warn => t.warn += 1,
            }
        }
        let mut points: Vec<usize> = self.rows.iter().map(|r| r.point).collect();
        points.dedup();
        VerifySummary {
            points: points.len(),
            checks: self.rows.len(),
            passed: by_check.values().map(|t| t.pass).sum(),
            failed: by_check.values().map(|t| t.fail).sum(),
            warned: by_check.values().map(|t| t.warn).sum(),
            by_check,
        }
    }

    pub fn to_csv(&self) -> Result<String> {
        to_csv(&self.rows)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.rows).expect("rows serialize")
    }
}

/// Serializes records as CSV with a header row.
pub fn to_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

/// Seed for instance `index` of a run with master seed `master`
/// (splitmix64 finalizer over both words).
pub fn instance_seed(master: u64, index: u64) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
    mix(master ^ mix(index))
}

pub(crate) fn status(ok: bool, below_threshold: bool) -> Status {
    match (ok, below_threshold) {
        (true, _) => Status::Pass,
        (false, true) => Status::Warn,
        (false, false) => Status::Fail,
    }
}
