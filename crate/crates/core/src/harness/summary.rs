use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::graph::{extremal_g1, extremal_g2, extremal_g_star, BlockLabeling, ExtremalParams, Graph};
use crate::spectral::{
    adjacency_matrix, das_bound, distance_matrix, hong_bound, rayleigh_distance_lower, signless_laplacian,
    spectral_radius, wiener_index, SpectralResult,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtremalKind {
    GStar,
    G1,
    G2,
}

impl ExtremalKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExtremalKind::GStar => "gstar",
            ExtremalKind::G1 => "g1",
            ExtremalKind::G2 => "g2",
        }
    }
}

impl fmt::Display for ExtremalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExtremalKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gstar" | "g*" => Ok(ExtremalKind::GStar),
            "g1" => Ok(ExtremalKind::G1),
            "g2" => Ok(ExtremalKind::G2),
            other => Err(Error::InvalidParams(format!("unknown extremal kind {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSummary {
    pub name: String,
    pub size: usize,
    /// Distinct degrees inside the block (a single value for these families).
    pub degrees: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalSummary {
    pub kind: String,
    pub n: usize,
    pub m: usize,
    pub b: Option<usize>,
    pub i: Option<usize>,
    pub edges: usize,
    pub blocks: Vec<BlockSummary>,
    pub rho: f64,
    pub q: f64,
    pub mu: f64,
    pub wiener: u64,
}

fn block_summaries(g: &Graph, lab: &BlockLabeling) -> Vec<BlockSummary> {
    lab.names
        .iter()
        .zip(lab.partition.blocks())
        .map(|(name, block)| {
            let mut degrees: Vec<usize> = block.iter().map(|&v| g.degree(v)).collect();
            degrees.sort_unstable();
            degrees.dedup();
            BlockSummary {
                name: name.clone(),
                size: block.len(),
                degrees,
            }
        })
        .collect()
}

/// Builds one of the extremal graphs. `param` is `b` for `G*`, `i` for
/// `G_1`, and ignored for `G_2`.
pub fn extremal_summary(
    kind: ExtremalKind,
    n: usize,
    m: usize,
    param: Option<usize>,
) -> Result<(Graph, ExtremalSummary)> {
    let need = |what: &str| param.ok_or_else(|| Error::InvalidParams(format!("{kind} needs {what}")));
    let (g, lab, b, i) = match kind {
        ExtremalKind::GStar => {
            let b = need("b")?;
            let (g, lab) = extremal_g_star(&ExtremalParams::new(n, m, b)?)?;
            (g, lab, Some(b), None)
        }
        ExtremalKind::G1 => {
            let i = need("i")?;
            let (g, lab) = extremal_g1(n, m, i)?;
            (g, lab, None, Some(i))
        }
        ExtremalKind::G2 => {
            let (g, lab) = extremal_g2(n, m)?;
            (g, lab, None, None)
        }
    };
    let summary = ExtremalSummary {
        kind: kind.to_string(),
        n,
        m,
        b,
        i,
        edges: g.edge_count(),
        blocks: block_summaries(&g, &lab),
        rho: spectral_radius(&adjacency_matrix(&g))?.value,
        q: spectral_radius(&signless_laplacian(&g))?.value,
        mu: spectral_radius(&distance_matrix(&g)?)?.value,
        wiener: wiener_index(&g)?,
    };
    Ok((g, summary))
}

/// Spectral radii and classical bounds of an arbitrary graph. Distance
/// quantities are absent for disconnected graphs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphSpectra {
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
    pub adjacency: SpectralResult,
    pub signless: SpectralResult,
    pub distance: Option<SpectralResult>,
    pub wiener: Option<u64>,
    pub hong_bound: Option<f64>,
    pub das_bound: Option<f64>,
    pub rayleigh_distance_lower: Option<f64>,
}

pub fn graph_spectra(g: &Graph) -> Result<GraphSpectra> {
    let connected = g.is_connected();
    let distance = if connected {
        Some(spectral_radius(&distance_matrix(g)?)?)
    } else {
        None
    };
    Ok(GraphSpectra {
        n: g.order(),
        edges: g.edge_count(),
        connected,
        adjacency: spectral_radius(&adjacency_matrix(g))?,
        signless: spectral_radius(&signless_laplacian(g))?,
        distance,
        wiener: wiener_index(g).ok(),
        hong_bound: hong_bound(g).ok(),
        das_bound: das_bound(g).ok(),
        rayleigh_distance_lower: rayleigh_distance_lower(g).ok(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_basic, BasicKind};

    #[test]
    fn gstar_summary() {
        let (g, s) = extremal_summary(ExtremalKind::GStar, 10, 2, Some(1)).unwrap();
        assert_eq!(g.edge_count(), 37);
        assert_eq!(s.edges, 37);
        assert_eq!(s.wiener, 53);
        let sizes: Vec<usize> = s.blocks.iter().map(|b| b.size).collect();
        assert_eq!(sizes, [1, 8, 1]);
        assert_eq!(s.blocks[0].degrees, [9]);
        assert_eq!(s.blocks[1].degrees, [8]);
        assert_eq!(s.blocks[2].degrees, [1]);
        assert!(s.rho > 8.0 && s.q > 16.0 && s.mu > 10.0);
    }

    #[test]
    fn g1_and_g2_blocks() {
        let (_, s) = extremal_summary(ExtremalKind::G1, 27, 2, Some(3)).unwrap();
        assert_eq!(s.blocks.iter().map(|b| b.size).collect::<Vec<_>>(), [5, 19, 3]);
        let (_, s) = extremal_summary(ExtremalKind::G2, 27, 2, None).unwrap();
        assert_eq!(s.blocks.iter().map(|b| b.size).collect::<Vec<_>>(), [17, 10]);
        assert!(extremal_summary(ExtremalKind::G1, 27, 2, None).is_err());
        assert!("g3".parse::<ExtremalKind>().is_err());
    }

    #[test]
    fn spectra_of_disconnected_graph() {
        let g = build_basic(BasicKind::Empty, 3).unwrap();
        let s = graph_spectra(&g).unwrap();
        assert!(!s.connected);
        assert!(s.distance.is_none());
        assert!(s.wiener.is_none());
        assert_eq!(s.adjacency.value, 0.0);
    }
}
