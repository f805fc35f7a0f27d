//! Adjacency, signless Laplacian and distance matrices, their spectral radii,
//! closed-form radius bounds, and quotient matrices over vertex partitions.

mod eigen;
mod quotient;

use std::fmt::Write as _;

use crate::graph::Graph;
use crate::{Error, Result};

pub use eigen::{jacobi_eigenvalues, power_iteration, spectral_radius, Method, PowerOptions, SpectralResult};
pub use quotient::{quotient_matrix, QuotientMatrix};

/// Square row-major matrix of reals.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(order: usize) -> Self {
        DenseMatrix {
            order,
            entries: vec![0.0; order * order],
        }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidParams("matrix rows must form a square".into()));
        }
        Ok(DenseMatrix {
            order,
            entries: rows.concat(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.order + j] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.order).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn max_entry(&self) -> f64 {
        self.entries.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Largest absolute row sum (the infinity norm).
    pub fn max_abs_row_sum(&self) -> f64 {
        (0..self.order)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&x| x >= 0.0)
    }

    /// Entries as exact integers when every entry is integral and below 2^53.
    pub fn as_integers(&self) -> Option<Vec<i64>> {
        self.entries
            .iter()
            .map(|&x| (x.fract() == 0.0 && x.abs() < 9.0e15).then_some(x as i64))
            .collect()
    }

    pub fn mul_vec(&self, x: &[f64], out: &mut [f64]) {
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.row(i).iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }

    /// `xᵀ M x / xᵀ x`.
    pub fn rayleigh_quotient(&self, x: &[f64]) -> f64 {
        let mut mx = vec![0.0; self.order];
        self.mul_vec(x, &mut mx);
        let num: f64 = x.iter().zip(&mx).map(|(a, b)| a * b).sum();
        let den: f64 = x.iter().map(|a| a * a).sum();
        num / den
    }

    /// One row per line, comma-separated; integral entries print without a fraction.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.order {
            let cells: Vec<String> = self.row(i).iter().map(|&x| format_entry(x)).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }
}

fn format_entry(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

pub fn adjacency_matrix(g: &Graph) -> DenseMatrix {
    let n = g.order();
    let mut a = DenseMatrix::zeros(n);
    for (u, v) in g.edges() {
        a.set(u, v, 1.0);
        a.set(v, u, 1.0);
    }
    a
}

/// `Q = D + A`.
pub fn signless_laplacian(g: &Graph) -> DenseMatrix {
    let mut q = adjacency_matrix(g);
    for v in 0..g.order() {
        q.set(v, v, g.degree(v) as f64);
    }
    q
}

fn distance_rows(g: &Graph) -> Result<Vec<Vec<usize>>> {
    (0..g.order())
        .map(|s| {
            g.bfs_distances(s)
                .into_iter()
                .collect::<Option<Vec<_>>>()
                .ok_or(Error::DisconnectedGraph)
        })
        .collect()
}

/// All-pairs shortest-path distances by BFS from every vertex.
pub fn distance_matrix(g: &Graph) -> Result<DenseMatrix> {
    let rows = distance_rows(g)?;
    let n = g.order();
    let mut d = DenseMatrix::zeros(n);
    for (i, row) in rows.iter().enumerate() {
        for (j, &dij) in row.iter().enumerate() {
            d.set(i, j, dij as f64);
        }
    }
    Ok(d)
}

/// `W(G) = Σ_{i<j} d_ij`.
pub fn wiener_index(g: &Graph) -> Result<u64> {
    let rows = distance_rows(g)?;
    let total: u64 = rows.iter().flatten().map(|&d| d as u64).sum();
    Ok(total / 2)
}

pub fn adjacency_radius(g: &Graph) -> Result<f64> {
    Ok(spectral_radius(&adjacency_matrix(g))?.value)
}

pub fn signless_radius(g: &Graph) -> Result<f64> {
    Ok(spectral_radius(&signless_laplacian(g))?.value)
}

pub fn distance_radius(g: &Graph) -> Result<f64> {
    Ok(spectral_radius(&distance_matrix(g)?)?.value)
}

/// Upper bound `ρ(G) ≤ √(2e − n + 1)`.
pub fn hong_bound(g: &Graph) -> Result<f64> {
    let radicand = 2 * g.edge_count() as i64 - g.order() as i64 + 1;
    if radicand < 0 {
        return Err(Error::NotApplicable(format!("2e - n + 1 = {radicand} < 0")));
    }
    Ok((radicand as f64).sqrt())
}

/// Upper bound `q(G) ≤ 2e/(n−1) + n − 2`.
pub fn das_bound(g: &Graph) -> Result<f64> {
    let n = g.order();
    if n < 2 {
        return Err(Error::NotApplicable("bound needs n >= 2".into()));
    }
    Ok(2.0 * g.edge_count() as f64 / (n - 1) as f64 + n as f64 - 2.0)
}

/// Lower bound `μ(G) ≥ 2W(G)/n` from the all-ones Rayleigh quotient.
pub fn rayleigh_distance_lower(g: &Graph) -> Result<f64> {
    Ok(2.0 * wiener_index(g)? as f64 / g.order() as f64)
}
