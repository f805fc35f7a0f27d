use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;

use super::{status, CheckRow, Theorem, VerifyReport};
use crate::graph::{extremal_g_star, ExtremalParams};
use crate::polynomials::{aux_f, aux_g, aux_h, largest_real_root, phi_b2, phi_b_star, IntPolynomial};
use crate::spectral::{adjacency_radius, signless_radius};
use crate::Result;

/// Numeric slack for spectral comparisons against `K_{n−b}`.
pub const SPECTRAL_SLACK: f64 = 1e-6;
/// Slack for inequalities that fall back to a bisected root.
pub const ROOT_SLACK: f64 = 1e-9;

/// For each theorem and `(m, b)`: orders from `n_start` (default: the
/// theorem's threshold) through threshold + `span`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsGrid {
    pub theorems: Vec<Theorem>,
    pub m_values: Vec<usize>,
    pub b_values: Vec<usize>,
    pub span: usize,
    pub n_start: Option<usize>,
}

impl Default for BoundsGrid {
    fn default() -> Self {
        BoundsGrid {
            theorems: Theorem::ALL.to_vec(),
            m_values: vec![2, 3, 4],
            b_values: vec![1, 2, 3],
            span: 20,
            n_start: None,
        }
    }
}

impl BoundsGrid {
    fn points(&self) -> Vec<(Theorem, usize, usize, usize, bool)> {
        let mut out = Vec::new();
        for &t in &self.theorems {
            for &m in &self.m_values {
                for &b in &self.b_values {
                    let thr = t.threshold(m, b);
                    let start = self.n_start.unwrap_or(thr).max((m + 1) * b);
                    let end = thr.max(start) + self.span;
                    for n in start..=end {
                        out.push((t, n, m, b, n < thr));
                    }
                }
            }
        }
        out
    }
}

/// Evaluates the inequality chain behind each configured theorem at every
/// grid point. Points below a theorem's threshold report failures as
/// warnings.
pub fn verify_bounds(grid: &BoundsGrid) -> VerifyReport {
    let rows = grid
        .points()
        .par_iter()
        .enumerate()
        .map(|(point, &(t, n, m, b, below))| {
            let checks = match t {
                Theorem::Adjacency => adjacency_checks(n, m, b),
                Theorem::Signless => signless_checks(n, m, b),
                Theorem::Distance => distance_checks(n, m, b),
            };
            checks
                .into_iter()
                .map(|(check, outcome)| {
                    let (ok, margin) = match outcome {
                        Ok(x) => x,
                        Err(e) => (false, format!("error: {e}")),
                    };
                    CheckRow {
                        point,
                        theorem: Some(t),
                        n,
                        m,
                        b: Some(b),
                        i: None,
                        check: check.to_string(),
                        status: status(ok, below),
                        margin,
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    VerifyReport { rows }
}

type Outcome = (&'static str, Result<(bool, String)>);

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// `min_{b+1 < i ≤ ⌊n/(m+1)⌋} p(b+1) − p(i)`, exact; must be `≥ 0`.
fn peak_at_b_plus_1(p: &IntPolynomial, n: usize, m: usize, b: usize) -> (bool, String) {
    let top = p.eval_int(&big(b as i64 + 1));
    match (b + 2..=n / (m + 1)).map(|i| &top - p.eval_int(&big(i as i64))).min() {
        Some(margin) => (!margin.is_negative(), margin.to_string()),
        None => (true, "empty range".into()),
    }
}

fn clique_side(n: usize, b: usize) -> i64 {
    (n - b - 1) as i64
}

fn adjacency_checks(n: usize, m: usize, b: usize) -> Vec<Outcome> {
    let (ni, mi, bi) = (n as i64, m as i64, b as i64);
    let f = aux_f(ni, mi);
    let side = clique_side(n, b);
    let f_top = f.eval_int(&big(bi + 1));
    // √f(b+1) < n−b−1 ⟺ f(b+1) < (n−b−1)², both sides non-negative
    let sqrt_f = &big(side * side) - &f_top;
    let h = aux_h(ni, mi);
    let sqrt_h = BigRational::from_integer(big(side * side)) - &h;
    vec![
        ("f-peak-at-b+1", Ok(peak_at_b_plus_1(&f, n, m, b))),
        ("sqrt-f-below-n-b-1", Ok((sqrt_f.is_positive(), sqrt_f.to_string()))),
        ("sqrt-h-below-n-b-1", Ok((sqrt_h.is_positive(), sqrt_h.to_string()))),
        (
            "rho-gstar-above-n-b-1",
            g_star_radius(n, m, b, adjacency_radius).map(|rho| {
                let gap = rho - side as f64;
                (gap > SPECTRAL_SLACK, format!("{gap:.9e}"))
            }),
        ),
    ]
}

fn signless_checks(n: usize, m: usize, b: usize) -> Vec<Outcome> {
    let (ni, mi, bi) = (n as i64, m as i64, b as i64);
    let g = aux_g(ni, mi);
    let side = clique_side(n, b);
    // g(b+1)/(n−1) ≤ 2(n−b−1) ⟺ g(b+1) ≤ 2(n−b−1)(n−1)
    let over = &big(2 * side * (ni - 1)) - &g.eval_int(&big(bi + 1));
    vec![
        ("g-peak-at-b+1", Ok(peak_at_b_plus_1(&g, n, m, b))),
        ("g-over-n-1-below-2(n-b-1)", Ok((!over.is_negative(), over.to_string()))),
        (
            "q-gstar-above-2(n-b-1)",
            g_star_radius(n, m, b, signless_radius).map(|q| {
                let gap = q - 2.0 * side as f64;
                (gap > SPECTRAL_SLACK, format!("{gap:.9e}"))
            }),
        ),
    ]
}

fn distance_checks(n: usize, m: usize, b: usize) -> Vec<Outcome> {
    let (ni, mi, bi) = (n as i64, m as i64, b as i64);
    let phi = phi_b_star(ni, mi, bi);
    let x0 = ni + 2 * bi - 2;
    let x1 = ni + 3 * bi - 1;
    let root = largest_real_root(&phi, ((ni - bi - 2) as f64, x1 as f64)).map(|r| r.root);

    let above = root.clone().map(|r| {
        // a monic polynomial negative at x0 has a root beyond x0
        let exact = phi.eval_int(&big(x0)).is_negative();
        let gap = r - x0 as f64;
        (exact || gap > ROOT_SLACK, format!("{gap:.9e}"))
    });
    let below = root.map(|r| {
        // all Taylor coefficients of a monic cubic positive at x1: no root ≥ x1
        let exact = taylor_positive(&phi, x1);
        let gap = x1 as f64 - r;
        (exact || gap > ROOT_SLACK, format!("{gap:.9e}"))
    });
    let phi2 = phi_b2(ni, mi);
    let v2 = phi2.eval_int(&big(x1));
    let g2_above = largest_real_root(&phi2, (x1 as f64, 2.0 * x1 as f64)).map(|r| {
        let gap = r.root - x1 as f64;
        (v2.is_negative(), format!("{gap:.9e}"))
    });
    vec![
        ("phi-gstar-root-above-n+2b-2", above),
        ("phi-gstar-root-below-n+3b-1", below),
        ("phi-g2-root-above-n+3b-1", g2_above),
    ]
}

fn taylor_positive(p: &IntPolynomial, x: i64) -> bool {
    let x = big(x);
    let d1 = p.derivative();
    let d2 = d1.derivative();
    p.eval_int(&x).is_positive() && d1.eval_int(&x).is_positive() && d2.eval_int(&x).is_positive()
}

fn g_star_radius(n: usize, m: usize, b: usize, radius: fn(&crate::Graph) -> Result<f64>) -> Result<f64> {
    let (g, _) = extremal_g_star(&ExtremalParams::new(n, m, b)?)?;
    radius(&g)
}
