use rayon::prelude::*;

use super::{CheckRow, Status, VerifyReport};
use crate::graph::{extremal_g1, extremal_g2, extremal_g_star, BlockLabeling, ExtremalParams, Graph};
use crate::polynomials::{
    beta_poly, characteristic_polynomial, largest_real_root, phi_b1, phi_b2, phi_b_star, IntPolynomial,
};
use crate::spectral::{
    adjacency_matrix, distance_matrix, quotient_matrix, signless_laplacian, spectral_radius, wiener_index,
    DenseMatrix,
};
use crate::Result;

/// Largest allowed gap between a full spectral radius and the largest root
/// of its quotient's characteristic polynomial.
pub const QUOTIENT_TOLERANCE: f64 = 1e-6;

/// Parameter grid for the exact identity suite: every valid `(n, m, b)`
/// with `n ≤ n_max`, plus every `i ∈ [b+1, ⌊n/(m+1)⌋]` for `G_1` and every
/// `n ≥ m + 2` for `G_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityGrid {
    pub m_values: Vec<usize>,
    pub b_values: Vec<usize>,
    pub n_max: usize,
    /// Compare full spectral radii against quotient roots (the slow part).
    pub quotient_radii: bool,
}

impl Default for IdentityGrid {
    fn default() -> Self {
        IdentityGrid {
            m_values: vec![2, 3, 4],
            b_values: vec![1, 2, 3],
            n_max: 60,
            quotient_radii: true,
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Point {
    Star { n: usize, m: usize, b: usize },
    Two { n: usize, m: usize },
}

impl IdentityGrid {
    fn points(&self) -> Vec<Point> {
        let mut out = Vec::new();
        for &m in &self.m_values {
            for &b in &self.b_values {
                for n in (m + 1) * b..=self.n_max {
                    out.push(Point::Star { n, m, b });
                }
            }
            for n in m + 2..=self.n_max {
                out.push(Point::Two { n, m });
            }
        }
        out
    }
}

/// Runs the exact identity suite over `grid`.
pub fn verify_identities(grid: &IdentityGrid) -> VerifyReport {
    let points = grid.points();
    let rows = points
        .par_iter()
        .enumerate()
        .map(|(idx, p)| match *p {
            Point::Star { n, m, b } => star_point(idx, n, m, b, grid.quotient_radii),
            Point::Two { n, m } => g2_point(idx, n, m),
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    VerifyReport { rows }
}

struct RowSink {
    point: usize,
    n: usize,
    m: usize,
    b: Option<usize>,
    rows: Vec<CheckRow>,
}

impl RowSink {
    fn push(&mut self, check: &str, i: Option<usize>, outcome: Result<(bool, String)>) {
        let (status, margin) = match outcome {
            Ok((true, margin)) => (Status::Pass, margin),
            Ok((false, margin)) => (Status::Fail, margin),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        self.rows.push(CheckRow {
            point: self.point,
            theorem: None,
            n: self.n,
            m: self.m,
            b: self.b,
            i,
            check: check.to_string(),
            status,
            margin,
        });
    }
}

fn star_point(point: usize, n: usize, m: usize, b: usize, radii: bool) -> Vec<CheckRow> {
    let mut sink = RowSink {
        point,
        n,
        m,
        b: Some(b),
        rows: Vec::new(),
    };
    let built = ExtremalParams::new(n, m, b).and_then(|p| extremal_g_star(&p));
    let (g, lab) = match built {
        Ok(x) => x,
        Err(e) => {
            sink.push("construct-gstar", None, Err(e));
            return sink.rows;
        }
    };
    let (ni, mi, bi) = (n as i64, m as i64, b as i64);

    sink.push(
        "wiener-closed-form",
        None,
        wiener_index(&g).map(|w| {
            let closed = ni * ni + (2 * bi - 1) * ni - 2 * bi * bi * mi - bi * bi + bi;
            let diff = 2 * w as i64 - closed;
            (diff == 0, diff.to_string())
        }),
    );

    let phi_star = phi_b_star(ni, mi, bi);
    sink.push("charpoly-gstar", None, charpoly_matches(&g, &lab, &phi_star));

    if radii {
        let hint_d = ((n - b) as f64 - 2.0, (n + 3 * b) as f64 - 1.0);
        sink.push(
            "quotient-radius-distance",
            None,
            distance_matrix(&g).and_then(|d| quotient_radius_gap(&d, &lab, Some(hint_d))),
        );
        sink.push(
            "quotient-radius-adjacency",
            None,
            quotient_radius_gap(&adjacency_matrix(&g), &lab, None),
        );
        sink.push(
            "quotient-radius-signless",
            None,
            quotient_radius_gap(&signless_laplacian(&g), &lab, None),
        );
    }

    for i in b + 1..=n / (m + 1) {
        let ii = i as i64;
        let lhs = &phi_b1(ni, mi, ii) - &phi_star;
        let rhs = beta_poly(ni, mi, bi, ii).scale(&(ii - bi).into());
        let diff = &lhs - &rhs;
        sink.push("difference-identity", Some(i), Ok((diff.is_zero(), format!("{diff}"))));

        let g1 = extremal_g1(n, m, i);
        sink.push(
            "charpoly-g1",
            Some(i),
            g1.and_then(|(g1, lab1)| charpoly_matches(&g1, &lab1, &phi_b1(ni, mi, ii))),
        );
    }
    sink.rows
}

fn g2_point(point: usize, n: usize, m: usize) -> Vec<CheckRow> {
    let mut sink = RowSink {
        point,
        n,
        m,
        b: None,
        rows: Vec::new(),
    };
    sink.push(
        "charpoly-g2",
        None,
        extremal_g2(n, m).and_then(|(g, lab)| charpoly_matches(&g, &lab, &phi_b2(n as i64, m as i64))),
    );
    sink.rows
}

/// Exact comparison of `expected` with the characteristic polynomial of the
/// distance quotient matrix over the block labeling.
fn charpoly_matches(g: &Graph, lab: &BlockLabeling, expected: &IntPolynomial) -> Result<(bool, String)> {
    let d = distance_matrix(g)?;
    let quotient = quotient_matrix(&d, &lab.partition)?;
    if !quotient.equitable {
        return Ok((false, "partition not equitable".into()));
    }
    let entries = quotient
        .integer_entries()
        .expect("distance quotient of an equitable partition is integral");
    let cp = characteristic_polynomial(&entries, quotient.order())?;
    if &cp == expected {
        Ok((true, "exact".into()))
    } else {
        Ok((false, format!("quotient gives {cp}, closed form gives {expected}")))
    }
}

/// `|λ_max(M) − largest root of det(xI − M_π)|` over the block labeling.
fn quotient_radius_gap(
    mat: &DenseMatrix,
    lab: &BlockLabeling,
    hint: Option<(f64, f64)>,
) -> Result<(bool, String)> {
    let full = spectral_radius(mat)?.value;
    let quotient = quotient_matrix(mat, &lab.partition)?;
    if !quotient.equitable {
        return Ok((false, "partition not equitable".into()));
    }
    let entries = quotient
        .integer_entries()
        .expect("integer matrix with an equitable partition has an integral quotient");
    let cp = characteristic_polynomial(&entries, quotient.order())?;
    let hint = hint.unwrap_or((0.0, quotient.matrix.max_abs_row_sum() + 1.0));
    let root = largest_real_root(&cp, hint)?.root;
    let gap = (full - root).abs();
    Ok((gap <= QUOTIENT_TOLERANCE, format!("{gap:.3e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_grid() -> IdentityGrid {
        IdentityGrid {
            m_values: vec![2],
            b_values: vec![1, 2],
            n_max: 16,
            quotient_radii: true,
        }
    }

    #[test]
    fn small_grid_passes() {
        let report = verify_identities(&small_grid());
        let bad: Vec<_> = report.failures().collect();
        assert!(bad.is_empty(), "{bad:#?}");
        let s = report.summary();
        assert_eq!(s.failed, 0);
        assert!(s.by_check["charpoly-g1"].pass > 0);
        assert!(s.by_check["charpoly-g2"].pass > 0);
    }

    #[test]
    fn single_point_rows() {
        let rows = star_point(0, 10, 2, 1, true);
        let names: Vec<&str> = rows.iter().map(|r| r.check.as_str()).collect();
        assert_eq!(
            names,
            [
                "wiener-closed-form",
                "charpoly-gstar",
                "quotient-radius-distance",
                "quotient-radius-adjacency",
                "quotient-radius-signless",
                "difference-identity",
                "charpoly-g1",
                "difference-identity",
                "charpoly-g1",
            ]
        );
        assert!(rows.iter().all(|r| r.status == Status::Pass));
        assert_eq!(rows[0].margin, "0");
    }

    #[test]
    fn mismatched_closed_form_is_reported() {
        let (g, lab) = extremal_g_star(&ExtremalParams::new(10, 2, 1).unwrap()).unwrap();
        let wrong = IntPolynomial::from_i64s(&[-24, -41, -7, 1]);
        let (ok, msg) = charpoly_matches(&g, &lab, &wrong).unwrap();
        assert!(!ok);
        assert!(msg.contains("x^3 - 7x^2 - 41x - 25"), "{msg}");
    }

    #[test]
    fn report_serializes() {
        let report = verify_identities(&IdentityGrid {
            m_values: vec![2],
            b_values: vec![1],
            n_max: 8,
            quotient_radii: false,
        });
        let csv = report.to_csv().unwrap();
        assert!(csv.starts_with("point,theorem,n,m,b,i,check,status,margin\n"));
        assert!(csv.contains(",charpoly-g2,pass,exact"));
        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(json.as_array().unwrap().len(), report.rows.len());
    }
}
