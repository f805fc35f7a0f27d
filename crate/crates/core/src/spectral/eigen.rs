use serde::Serialize;

use super::DenseMatrix;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Power,
    Jacobi,
}

/// Largest eigenvalue with the iteration count and `‖Mx − λx‖∞` of the
/// returned eigenpair.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralResult {
    pub value: f64,
    pub iterations: usize,
    pub residual: f64,
    #[serde(skip)]
    pub method: Method,
}

#[derive(Clone, Copy, Debug)]
pub struct PowerOptions {
    /// Convergence when the residual drops below `rel_tol · max row sum`.
    pub rel_tol: f64,
    pub max_iterations: usize,
}

impl Default for PowerOptions {
    fn default() -> Self {
        PowerOptions {
            rel_tol: 1e-9,
            max_iterations: 100_000,
        }
    }
}

/// Largest eigenvalue of a symmetric matrix: shifted power iteration, falling
/// back to a full Jacobi decomposition if the iteration stalls.
pub fn spectral_radius(mat: &DenseMatrix) -> Result<SpectralResult> {
    if !mat.is_symmetric() {
        return Err(Error::InvalidParams("spectral radius needs a symmetric matrix".into()));
    }
    match power_iteration(mat, &PowerOptions::default()) {
        Err(Error::NonConvergence { .. }) => {
            let (values, sweeps) = jacobi_eigenvalues(mat);
            let value = values.last().copied().unwrap_or(0.0);
            Ok(SpectralResult {
                value,
                iterations: sweeps,
                residual: 0.0,
                method: Method::Jacobi,
            })
        }
        other => other,
    }
}

/// Power iteration on `M + cI`, `c = 1 + max |row sum|`, so the dominant
/// eigenvalue of the shifted matrix is `λ_max(M) + c`.
pub fn power_iteration(mat: &DenseMatrix, opts: &PowerOptions) -> Result<SpectralResult> {
    let n = mat.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let row_max = mat.max_abs_row_sum();
    if row_max == 0.0 {
        return Ok(SpectralResult {
            value: 0.0,
            iterations: 0,
            residual: 0.0,
            method: Method::Power,
        });
    }
    let shift = 1.0 + row_max;
    let tol = opts.rel_tol * row_max;

    let mut x = vec![1.0; n];
    x[0] += 1e-3;
    normalize(&mut x);
    let mut mx = vec![0.0; n];
    let mut residual = f64::INFINITY;

    for iter in 1..=opts.max_iterations {
        mat.mul_vec(&x, &mut mx);
        let lambda: f64 = x.iter().zip(&mx).map(|(a, b)| a * b).sum();
        residual = mx
            .iter()
            .zip(&x)
            .map(|(m, xi)| (m - lambda * xi).abs())
            .fold(0.0, f64::max);
        if residual <= tol {
            return Ok(SpectralResult {
                value: lambda,
                iterations: iter,
                residual,
                method: Method::Power,
            });
        }
        for (xi, mi) in x.iter_mut().zip(&mx) {
            *xi = mi + shift * *xi;
        }
        normalize(&mut x);
    }
    Err(Error::NonConvergence {
        iterations: opts.max_iterations,
        residual,
    })
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|a| a * a).sum::<f64>().sqrt();
    for a in x.iter_mut() {
        *a /= norm;
    }
}

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// ascending, with the number of sweeps used.
#[allow(clippy::needless_range_loop)]
pub fn jacobi_eigenvalues(mat: &DenseMatrix) -> (Vec<f64>, usize) {
    let n = mat.order();
    let mut a = mat.rows();
    let frob: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let mut sweeps = 0;
    while sweeps < 100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * frob.max(f64::MIN_POSITIVE) {
            break;
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(f64::total_cmp);
    (values, sweeps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_basic, extremal_g_star, BasicKind, ExtremalParams, Graph};
    use crate::spectral::{adjacency_matrix, distance_matrix, signless_laplacian};
    use proptest::prelude::*;

    fn p3() -> Graph {
        build_basic(BasicKind::Path, 3).unwrap()
    }

    #[test]
    fn radii_of_p3() {
        let a = spectral_radius(&adjacency_matrix(&p3())).unwrap();
        assert!((a.value - 2f64.sqrt()).abs() < 1e-9);
        assert!(a.residual <= 1e-9 * 2.0);
        let q = spectral_radius(&signless_laplacian(&p3())).unwrap();
        assert!((q.value - 3.0).abs() < 1e-9);
        let d = spectral_radius(&distance_matrix(&p3()).unwrap()).unwrap();
        assert!((d.value - (1.0 + 3f64.sqrt())).abs() < 1e-9);
    }

    #[test]
    fn clique_radius() {
        let k9 = build_basic(BasicKind::Complete, 9).unwrap();
        let r = spectral_radius(&adjacency_matrix(&k9)).unwrap();
        assert!((r.value - 8.0).abs() < 1e-9);
    }

    #[test]
    fn bipartite_does_not_oscillate() {
        let c6 = build_basic(BasicKind::Cycle, 6).unwrap();
        let r = spectral_radius(&adjacency_matrix(&c6)).unwrap();
        assert!((r.value - 2.0).abs() < 1e-9);
        assert_eq!(r.method, Method::Power);
    }

    #[test]
    fn zero_matrix() {
        let r = spectral_radius(&DenseMatrix::zeros(3)).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn non_convergence_is_reported() {
        let d = distance_matrix(
            &extremal_g_star(&ExtremalParams::new(10, 2, 1).unwrap()).unwrap().0,
        )
        .unwrap();
        let opts = PowerOptions {
            rel_tol: 1e-9,
            max_iterations: 1,
        };
        assert!(matches!(power_iteration(&d, &opts), Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn jacobi_matches_known_spectrum() {
        let (vals, _) = jacobi_eigenvalues(&signless_laplacian(&p3()));
        for (got, want) in vals.iter().zip([0.0, 1.0, 3.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        let (vals, _) = jacobi_eigenvalues(&distance_matrix(&p3()).unwrap());
        // roots of (x + 2)(x² − 2x − 2)
        for (got, want) in vals.iter().zip([-2.0, 1.0 - 3f64.sqrt(), 1.0 + 3f64.sqrt()]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_asymmetric() {
        let m = DenseMatrix::from_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(spectral_radius(&m).is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (2usize..14).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn power_agrees_with_jacobi(g in arb_graph()) {
            for m in [adjacency_matrix(&g), signless_laplacian(&g)] {
                let p = spectral_radius(&m).unwrap();
                let (vals, _) = jacobi_eigenvalues(&m);
                prop_assert!((p.value - vals[vals.len() - 1]).abs() < 1e-7);
            }
        }

        #[test]
        fn dominates_all_ones_rayleigh(g in arb_graph()) {
            let mut ms = vec![adjacency_matrix(&g), signless_laplacian(&g)];
            if g.is_connected() {
                ms.push(distance_matrix(&g).unwrap());
            }
            for m in ms {
                let r = spectral_radius(&m).unwrap().value;
                let ones = vec![1.0; m.order()];
                prop_assert!(r >= m.rayleigh_quotient(&ones) - 1e-9);
            }
        }
    }
}
