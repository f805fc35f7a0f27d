use super::DenseMatrix;
use crate::graph::LabeledPartition;
use crate::{Error, Result};

/// Block-average matrix of a partitioned matrix.
///
/// Entry `(i, j)` is the mean over rows in block `i` of the row sums of the
/// submatrix `M_ij`. The partition is equitable when each `M_ij` has constant
/// row sums.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientMatrix {
    pub matrix: DenseMatrix,
    pub partition: LabeledPartition,
    pub equitable: bool,
}

impl QuotientMatrix {
    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    /// Entries as exact integers (row-major), when all are integral.
    pub fn integer_entries(&self) -> Option<Vec<i64>> {
        self.matrix.as_integers()
    }
}

pub fn quotient_matrix(mat: &DenseMatrix, pi: &LabeledPartition) -> Result<QuotientMatrix> {
    // Re-validate: the partition may have been built for a different order.
    let pi = LabeledPartition::new(pi.blocks().to_vec(), mat.order())?;
    let r = pi.len();
    let exact = mat.as_integers();
    let mut q = DenseMatrix::zeros(r);
    let mut equitable = true;

    for (bi, rows) in pi.blocks().iter().enumerate() {
        for (bj, cols) in pi.blocks().iter().enumerate() {
            match &exact {
                Some(ints) => {
                    let n = mat.order();
                    let sums: Vec<i64> = rows
                        .iter()
                        .map(|&i| cols.iter().map(|&j| ints[i * n + j]).sum())
                        .collect();
                    equitable &= sums.iter().all(|&s| s == sums[0]);
                    let total: i64 = sums.iter().sum();
                    q.set(bi, bj, total as f64 / rows.len() as f64);
                }
                None => {
                    let sums: Vec<f64> = rows
                        .iter()
                        .map(|&i| cols.iter().map(|&j| mat.get(i, j)).sum())
                        .collect();
                    equitable &= sums.iter().all(|s| (s - sums[0]).abs() <= 1e-12);
                    q.set(bi, bj, sums.iter().sum::<f64>() / rows.len() as f64);
                }
            }
        }
    }
    if r == 0 {
        return Err(Error::InvalidPartition("no blocks".into()));
    }
    Ok(QuotientMatrix {
        matrix: q,
        partition: pi,
        equitable,
    })
}
