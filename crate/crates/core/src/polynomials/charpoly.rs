use num_bigint::BigInt;

use super::IntPolynomial;
use crate::{Error, Result};

const MAX_ORDER: usize = 8;

/// `det(xI − M)` for a small row-major integer matrix, by cofactor expansion
/// over polynomial entries.
pub fn characteristic_polynomial(entries: &[i64], order: usize) -> Result<IntPolynomial> {
    if entries.len() != order * order {
        return Err(Error::InvalidParams(format!(
            "{} entries do not form a {order}x{order} matrix",
            entries.len()
        )));
    }
    if order == 0 || order > MAX_ORDER {
        return Err(Error::InvalidParams(format!(
            "characteristic polynomial supports orders 1..={MAX_ORDER}, got {order}"
        )));
    }
    let m: Vec<Vec<IntPolynomial>> = (0..order)
        .map(|i| {
            (0..order)
                .map(|j| {
                    let c = IntPolynomial::constant(BigInt::from(-entries[i * order + j]));
                    if i == j {
                        &c + &IntPolynomial::x()
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    let cols: Vec<usize> = (0..order).collect();
    Ok(det(&m, 0, &cols))
}

fn det(m: &[Vec<IntPolynomial>], row: usize, cols: &[usize]) -> IntPolynomial {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = IntPolynomial::zero();
    for (k, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = &m[row][c] * &det(m, row + 1, &rest);
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one() {
        let p = characteristic_polynomial(&[5], 1).unwrap();
        assert_eq!(p, IntPolynomial::from_i64s(&[-5, 1]));
    }

    #[test]
    fn distance_matrix_of_p3() {
        // x³ − 6x − 4 = (x + 2)(x² − 2x − 2)
        let p = characteristic_polynomial(&[0, 1, 2, 1, 0, 1, 2, 1, 0], 3).unwrap();
        assert_eq!(p, IntPolynomial::from_i64s(&[-4, -6, 0, 1]));
    }

    #[test]
    fn trace_and_determinant_coefficients() {
        let m = [2, -1, 0, 3, 1, 4, 0, -2, 5, 1, 1, 0, 7, 0, 2, -3];
        let p = characteristic_polynomial(&m, 4).unwrap();
        assert_eq!(p.coeff(3), BigInt::from(-(2 + 4 + 1 - 3)));
        assert_eq!(p.leading(), BigInt::from(1));
    }

    #[test]
    fn shape_errors() {
        assert!(characteristic_polynomial(&[1, 2, 3], 2).is_err());
        assert!(characteristic_polynomial(&[], 0).is_err());
    }
}
