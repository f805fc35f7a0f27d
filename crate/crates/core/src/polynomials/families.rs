//! Closed-form polynomials attached to the extremal graphs.
//!
//! `phi_*` are characteristic polynomials (in `x`) of the distance quotient
//! matrices of `G*`, `G_1` and `G_2`. `aux_f`/`aux_g` are the edge-count
//! expressions bounding `ρ(G_1)²` and `(n−1)·q(G_1)` as polynomials in `i`;
//! `beta_poly` is the quotient `(φ_{B1} − φ_{B*}) / (i − b)` and `gamma_poly`
//! is `β(n + 2b − 2)` viewed as a polynomial in `i`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::IntPolynomial;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn neg(v: BigInt) -> BigInt {
    -v
}

/// `⌈a / b⌉` for positive `b`.
pub fn ceil_div(a: i64, b: i64) -> i64 {
    assert!(b > 0, "ceil_div by non-positive {b}");
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

/// Characteristic polynomial of the distance quotient matrix of
/// `K_{mt-1} ∨ (K_{n-(m+1)t+1} ∪ tK_1)`.
fn three_block_cubic(n: i64, m: i64, t: i64) -> IntPolynomial {
    let (n, m, t) = (big(n), big(m), big(t));
    let c2 = neg(&t + &n - 4);
    let c1 = (3 * &m + 2) * &t * &t - (2 * &n + 4) * &t - 3 * &n + 5;
    let c0 = neg(&m * (&m + 1)) * &t * &t * &t + (&m * &n + 5 * &m + 3) * &t * &t
        - (3 * &n + 4) * &t
        - 2 * &n
        + 2;
    IntPolynomial::new(vec![c0, c1, c2, big(1)])
}

/// `φ_{B*}(x)` for `G* = K_{mb-1} ∨ (K_{n-(m+1)b+1} ∪ bK_1)`.
pub fn phi_b_star(n: i64, m: i64, b: i64) -> IntPolynomial {
    three_block_cubic(n, m, b)
}

/// `φ_{B1}(x)` for `G_1 = K_{mi-1} ∨ (K_{n-(m+1)i+1} ∪ iK_1)`.
pub fn phi_b1(n: i64, m: i64, i: i64) -> IntPolynomial {
    three_block_cubic(n, m, i)
}

/// `φ_{B2}(x) = x² − (n + c − 3)x + nc − c² − 2n + 2`, `c = ⌈(n+1)/(m+1)⌉`.
pub fn phi_b2(n: i64, m: i64) -> IntPolynomial {
    let c = big(ceil_div(n + 1, m + 1));
    let n = big(n);
    let c1 = neg(&n + &c - 3);
    let c0 = &n * &c - &c * &c - 2 * &n + 2;
    IntPolynomial::new(vec![c0, c1, big(1)])
}

/// `f(i) = (2m+1)i² − (2n+1)i + n² − 2n + 1`.
pub fn aux_f(n: i64, m: i64) -> IntPolynomial {
    let (n, m) = (big(n), big(m));
    IntPolynomial::new(vec![&n * &n - 2 * &n + 1, neg(2 * &n + 1), 2 * m + 1])
}

/// `g(i) = (2m+1)i² − (2n+1)i + 2n² − 4n + 2`.
pub fn aux_g(n: i64, m: i64) -> IntPolynomial {
    let (n, m) = (big(n), big(m));
    IntPolynomial::new(vec![2 * &n * &n - 4 * &n + 2, neg(2 * &n + 1), 2 * m + 1])
}

/// `h(n) = (n − (n+1)/(m+1))(n + (n+1)/(m+1)) − n + 1`, exactly.
pub fn aux_h(n: i64, m: i64) -> BigRational {
    let nr = BigRational::from_integer(big(n));
    let frac = BigRational::new(big(n + 1), big(m + 1));
    (&nr - &frac) * (&nr + &frac) - nr + BigRational::from_integer(big(1))
}

/// `β(x)`, quadratic in `x`, satisfying `φ_{B1} − φ_{B*} = (i − b)·β`.
pub fn beta_poly(n: i64, m: i64, b: i64, i: i64) -> IntPolynomial {
    let (n, m, b, i) = (big(n), big(m), big(b), big(i));
    let mm1 = &m * (&m + 1);
    let c1 = (3 * &m + 2) * &i + (3 * &m + 2) * &b - 2 * &n - 4;
    let c0 = neg(&mm1 * &i * &i) + (&m * &n - &b * &m * &m - &b * &m + 5 * &m + 3) * &i
        - &mm1 * &b * &b
        + (&m * &n + 5 * &m + 3) * &b
        - 3 * &n
        - 4;
    IntPolynomial::new(vec![c0, c1, big(-1)])
}

/// `γ(i) = β(n + 2b − 2)` expanded as a quadratic in `i`.
pub fn gamma_poly(n: i64, m: i64, b: i64) -> IntPolynomial {
    let (n, m, b) = (big(n), big(m), big(b));
    let c2 = neg(&m * (&m + 1));
    let c1 = 4 * &m * &n + 2 * &n - &b * &m * &m + 5 * &b * &m - &m + 4 * &b - 1;
    let c0 = -3 * &n * &n + (4 * &m * &b - 6 * &b + 1) * &n - &m * &m * &b * &b
        + 5 * &m * &b * &b
        - &m * &b
        - &b;
    IntPolynomial::new(vec![c0, c1, c2])
}

pub fn gamma_eval(n: i64, m: i64, b: i64, i: i64) -> BigInt {
    gamma_poly(n, m, b).eval_int(&big(i))
}
