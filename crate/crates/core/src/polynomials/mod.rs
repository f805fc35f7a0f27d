//! Exact integer polynomials, characteristic polynomials of small integer
//! matrices, the extremal-graph polynomial families, and certified
//! largest-root extraction.

mod charpoly;
mod families;
mod roots;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

pub use charpoly::characteristic_polynomial;
pub use families::{
    aux_f, aux_g, aux_h, beta_poly, ceil_div, gamma_eval, gamma_poly, phi_b1, phi_b2, phi_b_star,
};
pub use roots::{largest_real_root, real_roots, RootBracket};

/// Polynomial with arbitrary-precision integer coefficients, lowest degree
/// first. Trailing zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Exact sign of `p(x)` at a finite float, evaluated over the rationals.
    pub fn sign_at(&self, x: f64) -> Ordering {
        let xr = BigRational::from_float(x).expect("finite evaluation point");
        self.eval_rational(&xr).cmp(&BigRational::zero())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Leading coefficient sign; `Equal` for the zero polynomial.
    pub fn leading_sign(&self) -> Ordering {
        self.leading().cmp(&BigInt::zero())
    }

    /// Cauchy bound: every real root `r` has `|r| < 1 + max |a_k / a_d|`.
    pub fn cauchy_bound(&self) -> f64 {
        let lead = self.leading().abs();
        if lead.is_zero() {
            return 0.0;
        }
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| BigRational::new(c.abs(), lead.clone()))
            .max()
            .unwrap_or_else(BigRational::zero);
        1.0 + max.to_f64().unwrap_or(f64::MAX)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializing strings cannot fail")
    }

    pub fn from_json(text: &str) -> crate::Result<Self> {
        serde_json::from_str(text).map_err(|e| crate::Error::parse(e.line(), e.to_string()))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{a}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Serialized as a JSON array of decimal strings, lowest degree first.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

/// Accepts decimal strings or plain JSON integers as coefficients.
impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct CoeffVisitor;

        impl<'de> Visitor<'de> for CoeffVisitor {
            type Value = IntPolynomial;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of integer coefficients")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Self::Value, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(c) = seq.next_element::<Coeff>()? {
                    coeffs.push(c.0);
                }
                Ok(IntPolynomial::new(coeffs))
            }
        }

        deserializer.deserialize_seq(CoeffVisitor)
    }
}

struct Coeff(BigInt);

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;

        impl Visitor<'_> for V {
            type Value = Coeff;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a decimal integer string or an integer")
            }

            fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<Coeff, E> {
                let t = s.strip_prefix('+').unwrap_or(s);
                if t.is_empty() || !t.trim_start_matches('-').bytes().all(|b| b.is_ascii_digit()) {
                    return Err(E::custom(format!("invalid integer {s:?}")));
                }
                t.parse::<BigInt>()
                    .map(Coeff)
                    .map_err(|_| E::custom(format!("invalid integer {s:?}")))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Coeff, E> {
                Ok(Coeff(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Coeff, E> {
                Ok(Coeff(v.into()))
            }
        }

        deserializer.deserialize_any(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn trims_and_reports_degree() {
        let p = IntPolynomial::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(IntPolynomial::from_i64s(&[0, 0]).degree(), None);
    }

    #[test]
    fn display() {
        let p = IntPolynomial::from_i64s(&[-25, -41, -7, 1]);
        assert_eq!(p.to_string(), "x^3 - 7x^2 - 41x - 25");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::from_i64s(&[0, -1]).to_string(), "-x");
    }

    #[test]
    fn json_format() {
        let p = IntPolynomial::from_i64s(&[-25, -41, -7, 1]);
        assert_eq!(p.to_json(), r#"["-25","-41","-7","1"]"#);
        assert_eq!(IntPolynomial::from_json(r#"["-25",-41,"-7",1]"#).unwrap(), p);
        let big = IntPolynomial::from_json(r#"["123456789012345678901234567890"]"#).unwrap();
        assert_eq!(big.coeff(0).to_string(), "123456789012345678901234567890");
        for bad in [r#"["1.5"]"#, r#"[""]"#, r#"{"a":1}"#, r#"["--1"]"#, "[1.5]", "[true]"] {
            assert!(IntPolynomial::from_json(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn exact_sign_at_float() {
        // the nearest double to √2 lies above it, its predecessor below
        let p = IntPolynomial::from_i64s(&[-2, 0, 1]);
        let above = std::f64::consts::SQRT_2;
        let below = f64::from_bits(above.to_bits() - 1);
        assert_eq!(p.sign_at(above), Ordering::Greater);
        assert_eq!(p.sign_at(below), Ordering::Less);
    }

    #[test]
    fn derivative_and_eval() {
        let p = IntPolynomial::from_i64s(&[5, -3, 0, 2]);
        assert_eq!(p.derivative(), IntPolynomial::from_i64s(&[-3, 0, 6]));
        assert_eq!(p.eval_int(&BigInt::from(2)), BigInt::from(15));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(p.eval_rational(&half), BigRational::new(15.into(), 4.into()));
    }

    proptest! {
        #[test]
        fn ring_ops_agree_with_evaluation(
            a in proptest::collection::vec(-50i64..50, 0..5),
            b in proptest::collection::vec(-50i64..50, 0..5),
            x in -20i64..20,
        ) {
            let (pa, pb) = (IntPolynomial::from_i64s(&a), IntPolynomial::from_i64s(&b));
            let x = BigInt::from(x);
            prop_assert_eq!((&pa * &pb).eval_int(&x), pa.eval_int(&x) * pb.eval_int(&x));
            prop_assert_eq!((&pa - &pb).eval_int(&x), pa.eval_int(&x) - pb.eval_int(&x));
            prop_assert_eq!((&pa + &pb).eval_int(&x), pa.eval_int(&x) + pb.eval_int(&x));
        }

        #[test]
        fn json_roundtrip(a in proptest::collection::vec(any::<i64>(), 0..6)) {
            let p = IntPolynomial::from_i64s(&a);
            prop_assert_eq!(IntPolynomial::from_json(&p.to_json()).unwrap(), p);
        }
    }
}
