use std::cmp::Ordering;

use num_traits::ToPrimitive;

use super::IntPolynomial;
use crate::{Error, Result};

/// A sign-change interval `[lo, hi]` around `root`, narrowed by bisection
/// with exact sign evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
    pub root: f64,
}

impl RootBracket {
    fn exact(x: f64) -> Self {
        RootBracket {
            lo: x,
            hi: x,
            root: x,
        }
    }
}

fn bisect(p: &IntPolynomial, mut lo: f64, mut hi: f64) -> RootBracket {
    let s_lo = p.sign_at(lo);
    debug_assert_ne!(s_lo, p.sign_at(hi));
    loop {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= 1e-10 * mid.abs().max(1.0) || mid <= lo || mid >= hi {
            return RootBracket { lo, hi, root: mid };
        }
        match p.sign_at(mid) {
            Ordering::Equal => return RootBracket::exact(mid),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
}

fn linear_root(p: &IntPolynomial) -> f64 {
    let c0 = p.coeff(0).to_f64().unwrap_or(f64::NAN);
    let c1 = p.coeff(1).to_f64().unwrap_or(f64::NAN);
    -c0 / c1
}

/// Scans the monotone pieces between consecutive breakpoints from the right
/// and returns the rightmost root found.
fn rightmost_root(p: &IntPolynomial, breakpoints: &[f64]) -> Option<RootBracket> {
    for w in breakpoints.windows(2).rev() {
        let (a, b) = (w[0], w[1]);
        let (sa, sb) = (p.sign_at(a), p.sign_at(b));
        if sb == Ordering::Equal {
            return Some(RootBracket::exact(b));
        }
        if sa == Ordering::Equal {
            return Some(RootBracket::exact(a));
        }
        if sa != sb {
            return Some(bisect(p, a, b));
        }
    }
    None
}

/// Distinct real roots in ascending order.
///
/// Roots of the derivative split the line into monotone pieces; each piece
/// with a sign change holds exactly one root.
pub fn real_roots(p: &IntPolynomial) -> Vec<f64> {
    match p.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![linear_root(p)],
        _ => {}
    }
    let bound = p.cauchy_bound();
    let mut breaks = vec![-bound];
    breaks.extend(real_roots(&p.derivative()).into_iter().filter(|c| c.abs() < bound));
    breaks.push(bound);

    let mut roots = Vec::new();
    for w in breaks.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (sa, sb) = (p.sign_at(a), p.sign_at(b));
        if sa == Ordering::Equal {
            roots.push(a);
        } else if sb != Ordering::Equal && sa != sb {
            roots.push(bisect(p, a, b).root);
        }
    }
    if p.sign_at(bound) == Ordering::Equal {
        roots.push(bound);
    }
    roots.dedup();
    roots
}

/// Largest real root of a polynomial of degree 1 to 3.
///
/// The search starts from `hint = (lo, hi)`; `hi` is doubled until `p` has
/// the sign of its leading coefficient there and no critical point lies
/// beyond it, which certifies that no root exceeds `hi`. The rightmost
/// monotone piece inside `[lo, hi]` that changes sign is then bisected.
pub fn largest_real_root(p: &IntPolynomial, hint: (f64, f64)) -> Result<RootBracket> {
    let (lo, hi) = hint;
    let degree = match p.degree() {
        Some(d @ 1..=3) => d,
        _ => {
            return Err(Error::InvalidParams(format!(
                "largest_real_root supports degrees 1..=3, got {:?}",
                p.degree()
            )))
        }
    };
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidParams(format!("bad bracket hint ({lo}, {hi})")));
    }
    let crit = if degree > 1 {
        real_roots(&p.derivative())
    } else {
        Vec::new()
    };
    let crit_max = crit.last().copied().unwrap_or(f64::NEG_INFINITY);
    let lead = p.leading_sign();
    let limit = 2.0 * hi.abs().max(p.cauchy_bound()) + 1.0;

    let mut upper = hi;
    while upper < crit_max || p.sign_at(upper) != lead {
        upper = if upper <= 0.0 { 1.0 } else { 2.0 * upper };
        if upper > limit {
            return Err(Error::NoSignChange { lo, hi: upper });
        }
    }

    let mut breaks = vec![lo];
    breaks.extend(crit.iter().copied().filter(|&c| c > lo && c < upper));
    breaks.push(upper);
    rightmost_root(p, &breaks).ok_or(Error::NoSignChange { lo, hi: upper })
}
