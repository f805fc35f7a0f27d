//! Direct all-subsets evaluations, kept independent of the independent-set
//! enumeration so the two can cross-check each other.

use super::Fraction;
use crate::graph::Graph;
use crate::{Error, Result};

const ORACLE_CAP: usize = 20;

fn masks(g: &Graph) -> Result<Vec<u64>> {
    if g.order() > ORACLE_CAP {
        return Err(Error::CapExceeded {
            n: g.order(),
            cap: ORACLE_CAP,
        });
    }
    Ok(g.neighbor_masks().expect("order below 64"))
}

/// `i(G − S)`: vertices outside `S` whose whole neighborhood lies in `S`.
fn isolated_after_removal(adj: &[u64], s: u64) -> u64 {
    adj.iter()
        .enumerate()
        .filter(|&(v, &nv)| s & (1 << v) == 0 && nv & !s == 0)
        .count() as u64
}

/// `min |S| / i(G − S)` over every `S ⊆ V` with `i(G − S) ≥ 2`; `None` when
/// no such `S` exists.
pub fn brute_force_isolated_toughness(g: &Graph) -> Result<Option<Fraction>> {
    let adj = masks(g)?;
    let n = adj.len();
    let mut best: Option<Fraction> = None;
    for s in 0u64..(1u64 << n) {
        let iso = isolated_after_removal(&adj, s);
        if iso >= 2 {
            let r = Fraction::new(s.count_ones() as u64, iso);
            if best.is_none_or(|b| r < b) {
                best = Some(r);
            }
        }
    }
    Ok(best)
}

/// `max m·i(G − S) − |S|` over every `S ⊆ V`.
pub fn brute_force_max_deficiency(g: &Graph, m: usize) -> Result<i64> {
    let adj = masks(g)?;
    let n = adj.len();
    Ok((0u64..(1u64 << n))
        .map(|s| m as i64 * isolated_after_removal(&adj, s) as i64 - s.count_ones() as i64)
        .max()
        .unwrap_or(0))
}
