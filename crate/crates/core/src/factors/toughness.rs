use serde::{Deserialize, Serialize};

use super::{deserialize_fraction, mask_vertices, serialize_fraction, Budget, Fraction, SearchLimits};
use crate::graph::Graph;
use crate::{Error, Result};

/// An independent set `T` (|T| ≥ 2) with its neighborhood `N(T)`. Deleting
/// `S = N(T)` isolates all of `T`, so `I(G) ≤ |N(T)| / |T|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToughnessWitness {
    pub t_set: Vec<usize>,
    pub neighborhood: Vec<usize>,
    #[serde(serialize_with = "serialize_fraction", deserialize_with = "deserialize_fraction")]
    pub ratio: Fraction,
}

/// An independent set `T` with `m·|T| − |N(T)|`; a positive deficiency
/// shows `S = N(T)` has `i(G − S) > |S| / m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficiencyWitness {
    pub t_set: Vec<usize>,
    pub deficiency: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsolatedToughness {
    /// The graph is complete.
    Infinite,
    Finite(ToughnessWitness),
}

impl IsolatedToughness {
    pub fn value(&self) -> Option<Fraction> {
        match self {
            IsolatedToughness::Infinite => None,
            IsolatedToughness::Finite(w) => Some(w.ratio),
        }
    }

    /// `"p/q"` or `"inf"`.
    pub fn display(&self) -> String {
        match self.value() {
            None => "inf".into(),
            Some(r) => format!("{}/{}", r.numer(), r.denom()),
        }
    }

    /// Whether `I(G) ≥ p/q`.
    pub fn at_least(&self, p: u64, q: u64) -> bool {
        self.value().is_none_or(|r| r >= Fraction::new(p, q))
    }
}

/// Visits every independent set of the mask graph, including the empty set,
/// as `(T, N(T))`. The visitor returns `false` to stop early.
fn visit_independent<F>(adj: &[u64], budget: &mut Budget, visit: &mut F) -> Result<bool>
where
    F: FnMut(u64, u64) -> bool,
{
    fn rec<F: FnMut(u64, u64) -> bool>(
        adj: &[u64],
        t: u64,
        nbhd: u64,
        mut cand: u64,
        budget: &mut Budget,
        visit: &mut F,
    ) -> Result<bool> {
        budget.tick()?;
        if !visit(t, nbhd) {
            return Ok(false);
        }
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if !rec(adj, t | 1 << v, nbhd | adj[v], cand & !adj[v], budget, visit)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    rec(adj, 0, 0, all, budget, visit)
}

/// Every independent set as a vertex mask (including the empty set).
pub fn independent_sets(g: &Graph, limits: &SearchLimits) -> Result<Vec<u64>> {
    limits.check_order(g)?;
    let adj = g.neighbor_masks().expect("order checked");
    let mut out = Vec::new();
    visit_independent(&adj, &mut Budget::new(limits), &mut |t, _| {
        out.push(t);
        true
    })?;
    Ok(out)
}

/// `I(G) = min |S| / i(G − S)` over `S` with `i(G − S) ≥ 2`, computed as the
/// minimum of `|N(T)| / |T|` over independent sets `|T| ≥ 2`: the isolated
/// vertices `T` of any `G − S` satisfy `N(T) ⊆ S`, and `N(T)` isolates `T`.
pub fn isolated_toughness(g: &Graph, limits: &SearchLimits) -> Result<IsolatedToughness> {
    limits.check_order(g)?;
    if g.is_complete() {
        return Ok(IsolatedToughness::Infinite);
    }
    let adj = g.neighbor_masks().expect("order checked");
    let mut best: Option<(u64, u64, Fraction)> = None;
    visit_independent(&adj, &mut Budget::new(limits), &mut |t, nbhd| {
        let size = t.count_ones() as u64;
        if size >= 2 {
            let r = Fraction::new(nbhd.count_ones() as u64, size);
            if best.as_ref().is_none_or(|b| r < b.2) {
                best = Some((t, nbhd, r));
            }
        }
        true
    })?;
    let (t, nbhd, ratio) = best.expect("a non-complete graph has two non-adjacent vertices");
    Ok(IsolatedToughness::Finite(ToughnessWitness {
        t_set: mask_vertices(t),
        neighborhood: mask_vertices(nbhd),
        ratio,
    }))
}

/// Whether `I(G) ≥ p/q`; stops at the first refuting independent set.
pub fn is_isolated_tough(g: &Graph, p: u64, q: u64, limits: &SearchLimits) -> Result<bool> {
    if q == 0 {
        return Err(Error::InvalidParams("toughness threshold denominator is zero".into()));
    }
    limits.check_order(g)?;
    if g.is_complete() {
        return Ok(true);
    }
    let adj = g.neighbor_masks().expect("order checked");
    let mut tough = true;
    visit_independent(&adj, &mut Budget::new(limits), &mut |t, nbhd| {
        let size = t.count_ones() as u64;
        if size >= 2 && (nbhd.count_ones() as u64) * q < p * size {
            tough = false;
        }
        tough
    })?;
    Ok(tough)
}

/// Maximum of `m·|T| − |N(T)|` over all independent `T`, including `T = ∅`
/// (value 0). A value `≤ 0` is exactly the hypothesis
/// "`i(G − S) ≤ |S| / m` for every `S`". The witness is omitted when only
/// the empty set attains the maximum.
pub fn kano_saito_max_deficiency(
    g: &Graph,
    m: usize,
    limits: &SearchLimits,
) -> Result<(i64, Option<DeficiencyWitness>)> {
    limits.check_order(g)?;
    let adj = g.neighbor_masks().expect("order checked");
    let m = m as i64;
    let mut best = (0i64, 0u64);
    visit_independent(&adj, &mut Budget::new(limits), &mut |t, nbhd| {
        let d = m * t.count_ones() as i64 - nbhd.count_ones() as i64;
        if d > best.0 {
            best = (d, t);
        }
        true
    })?;
    let witness = (best.1 != 0).then(|| DeficiencyWitness {
        t_set: mask_vertices(best.1),
        deficiency: best.0,
    });
    Ok((best.0, witness))
}
