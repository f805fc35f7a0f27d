use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{mask_vertices, Budget, SearchLimits};
use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Star {
    pub center: usize,
    pub leaves: Vec<usize>,
}

/// Spanning star forest whose components are the listed stars.
/// Serialized as `[{"center": c, "leaves": [..]}, ...]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StarFactor {
    pub stars: Vec<Star>,
}

impl StarFactor {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("star factor serializes")
    }
}

pub fn parse_star_factor(text: &str) -> Result<StarFactor> {
    serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))
}

/// True iff the stars partition `V(g)`, every leaf is adjacent to its center,
/// and every star has between `m` and `2m` leaves.
pub fn verify_star_factor(g: &Graph, m: usize, f: &StarFactor) -> bool {
    let n = g.order();
    let mut covered = VertexSet::new(n);
    let mut claim = |v: usize| -> bool {
        if v >= n || covered.contains(v) {
            return false;
        }
        covered.insert(v);
        true
    };
    for star in &f.stars {
        let j = star.leaves.len();
        if j < m || j > 2 * m || !claim(star.center) {
            return false;
        }
        for &leaf in &star.leaves {
            if !claim(leaf) || !g.has_edge(star.center, leaf) {
                return false;
            }
        }
    }
    covered.len() == n
}

/// Exhaustive backtracking search for a `{K_{1,j}: m ≤ j ≤ 2m}`-factor.
///
/// `Ok(None)` is a proof of absence. The lowest unassigned vertex `v` is
/// either the center of a new star, or a leaf of a star centered at one of
/// its unassigned neighbors. Leaf sets are tried largest first. Any
/// unassigned component whose order cannot be split into stars of
/// `m + 1..=2m + 1` vertices is pruned, and failed unassigned sets are
/// memoized.
pub fn find_star_factor(g: &Graph, m: usize, limits: &SearchLimits) -> Result<Option<StarFactor>> {
    if m < 2 {
        return Err(Error::InvalidParams(format!("m must be >= 2, got {m}")));
    }
    limits.check_order(g)?;
    let adj = g.neighbor_masks().expect("order checked against cap <= 64");
    let n = g.order();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = Search {
        adj: &adj,
        m,
        budget: Budget::new(limits),
        failed: HashSet::new(),
        stars: Vec::new(),
    };
    if search.solve(all)? {
        let stars = search
            .stars
            .iter()
            .map(|&(center, leaves)| Star {
                center,
                leaves: mask_vertices(leaves),
            })
            .collect();
        Ok(Some(StarFactor { stars }))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    adj: &'a [u64],
    m: usize,
    budget: Budget,
    failed: HashSet<u64>,
    stars: Vec<(usize, u64)>,
}

impl Search<'_> {
    fn solve(&mut self, unassigned: u64) -> Result<bool> {
        if unassigned == 0 {
            return Ok(true);
        }
        if self.failed.contains(&unassigned) {
            return Ok(false);
        }
        self.budget.tick()?;
        if !self.components_splittable(unassigned) {
            self.failed.insert(unassigned);
            return Ok(false);
        }

        let v = unassigned.trailing_zeros() as usize;
        let vbit = 1u64 << v;
        let nv = self.adj[v] & unassigned;

        // v as a center
        if self.try_star(v, 0, nv, self.m, unassigned)? {
            return Ok(true);
        }
        // v as a leaf of an unassigned neighbor u
        for u in mask_vertices(nv) {
            let nu = self.adj[u] & unassigned & !vbit;
            if self.try_star(u, vbit, nu, self.m - 1, unassigned)? {
                return Ok(true);
            }
        }
        self.failed.insert(unassigned);
        Ok(false)
    }

    /// Tries stars centered at `center` with leaves `forced ∪ L`, `L ⊆ pool`,
    /// `|L|` from `min_extra` up to the `2m` total, largest first.
    fn try_star(&mut self, center: usize, forced: u64, pool: u64, min_extra: usize, unassigned: u64) -> Result<bool> {
        let pool_vertices = mask_vertices(pool);
        let max_extra = (2 * self.m - forced.count_ones() as usize).min(pool_vertices.len());
        for size in (min_extra..=max_extra).rev() {
            let mut combo = Combinations::new(pool_vertices.len(), size);
            while let Some(idx) = combo.next_indices() {
                let leaves = idx.iter().fold(forced, |acc, &k| acc | 1u64 << pool_vertices[k]);
                let rest = unassigned & !(leaves | 1u64 << center);
                self.stars.push((center, leaves));
                if self.solve(rest)? {
                    return Ok(true);
                }
                self.stars.pop();
            }
        }
        Ok(false)
    }

    fn components_splittable(&self, unassigned: u64) -> bool {
        let (lo, hi) = (self.m + 1, 2 * self.m + 1);
        let mut left = unassigned;
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.adj[v] & unassigned & !comp;
                comp |= new;
                frontier |= new;
            }
            left &= !comp;
            let k = comp.count_ones() as usize;
            // k splits into t stars iff t·lo ≤ k ≤ t·hi for some t ≥ 1
            if k.div_ceil(hi) > k / lo {
                return false;
            }
        }
        true
    }
}

/// Lexicographic k-subsets of `0..n` as index vectors.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    started: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            started: false,
        }
    }

    fn next_indices(&mut self) -> Option<&[usize]> {
        let k = self.idx.len();
        if k > self.n {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(&self.idx);
            }
        }
        None
    }
}
