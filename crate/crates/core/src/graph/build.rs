use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{BlockLabeling, Graph, LabeledPartition, DEFAULT_VERTEX_CAP};
use crate::{Error, Result};

pub const S_BLOCK: &str = "S-block";
pub const CLIQUE_BLOCK: &str = "clique-block";
pub const INDEPENDENT_BLOCK: &str = "independent-block";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasicKind {
    Complete,
    Star,
    Path,
    Cycle,
    Empty,
}

impl FromStr for BasicKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete" => Ok(BasicKind::Complete),
            "star" => Ok(BasicKind::Star),
            "path" => Ok(BasicKind::Path),
            "cycle" => Ok(BasicKind::Cycle),
            "empty" => Ok(BasicKind::Empty),
            other => Err(Error::InvalidParams(format!("unknown graph kind {other:?}"))),
        }
    }
}

/// Complete graph, star `K_{1,n-1}` (center 0), path, cycle or edgeless graph on `n` vertices.
pub fn build_basic(kind: BasicKind, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut g = Graph::empty(n)?;
    match kind {
        BasicKind::Complete => {
            for u in 0..n {
                for v in u + 1..n {
                    g.insert_edge(u, v)?;
                }
            }
        }
        BasicKind::Star => {
            for v in 1..n {
                g.insert_edge(0, v)?;
            }
        }
        BasicKind::Path => {
            for v in 1..n {
                g.insert_edge(v - 1, v)?;
            }
        }
        BasicKind::Cycle => {
            if n < 3 {
                return Err(Error::InvalidParams(format!("cycle needs n >= 3, got {n}")));
            }
            for v in 1..n {
                g.insert_edge(v - 1, v)?;
            }
            g.insert_edge(n - 1, 0)?;
        }
        BasicKind::Empty => {}
    }
    Ok(g)
}

/// `g1 ∨ g2`: vertices of `g1` first, then those of `g2` shifted by `|g1|`.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let n1 = g1.order();
    let mut g = disjoint_union(&[g1.clone(), g2.clone()])?;
    for u in 0..n1 {
        for v in 0..g2.order() {
            g.insert_edge(u, n1 + v)?;
        }
    }
    Ok(g)
}

pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
    if gs.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let n: usize = gs.iter().map(Graph::order).sum();
    if n > DEFAULT_VERTEX_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: DEFAULT_VERTEX_CAP,
        });
    }
    let mut g = Graph::empty(n)?;
    let mut offset = 0;
    for part in gs {
        for (u, v) in part.edges() {
            g.insert_edge(offset + u, offset + v)?;
        }
        offset += part.order();
    }
    Ok(g)
}

/// Order `n`, star parameter `m ≥ 2`, toughness parameter `b ≥ 1` of the
/// extremal graph `K_{mb-1} ∨ (K_{n-(m+1)b+1} ∪ bK_1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalParams {
    pub n: usize,
    pub m: usize,
    pub b: usize,
}

impl ExtremalParams {
    pub fn new(n: usize, m: usize, b: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParams(format!("m must be >= 2, got {m}")));
        }
        if b < 1 {
            return Err(Error::InvalidParams("b must be >= 1".into()));
        }
        if n + 1 < (m + 1) * b + 1 {
            return Err(Error::InvalidParams(format!(
                "n = {n} leaves the clique block empty (needs n >= {})",
                (m + 1) * b
            )));
        }
        Ok(ExtremalParams { n, m, b })
    }

    /// Sizes of the S-block, clique block and independent block.
    pub fn block_sizes(&self) -> [usize; 3] {
        [
            self.m * self.b - 1,
            self.n + 1 - (self.m + 1) * self.b,
            self.b,
        ]
    }
}

fn three_block(sizes: [usize; 3]) -> Result<(Graph, BlockLabeling)> {
    let [s, c, t] = sizes;
    let outer = build_basic(BasicKind::Complete, s)?;
    let inner = disjoint_union(&[
        build_basic(BasicKind::Complete, c)?,
        build_basic(BasicKind::Empty, t)?,
    ])?;
    let g = join(&outer, &inner)?;
    let labeling = BlockLabeling {
        names: vec![S_BLOCK.into(), CLIQUE_BLOCK.into(), INDEPENDENT_BLOCK.into()],
        partition: LabeledPartition::consecutive(&sizes)?,
    };
    Ok((g, labeling))
}

/// `G* = K_{mb-1} ∨ (K_{n-(m+1)b+1} ∪ bK_1)` with its three-block labeling.
pub fn extremal_g_star(p: &ExtremalParams) -> Result<(Graph, BlockLabeling)> {
    three_block(p.block_sizes())
}

/// `G_1 = K_{mi-1} ∨ (K_{n-(m+1)i+1} ∪ iK_1)`.
pub fn extremal_g1(n: usize, m: usize, i: usize) -> Result<(Graph, BlockLabeling)> {
    let p = ExtremalParams::new(n, m, i)?;
    three_block(p.block_sizes())
}

/// `⌈(n+1)/(m+1)⌉`, the independent-block size of `G_2`.
pub fn g2_independent_size(n: usize, m: usize) -> usize {
    (n + 1).div_ceil(m + 1)
}

/// `G_2 = K_{n-c} ∨ cK_1` with `c = ⌈(n+1)/(m+1)⌉`.
pub fn extremal_g2(n: usize, m: usize) -> Result<(Graph, BlockLabeling)> {
    if m < 2 {
        return Err(Error::InvalidParams(format!("m must be >= 2, got {m}")));
    }
    if n < m + 2 {
        return Err(Error::InvalidParams(format!("G2 needs n >= m + 2, got n = {n}, m = {m}")));
    }
    let c = g2_independent_size(n, m);
    let g = join(
        &build_basic(BasicKind::Complete, n - c)?,
        &build_basic(BasicKind::Empty, c)?,
    )?;
    let labeling = BlockLabeling {
        names: vec![CLIQUE_BLOCK.into(), INDEPENDENT_BLOCK.into()],
        partition: LabeledPartition::consecutive(&[n - c, c])?,
    };
    Ok((g, labeling))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k(n: usize) -> Graph {
        build_basic(BasicKind::Complete, n).unwrap()
    }

    #[test]
    fn basic_examples() {
        assert_eq!(k(4).edge_count(), 6);
        let star = build_basic(BasicKind::Star, 5).unwrap();
        assert_eq!(star.edge_count(), 4);
        assert_eq!(star.neighbors(0).to_vec(), vec![1, 2, 3, 4]);
        let c6 = build_basic(BasicKind::Cycle, 6).unwrap();
        assert!(c6.degrees().iter().all(|&d| d == 2));
        assert!(build_basic(BasicKind::Cycle, 2).is_err());
        assert_eq!(build_basic(BasicKind::Path, 0).unwrap_err(), Error::EmptyGraph);
    }

    #[test]
    fn join_examples() {
        let two_k1 = build_basic(BasicKind::Empty, 2).unwrap();
        let p3 = join(&k(1), &two_k1).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3.degree(0), 2);

        let g = join(&k(2), &two_k1).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(join(&k(1), &k(6)).unwrap(), k(7));
    }

    #[test]
    fn union_examples() {
        let g = disjoint_union(&[k(3), k(3)]).unwrap();
        assert_eq!((g.order(), g.edge_count()), (6, 6));
        assert_eq!(disjoint_union(&[k(1)]).unwrap(), k(1));
        let g = disjoint_union(&[build_basic(BasicKind::Path, 2).unwrap(), k(1)]).unwrap();
        assert_eq!((g.order(), g.edge_count(), g.isolated_count()), (3, 1, 1));
        assert!(disjoint_union(&[]).is_err());
    }

    #[test]
    fn g_star_examples() {
        let (g, lab) = extremal_g_star(&ExtremalParams::new(10, 2, 1).unwrap()).unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.edge_count(), 37);
        assert_eq!(lab.block_sizes(), vec![1, 8, 1]);

        let (g, lab) = extremal_g_star(&ExtremalParams::new(14, 2, 2).unwrap()).unwrap();
        assert_eq!(lab.block_sizes(), vec![3, 9, 2]);
        for &v in lab.block(INDEPENDENT_BLOCK).unwrap() {
            assert_eq!(g.degree(v), 3);
        }
    }

    #[test]
    fn g_star_edge_count_by_enumeration() {
        // K_1 ∨ (K_8 ∪ K_1): the hub touches all 9 others, plus C(8,2) clique edges.
        let (g, _) = extremal_g_star(&ExtremalParams::new(10, 2, 1).unwrap()).unwrap();
        let direct = g.edges().count();
        assert_eq!(direct, 9 + 28);
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(ExtremalParams::new(10, 1, 1).is_err());
        assert!(ExtremalParams::new(10, 2, 0).is_err());
        assert!(ExtremalParams::new(5, 2, 2).is_err());
        assert!(ExtremalParams::new(6, 2, 2).is_ok());
        assert!(extremal_g2(3, 2).is_err());
    }

    #[test]
    fn g1_examples() {
        let (_, lab) = extremal_g1(27, 2, 3).unwrap();
        assert_eq!(lab.block_sizes(), vec![5, 19, 3]);
        let (g1, _) = extremal_g1(27, 2, 1).unwrap();
        let (gs, _) = extremal_g_star(&ExtremalParams::new(27, 2, 1).unwrap()).unwrap();
        assert_eq!(g1, gs);
        let (g, _) = extremal_g1(12, 3, 2).unwrap();
        assert_eq!(2 * g.edge_count(), 110);
    }

    #[test]
    fn g2_examples() {
        let (g, lab) = extremal_g2(27, 2).unwrap();
        assert_eq!(lab.block_sizes(), vec![17, 10]);
        assert_eq!(2 * g.edge_count(), 17 * 36);
        let (_, lab) = extremal_g2(8, 3).unwrap();
        assert_eq!(lab.block_sizes(), vec![5, 3]);
    }

    proptest! {
        #[test]
        fn g1_edge_count_and_degrees(m in 2usize..5, i in 1usize..5, extra in 0usize..30) {
            let n = (m + 1) * i + extra;
            let (g, lab) = extremal_g1(n, m, i).unwrap();
            g.validate().unwrap();
            prop_assert_eq!(2 * g.edge_count(), (n - i) * (n - i - 1) + 2 * i * (m * i - 1));
            for &v in lab.block(S_BLOCK).unwrap() {
                prop_assert_eq!(g.degree(v), n - 1);
            }
            for &v in lab.block(CLIQUE_BLOCK).unwrap() {
                prop_assert_eq!(g.degree(v), n - i - 1);
            }
            for &v in lab.block(INDEPENDENT_BLOCK).unwrap() {
                prop_assert_eq!(g.degree(v), m * i - 1);
            }
        }

        #[test]
        fn join_edge_count(n1 in 1usize..8, n2 in 1usize..8, e1 in any::<u64>(), e2 in any::<u64>()) {
            let rand_graph = |n: usize, bits: u64| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits >> (k % 64) & 1 == 1 {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            };
            let g1 = rand_graph(n1, e1);
            let g2 = rand_graph(n2, e2);
            let j = join(&g1, &g2).unwrap();
            j.validate().unwrap();
            prop_assert_eq!(j.edge_count(), g1.edge_count() + g2.edge_count() + n1 * n2);
        }
    }
}
