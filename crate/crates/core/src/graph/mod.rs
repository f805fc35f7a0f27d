//! Simple undirected graphs on vertices `0..n` with bitset adjacency.

mod bitset;
mod build;
mod io;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use bitset::VertexSet;
pub use build::{
    build_basic, disjoint_union, extremal_g1, extremal_g2, extremal_g_star, g2_independent_size,
    join, BasicKind, ExtremalParams, CLIQUE_BLOCK, INDEPENDENT_BLOCK, S_BLOCK,
};
pub use io::{parse_edge_list, parse_edge_list_with_cap, to_edge_list};

/// Largest order accepted for dense (matrix) work.
pub const DEFAULT_VERTEX_CAP: usize = 512;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::empty_with_cap(n, DEFAULT_VERTEX_CAP)
    }

    pub fn empty_with_cap(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > cap {
            return Err(Error::CapExceeded { n, cap });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::new(n); n],
        })
    }

    /// Rejects loops and out-of-range endpoints; repeated edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::InvalidParams(format!("loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Copy of `self` with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Unordered vertex pairs that are not edges, `u < v`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adj[u].contains(v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Checks symmetry and loop-freeness of the adjacency.
    pub fn validate(&self) -> Result<()> {
        for u in 0..self.n {
            if self.adj[u].contains(u) {
                return Err(Error::InvalidParams(format!("loop at vertex {u}")));
            }
            for v in self.adj[u].iter() {
                if v >= self.n || !self.adj[v].contains(u) {
                    return Err(Error::InvalidParams(format!("asymmetric edge {u}-{v}")));
                }
            }
        }
        Ok(())
    }

    /// Neighborhoods as 64-bit masks; `None` when `n > 64`.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        self.adj.iter().map(VertexSet::as_mask).collect()
    }

    /// Number of vertices of degree 0, `i(G)`.
    pub fn isolated_count(&self) -> usize {
        self.adj.iter().filter(|a| a.is_empty()).count()
    }

    /// Connected components in order of their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::new(self.n);
            seen.insert(s);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for v in self.adj[u].iter() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        queue.push_back(v);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for v in self.adj[u].iter() {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Induced subgraph `G - S`.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<Induced> {
        for v in s.iter() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let new_to_old: Vec<usize> = (0..self.n).filter(|v| !s.contains(*v)).collect();
        if new_to_old.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut graph = Graph::empty(new_to_old.len())?;
        for (u, v) in self.edges() {
            if let (Some(a), Some(b)) = (old_to_new[u], old_to_new[v]) {
                graph.insert_edge(a, b)?;
            }
        }
        Ok(Induced {
            graph,
            old_to_new,
            new_to_old,
        })
    }
}

/// Result of deleting a vertex set: the subgraph plus index maps.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

/// Ordered list of disjoint vertex blocks covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledPartition {
    blocks: Vec<Vec<usize>>,
}

impl LabeledPartition {
    pub fn new(blocks: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("index {v} out of range {n}")));
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!("index {v} appears twice")));
                }
                seen[v] = true;
            }
        }
        if let Some(gap) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("index {gap} not covered")));
        }
        Ok(LabeledPartition { blocks })
    }

    /// Consecutive blocks of the given sizes: `[0..s0), [s0..s0+s1), ...`.
    pub fn consecutive(sizes: &[usize]) -> Result<Self> {
        let mut start = 0;
        let mut blocks = Vec::with_capacity(sizes.len());
        for &s in sizes {
            blocks.push((start..start + s).collect());
            start += s;
        }
        LabeledPartition::new(blocks, start)
    }

    pub fn singletons(n: usize) -> Self {
        LabeledPartition {
            blocks: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn covered(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

/// A partition whose blocks carry names such as `"S-block"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockLabeling {
    pub names: Vec<String>,
    pub partition: LabeledPartition,
}

impl BlockLabeling {
    pub fn block_sizes(&self) -> Vec<usize> {
        self.partition.block_sizes()
    }

    pub fn block(&self, name: &str) -> Option<&[usize]> {
        let idx = self.names.iter().position(|n| n == name)?;
        Some(&self.partition.blocks()[idx])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isolated_count_examples() {
        assert_eq!(build_basic(BasicKind::Complete, 1).unwrap().isolated_count(), 1);
        assert_eq!(build_basic(BasicKind::Cycle, 6).unwrap().isolated_count(), 0);
        let p2 = build_basic(BasicKind::Path, 2).unwrap();
        let k1 = build_basic(BasicKind::Complete, 1).unwrap();
        let g = disjoint_union(&[p2, k1.clone(), k1.clone(), k1]).unwrap();
        assert_eq!(g.isolated_count(), 3);
    }

    #[test]
    fn components_examples() {
        let k3 = build_basic(BasicKind::Complete, 3).unwrap();
        let g = disjoint_union(&[k3.clone(), k3]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
        assert!(!g.is_connected());

        let (gs, _) = extremal_g_star(&ExtremalParams::new(10, 2, 1).unwrap()).unwrap();
        assert!(gs.is_connected());
        assert!(build_basic(BasicKind::Complete, 1).unwrap().is_connected());
    }

    #[test]
    fn remove_vertices_examples() {
        let k4 = build_basic(BasicKind::Complete, 4).unwrap();
        let r = k4.remove_vertices(&VertexSet::from_iter(4, [0])).unwrap();
        assert_eq!(r.graph, build_basic(BasicKind::Complete, 3).unwrap());
        assert_eq!(r.new_to_old, vec![1, 2, 3]);
        assert_eq!(r.old_to_new[0], None);

        let star = build_basic(BasicKind::Star, 5).unwrap();
        let r = star.remove_vertices(&VertexSet::from_iter(5, [0])).unwrap();
        assert_eq!(r.graph.isolated_count(), 4);

        let c6 = build_basic(BasicKind::Cycle, 6).unwrap();
        let r = c6.remove_vertices(&VertexSet::from_iter(6, [0, 2, 4])).unwrap();
        assert_eq!(r.graph.order(), 3);
        assert_eq!(r.graph.edge_count(), 0);
    }

    #[test]
    fn remove_all_vertices_is_error() {
        let k2 = build_basic(BasicKind::Complete, 2).unwrap();
        assert_eq!(k2.remove_vertices(&VertexSet::full(2)).unwrap_err(), Error::EmptyGraph);
    }

    #[test]
    fn partition_validation() {
        assert!(LabeledPartition::new(vec![vec![0, 1], vec![2]], 3).is_ok());
        assert!(matches!(
            LabeledPartition::new(vec![vec![0, 1], vec![1, 2]], 3),
            Err(Error::InvalidPartition(_))
        ));
        assert!(matches!(
            LabeledPartition::new(vec![vec![0]], 2),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert_eq!(Graph::empty(0).unwrap_err(), Error::EmptyGraph);
        assert!(matches!(Graph::empty(513), Err(Error::CapExceeded { .. })));
    }
}
