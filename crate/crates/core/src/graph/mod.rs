//! Undirected simple graphs and the primitives the searches are built on.

pub(crate) mod canon;
pub(crate) mod cycles;
mod graph6;
pub(crate) mod traversal;
mod tree;

pub use canon::{
    canonical_form, enumerate_connected_graphs, enumerate_trees, CONNECTED_ENUMERATION_CAP,
    TREE_ENUMERATION_CAP,
};
pub use cycles::{enumerate_cycles, enumerate_cycles_with_cap, Cycle};
pub use graph6::{encode_graph6, parse_graph6, parse_graph6_lines};
pub use traversal::{has_cycle, is_connected, multi_source_distances, DistanceField};
pub use tree::{is_tree, tree_center};

use crate::{Error, Result};

/// Largest supported vertex count (the short graph6 form).
pub const MAX_ORDER: usize = 62;

const NO_EDGE: u32 = u32::MAX;

/// An undirected simple graph on vertices `0..n`.
///
/// Edges are stored as pairs `(u, v)` with `u < v`, sorted lexicographically;
/// an edge's id is its position in that list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
    edge_index: Vec<u32>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::UnsupportedSize { n, cap: MAX_ORDER });
        }
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidEdge(u, v));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::InvalidEdge(u, v));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_rows(adj))
    }

    /// Builds a graph from symmetric adjacency bitsets. The caller guarantees
    /// symmetry and an empty diagonal.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        let n = adj.len();
        debug_assert!((1..=MAX_ORDER).contains(&n));
        let mut edges = Vec::new();
        let mut edge_index = vec![NO_EDGE; n * n];
        for u in 0..n {
            debug_assert_eq!(adj[u] >> u & 1, 0);
            for v in u + 1..n {
                if adj[u] >> v & 1 == 1 {
                    debug_assert_eq!(adj[v] >> u & 1, 1);
                    let id = edges.len() as u32;
                    edge_index[u * n + v] = id;
                    edge_index[v * n + u] = id;
                    edges.push((u, v));
                }
            }
        }
        Graph { n, adj, edges, edge_index }
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::UnsupportedSize { n, cap: MAX_ORDER });
        }
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Result<Self> {
        Self::new(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        match self.edge_index[u * self.n + v] {
            NO_EDGE => None,
            id => Some(id as usize),
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Adjacency row of `v` as a bitset.
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    /// The subgraph induced on `vertices`, relabeled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            if u >= self.n {
                return Err(Error::InvalidVertex(u));
            }
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vertices.len(), edges)
    }

    /// A copy of the graph without the given edge.
    pub fn without_edge(&self, id: usize) -> Graph {
        let (u, v) = self.edges[id];
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Graph::from_rows(adj)
    }

    /// The graph with vertex `v` renamed to `image[v]`.
    pub fn relabeled(&self, image: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            let (a, b) = (image[u], image[v]);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Graph::from_rows(adj)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges).finish()
    }
}

/// Iterates the set bits of `mask`, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_duplicates_and_empty() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::InvalidEdge(1, 1)));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(Error::InvalidEdge(1, 0)));
        assert_eq!(Graph::new(3, [(0, 3)]), Err(Error::InvalidEdge(0, 3)));
        assert!(matches!(Graph::new(0, []), Err(Error::UnsupportedSize { n: 0, .. })));
        assert!(matches!(Graph::new(63, []), Err(Error::UnsupportedSize { .. })));
    }

    #[test]
    fn edges_are_sorted_with_stable_ids() {
        let g = Graph::new(4, [(3, 2), (1, 0), (0, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.edge_id(2, 0), Some(1));
        assert_eq!(g.edge_id(3, 2), Some(2));
        assert_eq!(g.edge_id(1, 3), None);
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn induced_and_relabel() {
        let g = Graph::cycle(5).unwrap();
        let h = g.induced(&[4, 0, 1]).unwrap();
        assert_eq!(h.edges(), &[(0, 1), (1, 2)]);
        let r = Graph::path(3).unwrap().relabeled(&[2, 0, 1]);
        assert_eq!(r.edges(), &[(0, 1), (0, 2)]);
    }
}
