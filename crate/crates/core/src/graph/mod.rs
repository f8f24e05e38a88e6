//! Exact small-graph laboratory.

mod coloring;
mod complement;
mod critical;
mod families;
mod graph6;
mod matching;
mod topological;

pub use coloring::{chromatic_number, is_colorable, max_clique};
pub use complement::{complement_analysis, ComplementSummary};
pub use critical::{gallai_equality_check, gallai_simplicial_check, is_critical, simplicial_vertices};
pub use families::{build_family, FamilySpec};
pub use graph6::{parse_graph6, parse_graph6_list, serialize_graph6};
pub use matching::maximum_matching;
pub use topological::{contains_topological_clique, TopologicalWitness};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`. No loops, no multi-edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    edges: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![FixedBitSet::with_capacity(n); n], edges: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 0..n {
            let w = (v + 1) % n;
            if v != w {
                g.add_edge(v, w);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::Construction(format!("invalid edge ({u}, {v}) for {n} vertices")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Adds `{u, v}`; returns false if it was already present.
    ///
    /// Panics on a loop or an out-of-range vertex.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "loops are not allowed");
        if self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edges += 1;
        true
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || !self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
        self.edges -= 1;
        true
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// `self ∨ other`: disjoint union plus every cross edge. Vertices of
    /// `other` are shifted by `self.vertex_count()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        let shift = self.vertex_count();
        for u in 0..shift {
            for v in 0..other.vertex_count() {
                g.add_edge(u, shift + v);
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut g = Graph::empty(shift + other.vertex_count());
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(shift + u, shift + v);
        }
        g
    }

    /// Subgraph spanned by `vertices`, relabelled to `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Neighbourhoods as bitmasks, for the exact searches. `None` beyond 128
    /// vertices.
    pub(crate) fn masks(&self) -> Option<Vec<u128>> {
        if self.vertex_count() > 128 {
            return None;
        }
        Some(self.adj.iter().map(|row| row.ones().fold(0u128, |m, v| m | (1u128 << v))).collect())
    }
}

/// Limits on the exact searches. Exceeding one is an error, never an
/// approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest graph accepted by the coloring routines.
    pub coloring_vertices: usize,
    /// Largest graph accepted by the subdivision search.
    pub subdivision_vertices: usize,
    /// Search-tree nodes per query.
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { coloring_vertices: 40, subdivision_vertices: 20, max_nodes: 500_000_000 }
    }
}
