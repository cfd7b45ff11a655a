//! Simple undirected graphs on vertices `0..n` and the constructions built
//! from them.

mod build;
mod cover;
pub mod edgelist;
pub mod family;
pub mod graph6;
mod set;

pub use build::{clique_cover_product, contract_vertex, corona, disjoint_union, join, stevanovic};
pub use cover::CliqueCover;
pub use family::Family;
pub use set::VertexSet;

use crate::error::{Error, Result};

/// An edge as an ordered pair `(u, v)` with `u < v`.
pub type Edge = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// The null graph.
    pub fn null() -> Self {
        Self::empty(0)
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![VertexSet::new(); n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn unlink(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Open neighborhood `N(v)`.
    ///
    /// Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        (0..self.n)
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeAbsent(u, v));
        }
        let mut g = self.clone();
        g.unlink(u, v);
        Ok(g)
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::EdgePresent(u, v));
        }
        let mut g = self.clone();
        g.link(u, v);
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    ///
    /// Panics unless `perm` is a permutation of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut g = Self::empty(self.n);
        for (u, v) in self.edges() {
            g.link(perm[u], perm[v]);
        }
        assert_eq!(g.edge_count(), self.edge_count(), "not a permutation");
        g
    }

    /// Deletes `v`, shifting higher labels down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let relabel = |w: usize| if w > v { w - 1 } else { w };
        let mut g = Self::empty(self.n - 1);
        for (a, b) in self.edges() {
            if a != v && b != v {
                g.link(relabel(a), relabel(b));
            }
        }
        Ok(g)
    }

    pub fn is_clique(&self, vertices: &VertexSet) -> bool {
        vertices.iter().all(|u| {
            let mut others = vertices.clone();
            others.remove(u);
            others.is_subset(&self.adj[u])
        })
    }

    #[cfg(test)]
    pub(crate) fn check_invariants(&self) -> bool {
        self.adj.len() == self.n
            && (0..self.n).all(|v| {
                !self.adj[v].contains(v)
                    && self.adj[v].max_element().is_none_or(|m| m < self.n)
                    && self.adj[v].iter().all(|u| self.adj[u].contains(v))
            })
    }
}
