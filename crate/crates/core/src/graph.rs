//! Labeled simple graphs as bit adjacency matrices, one word-aligned row per
//! vertex. Everything else in the crate speaks this type.

use std::fmt;

use crate::error::{Error, Result};

/// Hard capacity for construction outputs (tensor products multiply factor
/// sizes, so this has to be comfortably above desk-scale inputs).
pub const MAX_VERTICES: usize = 1024;

const WORD_BITS: usize = 64;

/// An undirected simple graph on vertices `0..n`.
///
/// The adjacency matrix is stored row-wise as packed 64-bit words; rows are
/// symmetric and the diagonal is always zero. Graphs are immutable in spirit:
/// the mutating methods exist for construction, and every algorithm in the
/// crate treats received graphs as read-only.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices. `n = 0` (the null graph) is legal.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                needed: n,
                capacity: MAX_VERTICES,
            });
        }
        let words = n.div_ceil(WORD_BITS);
        Ok(Graph {
            n,
            words,
            bits: vec![0; n * words],
        })
    }

    /// Graph with exactly the given edges; duplicate pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Cycle `C_n` on vertices `0..n` in index order (`n >= 3`).
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Unsupported(format!("cycle needs >= 3 vertices, got {n}")));
        }
        let mut g = Graph::new(n)?;
        for v in 0..n {
            g.add_edge(v, (v + 1) % n)?;
        }
        Ok(g)
    }

    /// Path on `n` vertices, edges `i - (i+1)`.
    pub fn path(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Neighbor bitset of `v` as a single word; only valid for `n <= 64`.
    #[inline]
    pub fn row64(&self, v: usize) -> u64 {
        debug_assert!(self.n <= WORD_BITS);
        self.bits[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(Error::LoopEdge { v });
        }
        self.bits[u * self.words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.bits[v * self.words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        self.bits[v * self.words + u / WORD_BITS] &= !(1 << (u % WORD_BITS));
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.n).map(|v| self.degree(v)).sum();
        total / 2
    }

    /// Edges as `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_edge(v, u)).collect()
    }

    /// Complement within `K_n`: edge present iff absent here.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("same size fits");
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).expect("in range");
                }
            }
        }
        g
    }

    /// Join: disjoint copies of `self` and `other` plus all cross edges.
    /// `self`'s vertices keep their labels, `other`'s shift up by `self.n()`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::new(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v)?;
        }
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v)?;
            }
        }
        Ok(g)
    }

    /// Tensor (categorical) product: `(u, v) ~ (u', v')` iff `uu'` is an edge
    /// here and `vv'` is an edge in `other`. Vertex `(u, v)` gets index
    /// `u * other.n() + v`.
    pub fn tensor_product(&self, other: &Graph) -> Result<Graph> {
        let n = self
            .n
            .checked_mul(other.n)
            .filter(|&n| n <= MAX_VERTICES)
            .ok_or(Error::CapacityExceeded {
                needed: self.n.saturating_mul(other.n),
                capacity: MAX_VERTICES,
            })?;
        let mut g = Graph::new(n)?;
        for (u, up) in self.edges() {
            for (v, vp) in other.edges() {
                // an edge in each factor induces two product edges
                g.add_edge(u * other.n + v, up * other.n + vp)?;
                g.add_edge(u * other.n + vp, up * other.n + v)?;
            }
        }
        Ok(g)
    }

    /// Induced subgraph on everything but `v`, remaining vertices relabeled
    /// contiguously in their original order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let mut g = Graph::new(self.n - 1)?;
        let map = |u: usize| if u < v { u } else { u - 1 };
        for (a, b) in self.edges() {
            if a != v && b != v {
                g.add_edge(map(a), map(b))?;
            }
        }
        Ok(g)
    }

    /// Induced subgraph on the given vertices, relabeled in slice order.
    pub fn induced(&self, verts: &[usize]) -> Result<Graph> {
        let mut g = Graph::new(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            if u >= self.n {
                return Err(Error::VertexOutOfRange { v: u, n: self.n });
            }
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Relabeled copy: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n).expect("same size fits");
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).expect("permutation in range");
        }
        g
    }

    /// Disjoint union; `other`'s vertices shift up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::new(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v)?;
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                if self.has_edge(u, v) && !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n
    }

    /// Two-coloring by BFS; `None` if some component has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for v in 0..self.n {
                    if self.has_edge(u, v) {
                        if side[v] == u8::MAX {
                            side[v] = 1 - side[u];
                            queue.push_back(v);
                        } else if side[v] == side[u] {
                            return None;
                        }
                    }
                }
            }
        }
        Some(side)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Girth of a graph or hypergraph: the distinguished `Infinite` case is a real
/// value, not a sentinel, so comparisons like `girth >= 3g` stay sound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "infinite"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_graph_basics() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());

        let t1 = Graph::new(2).unwrap();
        assert_eq!(t1.edge_count(), 0);
        assert_eq!(t1.n(), 2);

        assert!(matches!(
            Graph::from_edges(1, &[(0, 0)]),
            Err(Error::LoopEdge { .. })
        ));
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        // duplicates collapse
        let g = Graph::from_edges(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn complement_is_involution() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.complement().complement(), c5);
        assert_eq!(
            Graph::complete(3).unwrap().complement(),
            Graph::new(3).unwrap()
        );
    }

    #[test]
    fn join_shapes() {
        let w5 = Graph::complete(1).unwrap().join(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(w5.n(), 6);
        assert_eq!(w5.edge_count(), 10);
        assert_eq!(w5.degree(0), 5);

        // joining the null graph is the identity
        let g = Graph::path(4).unwrap();
        assert_eq!(Graph::new(0).unwrap().join(&g).unwrap(), g);
    }

    #[test]
    fn tensor_product_shapes() {
        let k2 = Graph::complete(2).unwrap();
        let p = k2.tensor_product(&k2).unwrap();
        // one edge times one edge: two disjoint edges on 4 vertices
        assert_eq!(p.n(), 4);
        assert_eq!(p.edge_count(), 2);
        assert!(p.has_edge(0, 3) && p.has_edge(1, 2));

        let k1 = Graph::complete(1).unwrap();
        let q = Graph::cycle(5).unwrap().tensor_product(&k1).unwrap();
        assert_eq!(q.n(), 5);
        assert_eq!(q.edge_count(), 0);
    }

    #[test]
    fn delete_vertex_relabels() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.delete_vertex(0).unwrap(), Graph::complete(3).unwrap());

        let c5 = Graph::cycle(5).unwrap();
        let p4 = c5.delete_vertex(2).unwrap();
        assert_eq!(p4.n(), 4);
        assert_eq!(p4.edge_count(), 3);
        assert!(p4.bipartition().is_some());

        // wheel minus hub is the rim
        let w5 = Graph::complete(1).unwrap().join(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(w5.delete_vertex(0).unwrap(), Graph::cycle(5).unwrap());
    }

    #[test]
    fn girth_ordering() {
        assert!(Girth::Infinite > Girth::Finite(1_000_000));
        assert!(Girth::Finite(3) < Girth::Finite(4));
        assert!(Girth::Infinite.at_least(6));
        assert!(Girth::Finite(6).at_least(6));
        assert!(!Girth::Finite(5).at_least(6));
    }

    #[test]
    fn multiword_rows() {
        // a graph past one word per row
        let n = 130;
        let mut g = Graph::new(n).unwrap();
        for v in 0..n {
            g.add_edge(v, (v + 1) % n).unwrap();
        }
        assert_eq!(g.edge_count(), n);
        assert_eq!(g.degree(64), 2);
        assert!(g.has_edge(129, 0));
        assert!(Graph::new(MAX_VERTICES + 1).is_err());
    }
}
