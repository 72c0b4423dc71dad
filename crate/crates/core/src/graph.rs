//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! bitmask per vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A finite simple graph on the vertices `0..n`.
///
/// Row `v` of `adj` has bit `u` set iff `uv` is an edge. Rows are kept
/// symmetric and bit `v` of row `v` is never set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterate over the set bits of a mask, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Mask of the vertices strictly above `v`.
#[inline]
pub(crate) fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !0u64 << (v + 1)
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Edgeless graph on `n` vertices. Panics if `n > 64`.
    pub fn empty(n: usize) -> Self {
        Self::new(n).expect("vertex count within limit")
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        Self::empty(n).complement()
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// The star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Self::empty(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    /// `pairs` disjoint edges plus `isolated` isolated vertices.
    pub fn matching(pairs: usize, isolated: usize) -> Self {
        let mut g = Self::empty(2 * pairs + isolated);
        for i in 0..pairs {
            g.add_edge(2 * i, 2 * i + 1);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Disjoint union, with `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let mut g = Self::new(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Bitmask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Adds `uv`. Panics on a loop or out-of-range vertex.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("valid edge");
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// True iff no two vertices of `mask` are adjacent.
    pub fn is_independent(&self, mask: u64) -> bool {
        bits(mask).all(|v| self.adj[v] & mask == 0)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Vertices of degree `n - 1`.
    pub fn universal_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| self.degree(v) + 1 == self.n)
            .collect()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    /// Induced subgraph on `vertices`, relabelled `0..len` in the given order.
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

    /// `G'`: the graph with every universal vertex removed.
    pub fn strip_universal(&self) -> Graph {
        let keep: Vec<usize> = (0..self.n)
            .filter(|&v| self.degree(v) + 1 != self.n)
            .collect();
        self.induced(&keep)
    }

    /// `G^claw`, computed as the complement of the ‡-normalised complement.
    pub fn claw_closure(&self) -> Graph {
        crate::line_root::normalize_ddagger(&self.complement()).complement()
    }

    /// The line graph; vertex `i` is the `i`-th edge of [`Graph::edges`].
    pub fn line_graph(&self) -> Result<Graph> {
        let edges: Vec<_> = self.edges().collect();
        let mut l = Graph::new(edges.len())?;
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    l.add_edge(i, j);
                }
            }
        }
        Ok(l)
    }

    pub fn count_triangles(&self) -> usize {
        let mut t = 0;
        for (u, v) in self.edges() {
            // count each triangle once, at its two smallest vertices
            t += (self.adj[u] & self.adj[v] & !full_mask(v + 1)).count_ones() as usize;
        }
        t
    }

    /// Vertex masks of the connected components, ordered by minimum vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let mut comp = bit(s);
            let mut frontier = bit(s);
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// DOT rendering with vertex labels equal to indices.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            s.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k13() -> Graph {
        Graph::star(3)
    }

    fn k3_plus_k1() -> Graph {
        Graph::complete(3).disjoint_union(&Graph::empty(1)).unwrap()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        assert_eq!(Graph::empty(5).complement(), Graph::complete(5));
        let c5 = Graph::cycle(5);
        let cc = c5.complement();
        assert_eq!(cc.edge_count(), 5);
        assert!((0..5).all(|v| cc.degree(v) == 2));
        assert!(cc.is_connected());
    }

    #[test]
    fn universal_vertices_examples() {
        assert_eq!(Graph::complete(4).universal_vertices(), vec![0, 1, 2, 3]);
        assert_eq!(k13().universal_vertices(), vec![0]);
        assert!(Graph::cycle(4).universal_vertices().is_empty());
    }

    #[test]
    fn strip_universal_examples() {
        assert_eq!(Graph::complete(4).strip_universal().order(), 0);
        assert_eq!(k13().strip_universal(), Graph::empty(3));
        assert_eq!(Graph::cycle(5).strip_universal(), Graph::cycle(5));
    }

    #[test]
    fn claw_closure_examples() {
        // complement(empty_3) = K3 -> claw -> complement = K3 + K1
        let cc = Graph::empty(3).claw_closure();
        assert_eq!(cc.order(), 4);
        assert_eq!(cc.count_triangles(), 1);
        assert_eq!(cc.edge_count(), 3);
        assert_eq!(Graph::cycle(5).claw_closure(), Graph::cycle(5));
        let cc = k13().claw_closure();
        assert_eq!(cc.order(), 4);
        assert_eq!(cc.edge_count(), 3);
        assert_eq!(cc.count_triangles(), 1);
        assert_eq!(cc.isolated_vertices().len(), 1);
        assert_eq!(k3_plus_k1().claw_closure().edge_count(), 3);
    }

    #[test]
    fn line_graph_examples() {
        let l = k13().line_graph().unwrap();
        assert_eq!(l, Graph::complete(3));
        assert_eq!(Graph::empty(1).line_graph().unwrap().order(), 0);
        assert_eq!(Graph::path(4).line_graph().unwrap(), Graph::path(3));
    }

    #[test]
    fn line_graph_degrees() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let l = g.line_graph().unwrap();
        for (i, (u, v)) in g.edges().enumerate() {
            assert_eq!(l.degree(i), g.degree(u) + g.degree(v) - 2);
        }
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(Graph::complete(3).count_triangles(), 1);
        assert_eq!(Graph::cycle(5).count_triangles(), 0);
        assert_eq!(Graph::complete(4).count_triangles(), 4);
        assert_eq!(Graph::complete(6).count_triangles(), 20);
    }

    #[test]
    fn too_many_vertices() {
        assert_eq!(Graph::new(65), Err(Error::TooManyVertices(65)));
        let g = Graph::complete(64);
        assert_eq!(g.edge_count(), 64 * 63 / 2);
        assert_eq!(g.universal_vertices().len(), 64);
    }

    #[test]
    fn components_of_matching() {
        let m = Graph::matching(2, 1);
        assert_eq!(m.components(), vec![0b00011, 0b01100, 0b10000]);
    }
}
