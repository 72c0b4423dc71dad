//! Adjacency-only graphs of arbitrary order, the input type of every
//! reconstruction routine.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// An undirected simple graph on `0..order()`, stored as sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UnlabeledGraph {
    adj: Vec<Vec<u32>>,
}

impl UnlabeledGraph {
    /// Edgeless graph on `m` vertices.
    pub fn empty(m: usize) -> Self {
        UnlabeledGraph {
            adj: vec![Vec::new(); m],
        }
    }

    /// Build from an edge list; duplicates are collapsed.
    pub fn from_edges(m: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); m];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= m {
                    return Err(Error::VertexOutOfRange { vertex: w, n: m });
                }
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        Ok(UnlabeledGraph { adj })
    }

    /// Build from adjacency lists that are already symmetric, loop-free,
    /// sorted and duplicate-free. Only checked in debug builds.
    pub(crate) fn from_sorted_lists(adj: Vec<Vec<u32>>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(v, row)| {
            row.windows(2).all(|w| w[0] < w[1])
                && row
                    .iter()
                    .all(|&u| u as usize != v && adj[u as usize].binary_search(&(v as u32)).is_ok())
        }));
        UnlabeledGraph { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbours(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&(b as u32)).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| {
            row.iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        let m = self.order();
        self.adj.iter().all(|row| row.len() + 1 == m)
    }

    /// Vertices of degree `order() - 1`, ascending.
    pub fn universal_vertices(&self) -> Vec<usize> {
        let m = self.order();
        (0..m).filter(|&v| self.adj[v].len() + 1 == m).collect()
    }

    /// Induced subgraph on `vertices`, vertex `i` of the result being `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> UnlabeledGraph {
        let mut index = std::collections::HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            index.insert(v as u32, i as u32);
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut row: Vec<u32> = self.adj[v]
                    .iter()
                    .filter_map(|u| index.get(u).copied())
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        UnlabeledGraph { adj }
    }

    /// The subgraph induced by the open neighbourhood of `v`, with the
    /// neighbour list of `v` giving the vertex order.
    pub fn neighbourhood_graph(&self, v: usize) -> UnlabeledGraph {
        let nb: Vec<usize> = self.adj[v].iter().map(|&u| u as usize).collect();
        self.induced(&nb)
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let m = self.order();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for s in 0..m {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &u in &self.adj[v] {
                    if !seen[u as usize] {
                        seen[u as usize] = true;
                        comp.push(u as usize);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> UnlabeledGraph {
        assert_eq!(perm.len(), self.order());
        let mut adj = vec![Vec::new(); self.order()];
        for (v, row) in self.adj.iter().enumerate() {
            let mut r: Vec<u32> = row.iter().map(|&u| perm[u as usize] as u32).collect();
            r.sort_unstable();
            adj[perm[v]] = r;
        }
        UnlabeledGraph { adj }
    }

    /// Convert to a bitmask [`Graph`]; fails above 64 vertices.
    pub fn to_graph(&self) -> Result<Graph> {
        if self.order() > MAX_VERTICES {
            return Err(Error::TooManyVertices(self.order()));
        }
        let mut g = Graph::empty(self.order());
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph B {\n");
        for v in 0..self.order() {
            s.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn canonical_code(&self) -> crate::canon::CanonicalCode {
        crate::canon::canonical_code_lists(&self.adj)
    }

    pub fn is_isomorphic(&self, other: &UnlabeledGraph) -> bool {
        self.order() == other.order()
            && self.edge_count() == other.edge_count()
            && self.canonical_code() == other.canonical_code()
    }
}

impl From<&Graph> for UnlabeledGraph {
    fn from(g: &Graph) -> Self {
        let adj = (0..g.order())
            .map(|v| {
                crate::graph::bits(g.neighbours(v))
                    .map(|u| u as u32)
                    .collect()
            })
            .collect();
        UnlabeledGraph { adj }
    }
}
