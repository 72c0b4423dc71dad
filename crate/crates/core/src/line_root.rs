//! Line-graph roots via Krausz clique covers, and root normalization.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{above, bit, bits, Graph, MAX_VERTICES};
use crate::unlabeled::UnlabeledGraph;

/// Remove isolated vertices and replace every triangle component by a claw.
///
/// Two graphs without isolated vertices have isomorphic line graphs exactly
/// when their normalizations are isomorphic. Components keep their order
/// (by least vertex). Panics if the result would exceed 64 vertices.
pub fn normalize_ddagger(h: &Graph) -> Graph {
    let mut edges = Vec::new();
    let mut next = 0usize;
    for comp in h.components() {
        let size = comp.count_ones() as usize;
        if size == 1 {
            continue;
        }
        let members: Vec<usize> = bits(comp).collect();
        let local = |v: usize| members.iter().position(|&x| x == v).unwrap();
        let is_triangle = size == 3 && members.iter().all(|&v| h.degree(v) == 2);
        if is_triangle {
            edges.extend([(next, next + 1), (next, next + 2), (next, next + 3)]);
            next += 4;
        } else {
            for &u in &members {
                for w in bits(h.neighbours(u) & above(u)) {
                    edges.push((next + local(u), next + local(w)));
                }
            }
            next += size;
        }
    }
    assert!(
        next <= MAX_VERTICES,
        "normalized graph needs {next} vertices"
    );
    Graph::from_edges(next, &edges).expect("edges are in range")
}

/// A graph `H` with `L(H)` isomorphic to `l`.
///
/// Searches for a Krausz cover of `l`: an edge-disjoint family of cliques
/// covering every edge with each vertex in at most two of them. Every
/// clique becomes a root vertex, every vertex of `l` a root edge; vertices in
/// fewer than two cliques get fresh pendant endpoints. When a component of
/// `l` is a triangle, the root component may be either `K3` or `K_{1,3}`.
pub fn krausz_root(l: &UnlabeledGraph) -> Result<Graph> {
    if l.order() > MAX_VERTICES {
        return Err(Error::TooManyVertices(l.order()));
    }
    let g = l.to_graph()?;
    krausz_root_graph(&g)
}

/// [`krausz_root`] for a bitmask graph.
pub fn krausz_root_graph(g: &Graph) -> Result<Graph> {
    let m = g.order();
    let mut s = Cover {
        g,
        covered: vec![0; m],
        count: vec![0; m],
        cliques: Vec::new(),
        failed: HashSet::new(),
    };
    if !s.solve() {
        return Err(Error::NotLineGraph);
    }
    let mut root_edges = Vec::with_capacity(m);
    let mut next = s.cliques.len();
    let mut ends: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, &c) in s.cliques.iter().enumerate() {
        for w in bits(c) {
            ends[w].push(i);
        }
    }
    for e in ends.iter_mut() {
        while e.len() < 2 {
            e.push(next);
            next += 1;
        }
        root_edges.push((e[0], e[1]));
    }
    if next > MAX_VERTICES {
        return Err(Error::TooManyVertices(next));
    }
    Graph::from_edges(next, &root_edges)
}

struct Cover<'a> {
    g: &'a Graph,
    /// Per vertex: neighbours whose edge is already covered.
    covered: Vec<u64>,
    /// Per vertex: number of cliques containing it (at most 2).
    count: Vec<u8>,
    cliques: Vec<u64>,
    failed: HashSet<(Vec<u64>, Vec<u8>)>,
}

impl Cover<'_> {
    fn uncovered(&self, v: usize) -> u64 {
        self.g.neighbours(v) & !self.covered[v]
    }

    fn solve(&mut self) -> bool {
        let Some(u) = (0..self.g.order()).find(|&v| self.uncovered(v) != 0) else {
            return true;
        };
        let key = (self.covered.clone(), self.count.clone());
        if self.failed.contains(&key) {
            return false;
        }
        let v = self.uncovered(u).trailing_zeros() as usize;
        let options = self.clique_options(u, v);
        for c in options {
            self.place(c, true);
            if self.consistent(c) && self.solve() {
                return true;
            }
            self.place(c, false);
        }
        self.failed.insert(key);
        false
    }

    /// Candidate cliques through the uncovered edge `uv`, largest first.
    fn clique_options(&self, u: usize, v: usize) -> Vec<u64> {
        let base = bit(u) | bit(v);
        if self.count[u] >= 2 || self.count[v] >= 2 {
            return Vec::new();
        }
        let pool = bits(self.uncovered(u) & self.uncovered(v))
            .filter(|&w| self.count[w] < 2)
            .fold(0u64, |acc, w| acc | bit(w));
        let mut out = Vec::new();
        self.extend_cliques(base, pool, &mut out);
        // a vertex already in one clique must take all its remaining edges now
        out.retain(|&c| bits(c).all(|w| self.count[w] == 0 || self.uncovered(w) & !c == 0));
        out.sort_by_key(|c| std::cmp::Reverse(c.count_ones()));
        out
    }

    fn extend_cliques(&self, clique: u64, pool: u64, out: &mut Vec<u64>) {
        out.push(clique);
        for w in bits(pool) {
            // only extend with higher vertices to list each clique once
            let rest = pool & self.uncovered(w) & above(w);
            self.extend_cliques(clique | bit(w), rest, out);
        }
    }

    fn place(&mut self, c: u64, add: bool) {
        for w in bits(c) {
            let others = c & !bit(w);
            if add {
                self.covered[w] |= others;
                self.count[w] += 1;
            } else {
                self.covered[w] &= !others;
                self.count[w] -= 1;
            }
        }
        if add {
            self.cliques.push(c);
        } else {
            self.cliques.pop();
        }
    }

    /// After placing `c`: saturated vertices must be fully covered, and each
    /// vertex of `c` with one slot left must have a clique of leftovers.
    fn consistent(&self, c: u64) -> bool {
        bits(c).all(|w| {
            let rest = self.uncovered(w);
            match self.count[w] {
                2 => rest == 0,
                _ => bits(rest).all(|x| rest & !bit(x) & !self.uncovered(x) == 0),
            }
        })
    }
}
