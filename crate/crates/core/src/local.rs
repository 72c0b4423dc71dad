//! The local structure of a graph around one vertex: its neighbours, the
//! graph they induce, and each neighbour's neighbours outside the closed
//! neighbourhood.

use std::collections::HashMap;

use crate::unlabeled::UnlabeledGraph;

pub(crate) struct LocalView<'a> {
    pub b: &'a UnlabeledGraph,
    /// Neighbours of `p`, ascending.
    pub nb: Vec<usize>,
    /// Position of each neighbour in `nb`.
    pub pos: HashMap<u32, usize>,
    /// Bitset rows of the graph induced on `nb`, by position.
    pub rows: Vec<Vec<u64>>,
    /// For each neighbour, its neighbours outside `N[p]`, ascending.
    pub ext: Vec<Vec<u32>>,
}

impl<'a> LocalView<'a> {
    pub fn new(b: &'a UnlabeledGraph, p: usize) -> Self {
        let nb: Vec<usize> = b.neighbours(p).iter().map(|&q| q as usize).collect();
        let pos: HashMap<u32, usize> = nb.iter().enumerate().map(|(i, &q)| (q as u32, i)).collect();
        let words = nb.len().div_ceil(64).max(1);
        let mut rows = vec![vec![0u64; words]; nb.len()];
        let mut ext = Vec::with_capacity(nb.len());
        for (i, &q) in nb.iter().enumerate() {
            let mut e = Vec::new();
            for &r in b.neighbours(q) {
                if let Some(&j) = pos.get(&r) {
                    rows[i][j / 64] |= 1u64 << (j % 64);
                } else if r as usize != p {
                    e.push(r);
                }
            }
            ext.push(e);
        }
        LocalView {
            b,
            nb,
            pos,
            rows,
            ext,
        }
    }

    pub fn degree(&self) -> usize {
        self.nb.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i][j / 64] >> (j % 64) & 1 == 1
    }

    pub fn local_edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.iter().map(|w| w.count_ones() as usize).sum::<usize>())
            .sum::<usize>()
            / 2
    }

    /// Number of neighbours of `p` adjacent to `r`.
    pub fn neighbours_of_p_adjacent_to(&self, r: u32) -> usize {
        self.b
            .neighbours(r as usize)
            .iter()
            .filter(|x| self.pos.contains_key(x))
            .count()
    }

    /// Common neighbours of positions `i` and `j` outside `N[p]`.
    pub fn external_common(&self, i: usize, j: usize) -> Vec<u32> {
        intersect(&self.ext[i], &self.ext[j])
    }

    /// Triangles of the induced neighbourhood, as position triples `i < j < l`.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let d = self.degree();
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                if !self.adjacent(i, j) {
                    continue;
                }
                for (w, (a, b)) in self.rows[i].iter().zip(&self.rows[j]).enumerate() {
                    let mut common = a & b;
                    while common != 0 {
                        let l = w * 64 + common.trailing_zeros() as usize;
                        common &= common - 1;
                        if l > j {
                            out.push([i, j, l]);
                        }
                    }
                }
            }
        }
        out
    }

    /// Whether the three positions have a common neighbour outside `N[p]`.
    pub fn externally_closed(&self, t: [usize; 3]) -> bool {
        let ij = self.external_common(t[0], t[1]);
        !intersect(&ij, &self.ext[t[2]]).is_empty()
    }

    /// Components of the induced neighbourhood, as position lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut comp = vec![usize::MAX; d];
        let mut out = Vec::new();
        for s in 0..d {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = out.len();
            let mut members = vec![s];
            let mut k = 0;
            while k < members.len() {
                let v = members[k];
                k += 1;
                let label = out.len();
                for (u, c) in comp.iter_mut().enumerate().take(d) {
                    if *c == usize::MAX && self.adjacent(v, u) {
                        *c = label;
                        members.push(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The induced neighbourhood as an adjacency-only graph on positions.
    pub fn local_graph(&self) -> UnlabeledGraph {
        self.b.induced(&self.nb)
    }
}

pub(crate) fn intersect(a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
