//! Canonical forms by individualization and refinement.
//!
//! The search tree individualizes one vertex of the first non-singleton cell
//! at each node and refines to an equitable ordered partition. Every leaf is a
//! vertex ordering; the canonical code is the largest packed upper-triangular
//! adjacency matrix over all leaves. Leaves with equal codes yield
//! automorphisms, which are used to skip children in an already explored
//! orbit of the pointwise stabilizer of the current prefix.

use crate::graph::{bits, Graph};

/// A total-order key with equal codes exactly for isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    n: u32,
    words: Vec<u64>,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Hex rendering, stable across runs.
    pub fn to_hex(&self) -> String {
        let mut s = format!("{}:", self.n);
        for w in &self.words {
            s.push_str(&format!("{w:016x}"));
        }
        s
    }
}

/// Canonical code of a bitmask graph.
pub fn canonical_code(g: &Graph) -> CanonicalCode {
    canonical_labeling_lists(&lists_of(g)).0
}

/// Vertex ordering realizing the canonical code: `lab[i]` is the vertex
/// placed at position `i`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    canonical_labeling_lists(&lists_of(g)).1
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    let lab = canonical_labeling(g);
    let mut perm = vec![0; lab.len()];
    for (i, &v) in lab.iter().enumerate() {
        perm[v] = i;
    }
    g.permuted(&perm)
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    g1.order() == g2.order()
        && g1.edge_count() == g2.edge_count()
        && canonical_code(g1) == canonical_code(g2)
}

fn lists_of(g: &Graph) -> Vec<Vec<u32>> {
    (0..g.order())
        .map(|v| bits(g.neighbours(v)).map(|u| u as u32).collect())
        .collect()
}

pub(crate) fn canonical_code_lists(adj: &[Vec<u32>]) -> CanonicalCode {
    canonical_labeling_lists(adj).0
}

pub(crate) fn canonical_labeling_lists(adj: &[Vec<u32>]) -> (CanonicalCode, Vec<usize>) {
    let n = adj.len();
    let words_per_row = n.div_ceil(64);
    let mut rows = vec![0u64; n * words_per_row];
    for (v, row) in adj.iter().enumerate() {
        for &u in row {
            let u = u as usize;
            rows[v * words_per_row + u / 64] |= 1u64 << (u % 64);
        }
    }
    let mut s = Search {
        adj,
        n,
        words_per_row,
        rows,
        best: None,
        first: None,
        autos: Vec::new(),
    };
    let initial = s.refine(vec![(0..n).collect()]);
    s.descend(initial, &mut Vec::new());
    let (words, lab) = s.best.expect("at least one leaf");
    (CanonicalCode { n: n as u32, words }, lab)
}

struct Search<'a> {
    adj: &'a [Vec<u32>],
    n: usize,
    words_per_row: usize,
    rows: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    first: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }

    /// Split cells by the multiset of neighbouring cell indices until stable.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let mut cell_of = vec![0u32; self.n];
        loop {
            for (i, c) in cells.iter().enumerate() {
                for &v in c {
                    cell_of[v] = i as u32;
                }
            }
            let before = cells.len();
            let mut next = Vec::with_capacity(before);
            for c in cells {
                if c.len() == 1 {
                    next.push(c);
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = c
                    .into_iter()
                    .map(|v| {
                        let mut sig: Vec<u32> =
                            self.adj[v].iter().map(|&u| cell_of[u as usize]).collect();
                        sig.sort_unstable();
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            cells = next;
            if cells.len() == before {
                return cells;
            }
        }
    }

    fn descend(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let Some(t) = cells.iter().position(|c| c.len() > 1) else {
            let lab: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            self.leaf(lab);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[t] {
            if !explored.is_empty() && self.in_explored_orbit(prefix, &explored, v) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend(cells[..t].iter().cloned());
            child.push(vec![v]);
            child.push(cells[t].iter().copied().filter(|&u| u != v).collect());
            child.extend(cells[t + 1..].iter().cloned());
            let child = self.refine(child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn in_explored_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if prefix.iter().all(|&x| a[x] == x) {
                any = true;
                for (x, &ax) in a.iter().enumerate().take(self.n) {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, ax));
                    if rx != ry {
                        parent[rx] = ry;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == rv)
    }

    fn leaf(&mut self, lab: Vec<usize>) {
        let n = self.n;
        let total = n * n.saturating_sub(1) / 2;
        let mut words = vec![0u64; total.div_ceil(64)];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.adjacent(lab[i], lab[j]) {
                    words[k / 64] |= 1u64 << (63 - k % 64);
                }
                k += 1;
            }
        }
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == words {
                let mut auto = vec![0; n];
                for i in 0..n {
                    auto[reference.1[i]] = lab[i];
                }
                if auto.iter().enumerate().any(|(i, &x)| i != x) {
                    self.autos.push(auto);
                }
                break;
            }
        }
        if self.first.is_none() {
            self.first = Some((words.clone(), lab.clone()));
        }
        if self.best.as_ref().is_none_or(|b| words > b.0) {
            self.best = Some((words, lab));
        }
    }
}
