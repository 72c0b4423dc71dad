//! One representative per isomorphism class of small graphs.

use std::collections::BTreeSet;

use crate::canon::{canonical_code, canonical_form};
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

/// Largest order accepted by [`generate_nonisomorphic_graphs`].
pub const GENERATION_CAP: usize = 8;

/// All graphs on `n` vertices up to isomorphism, in canonical form, sorted by
/// edge count and then canonical code.
///
/// Built by extending each class on `n - 1` vertices with a new vertex in
/// every possible way and keeping the first graph of each class.
pub fn generate_nonisomorphic_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > GENERATION_CAP {
        return Err(Error::CapExceeded {
            what: "graph generation order",
            cap: GENERATION_CAP,
        });
    }
    let mut level = vec![Graph::empty(0)];
    for m in 1..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for parent in &level {
            for nb in 0..(1u64 << (m - 1)) {
                let mut g = Graph::empty(m);
                for (u, v) in parent.edges() {
                    g.add_edge(u, v);
                }
                for u in 0..m - 1 {
                    if nb & bit(u) != 0 {
                        g.add_edge(u, m - 1);
                    }
                }
                let code = canonical_code(&g);
                if seen.insert(code.clone()) {
                    next.push((g.edge_count(), code, canonical_form(&g)));
                }
            }
        }
        next.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        level = next.into_iter().map(|(_, _, g)| g).collect();
    }
    Ok(level)
}

/// All classes on `1..=n_max` vertices, smallest order first.
pub fn graphs_up_to(n_max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(generate_nonisomorphic_graphs(n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=6)
            .map(|n| generate_nonisomorphic_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn matches_labeled_dedupe_on_four_vertices() {
        let mut codes = BTreeSet::new();
        for mask in 0u32..64 {
            let mut g = Graph::empty(4);
            let mut k = 0;
            for u in 0..4 {
                for v in u + 1..4 {
                    if mask >> k & 1 == 1 {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            codes.insert(canonical_code(&g));
        }
        let generated: BTreeSet<_> = generate_nonisomorphic_graphs(4)
            .unwrap()
            .iter()
            .map(canonical_code)
            .collect();
        assert_eq!(generated, codes);
    }

    #[test]
    fn cap() {
        assert!(generate_nonisomorphic_graphs(9).is_err());
        assert_eq!(graphs_up_to(5).unwrap().len(), 52);
    }
}
