//! Graph primitives, partitions, Bell construction and line roots.

use std::collections::HashSet;

use super::{Failure, Tally};
use crate::bell::{build_bell, random_permutation, Variant};
use crate::canon::{canonical_code, canonical_form, is_isomorphic, CanonicalCode};
use crate::coloring::{chromatic_number, colour_with};
use crate::graph::{bit, Graph};
use crate::graph6::{decode, encode};
use crate::line_root::{krausz_root_graph, normalize_ddagger};
use crate::partition::{are_adjacent, enumerate_partitions, neighbors_of};

pub(super) fn check_core(g: &Graph, seeds: u64) -> Tally {
    let mut t = Tally::default();
    let n = g.order();
    t.check(decode(&encode(g)).as_ref() == Ok(g), || {
        Failure::new("graph6_round_trip", g)
    });
    let code = canonical_code(g);
    for s in 0..seeds {
        let h = g.permuted(&random_permutation(n, s));
        t.check(canonical_code(&h) == code, || {
            Failure::new("canonical_code_relabeling", g).seed(s)
        });
    }
    t.check(is_isomorphic(g, &canonical_form(g)), || {
        Failure::new("canonical_form_isomorphic", g)
    });
    t.check(g.complement().complement() == *g, || {
        Failure::new("complement_involution", g)
    });
    t.check(
        g.strip_universal().universal_vertices().is_empty() || g.strip_universal().order() == 0,
        || Failure::new("strip_universal_leaves_none", g),
    );
    let chi = chromatic_number(g);
    let proper = colour_with(g, chi)
        .is_some_and(|c| g.edges().all(|(u, v)| c[u] != c[v]) && c.iter().all(|&x| x < chi));
    t.check(proper, || {
        Failure::new("chromatic_colouring_exists", g).detail(format!("chi = {chi}"))
    });
    let minimal = chi == 0 || colour_with(g, chi - 1).is_none();
    t.check(minimal, || {
        Failure::new("chromatic_number_minimal", g).detail(format!("chi = {chi}"))
    });
    t
}

/// Every set partition of `0..n` as block masks, by brute force.
fn all_set_partitions(n: usize) -> Vec<Vec<u64>> {
    fn rec(v: usize, n: usize, blocks: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if v == n {
            out.push(blocks.clone());
            return;
        }
        for i in 0..blocks.len() {
            blocks[i] |= bit(v);
            rec(v + 1, n, blocks, out);
            blocks[i] &= !bit(v);
        }
        blocks.push(bit(v));
        rec(v + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), &mut out);
    out
}

pub(super) fn check_partitions(g: &Graph) -> Tally {
    let mut t = Tally::default();
    let n = g.order();
    let brute: Vec<Vec<u64>> = all_set_partitions(n)
        .into_iter()
        .filter(|p| p.iter().all(|&b| g.is_independent(b)))
        .collect();
    let Some(all) = t.require(enumerate_partitions(g, 0, n), || {
        Failure::new("enumerate", g)
    }) else {
        return t;
    };
    t.check(all.len() == brute.len(), || {
        Failure::new("partition_count", g).detail(format!(
            "{} enumerated, {} by brute force",
            all.len(),
            brute.len()
        ))
    });
    t.check(all.windows(2).all(|w| w[0] < w[1]), || {
        Failure::new("partitions_sorted_unique", g)
    });
    t.check(all.iter().all(|p| p.is_valid_for(g)), || {
        Failure::new("partitions_independent", g)
    });
    for lo in 1..=n {
        for hi in lo..=n {
            let expected = brute
                .iter()
                .filter(|p| (lo..=hi).contains(&p.len()))
                .count();
            let got = enumerate_partitions(g, lo, hi)
                .map(|v| v.len())
                .unwrap_or(usize::MAX);
            t.check(got == expected, || {
                Failure::new("bounded_partition_count", g).detail(format!("[{lo}, {hi}]"))
            });
        }
    }
    if all.len() <= 300 {
        for p in &all {
            let expected: Vec<_> = all
                .iter()
                .filter(|q| are_adjacent(p, q).unwrap_or(false))
                .cloned()
                .collect();
            let symmetric = expected.iter().all(|q| are_adjacent(q, p).unwrap_or(false));
            t.check(neighbors_of(g, p, 0, n) == expected && symmetric, || {
                Failure::new("neighbours_match_adjacency", g).detail(p.to_string())
            });
        }
    }
    t
}

fn with_universal(g: &Graph) -> Graph {
    let n = g.order();
    let mut h = g.disjoint_union(&Graph::empty(1)).expect("small host");
    for v in 0..n {
        h.add_edge(v, n);
    }
    h
}

pub(super) fn check_bell(g: &Graph, seeds: u64) -> Tally {
    let mut t = Tally::default();
    let n = g.order();
    let mut variants = vec![Variant::Full];
    variants.extend((1..=n + 1).map(Variant::AtLeastK));
    variants.extend((1..=n).map(Variant::AtMostK));
    for variant in variants {
        let Some(b) = t.require(build_bell(g, variant), || {
            Failure::new("build", g).variant(variant)
        }) else {
            continue;
        };
        let expected = enumerate_partitions(g, 0, n)
            .map(|all| {
                all.into_iter()
                    .filter(|p| {
                        variant
                            .bounds(n)
                            .is_some_and(|(lo, hi)| (lo..=hi).contains(&p.part_count()))
                    })
                    .count()
            })
            .unwrap_or(usize::MAX);
        t.check(b.order() == expected, || {
            Failure::new("bell_order", g).variant(variant)
        });
        if b.order() <= 250 {
            let v = b.vertices();
            let ok = (0..v.len()).all(|i| {
                (i + 1..v.len()).all(|j| {
                    are_adjacent(&v[i], &v[j]).unwrap_or(false) == b.graph().has_edge(i, j)
                })
            });
            t.check(ok, || {
                Failure::new("bell_edges_match_moves", g).variant(variant)
            });
        }
        if variant == Variant::Full {
            let code = b.graph().canonical_code();
            for s in 0..seeds {
                t.check(b.scramble(s).canonical_code() == code, || {
                    Failure::new("scramble_isomorphic", g).seed(s)
                });
            }
        }
        if let Variant::AtLeastK(k) = variant {
            // a universal vertex shifts k by one and changes nothing else
            let h = with_universal(g);
            let same = build_bell(&h, Variant::AtLeastK(k + 1)).map(|c| c.graph().canonical_code());
            t.check(same == Ok(b.graph().canonical_code()), || {
                Failure::new("universal_vertex_shift", g).variant(variant)
            });
        }
    }
    t
}

/// For each `m <= max_edges`, canonical codes of the line graphs of every
/// graph with `m` edges and no isolated vertices, by exhaustive search.
pub fn line_graph_codes(max_edges: usize) -> Vec<HashSet<CanonicalCode>> {
    let mut out = vec![HashSet::from([canonical_code(&Graph::empty(0))])];
    let mut level = vec![Graph::empty(0)];
    for _ in 1..=max_edges {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for h in &level {
            let n = h.order();
            let mut options = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if !h.has_edge(u, v) {
                        options.push((h.clone(), u, v));
                    }
                }
                options.push((h.disjoint_union(&Graph::empty(1)).expect("small"), u, n));
            }
            options.push((h.disjoint_union(&Graph::empty(2)).expect("small"), n, n + 1));
            for (mut g, u, v) in options {
                g.add_edge(u, v);
                if seen.insert(canonical_code(&g)) {
                    next.push(g);
                }
            }
        }
        out.push(
            next.iter()
                .map(|h| canonical_code(&h.line_graph().expect("small")))
                .collect(),
        );
        level = next;
    }
    out
}

/// Whether `l` is a line graph according to a table from [`line_graph_codes`].
pub fn is_line_graph_by_search(l: &Graph, codes: &[HashSet<CanonicalCode>]) -> bool {
    codes[l.order()].contains(&canonical_code(l))
}

pub(super) fn check_lineroot(g: &Graph, codes: &[HashSet<CanonicalCode>]) -> Tally {
    let mut t = Tally::default();
    let Some(l) = t.require(g.line_graph(), || Failure::new("line_graph", g)) else {
        return t;
    };
    if let Some(r) = t.require(krausz_root_graph(&l), || {
        Failure::new("root_of_line_graph", g)
    }) {
        t.check(
            is_isomorphic(&normalize_ddagger(&r), &normalize_ddagger(g)),
            || Failure::new("normalized_root", g),
        );
        t.check(
            r.line_graph().is_ok_and(|lr| is_isomorphic(&lr, &l)),
            || Failure::new("root_line_graph", g),
        );
        let nontrivial = g.components().iter().filter(|c| c.count_ones() > 1).count();
        t.check(
            normalize_ddagger(&r).components().len() == nontrivial,
            || Failure::new("root_component_count", g),
        );
    }
    let root = krausz_root_graph(g);
    t.check(root.is_ok() == is_line_graph_by_search(g, codes), || {
        Failure::new("line_graph_membership", g)
            .detail(format!("krausz root found: {}", root.is_ok()))
    });
    if let Ok(r) = root {
        t.check(r.line_graph().is_ok_and(|lr| is_isomorphic(&lr, g)), || {
            Failure::new("root_line_graph_direct", g)
        });
    }
    t
}
