//! Labeled checks of the candidate filter: which partitions pass properties
//! 1 and 2, where the all-singletons partition lands, and the neighbour map.

use std::collections::HashSet;

use super::{Failure, Tally};
use crate::bell::{build_bell, BellGraph, Variant};
use crate::candidates::{candidate_sets_from, diagnostics, psi_map, PsiImage, VertexDiagnostics};
use crate::canon::is_isomorphic;
use crate::graph::{bits, Graph};
use crate::local::LocalView;
use crate::partition::SetPartition;

fn edges_between(g: &Graph, a: u64, b: u64) -> usize {
    bits(a)
        .map(|v| (g.neighbours(v) & b).count_ones() as usize)
        .sum()
}

fn sized(p: &SetPartition, s: u32) -> Vec<u64> {
    p.blocks()
        .iter()
        .copied()
        .filter(|b| b.count_ones() == s)
        .collect()
}

/// Whether `p` has exactly `k` parts in an upper-Bell graph.
fn at_lower_bound(variant: Variant, p: &SetPartition) -> bool {
    matches!(variant, Variant::AtLeastK(k) if p.part_count() == k)
}

/// Shapes that rule out property 1 or 2, checked at every vertex.
fn check_shapes(
    t: &mut Tally,
    g: &Graph,
    variant: Variant,
    p: &SetPartition,
    d: &VertexDiagnostics,
) {
    let n = g.order();
    let fail = |name: &str| Failure::new(name, g).variant(variant).detail(p.to_string());
    if p.blocks().iter().any(|b| b.count_ones() >= 4) {
        t.check(!d.prop1, || fail("part_of_size_4_fails_property1"));
    }
    let (ones, twos, threes) = (sized(p, 1), sized(p, 2), sized(p, 3));
    for (i, &a) in twos.iter().enumerate() {
        for &b in &twos[i + 1..] {
            if edges_between(g, a, b) == 0 {
                t.check(!d.prop1, || fail("two_free_pairs_fail_property1"));
            }
        }
    }
    for &a in &twos {
        for &w in &ones {
            match edges_between(g, a, w) {
                0 => t.check(!d.prop1 || at_lower_bound(variant, p), || {
                    fail("free_pair_and_singleton_fail_property1")
                }),
                1 => {
                    let v = w.trailing_zeros() as usize;
                    // at exactly k parts a singleton non-neighbour cannot absorb w
                    let singleton_gap = at_lower_bound(variant, p)
                        && ones.iter().any(|&x| x != w && g.neighbours(v) & x == 0);
                    t.check(
                        g.degree(v) + 2 == n || !d.prop1 || !d.prop2 || singleton_gap,
                        || fail("pair_singleton_one_edge"),
                    );
                }
                _ => {}
            }
        }
    }
    for &a in &threes {
        for &w in &ones {
            if edges_between(g, a, w) < 3 {
                t.check(!d.prop2, || {
                    fail("triple_and_singleton_with_non_edge_fail_property2")
                });
            }
        }
    }
}

/// Structure forced on partitions passing properties 1 to 3.
fn check_omega3_structure(t: &mut Tally, g: &Graph, variant: Variant, p: &SetPartition) {
    let n = g.order();
    let fail = |name: &str| Failure::new(name, g).variant(variant).detail(p.to_string());
    t.check(p.blocks().iter().all(|b| b.count_ones() <= 3), || {
        fail("omega3_parts_at_most_3")
    });
    let (ones, twos, threes) = (sized(p, 1), sized(p, 2), sized(p, 3));
    t.check(
        threes
            .iter()
            .all(|&b| bits(b).all(|v| g.degree(v) + 3 == n)),
        || fail("omega3_triples_degree_n_minus_3"),
    );
    let joined = twos
        .iter()
        .enumerate()
        .all(|(i, &a)| twos[i + 1..].iter().all(|&b| edges_between(g, a, b) == 4));
    t.check(joined, || fail("omega3_pairs_fully_joined"));
    let pair_singletons = twos.iter().all(|&a| {
        ones.iter().all(|&w| {
            let v = w.trailing_zeros() as usize;
            edges_between(g, a, w) == 2 || g.degree(v) + 2 == n || at_lower_bound(variant, p)
        })
    });
    t.check(pair_singletons, || fail("omega3_pair_singleton_rule"));
}

fn psi_images(b: &BellGraph, p: usize) -> Option<Vec<PsiImage>> {
    b.graph()
        .neighbours(p)
        .iter()
        .map(|&q| psi_map(b, p, q as usize).ok())
        .collect()
}

fn incident(a: &PsiImage, b: &PsiImage) -> bool {
    a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v
}

fn is_bijective_onto_complement(g: &Graph, images: &[PsiImage]) -> bool {
    let set: HashSet<(usize, usize)> = images.iter().map(|x| (x.u, x.v)).collect();
    let non_edges = g.complement().edge_count();
    set.len() == images.len()
        && set.len() == non_edges
        && set.iter().all(|&(u, v)| u != v && !g.has_edge(u, v))
}

/// Run every candidate-filter invariant on one host.
pub fn check_omega_invariants(g: &Graph) -> Tally {
    let mut t = Tally::default();
    let n = g.order();
    let mut variants = vec![Variant::Full];
    variants.extend((1..n).map(Variant::AtLeastK));
    for variant in variants {
        let Some(b) = t.require(build_bell(g, variant), || {
            Failure::new("build", g).variant(variant)
        }) else {
            continue;
        };
        // k = n - 1 is the only upper variant outside the main regime here
        let main = !matches!(variant, Variant::AtLeastK(k) if k + 1 == n);
        let table = diagnostics(b.graph());
        let sets = candidate_sets_from(&table);
        let pstar = b.pstar().expect("P* has n parts");
        for (i, p) in b.vertices().iter().enumerate() {
            check_shapes(&mut t, g, variant, p, &table[i]);
        }
        for &i in &sets.omega3 {
            let p = &b.vertices()[i];
            check_omega3_structure(&mut t, g, variant, p);
            let images = psi_images(&b, i);
            let injective = images.as_ref().is_some_and(|im| {
                im.iter().map(|x| (x.u, x.v)).collect::<HashSet<_>>().len() == im.len()
            });
            t.check(injective, || {
                Failure::new("omega3_psi_injective", g)
                    .variant(variant)
                    .detail(p.to_string())
            });
        }
        let star_images = psi_images(&b, pstar);
        t.check(
            star_images
                .as_ref()
                .is_some_and(|im| is_bijective_onto_complement(g, im)),
            || Failure::new("pstar_psi_bijective", g).variant(variant),
        );
        let star_passes = table[pstar].prop1 && table[pstar].prop2;
        if main {
            t.check(star_passes && sets.omega3.contains(&pstar), || {
                Failure::new("pstar_in_omega3", g).variant(variant)
            });
            t.check(sets.omega5.contains(&pstar), || {
                Failure::new("pstar_in_omega5", g).variant(variant)
            });
            t.check(
                table[pstar].t_stat == g.complement().count_triangles(),
                || Failure::new("pstar_t_stat_counts_complement_triangles", g).variant(variant),
            );
        } else if star_passes {
            t.check(sets.omega4.contains(&pstar), || {
                Failure::new("pstar_in_omega4", g).variant(variant)
            });
        }
        if main {
            for &i in &sets.omega4 {
                check_omega4(&mut t, g, &b, i);
            }
            check_pstar_triangles(&mut t, g, &b, pstar);
        }
    }
    t
}

/// Line-graph structure around an `Ω4` vertex, and claws without closure.
fn check_omega4(t: &mut Tally, g: &Graph, b: &BellGraph, p: usize) {
    let variant = b.variant();
    let label = b.vertices()[p].to_string();
    let fail = |name: &str| Failure::new(name, g).variant(variant).detail(label.clone());
    let Some(images) = psi_images(b, p) else {
        t.check(false, || fail("omega4_psi_defined"));
        return;
    };
    t.check(is_bijective_onto_complement(g, &images), || {
        fail("omega4_psi_bijective")
    });
    let nb = b.graph().neighbours(p);
    let faithful = (0..nb.len()).all(|i| {
        (i + 1..nb.len()).all(|j| {
            b.graph().has_edge(nb[i] as usize, nb[j] as usize) == incident(&images[i], &images[j])
        })
    });
    t.check(faithful, || fail("omega4_adjacency_is_incidence"));
    let local = b.graph().neighbourhood_graph(p).to_graph();
    let line = g.complement().line_graph();
    let iso = matches!((&local, &line), (Ok(a), Ok(l)) if is_isomorphic(a, l));
    t.check(iso, || {
        fail("omega4_neighbourhood_is_line_graph_of_complement")
    });
    let view = LocalView::new(b.graph(), p);
    for tri in view.triangles() {
        let [x, y, z] = tri.map(|i| images[i]);
        let shared = [x.u, x.v]
            .into_iter()
            .find(|&c| [y.u, y.v].contains(&c) && [z.u, z.v].contains(&c));
        if shared.is_some() {
            t.check(!view.externally_closed(tri), || {
                fail("omega4_claw_triangle_not_closed")
            });
        }
    }
}

/// At P* in the main regime, triangles coming from complement triangles close.
fn check_pstar_triangles(t: &mut Tally, g: &Graph, b: &BellGraph, pstar: usize) {
    let Some(images) = psi_images(b, pstar) else {
        return;
    };
    let view = LocalView::new(b.graph(), pstar);
    for tri in view.triangles() {
        let [x, y, z] = tri.map(|i| images[i]);
        let mut ends: Vec<usize> = [x.u, x.v, y.u, y.v, z.u, z.v].to_vec();
        ends.sort_unstable();
        ends.dedup();
        if ends.len() == 3 {
            t.check(view.externally_closed(tri), || {
                Failure::new("pstar_complement_triangle_closed", g).variant(b.variant())
            });
        }
    }
}
