//! Recovering `G'` (or `G^claw`) from an unlabeled `B(G)` or `B_{>=k}(G)`.

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::bell::{build_bell, Variant};
use crate::candidates::{pstar_candidates, CandidateSets};
use crate::canon::CanonicalCode;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph, MAX_VERTICES};
use crate::line_root::{krausz_root, normalize_ddagger};
use crate::local::LocalView;
use crate::unlabeled::UnlabeledGraph;

/// Returned by [`phi`] when the neighbourhood is not a line graph.
pub fn fallback_graph() -> Graph {
    Graph::empty(1)
}

/// The graph read off the neighbourhood of `p`.
///
/// Take a root `H` of the induced neighbourhood, normalize it to `H‡`, and
/// turn `T_p - T‡` claw components back into triangles when that many
/// exist. The complement of the result is returned.
pub fn phi(b: &UnlabeledGraph, p: usize) -> Graph {
    let view = LocalView::new(b, p);
    let Ok(root) = krausz_root(&view.local_graph()) else {
        return fallback_graph();
    };
    let comps = root.components();
    let size = |c: u64| c.count_ones() as usize;
    let is_triangle = |c: u64| size(c) == 3 && bits(c).all(|v| root.degree(v) == 2);
    let normalized_order: usize = comps
        .iter()
        .filter(|&&c| size(c) > 1)
        .map(|&c| size(c) + is_triangle(c) as usize)
        .sum();
    if normalized_order > MAX_VERTICES {
        return fallback_graph();
    }
    let h = normalize_ddagger(&root);
    let t_dd = h.count_triangles();
    let t_p = view
        .triangles()
        .into_iter()
        .filter(|&t| view.externally_closed(t))
        .count();
    let claws: Vec<u64> = h
        .components()
        .into_iter()
        .filter(|&c| is_claw(&h, c))
        .collect();
    let excess = t_p.saturating_sub(t_dd);
    let h = if excess > 0 && claws.len() >= excess {
        close_claws(&h, &claws[..excess])
    } else {
        h
    };
    h.complement()
}

fn is_claw(h: &Graph, comp: u64) -> bool {
    comp.count_ones() == 4
        && bits(comp).map(|v| h.degree(v)).sum::<usize>() == 6
        && bits(comp).any(|v| h.degree(v) == 3)
}

/// Replace each listed claw component by a triangle on its leaves.
fn close_claws(h: &Graph, claws: &[u64]) -> Graph {
    let centres: u64 = claws
        .iter()
        .map(|&c| bits(c).find(|&v| h.degree(v) == 3).map_or(0, |v| 1u64 << v))
        .fold(0, |a, b| a | b);
    let keep: Vec<usize> = (0..h.order()).filter(|&v| centres >> v & 1 == 0).collect();
    let mut out = h.induced(&keep);
    for &c in claws {
        let leaves: Vec<usize> = bits(c & !centres)
            .map(|v| keep.binary_search(&v).expect("leaf kept"))
            .collect();
        out.add_edge(leaves[0], leaves[1]);
        out.add_edge(leaves[0], leaves[2]);
        out.add_edge(leaves[1], leaves[2]);
    }
    out
}

/// Bell graphs on at most two vertices, mapped to the `G'` they come from.
fn small_table() -> &'static HashMap<CanonicalCode, Graph> {
    static TABLE: OnceLock<HashMap<CanonicalCode, Graph>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = HashMap::new();
        for g in [
            Graph::empty(0),
            Graph::empty(1),
            Graph::empty(2),
            Graph::complete(2),
        ] {
            let b = build_bell(&g, Variant::Full).expect("tiny host");
            t.entry(b.graph().canonical_code())
                .or_insert_with(|| g.strip_universal());
        }
        t
    })
}

/// A graph isomorphic to `G'`, given `B(G)` or `B_{>=k}(G)` with `k <= n - 2`.
pub fn reconstruct_prime(b: &UnlabeledGraph) -> Result<Graph> {
    reconstruct_prime_with_sets(b).map(|(g, _, _)| g)
}

/// As [`reconstruct_prime`], also returning the pivot and the candidate sets.
pub fn reconstruct_prime_with_sets(
    b: &UnlabeledGraph,
) -> Result<(Graph, Option<usize>, Option<CandidateSets>)> {
    match b.order() {
        0 => Err(Error::EmptyInput),
        1 | 2 => small_table()
            .get(&b.canonical_code())
            .map(|g| (g.clone(), None, None))
            .ok_or(Error::NoCandidate),
        _ => {
            let sets = pstar_candidates(b);
            let &p = sets.omega5.first().ok_or(Error::NoCandidate)?;
            Ok((phi(b, p), Some(p), Some(sets)))
        }
    }
}

/// Which case of the upper-Bell analysis an input falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    #[serde(rename = "k_le_n_minus_2")]
    KLeNMinus2,
    #[serde(rename = "k_eq_n_minus_1")]
    KEqNMinus1,
    DegenerateClique,
    #[serde(rename = "degenerate_k5minus")]
    DegenerateK5Minus,
    Empty,
    SingleVertex,
}

impl Regime {
    pub fn name(&self) -> &'static str {
        match self {
            Regime::KLeNMinus2 => "k_le_n_minus_2",
            Regime::KEqNMinus1 => "k_eq_n_minus_1",
            Regime::DegenerateClique => "degenerate_clique",
            Regime::DegenerateK5Minus => "degenerate_k5minus",
            Regime::Empty => "empty",
            Regime::SingleVertex => "single_vertex",
        }
    }
}

/// Range of `k` (relative to the host order `n`) a possibility requires.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KRange {
    #[serde(rename = "at_most_n_minus_1")]
    AtMostNMinus1,
    #[serde(rename = "at_most_n_minus_2")]
    AtMostNMinus2,
    #[serde(rename = "eq_n_minus_1")]
    EqNMinus1,
}

/// One host shape consistent with a degenerate input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Possibility {
    /// `G'` up to isomorphism.
    pub graph: Graph,
    pub k: KRange,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Graph(Graph),
    Possibilities(Vec<Possibility>),
    /// Nothing about `G'` can be read off.
    Unconstrained,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReconstructionReport {
    pub regime: Regime,
    pub pivot: Option<usize>,
    pub result: Outcome,
    pub candidate_sets: Option<CandidateSets>,
}

impl ReconstructionReport {
    /// The reconstructed graph, in the two regimes that determine one.
    pub fn graph(&self) -> Option<&Graph> {
        match &self.result {
            Outcome::Graph(g) => Some(g),
            _ => None,
        }
    }
}

fn clique_plus_isolated(m: usize) -> Graph {
    Graph::complete(m)
        .disjoint_union(&Graph::empty(1))
        .expect("small")
}

/// Reconstruct from `B_{>=k}(G)` without knowing `k`.
pub fn reconstruct_upper_auto(b: &UnlabeledGraph) -> Result<ReconstructionReport> {
    let n = b.order();
    let report = |regime, pivot, result, candidate_sets| ReconstructionReport {
        regime,
        pivot,
        result,
        candidate_sets,
    };
    if n == 0 {
        return Ok(report(Regime::Empty, None, Outcome::Unconstrained, None));
    }
    if n == 1 {
        return Ok(report(
            Regime::SingleVertex,
            None,
            Outcome::Unconstrained,
            None,
        ));
    }
    if b.is_complete() {
        let mut options = vec![Possibility {
            graph: clique_plus_isolated(n - 1),
            k: KRange::AtMostNMinus1,
        }];
        if n == 4 {
            options.push(Possibility {
                graph: Graph::empty(3),
                k: KRange::EqNMinus1,
            });
        }
        return Ok(report(
            Regime::DegenerateClique,
            None,
            Outcome::Possibilities(options),
            None,
        ));
    }
    if n == 5 && b.edge_count() == 9 {
        let mut p3k1 = Graph::path(3)
            .disjoint_union(&Graph::empty(1))
            .expect("small");
        p3k1 = crate::canon::canonical_form(&p3k1);
        let options = vec![
            Possibility {
                graph: Graph::empty(3),
                k: KRange::AtMostNMinus2,
            },
            Possibility {
                graph: p3k1,
                k: KRange::EqNMinus1,
            },
        ];
        return Ok(report(
            Regime::DegenerateK5Minus,
            None,
            Outcome::Possibilities(options),
            None,
        ));
    }
    if let Some(&u) = b.universal_vertices().first() {
        return Ok(report(
            Regime::KEqNMinus1,
            Some(u),
            Outcome::Graph(phi(b, u)),
            None,
        ));
    }
    let (g, pivot, sets) = reconstruct_prime_with_sets(b)?;
    Ok(report(Regime::KLeNMinus2, pivot, Outcome::Graph(g), sets))
}
