//! Recovering `G` from an unlabeled `B_k(G)` with `k > χ(G)`.
//!
//! Vertices whose open neighbourhood has the most components are the
//! reconstruction candidates; each yields a candidate graph on its
//! components, and the largest non-complete one is returned.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_code;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::local::{intersect, LocalView};
use crate::unlabeled::UnlabeledGraph;

/// Components of the open neighbourhood of one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentIndex {
    /// Neighbours of the vertex, ascending.
    pub neighbours: Vec<usize>,
    /// Component id of each entry of `neighbours`.
    pub component_of: Vec<usize>,
    /// Vertex ids of each component, ascending.
    pub members: Vec<Vec<usize>>,
}

impl ComponentIndex {
    /// `C_P`.
    pub fn count(&self) -> usize {
        self.members.len()
    }
}

pub fn component_index(b: &UnlabeledGraph, p: usize) -> ComponentIndex {
    let view = LocalView::new(b, p);
    let comps = view.components();
    let mut component_of = vec![0; view.degree()];
    for (c, list) in comps.iter().enumerate() {
        for &i in list {
            component_of[i] = c;
        }
    }
    let members = comps
        .iter()
        .map(|list| list.iter().map(|&i| view.nb[i]).collect())
        .collect();
    ComponentIndex {
        neighbours: view.nb.clone(),
        component_of,
        members,
    }
}

fn component_count(b: &UnlabeledGraph, p: usize) -> usize {
    LocalView::new(b, p).components().len()
}

/// `C_max` and every vertex attaining it, ascending.
pub fn reconstruction_candidates(b: &UnlabeledGraph) -> (usize, Vec<usize>) {
    let counts: Vec<usize> = (0..b.order())
        .into_par_iter()
        .map(|p| component_count(b, p))
        .collect();
    let c_max = counts.iter().copied().max().unwrap_or(0);
    (
        c_max,
        (0..b.order()).filter(|&p| counts[p] == c_max).collect(),
    )
}

/// Membership test for `N[p]`.
struct Closed<'a> {
    p: usize,
    nb: &'a [u32],
}

impl<'a> Closed<'a> {
    fn new(b: &'a UnlabeledGraph, p: usize) -> Self {
        Closed {
            p,
            nb: b.neighbours(p),
        }
    }

    fn contains(&self, r: u32) -> bool {
        r as usize == self.p || self.nb.binary_search(&r).is_ok()
    }
}

fn external_common(b: &UnlabeledGraph, closed: &Closed, q1: usize, q2: usize) -> Vec<u32> {
    let mut common = intersect(b.neighbours(q1), b.neighbours(q2));
    common.retain(|&r| !closed.contains(r));
    common
}

fn double_closed_unchecked(b: &UnlabeledGraph, closed: &Closed, q1: usize, q2: usize) -> bool {
    if b.has_edge(q1, q2) {
        return false;
    }
    let s = external_common(b, closed, q1, q2);
    if s.len() < 2 {
        return false;
    }
    let matched = s
        .iter()
        .filter(|&&x| {
            s.iter()
                .any(|&y| y != x && b.has_edge(x as usize, y as usize))
        })
        .count();
    matched == 2
}

fn check_pair(b: &UnlabeledGraph, p: usize, q1: usize, q2: usize) -> Result<()> {
    let n = b.order();
    if p >= n || q1 >= n || q2 >= n {
        return Err(Error::VertexOutOfRange {
            vertex: p.max(q1).max(q2),
            n,
        });
    }
    if q1 == q2 || !b.has_edge(p, q1) || !b.has_edge(p, q2) {
        return Err(Error::PreconditionViolated(
            "expected two distinct neighbours of p".into(),
        ));
    }
    Ok(())
}

/// Whether `q1`, `q2` are non-adjacent and exactly two of their common
/// neighbours outside `N[p]` have a neighbour among those common neighbours.
pub fn is_double_closed(b: &UnlabeledGraph, p: usize, q1: usize, q2: usize) -> Result<bool> {
    check_pair(b, p, q1, q2)?;
    Ok(double_closed_unchecked(b, &Closed::new(b, p), q1, q2))
}

/// Whether every common neighbour of `q1` and `q2` lies in `N[p]`.
pub fn common_neighbours_closed(
    b: &UnlabeledGraph,
    p: usize,
    q1: usize,
    q2: usize,
) -> Result<bool> {
    check_pair(b, p, q1, q2)?;
    Ok(external_common(b, &Closed::new(b, p), q1, q2).is_empty())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum KRegime {
    #[serde(rename = "k_eq_chi_plus_1")]
    KEqChiPlus1,
    #[serde(rename = "k_gt_chi_plus_1")]
    KGtChiPlus1,
}

fn has_double_closed_pair(b: &UnlabeledGraph, p: usize) -> bool {
    let closed = Closed::new(b, p);
    let nb = b.neighbours(p);
    nb.iter().enumerate().any(|(i, &q1)| {
        nb[i + 1..]
            .iter()
            .any(|&q2| double_closed_unchecked(b, &closed, q1 as usize, q2 as usize))
    })
}

/// `k > χ + 1` exactly when some reconstruction candidate has a
/// double-closed pair of neighbours.
pub fn detect_k_regime(b: &UnlabeledGraph) -> KRegime {
    detect_k_regime_among(b, &reconstruction_candidates(b).1)
}

fn detect_k_regime_among(b: &UnlabeledGraph, candidates: &[usize]) -> KRegime {
    if candidates.par_iter().any(|&p| has_double_closed_pair(b, p)) {
        KRegime::KGtChiPlus1
    } else {
        KRegime::KEqChiPlus1
    }
}

/// The graph on the components of `N(p)` read off under `regime`.
///
/// With `k = χ + 1`, components `u`, `v` are adjacent when some pair across
/// them has all common neighbours inside `N[p]`. Otherwise they are adjacent
/// when no pair across them is double-closed.
pub fn candidate_graph(b: &UnlabeledGraph, p: usize, regime: KRegime) -> Result<Graph> {
    let index = component_index(b, p);
    let c = index.count();
    if c > MAX_VERTICES {
        return Err(Error::TooManyVertices(c));
    }
    let closed = Closed::new(b, p);
    let mut g = Graph::empty(c);
    for u in 0..c {
        for v in u + 1..c {
            let pairs = || {
                index.members[u]
                    .iter()
                    .flat_map(|&x| index.members[v].iter().map(move |&y| (x, y)))
            };
            let edge = match regime {
                KRegime::KEqChiPlus1 => {
                    pairs().any(|(x, y)| external_common(b, &closed, x, y).is_empty())
                }
                KRegime::KGtChiPlus1 => {
                    !pairs().any(|(x, y)| double_closed_unchecked(b, &closed, x, y))
                }
            };
            if edge {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateSummary {
    pub vertex: usize,
    pub edges: usize,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerReport {
    pub regime: KRegime,
    pub c_max: usize,
    pub candidates: Vec<CandidateSummary>,
    /// The candidate vertex whose graph was returned.
    pub chosen: usize,
    pub result: Graph,
}

/// `G` up to isomorphism from `B_k(G)`; see [`reconstruct_from_bk_report`].
pub fn reconstruct_from_bk(b: &UnlabeledGraph) -> Result<Graph> {
    reconstruct_from_bk_report(b).map(|r| r.result)
}

/// Build every candidate graph and keep a non-complete one with the most
/// edges; ties go to the lowest canonical code.
pub fn reconstruct_from_bk_report(b: &UnlabeledGraph) -> Result<LowerReport> {
    if b.order() == 0 {
        return Err(Error::EmptyInput);
    }
    let (c_max, candidates) = reconstruction_candidates(b);
    let regime = detect_k_regime_among(b, &candidates);
    let graphs: Vec<Graph> = candidates
        .par_iter()
        .map(|&p| candidate_graph(b, p, regime))
        .collect::<Result<Vec<_>>>()?;
    let summaries = candidates
        .iter()
        .zip(&graphs)
        .map(|(&vertex, g)| CandidateSummary {
            vertex,
            edges: g.edge_count(),
            complete: g.is_complete(),
        })
        .collect();
    let best_edges = graphs
        .iter()
        .filter(|g| !g.is_complete())
        .map(Graph::edge_count)
        .max()
        .ok_or(Error::AllComplete)?;
    let mut seen = HashSet::new();
    let mut tied = BTreeMap::new();
    for (i, g) in graphs.iter().enumerate() {
        if !g.is_complete() && g.edge_count() == best_edges && seen.insert(g) {
            tied.entry(canonical_code(g)).or_insert(i);
        }
    }
    let (_, &i) = tied.iter().next().expect("a non-complete candidate exists");
    Ok(LowerReport {
        regime,
        c_max,
        candidates: summaries,
        chosen: candidates[i],
        result: graphs[i].clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bell::{build_bell, BellGraph, Variant};
    use crate::canon::is_isomorphic;
    use crate::partition::SetPartition;

    fn bk(g: &Graph, k: usize) -> BellGraph {
        build_bell(g, Variant::AtMostK(k)).unwrap()
    }

    fn idx(b: &BellGraph, s: &str) -> usize {
        b.index_of(&SetPartition::parse(b.host(), s).unwrap())
            .unwrap()
    }

    #[test]
    fn candidates_of_b2_empty4() {
        let b = bk(&Graph::empty(4), 2);
        assert_eq!(b.order(), 8);
        assert_eq!(reconstruction_candidates(b.graph()), (4, (0..8).collect()));
        let k3 = build_bell(&Graph::complete(3), Variant::Full).unwrap();
        assert_eq!(reconstruction_candidates(k3.graph()), (0, vec![0]));
    }

    #[test]
    fn double_closed_examples() {
        let g = Graph::empty(8);
        let b = bk(&g, 4);
        let p = idx(&b, "0,1,2,3|4,5,6,7");
        let qa = idx(&b, "0|1,2,3|4,5,6,7");
        let qb = idx(&b, "0,2,3|1|4,5,6,7");
        assert!(is_double_closed(b.graph(), p, qa, qb).unwrap());
        let b = bk(&g, 3);
        let p = idx(&b, "0,1,2,3|4,5,6,7");
        let qa = idx(&b, "0|1,2,3|4,5,6,7");
        let qb = idx(&b, "0,2,3|1|4,5,6,7");
        assert!(!is_double_closed(b.graph(), p, qa, qb).unwrap());
        assert!(common_neighbours_closed(b.graph(), p, qa, qb).is_ok());
        assert!(is_double_closed(b.graph(), p, p, qa).is_err());
    }

    #[test]
    fn double_closed_false_across_an_edge() {
        let g = Graph::from_edges(8, &[(0, 4)]).unwrap();
        let b = bk(&g, 4);
        let p = idx(&b, "0,1,2,3|4,5,6,7");
        let qa = idx(&b, "0|1,2,3|4,5,6,7");
        let qb = idx(&b, "0,1,2,3|4|5,6,7");
        assert!(!is_double_closed(b.graph(), p, qa, qb).unwrap());
    }

    #[test]
    fn regime_examples() {
        assert_eq!(
            detect_k_regime(bk(&Graph::empty(4), 2).graph()),
            KRegime::KEqChiPlus1
        );
        assert_eq!(
            detect_k_regime(bk(&Graph::empty(4), 3).graph()),
            KRegime::KGtChiPlus1
        );
        assert_eq!(
            detect_k_regime(bk(&Graph::cycle(8), 3).graph()),
            KRegime::KEqChiPlus1
        );
    }

    #[test]
    fn candidate_graph_examples() {
        let b = bk(&Graph::empty(4), 2);
        let g = candidate_graph(b.graph(), idx(&b, "0,1,2,3"), KRegime::KEqChiPlus1).unwrap();
        assert_eq!(g, Graph::empty(4));
        let b = bk(&Graph::empty(8), 3);
        let g =
            candidate_graph(b.graph(), idx(&b, "0,1,2,3,4,5,6,7"), KRegime::KGtChiPlus1).unwrap();
        assert_eq!(g, Graph::empty(8));
        let p = idx(&b, "0,1,2,3|4,5,6,7");
        assert!(candidate_graph(b.graph(), p, KRegime::KGtChiPlus1)
            .unwrap()
            .is_complete());
    }

    #[test]
    fn end_to_end_small() {
        for (n, k) in [(4, 2), (5, 3)] {
            let b = bk(&Graph::empty(n), k).scramble(5);
            assert!(is_isomorphic(
                &reconstruct_from_bk(&b).unwrap(),
                &Graph::empty(n)
            ));
        }
        assert_eq!(
            reconstruct_from_bk(&UnlabeledGraph::empty(0)),
            Err(Error::EmptyInput)
        );
        assert_eq!(
            reconstruct_from_bk(&UnlabeledGraph::empty(1)),
            Err(Error::AllComplete)
        );
    }
}
