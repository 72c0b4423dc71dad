//! Recognizing the all-singletons partition, up to automorphism, from the
//! unlabeled Bell graph: properties 1 and 2, the neighbourhood statistics
//! `d(P)`, `N_P`, `T_P`, and the nested candidate sets `Ω3 ⊇ Ω4 ⊇ Ω5`.

use rayon::prelude::*;
use serde::Serialize;

use crate::bell::BellGraph;
use crate::error::{Error, Result};
use crate::graph::bits;
use crate::local::LocalView;
use crate::unlabeled::UnlabeledGraph;

/// `d(P)`, `N_P` and `T_P` for one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NeighbourhoodStats {
    pub degree: usize,
    /// Vertices plus edges of the induced open neighbourhood.
    pub n_stat: usize,
    /// Triangles of the induced open neighbourhood whose vertices share a
    /// neighbour outside the closed neighbourhood.
    pub t_stat: usize,
}

/// One row of the per-vertex diagnostic table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VertexDiagnostics {
    pub degree: usize,
    pub n_stat: usize,
    pub t_stat: usize,
    pub prop1: bool,
    pub prop2: bool,
}

/// Vertices passing properties 1-2 with maximum degree (`omega3`), those of
/// maximum `N_P` among them (`omega4`), and of maximum `T_P` among those
/// (`omega5`). All ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CandidateSets {
    pub omega3: Vec<usize>,
    pub omega4: Vec<usize>,
    pub omega5: Vec<usize>,
}

/// Every pair of non-adjacent neighbours of `p` has exactly one common
/// neighbour `R` outside `N[p]`, and no third neighbour of `p` is adjacent
/// to `R`.
pub fn satisfies_property1(b: &UnlabeledGraph, p: usize) -> bool {
    property1(&LocalView::new(b, p))
}

/// For every triangle of neighbours of `p` with a common neighbour outside
/// `N[p]`, each other neighbour of `p` is adjacent to zero or two of its
/// vertices.
pub fn satisfies_property2(b: &UnlabeledGraph, p: usize) -> bool {
    property2(&LocalView::new(b, p))
}

pub fn neighbourhood_stats(b: &UnlabeledGraph, p: usize) -> NeighbourhoodStats {
    stats(&LocalView::new(b, p))
}

fn property1(view: &LocalView) -> bool {
    let d = view.degree();
    for i in 0..d {
        for j in i + 1..d {
            if view.adjacent(i, j) {
                continue;
            }
            let common = view.external_common(i, j);
            if common.len() != 1 || view.neighbours_of_p_adjacent_to(common[0]) != 2 {
                return false;
            }
        }
    }
    true
}

fn property2(view: &LocalView) -> bool {
    let d = view.degree();
    view.triangles()
        .into_iter()
        .filter(|&t| view.externally_closed(t))
        .all(|t| {
            (0..d).filter(|x| !t.contains(x)).all(|x| {
                let hits = t.iter().filter(|&&q| view.adjacent(x, q)).count();
                hits == 0 || hits == 2
            })
        })
}

fn stats(view: &LocalView) -> NeighbourhoodStats {
    let degree = view.degree();
    let t_stat = view
        .triangles()
        .into_iter()
        .filter(|&t| view.externally_closed(t))
        .count();
    NeighbourhoodStats {
        degree,
        n_stat: degree + view.local_edge_count(),
        t_stat,
    }
}

/// Per-vertex statistics and property flags, in vertex order.
pub fn diagnostics(b: &UnlabeledGraph) -> Vec<VertexDiagnostics> {
    (0..b.order())
        .into_par_iter()
        .map(|p| {
            let view = LocalView::new(b, p);
            let s = stats(&view);
            VertexDiagnostics {
                degree: s.degree,
                n_stat: s.n_stat,
                t_stat: s.t_stat,
                prop1: property1(&view),
                prop2: property2(&view),
            }
        })
        .collect()
}

/// Compute `Ω3`, `Ω4` and `Ω5`.
pub fn pstar_candidates(b: &UnlabeledGraph) -> CandidateSets {
    candidate_sets_from(&diagnostics(b))
}

/// The candidate sets implied by a diagnostic table.
pub fn candidate_sets_from(table: &[VertexDiagnostics]) -> CandidateSets {
    let passing: Vec<usize> = (0..table.len())
        .filter(|&p| table[p].prop1 && table[p].prop2)
        .collect();
    let argmax = |set: &[usize], key: &dyn Fn(&VertexDiagnostics) -> usize| -> Vec<usize> {
        let best = set.iter().map(|&p| key(&table[p])).max();
        set.iter()
            .copied()
            .filter(|&p| Some(key(&table[p])) == best)
            .collect()
    };
    let omega3 = argmax(&passing, &|d| d.degree);
    let omega4 = argmax(&omega3, &|d| d.n_stat);
    let omega5 = argmax(&omega4, &|d| d.t_stat);
    CandidateSets {
        omega3,
        omega4,
        omega5,
    }
}

/// The image of a neighbour under the map from neighbours of a candidate to
/// non-edges of the host: the non-edge `{u, v}` (with `u < v`) and the type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PsiImage {
    pub u: usize,
    pub v: usize,
    pub kind: u8,
}

/// Classify the neighbour `q` of `p` in a labeled Bell graph.
///
/// 1. two singletons `{u}`, `{v}` merge;
/// 2. a pair `{u, v}` splits;
/// 3. / 4. `{u, v}`, `{w}` become `{u}`, `{v, w}`; image `{v, w}`; type 3
///    when `w` has degree `n - 2` in the host, otherwise 4;
/// 5. `{u, v, w}` becomes `{u}`, `{v, w}`; image `{v, w}`.
pub fn psi_map(b: &BellGraph, p: usize, q: usize) -> Result<PsiImage> {
    let (pp, qq) = (&b.vertices()[p], &b.vertices()[q]);
    let removed: Vec<u64> = pp
        .blocks()
        .iter()
        .copied()
        .filter(|x| !qq.blocks().contains(x))
        .collect();
    let mut added: Vec<u64> = qq
        .blocks()
        .iter()
        .copied()
        .filter(|x| !pp.blocks().contains(x))
        .collect();
    let sizes = |v: &[u64]| {
        let mut s: Vec<u32> = v.iter().map(|x| x.count_ones()).collect();
        s.sort_unstable();
        s
    };
    added.sort_by_key(|x| x.count_ones());
    let pair = |m: u64| {
        let mut it = bits(m);
        (it.next().unwrap(), it.next().unwrap())
    };
    let n = b.host().order();
    let kind = match (sizes(&removed).as_slice(), sizes(&added).as_slice()) {
        ([1, 1], [2]) => 1,
        ([2], [1, 1]) => 2,
        ([1, 2], [1, 2]) => {
            let w = removed
                .iter()
                .find(|x| x.count_ones() == 1)
                .unwrap()
                .trailing_zeros() as usize;
            if b.host().degree(w) + 2 == n {
                3
            } else {
                4
            }
        }
        ([3], [1, 2]) => 5,
        _ => return Err(Error::UnclassifiedNeighbour(format!("{pp} -> {qq}"))),
    };
    let image = if kind == 2 {
        removed[0]
    } else {
        *added.last().unwrap()
    };
    let (u, v) = pair(image);
    Ok(PsiImage { u, v, kind })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bell::{build_bell, Variant};
    use crate::graph::Graph;
    use crate::partition::SetPartition;

    fn labeled(g: &Graph, variant: Variant) -> BellGraph {
        build_bell(g, variant).unwrap()
    }

    fn idx(b: &BellGraph, s: &str) -> usize {
        b.index_of(&SetPartition::parse(b.host(), s).unwrap())
            .unwrap()
    }

    #[test]
    fn property1_examples() {
        let b = labeled(&Graph::cycle(4), Variant::Full);
        let (s, perm) = b.scramble_tracked(3);
        assert!(satisfies_property1(&s, perm[b.pstar().unwrap()]));
        let b = labeled(&Graph::empty(5), Variant::Full);
        assert!(!satisfies_property1(b.graph(), idx(&b, "0,1,2,3|4")));
        let b = labeled(&Graph::empty(4), Variant::Full);
        assert!(!satisfies_property1(b.graph(), idx(&b, "0,1|2,3")));
    }

    #[test]
    fn property2_examples() {
        let b = labeled(&Graph::empty(4), Variant::Full);
        assert!(!satisfies_property2(b.graph(), idx(&b, "0,1,2|3")));
        let b = labeled(&Graph::cycle(5), Variant::Full);
        assert!(satisfies_property2(b.graph(), b.pstar().unwrap()));
        let k3 = labeled(&Graph::complete(3), Variant::Full);
        assert!(satisfies_property2(k3.graph(), 0));
    }

    #[test]
    fn stats_examples() {
        let b = labeled(&Graph::empty(3), Variant::Full);
        let s = neighbourhood_stats(b.graph(), b.pstar().unwrap());
        assert_eq!(
            s,
            NeighbourhoodStats {
                degree: 3,
                n_stat: 6,
                t_stat: 1
            }
        );
        let b = labeled(&Graph::empty(3), Variant::AtLeastK(2));
        let s = neighbourhood_stats(b.graph(), b.pstar().unwrap());
        assert_eq!(
            s,
            NeighbourhoodStats {
                degree: 3,
                n_stat: 6,
                t_stat: 0
            }
        );
        let b = labeled(&Graph::complete(3), Variant::Full);
        assert_eq!(
            neighbourhood_stats(b.graph(), 0),
            NeighbourhoodStats {
                degree: 0,
                n_stat: 0,
                t_stat: 0
            }
        );
    }

    #[test]
    fn candidate_examples() {
        let k3 = labeled(&Graph::complete(3), Variant::Full);
        assert_eq!(pstar_candidates(k3.graph()).omega5, vec![0]);
        for g in [Graph::empty(3), Graph::cycle(4)] {
            let b = labeled(&g, Variant::Full);
            let (s, perm) = b.scramble_tracked(11);
            let c = pstar_candidates(&s);
            assert!(c.omega5.contains(&perm[b.pstar().unwrap()]), "{g:?}");
            assert!(c.omega5.iter().all(|x| c.omega4.contains(x)));
            assert!(c.omega4.iter().all(|x| c.omega3.contains(x)));
        }
    }

    #[test]
    fn psi_examples() {
        let b = labeled(&Graph::empty(3), Variant::Full);
        let pstar = b.pstar().unwrap();
        let ab = idx(&b, "0,1|2");
        assert_eq!(
            psi_map(&b, pstar, ab).unwrap(),
            PsiImage {
                u: 0,
                v: 1,
                kind: 1
            }
        );
        assert_eq!(
            psi_map(&b, ab, pstar).unwrap(),
            PsiImage {
                u: 0,
                v: 1,
                kind: 2
            }
        );
        let abc = idx(&b, "0,1,2");
        let a_bc = idx(&b, "0|1,2");
        assert_eq!(
            psi_map(&b, abc, a_bc).unwrap(),
            PsiImage {
                u: 1,
                v: 2,
                kind: 5
            }
        );
        // {0,1},{2} -> {0},{1,2}; vertex 2 has degree 0 = n - 3 so type 4
        assert_eq!(
            psi_map(&b, ab, a_bc).unwrap(),
            PsiImage {
                u: 1,
                v: 2,
                kind: 4
            }
        );
        assert!(psi_map(&b, pstar, abc).is_err());
    }
}
