//! Deciding whether `B_{>=k1}(G1)` and `B_{>=k2}(G2)` are isomorphic from
//! the eight structural conditions, and a direct oracle to compare against.

use serde::Serialize;

use crate::bell::{build_bell, Variant};
use crate::canon::{canonical_code, CanonicalCode};
use crate::coloring::chromatic_number;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{enumerate_partitions, DEFAULT_PARTITION_CAP};

/// Everything the eight conditions look at for one `(G, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperProfile {
    pub n: usize,
    pub k: usize,
    pub is_clique: bool,
    pub chi: usize,
    /// Canonical code of `G'`.
    pub prime: CanonicalCode,
    /// Canonical code of `G^claw`.
    pub claw: CanonicalCode,
    /// Order of `B_{>=k}(G)`.
    pub bell_order: usize,
}

/// Requires `k >= 1`.
pub fn upper_profile(g: &Graph, k: usize) -> Result<UpperProfile> {
    if k == 0 {
        return Err(Error::PreconditionViolated("k must be at least 1".into()));
    }
    let n = g.order();
    let bell_order = if k > n {
        0
    } else {
        enumerate_partitions(g, k, n)?.len()
    };
    if bell_order > DEFAULT_PARTITION_CAP {
        return Err(Error::CapExceeded {
            what: "partitions",
            cap: DEFAULT_PARTITION_CAP,
        });
    }
    Ok(UpperProfile {
        n,
        k,
        is_clique: g.is_complete(),
        chi: chromatic_number(g),
        prime: canonical_code(&g.strip_universal()),
        claw: canonical_code(&g.claw_closure()),
        bell_order,
    })
}

fn code(g: Graph) -> CanonicalCode {
    canonical_code(&g)
}

fn plus_isolated(g: Graph) -> Graph {
    g.disjoint_union(&Graph::empty(1)).expect("small")
}

/// Whether condition `c` (1 to 8) holds for the pair.
pub fn condition_holds(c: u8, a: &UpperProfile, b: &UpperProfile) -> bool {
    let both = |f: &dyn Fn(&UpperProfile) -> bool| f(a) && f(b);
    // k <= n - 1 and k <= n - 2 without underflow
    let le_n1 = |p: &UpperProfile| p.k < p.n;
    let le_n2 = |p: &UpperProfile| p.k + 2 <= p.n;
    let eq_n1 = |p: &UpperProfile| p.k + 1 == p.n;
    match c {
        1 => both(&|p| p.k > p.n),
        2 => both(&|p| p.k == p.n || (p.k <= p.n && p.is_clique)),
        3 => a.claw == b.claw && both(&eq_n1),
        4 => a.prime == b.prime && both(&|p| p.chi < p.k && le_n2(p)) && a.n - a.k == b.n - b.k,
        5 => a.prime == b.prime && both(&|p| p.k <= p.chi),
        6 => {
            a.bell_order == b.bell_order
                && a.bell_order >= 1
                && both(&|p| {
                    le_n1(p) && p.prime == code(plus_isolated(Graph::complete(p.bell_order - 1)))
                })
        }
        7 => {
            let k3k1 = code(plus_isolated(Graph::complete(3)));
            let e3 = code(Graph::empty(3));
            both(&|p| (le_n1(p) && p.prime == k3k1) || (eq_n1(p) && p.prime == e3))
        }
        8 => {
            let e3 = code(Graph::empty(3));
            let p3k1 = code(plus_isolated(Graph::path(3)));
            both(&|p| (le_n2(p) && p.prime == e3) || (eq_n1(p) && p.prime == p3k1))
        }
        _ => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub equivalent: bool,
    /// Satisfied conditions, ascending.
    pub conditions: Vec<u8>,
}

pub fn classify_profiles(a: &UpperProfile, b: &UpperProfile) -> Classification {
    let conditions: Vec<u8> = (1..=8).filter(|&c| condition_holds(c, a, b)).collect();
    Classification {
        equivalent: !conditions.is_empty(),
        conditions,
    }
}

/// Evaluate all eight conditions for `(g1, k1)` and `(g2, k2)`.
pub fn classify_pair(g1: &Graph, k1: usize, g2: &Graph, k2: usize) -> Result<Classification> {
    Ok(classify_profiles(
        &upper_profile(g1, k1)?,
        &upper_profile(g2, k2)?,
    ))
}

/// Canonical code of `B_{>=k}(g)`.
pub fn upper_bell_code(g: &Graph, k: usize) -> Result<CanonicalCode> {
    Ok(build_bell(g, Variant::AtLeastK(k))?
        .graph()
        .canonical_code())
}

/// Build both upper-Bell graphs and compare canonical codes.
pub fn oracle_isomorphic(g1: &Graph, k1: usize, g2: &Graph, k2: usize) -> Result<bool> {
    Ok(upper_bell_code(g1, k1)? == upper_bell_code(g2, k2)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3k1() -> Graph {
        plus_isolated(Graph::path(3))
    }

    #[test]
    fn examples() {
        let c = classify_pair(&Graph::complete(5), 3, &Graph::complete(7), 2).unwrap();
        assert!(c.equivalent && c.conditions.contains(&2));
        let c = classify_pair(&p3k1(), 3, &Graph::empty(3), 1).unwrap();
        assert!(c.equivalent && c.conditions.contains(&8));
        let c = classify_pair(&Graph::cycle(4), 2, &Graph::cycle(5), 2).unwrap();
        assert!(!c.equivalent);
        assert!(classify_pair(&Graph::cycle(4), 0, &Graph::cycle(5), 2).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert!(oracle_isomorphic(&Graph::empty(3), 2, &Graph::star(3), 3).unwrap());
        assert!(oracle_isomorphic(&Graph::cycle(5), 2, &Graph::cycle(5), 2).unwrap());
        assert!(!oracle_isomorphic(&Graph::cycle(4), 2, &Graph::cycle(5), 2).unwrap());
    }

    #[test]
    fn clique_sizes_must_match() {
        // B_{>=1}(K1 + K1) is K2 and B_{>=1}(K2 + K1) is K3
        let a = Graph::empty(2);
        let b = plus_isolated(Graph::complete(2));
        assert!(!oracle_isomorphic(&a, 1, &b, 1).unwrap());
        assert!(!classify_pair(&a, 1, &b, 1).unwrap().equivalent);
    }

    #[test]
    fn agrees_with_oracle_up_to_three_vertices() {
        let graphs = crate::generate::graphs_up_to(3).unwrap();
        let items: Vec<(&Graph, usize)> = graphs
            .iter()
            .flat_map(|g| (1..=g.order() + 1).map(move |k| (g, k)))
            .collect();
        for &(g1, k1) in &items {
            for &(g2, k2) in &items {
                let c = classify_pair(g1, k1, g2, k2).unwrap();
                assert_eq!(
                    c.equivalent,
                    oracle_isomorphic(g1, k1, g2, k2).unwrap(),
                    "{g1:?} {k1} {g2:?} {k2}"
                );
            }
        }
    }
}
