//! Sweeps over pairs `(G1, k1)`, `(G2, k2)`: the upper-Bell classification
//! against the oracle, and `B_k` isomorphism against the conjectured rule.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{Failure, Tally};
use crate::bell::{build_bell, Variant};
use crate::canon::{canonical_code, CanonicalCode};
use crate::classify::{classify_profiles, upper_bell_code, upper_profile, UpperProfile};
use crate::coloring::chromatic_number;
use crate::error::{Error, Result};
use crate::generate::graphs_up_to;
use crate::graph::Graph;

struct Item {
    g: Graph,
    profile: UpperProfile,
    code: CanonicalCode,
}

fn add_universal(g: &Graph, count: usize) -> Graph {
    let n = g.order();
    let mut h = g.disjoint_union(&Graph::empty(count)).expect("small host");
    for u in n..n + count {
        for v in 0..u {
            h.add_edge(v, u);
        }
    }
    h
}

pub(super) fn classify_suite(n_max: usize, seeds: u64) -> Result<Vec<Tally>> {
    let hosts = graphs_up_to(n_max)?;
    let pairs: Vec<(usize, usize)> = hosts
        .iter()
        .enumerate()
        .flat_map(|(i, g)| (1..=g.order() + 1).map(move |k| (i, k)))
        .collect();
    let items: Vec<Item> = pairs
        .par_iter()
        .map(|&(i, k)| {
            let g = hosts[i].clone();
            Ok(Item {
                profile: upper_profile(&g, k)?,
                code: upper_bell_code(&g, k)?,
                g,
            })
        })
        .collect::<Result<_>>()?;
    let mut units: Vec<Tally> = hosts
        .par_iter()
        .enumerate()
        .map(|(h, g)| {
            let mut t = Tally::default();
            let mine: Vec<&Item> = pairs
                .iter()
                .zip(&items)
                .filter(|((i, _), _)| *i == h)
                .map(|(_, it)| it)
                .collect();
            for a in &mine {
                for b in &items {
                    let c = classify_profiles(&a.profile, &b.profile);
                    let truth = a.code == b.code;
                    t.check(c.equivalent == truth, || {
                        Failure::new("classification_matches_oracle", g)
                            .variant(Variant::AtLeastK(a.profile.k))
                            .detail(format!(
                                "against {} with k = {}: conditions {:?}, oracle {truth}",
                                crate::graph6::encode(&b.g),
                                b.profile.k,
                                c.conditions
                            ))
                    });
                    t.check(c == classify_profiles(&b.profile, &a.profile), || {
                        Failure::new("classification_symmetric", g)
                    });
                }
            }
            // distinct k strictly between chi and n never give isomorphic graphs
            let chi = chromatic_number(g);
            for a in &mine {
                for b in &mine {
                    let (k1, k2) = (a.profile.k, b.profile.k);
                    if k1 != k2 && k1 > chi && k2 > chi && k1 <= g.order() && k2 <= g.order() {
                        t.check(a.code != b.code, || {
                            Failure::new("distinct_k_distinct_graphs", g)
                                .detail(format!("{k1} vs {k2}"))
                        });
                    }
                }
            }
            t
        })
        .collect();
    // padding with universal vertices while keeping n - k fixed preserves the graph
    let mut spot = Tally::default();
    if !hosts.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(seeds);
        for _ in 0..50 {
            let g = &hosts[rng.gen_range(0..hosts.len())];
            let k = rng.gen_range(1..=g.order() + 1);
            let extra = rng.gen_range(1..=2);
            let h = add_universal(g, extra);
            let same = upper_bell_code(g, k).ok() == upper_bell_code(&h, k + extra).ok();
            spot.check(same, || {
                Failure::new("universal_padding", g).detail(format!("k = {k}, padded by {extra}"))
            });
        }
    }
    units.push(spot);
    Ok(units)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub g1: Graph,
    pub k1: usize,
    pub g2: Graph,
    pub k2: usize,
    pub isomorphic: bool,
    pub predicted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub n_max: usize,
    /// Number of `(G, k)` with `χ(G) < k <= n + 1`.
    pub items: usize,
    /// Unordered pairs compared, including each item with itself.
    pub pairs: usize,
    pub agreements: usize,
    pub counterexample_count: usize,
    /// The first counterexamples found, at most 100.
    pub counterexamples: Vec<Counterexample>,
}

/// Largest host order accepted by [`conjecture_search`].
pub const CONJECTURE_CAP: usize = 6;

/// Compare `B_{k1}(G1) ≅ B_{k2}(G2)` with the predicate "`G1' ≅ G2'` and
/// either both `k_i >= n_i` or `n1 - k1 = n2 - k2`" over all `k_i > χ(G_i)`.
pub fn conjecture_search(n_max: usize) -> Result<SearchReport> {
    if n_max > CONJECTURE_CAP {
        return Err(Error::CapExceeded {
            what: "conjecture search host order",
            cap: CONJECTURE_CAP,
        });
    }
    let hosts = graphs_up_to(n_max)?;
    let specs: Vec<(usize, usize)> = hosts
        .iter()
        .enumerate()
        .flat_map(|(i, g)| (chromatic_number(g) + 1..=g.order() + 1).map(move |k| (i, k)))
        .collect();
    let items: Vec<(CanonicalCode, CanonicalCode)> = specs
        .par_iter()
        .map(|&(i, k)| {
            let g = &hosts[i];
            Ok((
                build_bell(g, Variant::AtMostK(k))?.graph().canonical_code(),
                canonical_code(&g.strip_universal()),
            ))
        })
        .collect::<Result<_>>()?;
    let predict = |a: usize, b: usize| {
        let ((i1, k1), (i2, k2)) = (specs[a], specs[b]);
        let (n1, n2) = (hosts[i1].order() as i64, hosts[i2].order() as i64);
        let (k1, k2) = (k1 as i64, k2 as i64);
        items[a].1 == items[b].1 && ((k1 >= n1 && k2 >= n2) || n1 - k1 == n2 - k2)
    };
    let rows: Vec<(usize, usize, Vec<Counterexample>)> = (0..specs.len())
        .into_par_iter()
        .map(|a| {
            let mut agree = 0;
            let mut bad = Vec::new();
            for b in a..specs.len() {
                let iso = items[a].0 == items[b].0;
                let predicted = predict(a, b);
                if iso == predicted {
                    agree += 1;
                } else {
                    let ((i1, k1), (i2, k2)) = (specs[a], specs[b]);
                    bad.push(Counterexample {
                        g1: hosts[i1].clone(),
                        k1,
                        g2: hosts[i2].clone(),
                        k2,
                        isomorphic: iso,
                        predicted,
                    });
                }
            }
            (specs.len() - a, agree, bad)
        })
        .collect();
    let pairs = rows.iter().map(|r| r.0).sum();
    let agreements = rows.iter().map(|r| r.1).sum();
    let all: Vec<Counterexample> = rows.into_iter().flat_map(|r| r.2).collect();
    Ok(SearchReport {
        n_max,
        items: specs.len(),
        pairs,
        agreements,
        counterexample_count: all.len(),
        counterexamples: all.into_iter().take(100).collect(),
    })
}
