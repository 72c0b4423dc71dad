//! End-to-end reconstruction from scrambled `B(G)` and `B_{>=k}(G)`.

use super::{Failure, Tally};
use crate::bell::{build_bell, Variant};
use crate::canon::{canonical_code, is_isomorphic};
use crate::graph::Graph;
use crate::reconstruct::full::{
    reconstruct_prime, reconstruct_upper_auto, KRange, Outcome, Regime,
};

/// `reconstruct_prime` on scrambled `B(g)` for seeds `0..seeds`.
pub fn check_full_recon(g: &Graph, seeds: u64) -> Tally {
    let mut t = Tally::default();
    let Some(b) = t.require(build_bell(g, Variant::Full), || Failure::new("build", g)) else {
        return t;
    };
    let expected = g.strip_universal();
    let mut codes = Vec::new();
    for s in 0..seeds {
        let fail = || {
            Failure::new("full_reconstruction", g)
                .variant(Variant::Full)
                .seed(s)
        };
        if let Some(r) = t.require(reconstruct_prime(&b.scramble(s)), fail) {
            t.check(is_isomorphic(&r, &expected), || {
                fail().detail(format!("got {r:?}"))
            });
            codes.push(canonical_code(&r));
        }
    }
    t.check(codes.windows(2).all(|w| w[0] == w[1]), || {
        Failure::new("seed_invariance", g)
    });
    t
}

fn k_fits(range: KRange, n: usize, k: usize) -> bool {
    match range {
        KRange::AtMostNMinus1 => k < n,
        KRange::AtMostNMinus2 => k + 2 <= n,
        KRange::EqNMinus1 => k + 1 == n,
    }
}

/// `reconstruct_prime` for `k <= n - 2`, and regime detection with its
/// result for every `k` from 1 to `n + 1`.
pub fn check_upper_auto(g: &Graph, seeds: u64) -> Tally {
    let mut t = Tally::default();
    let n = g.order();
    let prime = g.strip_universal();
    let claw = g.claw_closure();
    for k in 1..=n + 1 {
        let variant = Variant::AtLeastK(k);
        let Some(b) = t.require(build_bell(g, variant), || {
            Failure::new("build", g).variant(variant)
        }) else {
            continue;
        };
        for s in 0..seeds {
            let scrambled = b.scramble(s);
            let fail = |name: &str| Failure::new(name, g).variant(variant).seed(s);
            if k + 2 <= n {
                if let Some(r) = t.require(reconstruct_prime(&scrambled), || {
                    fail("upper_reconstruction")
                }) {
                    t.check(is_isomorphic(&r, &prime), || {
                        fail("upper_reconstruction").detail(format!("got {r:?}"))
                    });
                }
            }
            let Some(report) = t.require(reconstruct_upper_auto(&scrambled), || fail("upper_auto"))
            else {
                continue;
            };
            let m = scrambled.order();
            let degenerate_clique = m >= 2 && scrambled.is_complete();
            let degenerate_k5 = m == 5 && scrambled.edge_count() == 9;
            let expected = match m {
                0 => Regime::Empty,
                1 => Regime::SingleVertex,
                _ if degenerate_clique => Regime::DegenerateClique,
                _ if degenerate_k5 => Regime::DegenerateK5Minus,
                _ if k + 1 == n => Regime::KEqNMinus1,
                _ => Regime::KLeNMinus2,
            };
            t.check(report.regime == expected, || {
                fail("regime_detection").detail(format!(
                    "expected {}, got {}",
                    expected.name(),
                    report.regime.name()
                ))
            });
            match &report.result {
                Outcome::Graph(r) => {
                    let target = if report.regime == Regime::KEqNMinus1 {
                        &claw
                    } else {
                        &prime
                    };
                    t.check(is_isomorphic(r, target), || {
                        fail("upper_auto_result").detail(format!("got {r:?}"))
                    });
                }
                Outcome::Possibilities(options) => {
                    let hit = options
                        .iter()
                        .any(|o| k_fits(o.k, n, k) && is_isomorphic(&o.graph, &prime));
                    t.check(hit, || fail("degenerate_possibilities_cover_host"));
                }
                Outcome::Unconstrained => {}
            }
        }
    }
    t
}
