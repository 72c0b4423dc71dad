//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! fails if any gating criterion fails.

use std::io::Write;
use std::time::Instant;

use bellgraph::generate::graphs_up_to;
use bellgraph::reconstruct::{
    reconstruct_from_bk, reconstruct_prime, reconstruct_upper_auto, Outcome, Regime,
};
use bellgraph::verify::{
    check_fat_partition, check_lower_instance, check_lower_invariants, check_omega_invariants,
    check_split_closure, conjecture_search, fat_hosts, lower_instances, run_suite,
    split_closure_hosts, Suite, Tally,
};
use bellgraph::{build_bell, generate_nonisomorphic_graphs, is_isomorphic, Graph, Variant};
use rayon::prelude::*;

struct Verdict {
    id: u8,
    name: &'static str,
    gating: bool,
    ok: bool,
    summary: String,
}

fn report(
    id: u8,
    name: &'static str,
    gating: bool,
    start: Instant,
    t: &Tally,
    unit: &str,
) -> Verdict {
    let mut summary = format!(
        "{} {unit}, {} failures, {:.1}s",
        t.checks,
        t.failures.len(),
        start.elapsed().as_secs_f64()
    );
    if let Some(f) = t.failures.first() {
        summary.push_str(&format!(
            "; first: {} on {} {:?} {}",
            f.check, f.graph6, f.variant, f.detail
        ));
    }
    Verdict {
        id,
        name,
        gating,
        ok: t.passed(),
        summary,
    }
}

fn merge(units: Vec<Tally>) -> Tally {
    let mut all = Tally::default();
    for u in units {
        all.absorb(u);
    }
    all
}

fn fail(
    check: &str,
    g: &Graph,
    k: Option<usize>,
    seed: u64,
    detail: String,
) -> bellgraph::verify::Failure {
    let f = bellgraph::verify::Failure::new(check, g)
        .seed(seed)
        .detail(detail);
    match k {
        Some(k) => f.variant(Variant::AtLeastK(k)),
        None => f.variant(Variant::Full),
    }
}

fn full_reconstruction() -> Verdict {
    let start = Instant::now();
    let hosts = graphs_up_to(6).unwrap();
    assert_eq!(hosts.len(), 1 + 2 + 4 + 11 + 34 + 156);
    let t = merge(
        hosts
            .par_iter()
            .map(|g| {
                let mut t = Tally::default();
                let b = build_bell(g, Variant::Full).unwrap();
                let expected = g.strip_universal();
                for s in 0..2 {
                    let r = reconstruct_prime(&b.scramble(s));
                    let ok = r.as_ref().is_ok_and(|r| is_isomorphic(r, &expected));
                    t.check(ok, || {
                        fail("full_reconstruction", g, None, s, format!("{r:?}"))
                    });
                }
                t
            })
            .collect(),
    );
    report(
        1,
        "full Bell reconstruction, n <= 6, 2 seeds",
        true,
        start,
        &t,
        "reconstructions",
    )
}

fn upper_reconstruction() -> Verdict {
    let start = Instant::now();
    let hosts: Vec<Graph> = graphs_up_to(6)
        .unwrap()
        .into_iter()
        .filter(|g| g.order() >= 3)
        .collect();
    let t = merge(
        hosts
            .par_iter()
            .map(|g| {
                let mut t = Tally::default();
                let n = g.order();
                let expected = g.strip_universal();
                for k in 1..=n - 2 {
                    let b = build_bell(g, Variant::AtLeastK(k)).unwrap();
                    for s in 0..2 {
                        let r = reconstruct_prime(&b.scramble(s));
                        let ok = r.as_ref().is_ok_and(|r| is_isomorphic(r, &expected));
                        t.check(ok, || {
                            fail("upper_reconstruction", g, Some(k), s, format!("{r:?}"))
                        });
                    }
                }
                t
            })
            .collect(),
    );
    report(
        2,
        "upper Bell reconstruction, 3 <= n <= 6, k <= n-2",
        true,
        start,
        &t,
        "reconstructions",
    )
}

fn n_minus_one_regime() -> Verdict {
    let start = Instant::now();
    let hosts: Vec<Graph> = graphs_up_to(6)
        .unwrap()
        .into_iter()
        .filter(|g| g.order() >= 2)
        .collect();
    let t = merge(
        hosts
            .par_iter()
            .map(|g| {
                let mut t = Tally::default();
                let k = g.order() - 1;
                let b = build_bell(g, Variant::AtLeastK(k)).unwrap();
                let claw = g.claw_closure();
                for s in 0..2 {
                    let scrambled = b.scramble(s);
                    let m = scrambled.order();
                    let degenerate = m <= 1
                        || scrambled.is_complete()
                        || (m == 5 && scrambled.edge_count() == 9);
                    if degenerate {
                        continue;
                    }
                    let r = reconstruct_upper_auto(&scrambled);
                    let ok = r.as_ref().is_ok_and(|r| {
                        r.regime == Regime::KEqNMinus1
                            && matches!(&r.result, Outcome::Graph(h) if is_isomorphic(h, &claw))
                    });
                    t.check(ok, || {
                        fail(
                            "n_minus_one_regime",
                            g,
                            Some(k),
                            s,
                            format!("{:?}", r.map(|r| r.regime)),
                        )
                    });
                }
                t
            })
            .collect(),
    );
    report(
        3,
        "k = n-1 regime, 2 <= n <= 6",
        true,
        start,
        &t,
        "reconstructions",
    )
}

fn classification() -> Verdict {
    let start = Instant::now();
    let r = run_suite(Suite::Classify, 5, 1).unwrap();
    let t = Tally {
        checks: r.checks,
        failures: r.failures,
    };
    report(
        4,
        "classification against the oracle, n <= 5",
        true,
        start,
        &t,
        "checks",
    )
}

fn lower_reconstruction() -> Vec<Verdict> {
    let start = Instant::now();
    let instances = lower_instances(13);
    let gating: Vec<_> = instances.iter().filter(|i| !i.exploratory).collect();
    assert!(gating.iter().any(|i| i.name == "M13"));
    let t = merge(
        gating
            .par_iter()
            .map(|i| check_lower_instance(i, 0))
            .collect(),
    );
    let mut out = vec![report(
        5,
        "lower Bell reconstruction, empty_4..10 with k = 2, 3 and M13 with k = 3",
        true,
        start,
        &t,
        "checks",
    )];
    let start = Instant::now();
    let c8 = Graph::cycle(8);
    let r = reconstruct_from_bk(&build_bell(&c8, Variant::AtMostK(3)).unwrap().scramble(0));
    let ok = r.as_ref().is_ok_and(|h| is_isomorphic(h, &c8));
    out.push(Verdict {
        id: 5,
        name: "exploratory: C8 with k = 3",
        gating: false,
        ok,
        summary: format!(
            "{}, {:.1}s",
            if ok {
                "returned C8".to_string()
            } else {
                format!("got {r:?}")
            },
            start.elapsed().as_secs_f64()
        ),
    });
    out
}

fn invariant_suites() -> Verdict {
    let start = Instant::now();
    let hosts = graphs_up_to(6).unwrap();
    let mut units: Vec<Tally> = hosts.par_iter().map(check_omega_invariants).collect();
    units.extend(
        hosts
            .par_iter()
            .map(check_lower_invariants)
            .collect::<Vec<_>>(),
    );
    units.extend(
        split_closure_hosts(9)
            .par_iter()
            .map(check_split_closure)
            .collect::<Vec<_>>(),
    );
    report(
        6,
        "structural invariants, n <= 6 plus split closure hosts n <= 9",
        true,
        start,
        &merge(units),
        "checks",
    )
}

fn line_roots() -> Verdict {
    let start = Instant::now();
    let r = run_suite(Suite::Lineroot, 6, 1).unwrap();
    let t = Tally {
        checks: r.checks,
        failures: r.failures,
    };
    report(
        7,
        "line-root round trip and recognition, n <= 6",
        true,
        start,
        &t,
        "checks",
    )
}

fn fat_partitions() -> Verdict {
    let start = Instant::now();
    let hosts = fat_hosts(13);
    // every graph on 13 vertices with maximum degree 1 is a matching plus isolated vertices
    assert_eq!(hosts.iter().filter(|g| g.order() == 13).count(), 1 + 6);
    let t = merge(hosts.par_iter().map(check_fat_partition).collect());
    report(
        8,
        "fat partition finder, n <= 13",
        true,
        start,
        &t,
        "checks",
    )
}

fn conjecture() -> Verdict {
    let start = Instant::now();
    let r = conjecture_search(5).unwrap();
    Verdict {
        id: 9,
        name: "conjecture sweep, n <= 5 (diagnostic)",
        gating: false,
        ok: r.counterexample_count == 0,
        summary: format!(
            "{} items, {} pairs, {} counterexamples, {:.1}s",
            r.items,
            r.pairs,
            r.counterexample_count,
            start.elapsed().as_secs_f64()
        ),
    }
}

#[test]
fn acceptance() {
    assert_eq!(generate_nonisomorphic_graphs(4).unwrap().len(), 11);
    let mut results = vec![
        full_reconstruction(),
        upper_reconstruction(),
        n_minus_one_regime(),
        classification(),
    ];
    results.extend(lower_reconstruction());
    results.push(invariant_suites());
    results.push(line_roots());
    results.push(fat_partitions());
    results.push(conjecture());
    // the raw handle is not captured by the test harness, so these lines
    // show up in a plain `cargo test`
    let mut stdout = std::io::stdout().lock();
    for r in &results {
        let tag = if r.ok { "PASS" } else { "FAIL" };
        let note = if r.gating { "" } else { " [non-gating]" };
        writeln!(stdout, "{tag} criterion {}: {}{note} ({})", r.id, r.name, r.summary).unwrap();
    }
    stdout.flush().unwrap();
    let failed: Vec<u8> = results
        .iter()
        .filter(|r| r.gating && !r.ok)
        .map(|r| r.id)
        .collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
