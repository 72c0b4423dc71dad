use bellgraph::generate::graphs_up_to;
use bellgraph::reconstruct::{
    find_fat_partition, reconstruct_from_bk, reconstruct_prime, reconstruct_upper_auto, Outcome,
    Regime,
};
use bellgraph::unlabeled::UnlabeledGraph;
use bellgraph::{
    build_bell, chromatic_number, is_isomorphic, pstar_candidates, Error, Graph, Variant,
};
use proptest::prelude::*;

fn host_strategy() -> impl Strategy<Value = Graph> {
    let hosts = graphs_up_to(5).unwrap();
    (0..hosts.len()).prop_map(move |i| hosts[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn full_bell_reconstructs_under_any_relabeling(g in host_strategy(), seed in any::<u64>()) {
        let b = build_bell(&g, Variant::Full).unwrap();
        let r = reconstruct_prime(&b.scramble(seed)).unwrap();
        prop_assert!(is_isomorphic(&r, &g.strip_universal()));
    }

    #[test]
    fn pstar_survives_the_filter(g in host_strategy(), seed in any::<u64>()) {
        let b = build_bell(&g, Variant::Full).unwrap();
        let (scrambled, position) = b.scramble_tracked(seed);
        let sets = pstar_candidates(&scrambled);
        let star = position[b.pstar().unwrap()];
        prop_assert!(sets.omega5.contains(&star));
    }
}

#[test]
fn upper_auto_on_a_five_cycle() {
    let g = Graph::cycle(5);
    for k in 1..=3 {
        let r = reconstruct_upper_auto(&build_bell(&g, Variant::AtLeastK(k)).unwrap().scramble(7))
            .unwrap();
        assert_eq!(r.regime, Regime::KLeNMinus2);
        assert!(is_isomorphic(r.graph().unwrap(), &g));
    }
    let r =
        reconstruct_upper_auto(&build_bell(&g, Variant::AtLeastK(4)).unwrap().scramble(7)).unwrap();
    assert_eq!(r.regime, Regime::KEqNMinus1);
    assert!(is_isomorphic(r.graph().unwrap(), &g.claw_closure()));
}

#[test]
fn degenerate_inputs() {
    assert_eq!(
        reconstruct_upper_auto(&UnlabeledGraph::empty(0))
            .unwrap()
            .regime,
        Regime::Empty
    );
    let one = reconstruct_upper_auto(&UnlabeledGraph::empty(1)).unwrap();
    assert_eq!(one.regime, Regime::SingleVertex);
    assert_eq!(one.result, Outcome::Unconstrained);
    let k4 = build_bell(&Graph::empty(3), Variant::AtLeastK(2)).unwrap();
    assert!(k4.graph().is_complete());
    let r = reconstruct_upper_auto(&k4.scramble(0)).unwrap();
    assert_eq!(r.regime, Regime::DegenerateClique);
    assert!(
        matches!(r.result, Outcome::Possibilities(ref v) if v.iter().any(|p| is_isomorphic(&p.graph, &Graph::empty(3))))
    );
}

#[test]
fn lower_reconstruction_of_empty_graphs() {
    for n in 4..=7 {
        let g = Graph::empty(n);
        for k in [2, 3] {
            let b = build_bell(&g, Variant::AtMostK(k)).unwrap();
            assert!(is_isomorphic(
                &reconstruct_from_bk(&b.scramble(n as u64)).unwrap(),
                &g
            ));
        }
    }
    assert_eq!(
        reconstruct_from_bk(&UnlabeledGraph::empty(0)),
        Err(Error::EmptyInput)
    );
}

#[test]
fn fat_partitions_of_sparse_hosts() {
    for g in [
        Graph::empty(8),
        Graph::matching(6, 1),
        Graph::matching(2, 9),
    ] {
        let f = find_fat_partition(&g).unwrap();
        assert_eq!(f.partition.part_count(), chromatic_number(&g));
        assert!(f.partition.block_sizes().iter().all(|&s| s >= 4));
        assert!(f.partition.is_valid_for(&g));
    }
    assert!(matches!(
        find_fat_partition(&Graph::cycle(5)),
        Err(Error::PreconditionViolated(_))
    ));
}
