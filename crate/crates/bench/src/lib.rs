//! Fixed inputs shared by the benchmarks.

use bellgraph::{build_bell, Graph, UnlabeledGraph, Variant};

/// Hosts and variants for the construction benchmarks, with a label.
pub fn hosts() -> Vec<(&'static str, Graph, Variant)> {
    vec![
        ("empty_6", Graph::empty(6), Variant::Full),
        ("c6", Graph::cycle(6), Variant::Full),
        ("petersen_k4", petersen(), Variant::AtMostK(4)),
        ("empty_8_k3", Graph::empty(8), Variant::AtMostK(3)),
    ]
}

pub fn petersen() -> Graph {
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 0),
        (0, 5),
        (1, 6),
        (2, 7),
        (3, 8),
        (4, 9),
        (5, 7),
        (7, 9),
        (9, 6),
        (6, 8),
        (8, 5),
    ];
    Graph::from_edges(10, &edges).expect("valid edges")
}

/// A scrambled full Bell graph of `g`.
pub fn scrambled_full(g: &Graph, seed: u64) -> UnlabeledGraph {
    build_bell(g, Variant::Full)
        .expect("within cap")
        .scramble(seed)
}
