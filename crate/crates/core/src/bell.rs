//! Labeled Bell colouring graphs and their unlabeled, scrambled images.

use std::collections::HashMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{enumerate_partitions_capped, SetPartition, DEFAULT_PARTITION_CAP};
use crate::unlabeled::UnlabeledGraph;

/// Which partitions become vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "variant", content = "k", rename_all = "snake_case")]
pub enum Variant {
    /// Every independent set partition.
    Full,
    /// Partitions with at most `k` parts.
    AtMostK(usize),
    /// Partitions with at least `k` parts.
    AtLeastK(usize),
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::Full => "full",
            Variant::AtMostK(_) => "at_most_k",
            Variant::AtLeastK(_) => "at_least_k",
        }
    }

    pub fn k(&self) -> Option<usize> {
        match *self {
            Variant::Full => None,
            Variant::AtMostK(k) | Variant::AtLeastK(k) => Some(k),
        }
    }

    /// Inclusive part-count bounds on a host with `n` vertices, or `None`
    /// when no partition qualifies.
    pub fn bounds(&self, n: usize) -> Option<(usize, usize)> {
        let (lo, hi) = match *self {
            Variant::Full => (0, n),
            Variant::AtMostK(k) => (0, k.min(n)),
            Variant::AtLeastK(k) => (k, n),
        };
        (lo <= hi).then_some((lo, hi))
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k() {
            Some(k) => write!(f, "{}({k})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

/// A Bell-type graph whose vertices carry their partitions.
#[derive(Clone, Debug)]
pub struct BellGraph {
    host: Graph,
    variant: Variant,
    vertices: Vec<SetPartition>,
    graph: UnlabeledGraph,
}

/// Build `B(g)`, `B_k(g)` or `B_{>=k}(g)` with the default vertex cap.
pub fn build_bell(g: &Graph, variant: Variant) -> Result<BellGraph> {
    build_bell_capped(g, variant, DEFAULT_PARTITION_CAP)
}

/// As [`build_bell`] with an explicit cap on the number of vertices.
pub fn build_bell_capped(g: &Graph, variant: Variant, cap: usize) -> Result<BellGraph> {
    if variant.k() == Some(0) {
        return Err(Error::PreconditionViolated("k must be at least 1".into()));
    }
    let vertices = match variant.bounds(g.order()) {
        Some((lo, hi)) => enumerate_partitions_capped(g, lo, hi, cap)?,
        None => Vec::new(),
    };
    let (lo, hi) = variant.bounds(g.order()).unwrap_or((1, 0));
    let index: HashMap<&[u8], u32> = vertices
        .iter()
        .enumerate()
        .map(|(i, p)| (p.restricted_growth_string(), i as u32))
        .collect();
    let lists = vertices
        .iter()
        .map(|p| {
            let mut row: Vec<u32> = p
                .raw_moves()
                .filter(|&(v, target)| target.is_none_or(|c| p.blocks()[c] & g.neighbours(v) == 0))
                .filter_map(|(v, target)| {
                    let parts = match target {
                        None => p.part_count() + 1,
                        Some(_) if p.block_of(v).count_ones() == 1 => p.part_count() - 1,
                        Some(_) => p.part_count(),
                    };
                    if !(lo..=hi).contains(&parts) {
                        return None;
                    }
                    let q = p.apply_move(v, target);
                    Some(
                        *index
                            .get(q.restricted_growth_string())
                            .expect("neighbour is enumerated"),
                    )
                })
                .collect();
            row.sort_unstable();
            row.dedup();
            row
        })
        .collect();
    Ok(BellGraph {
        host: g.clone(),
        variant,
        vertices,
        graph: UnlabeledGraph::from_sorted_lists(lists),
    })
}

#[derive(Serialize)]
struct BellJson<'a> {
    variant: &'static str,
    k: Option<usize>,
    host_graph6: String,
    vertices: &'a [SetPartition],
    edges: Vec<[usize; 2]>,
}

impl BellGraph {
    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Partitions in restricted-growth-string order; vertex `i` is `vertices()[i]`.
    pub fn vertices(&self) -> &[SetPartition] {
        &self.vertices
    }

    /// Adjacency structure, vertex indices matching [`vertices`](Self::vertices).
    pub fn graph(&self) -> &UnlabeledGraph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn index_of(&self, p: &SetPartition) -> Option<usize> {
        self.vertices.binary_search(p).ok()
    }

    /// Index of the partition into singletons, when it is a vertex.
    pub fn pstar(&self) -> Option<usize> {
        self.index_of(&SetPartition::singletons(self.host.order()))
    }

    /// Adjacency under a seed-determined uniformly random relabeling.
    pub fn scramble(&self, seed: u64) -> UnlabeledGraph {
        self.scramble_tracked(seed).0
    }

    /// As [`scramble`](Self::scramble), also returning the relabeling:
    /// vertex `i` of `self` becomes vertex `perm[i]`.
    pub fn scramble_tracked(&self, seed: u64) -> (UnlabeledGraph, Vec<usize>) {
        let perm = random_permutation(self.order(), seed);
        (self.graph.permuted(&perm), perm)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = BellJson {
            variant: self.variant.name(),
            k: self.variant.k(),
            host_graph6: crate::graph6::encode(&self.host),
            vertices: &self.vertices,
            edges: self.graph.edges().map(|(u, v)| [u, v]).collect(),
        };
        serde_json::to_value(j).expect("plain data serializes")
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph B {\n");
        for (i, p) in self.vertices.iter().enumerate() {
            s.push_str(&format!("  {i} [label=\"{p}\"];\n"));
        }
        for (u, v) in self.graph.edges() {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// A uniformly random permutation of `0..m` from a seeded ChaCha stream.
pub fn random_permutation(m: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..m).collect();
    perm.shuffle(&mut rng);
    perm
}

/// Scramble a Bell graph's adjacency; see [`BellGraph::scramble`].
pub fn scramble(b: &BellGraph, seed: u64) -> UnlabeledGraph {
    b.scramble(seed)
}
