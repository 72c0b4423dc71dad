//! Bell colouring graphs of small graphs, and reconstruction of the host
//! graph from the unlabeled Bell graph.
//!
//! The vertices of the Bell colouring graph `B(G)` are the partitions of
//! `V(G)` into independent sets; two partitions are adjacent when one is
//! obtained from the other by moving a single vertex. `B_k(G)` and
//! `B_{>=k}(G)` restrict to partitions with at most or at least `k` parts.

pub mod bell;
pub mod candidates;
pub mod canon;
pub mod classify;
pub mod coloring;
pub mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod line_root;
mod local;
pub mod partition;
pub mod reconstruct;
pub mod unlabeled;
pub mod verify;

pub use bell::{build_bell, scramble, BellGraph, Variant};
pub use candidates::{pstar_candidates, CandidateSets};
pub use canon::{canonical_code, is_isomorphic, CanonicalCode};
pub use coloring::chromatic_number;
pub use error::{Error, Result};
pub use generate::generate_nonisomorphic_graphs;
pub use graph::Graph;
pub use line_root::{krausz_root, normalize_ddagger};
pub use partition::{are_adjacent, enumerate_partitions, neighbors_of, SetPartition};
pub use unlabeled::UnlabeledGraph;
