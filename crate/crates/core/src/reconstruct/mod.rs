//! Reconstruction of host graphs from unlabeled Bell-type graphs.

pub mod fat;
pub mod full;
pub mod lower;

pub use fat::{find_fat_partition, FatPartition};
pub use full::{
    phi, reconstruct_prime, reconstruct_upper_auto, Outcome, Possibility, ReconstructionReport,
    Regime,
};
pub use lower::{reconstruct_from_bk, KRegime, LowerReport};
