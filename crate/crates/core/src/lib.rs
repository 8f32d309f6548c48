//! Exact character calculus for the Weyl groups `S_n` and `W_n` (types A
//! and B/C/D) in the language of beta-sequences and bi-symbols, plus the
//! exhaustive checks built on it and an `SO_5(F_q)` enumeration for the
//! line-count character identity.

pub mod combinatorics;
pub mod error;
pub mod format;
pub mod report;
pub mod signed_perm;
pub mod so5;
pub mod sn;
pub mod table;
pub mod verify;
pub mod wn;

pub use combinatorics::{
    beta_to_partition, normalize_beta, normalize_bisymbol, partition_to_beta, reduce_beta,
    shift_beta, BetaSequence, BiSymbol, NormalizedBeta, NormalizedBiSymbol, Partition,
    SignedCycleType, SnClass,
};
pub use error::{Error, Result};
