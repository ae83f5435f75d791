//! Enumeration, validation, rank statistics and bijections for partitions,
//! Durfee symbols, strongly unimodal sequences and their k-marked versions.
//!
//! Enumerators return objects in a fixed canonical order: partitions in
//! lexicographically descending order, symbols ordered by
//! (peak or side, top row, bottom row).

mod durfee;
mod marked;
mod omega;
mod partition;
mod selfconj;
mod unimodal;

use thiserror::Error;

pub use durfee::{durfee_decompose, DurfeeSymbol};
pub use marked::{
    census_dk, census_uk, count_dk, count_uk, enumerate_kmarked_durfee, enumerate_kmarked_su,
    ranks_durfee, ranks_su, KMarkedDurfeeSymbol, KMarkedSuSymbol, MarkedPart, RankVector, Strategy,
};
pub use omega::count_omega_epsilon;
pub use partition::{count_n, dyson_rank, enumerate_partitions, Partition};
pub use selfconj::{
    count_scuk, enumerate_complete_odd_partitions, enumerate_self_conjugate,
    is_complete_odd_partition, odd_partition_to_selfconj, selfconj_to_odd_partition,
};
pub use unimodal::{
    count_u, count_u_total, enumerate_su_sequences, enumerate_su_symbols, su_rank, su_symbol,
    su_unsymbol, SuSequence, SuSymbol,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("rank of the empty partition is undefined")]
    EmptyPartition,
    #[error("no Durfee square: the partition is empty")]
    NoDurfeeSquare,
    #[error("invalid strongly unimodal sequence: {0}")]
    InvalidSequence(String),
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),
    #[error("mark count k = {0} is invalid, need k >= 1")]
    InvalidK(u32),
    #[error("defined for k >= 2 only (got k = {0})")]
    KTooSmall(u32),
    #[error("precondition failed: {0}")]
    Precondition(String),
}
