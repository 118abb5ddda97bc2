//! Error type shared across the crate.

use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A block list violates the canonical form (strictly decreasing
    /// positive sizes, positive multiplicities).
    #[error("invalid block form: {0}")]
    InvalidBlocks(String),

    /// The empty partition has no support data.
    #[error("the empty partition has no support profile")]
    EmptyPartition,

    /// The partition count does not fit in 128 bits.
    #[error("p({0}) overflows 128-bit integer arithmetic")]
    CountOverflow(u64),

    /// Staircase perturbations are only defined from the second staircase on.
    #[error("staircase perturbations require t >= 2, got t = {0}")]
    PerturbationLevel(u64),

    /// Mixed perturbation parameters outside their domain.
    #[error("invalid perturbation parameters: {0}")]
    InvalidPerturbation(String),

    /// Increment queries must stay inside one triangular interval.
    #[error("increment query requires 0 <= nu < t, got t = {t}, nu = {nu}")]
    IncrementRange {
        /// Triangular level.
        t: u64,
        /// Surplus over the triangular number.
        nu: u64,
    },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
