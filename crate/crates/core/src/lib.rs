//! Degree landscape of the partition graph.
//!
//! Vertices of the partition graph are the integer partitions of `n`; edges
//! join partitions related by moving one unit between parts (with
//! reordering). The vertex degree has a closed form driven by the support
//! size, gap pattern, and multiplicity pattern, and the maximal degree over
//! all of `G_n` is determined exactly by a square-pronic budget rule on
//! each triangular interval.
//!
//! The crate provides:
//!
//! - canonical partitions in block form, streaming enumeration, and
//!   conjugation ([`partition`]);
//! - the closed-form degree and its breakdown ([`degree`]);
//! - a brute-force adjacency oracle that validates the closed form
//!   ([`transfer`]);
//! - the exact extremal theory: `rho`, the budget function `beta`, and the
//!   maximal degree `Delta_n` ([`extremal`]);
//! - staircase perturbations, surplus coordinates, and extremal witnesses
//!   ([`stratum`]);
//! - per-n landscape statistics: histograms, spectra, extremal orbits, and
//!   the seven-column table rows ([`analytics`]);
//! - the published reference table for `1 <= n <= 60` ([`golden`]).
//!
//! All values are immutable and all operations are pure, so everything is
//! safe to fan out across threads; enumeration streams are single-consumer.

pub mod analytics;
pub mod count;
pub mod degree;
pub mod error;
pub mod extremal;
pub mod golden;
pub mod partition;
pub mod stratum;
pub mod transfer;

pub use analytics::{
    degree_histogram, extremal_orbits, landscape_row, max_degree_set, max_degree_set_full,
    spectrum, upper_tail, DegreeHistogram, ExtremalOrbit, LandscapeRow, OrbitKind,
};
pub use count::partition_count;
pub use degree::{degree, degree_breakdown, DegreeBreakdown};
pub use error::{Error, Result};
pub use extremal::{
    beta, delta_increment_is_jump, max_degree, min_weight, rho, surplus_bounds_hold, triangular,
    ExtremalContext,
};
pub use partition::{enumerate_partitions, Block, Partition, Partitions, SupportProfile};
pub use stratum::{
    decode_surplus, encode_surplus, enumerate_max_support_stratum, extremal_witness,
    mixed_perturbation, staircase, staircase_perturbations, MaxSupportStratum, PerturbationParams,
    StaircasePerturbations, SurplusData,
};
pub use transfer::{
    brute_degree, neighbors, verify_degree_formula, verify_degree_formula_with, verify_degree_row,
    DegreeMismatch, NeighborSet, VerifyReport, VerifyRow,
};
