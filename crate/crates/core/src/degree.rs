//! The closed-form vertex degree of a partition in the partition graph.
//!
//! The degree decomposes into a quadratic support term `r(r-1)`, one bonus
//! per multiplicity exceeding one, and one bonus per gap exceeding one.

use crate::partition::Partition;

/// Vertex degree of `p` in the partition graph of its mass.
///
/// Computes `r(r-1) + #(m_i > 1) + #(g_i > 1)` directly from the block
/// form. The empty partition and `(1)` are isolated vertices of degree 0.
pub fn degree(p: &Partition) -> u64 {
    let blocks = p.blocks();
    let r = blocks.len() as u64;
    let mut d = r * r.saturating_sub(1);
    for i in 0..blocks.len() {
        if blocks[i].mult > 1 {
            d += 1;
        }
        let next = blocks.get(i + 1).map_or(0, |b| b.size);
        if blocks[i].size - next > 1 {
            d += 1;
        }
    }
    d
}

/// Itemized degree data: the support term and the per-level bonus flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBreakdown {
    /// The quadratic term `r(r-1)`.
    pub support_term: u64,
    /// `m_i > 1` per support level, top down.
    pub mult_bonus_flags: Vec<bool>,
    /// `g_i > 1` per gap index, top down.
    pub gap_bonus_flags: Vec<bool>,
    /// Total degree; equals the support term plus the active flags.
    pub degree: u64,
}

/// Splits the degree of `p` into its three contributions.
pub fn degree_breakdown(p: &Partition) -> DegreeBreakdown {
    let blocks = p.blocks();
    let r = blocks.len() as u64;
    let support_term = r * r.saturating_sub(1);
    let mut mult_bonus_flags = Vec::with_capacity(blocks.len());
    let mut gap_bonus_flags = Vec::with_capacity(blocks.len());
    for i in 0..blocks.len() {
        mult_bonus_flags.push(blocks[i].mult > 1);
        let next = blocks.get(i + 1).map_or(0, |b| b.size);
        gap_bonus_flags.push(blocks[i].size - next > 1);
    }
    let bonuses = mult_bonus_flags.iter().filter(|&&f| f).count()
        + gap_bonus_flags.iter().filter(|&&f| f).count();
    DegreeBreakdown {
        support_term,
        mult_bonus_flags,
        gap_bonus_flags,
        degree: support_term + bonuses as u64,
    }
}
