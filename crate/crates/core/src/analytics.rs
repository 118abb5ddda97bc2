//! Global degree statistics per `n`: histograms, spectra, the extremal set
//! and its conjugation orbits, and the seven-column landscape rows.
//!
//! Extremal data (`m_delta`, `m_delta_sc`) comes from the maximal-support
//! stratum, which is sound because every extremizer lives there; spectrum
//! and histogram data need all strata and go through full enumeration.

use std::collections::{BTreeMap, BTreeSet};

use crate::degree::degree;
use crate::extremal::{max_degree, ExtremalContext};
use crate::partition::{enumerate_partitions, Partition};
use crate::stratum::enumerate_max_support_stratum;

/// The map `d -> H_n(d)` of degree-layer sizes for one `n`. Only degrees
/// that occur are stored; the counts sum to p(n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeHistogram {
    /// The partitioned integer.
    pub n: u64,
    /// Layer sizes keyed by degree, ascending.
    pub counts: BTreeMap<u64, u64>,
}

impl DegreeHistogram {
    /// Number of partitions counted; equals p(n).
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Smallest occurring degree.
    pub fn min_degree(&self) -> Option<u64> {
        self.counts.keys().next().copied()
    }

    /// Largest occurring degree; equals the maximal degree of the graph.
    pub fn max_degree(&self) -> Option<u64> {
        self.counts.keys().next_back().copied()
    }
}

/// Counts every partition of `n` by degree, over a full enumeration.
pub fn degree_histogram(n: u64) -> DegreeHistogram {
    debug_assert!(n >= 1);
    let mut counts = BTreeMap::new();
    for q in enumerate_partitions(n) {
        *counts.entry(degree(&q)).or_insert(0) += 1;
    }
    DegreeHistogram { n, counts }
}

/// The sorted distinct degree values occurring among partitions of `n`.
pub fn spectrum(n: u64) -> Vec<u64> {
    degree_histogram(n).counts.into_keys().collect()
}

/// All partitions of `n` of maximal degree.
///
/// Scans only the maximal-support stratum and keeps the closed-form
/// maximum; [`max_degree_set_full`] is the slow reference route.
pub fn max_degree_set(n: u64) -> BTreeSet<Partition> {
    let delta = max_degree(n).delta;
    enumerate_max_support_stratum(n)
        .filter(|q| degree(q) == delta)
        .collect()
}

/// Reference route for the extremal set: filter a full enumeration on the
/// observed maximum degree. Kept independent of the closed form and of the
/// stratum encoding so the fast path has something honest to agree with.
pub fn max_degree_set_full(n: u64) -> BTreeSet<Partition> {
    let mut best = 0;
    let mut set = BTreeSet::new();
    for q in enumerate_partitions(n) {
        let d = degree(&q);
        match d.cmp(&best) {
            std::cmp::Ordering::Greater => {
                best = d;
                set.clear();
                set.insert(q);
            }
            std::cmp::Ordering::Equal => {
                set.insert(q);
            }
            std::cmp::Ordering::Less => {}
        }
    }
    set
}

/// How a conjugation orbit of extremizers sits relative to the axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitKind {
    /// A fixed point of conjugation; orbit size 1.
    SelfConjugate,
    /// A partition and its distinct conjugate; orbit size 2.
    ConjugatePair,
}

/// One conjugation orbit inside the extremal set, named by its
/// lexicographically larger member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalOrbit {
    /// The lexicographically larger orbit member (itself if self-conjugate).
    pub representative: Partition,
    /// Self-conjugate or a proper pair.
    pub kind: OrbitKind,
    /// 1 or 2.
    pub orbit_size: usize,
}

/// Groups the extremal set of `n` into conjugation orbits, listed in
/// descending lexicographic order of representative.
pub fn extremal_orbits(n: u64) -> Vec<ExtremalOrbit> {
    let set = max_degree_set(n);
    let mut orbits = Vec::new();
    let mut seen: BTreeSet<Partition> = BTreeSet::new();
    for q in &set {
        if seen.contains(q) {
            continue;
        }
        let conj = q.conjugate();
        if conj == *q {
            orbits.push(ExtremalOrbit {
                representative: q.clone(),
                kind: OrbitKind::SelfConjugate,
                orbit_size: 1,
            });
        } else {
            debug_assert!(
                set.contains(&conj),
                "extremal set must be conjugation-closed"
            );
            orbits.push(ExtremalOrbit {
                representative: conj.clone().max(q.clone()),
                kind: OrbitKind::ConjugatePair,
                orbit_size: 2,
            });
            seen.insert(conj);
        }
    }
    orbits.sort_unstable_by(|a, b| b.representative.cmp(&a.representative));
    orbits
}

/// The seven-column landscape record for one `n`, matching the published
/// degree-data table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LandscapeRow {
    /// The partitioned integer.
    pub n: u64,
    /// Maximal support size.
    pub rho: u64,
    /// Surplus over the triangular number.
    pub nu: u64,
    /// Maximal degree.
    pub delta: u64,
    /// Size of the extremal set.
    pub m_delta: u64,
    /// Self-conjugate extremizers.
    pub m_delta_sc: u64,
    /// Spectrum size (distinct degree values).
    pub s: u64,
}

/// Computes the full landscape row for `n`.
///
/// The `delta` column comes from the closed form; the observed enumeration
/// maximum is asserted equal to it, so a disagreement aborts loudly instead
/// of publishing a wrong row.
///
/// # Panics
///
/// If the closed-form maximal degree disagrees with the enumerated maximum
/// (an implementation bug, never expected).
pub fn landscape_row(n: u64) -> LandscapeRow {
    let ExtremalContext {
        n: _,
        rho,
        nu,
        delta,
    } = max_degree(n);
    let hist = degree_histogram(n);
    assert_eq!(
        hist.max_degree(),
        Some(delta),
        "closed-form maximal degree disagrees with enumeration at n = {n}; this is a bug"
    );
    let extremal = max_degree_set(n);
    let m_delta = extremal.len() as u64;
    let m_delta_sc = extremal.iter().filter(|q| q.is_self_conjugate()).count() as u64;
    LandscapeRow {
        n,
        rho,
        nu,
        delta,
        m_delta,
        m_delta_sc,
        s: hist.counts.len() as u64,
    }
}

/// The near-extremal count `U_n(c)`: partitions of degree at least
/// `delta_n - c`.
pub fn upper_tail(n: u64, c: u64) -> u64 {
    let threshold = max_degree(n).delta.saturating_sub(c);
    enumerate_partitions(n)
        .filter(|q| degree(q) >= threshold)
        .count() as u64
}
