//! Brute-force adjacency oracle for the partition graph.
//!
//! Neighbors are produced literally from the move rule: take one unit off a
//! part occurrence (a size-1 donor vanishes) and put it on another existing
//! occurrence or on a fresh part of size one, then re-sort. The closed-form
//! degree never enters here, which is what makes [`verify_degree_formula`]
//! a real cross-check.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use crate::degree::degree;
use crate::partition::{enumerate_partitions, Block, Partition};

/// A partition together with its full neighbor set in the partition graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborSet {
    /// The center vertex.
    pub source: Partition,
    /// All adjacent partitions, deduplicated, in canonical order. The
    /// source itself is never a member.
    pub neighbors: BTreeSet<Partition>,
}

impl NeighborSet {
    /// Number of neighbors, i.e. the brute-force vertex degree.
    pub fn len(&self) -> usize {
        self.neighbors.len()
    }

    /// True when the vertex is isolated.
    pub fn is_empty(&self) -> bool {
        self.neighbors.is_empty()
    }
}

/// Generates every partition reachable from `p` by one unit transfer.
///
/// Moves are iterated over distinct (donor size, receiver size) pairs, with
/// size 0 standing for "create a new part of size one"; moves that land
/// back on `p` (such as swapping a unit between parts of sizes k+1 and k)
/// are dropped.
pub fn neighbors(p: &Partition) -> NeighborSet {
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for b in p.blocks() {
        counts.insert(b.size, b.mult);
    }
    let sizes: Vec<u64> = p.blocks().iter().map(|b| b.size).collect();
    let mut out = BTreeSet::new();
    for &donor in &sizes {
        for receiver in sizes.iter().copied().chain(std::iter::once(0)) {
            if receiver == donor && counts[&donor] < 2 {
                continue; // the receiving occurrence must be a second copy
            }
            let mut c = counts.clone();
            take_one(&mut c, donor);
            if donor > 1 {
                add_one(&mut c, donor - 1);
            }
            if receiver > 0 {
                take_one(&mut c, receiver);
            }
            add_one(&mut c, receiver + 1);
            let q = from_counts(&c);
            debug_assert_eq!(q.n(), p.n());
            if q != *p {
                out.insert(q);
            }
        }
    }
    NeighborSet {
        source: p.clone(),
        neighbors: out,
    }
}

/// `|neighbors(p)|`, the oracle side of the degree formula.
pub fn brute_degree(p: &Partition) -> u64 {
    neighbors(p).len() as u64
}

fn take_one(counts: &mut BTreeMap<u64, u64>, size: u64) {
    let m = counts.get_mut(&size).expect("donor/receiver size exists");
    *m -= 1;
    if *m == 0 {
        counts.remove(&size);
    }
}

fn add_one(counts: &mut BTreeMap<u64, u64>, size: u64) {
    *counts.entry(size).or_insert(0) += 1;
}

fn from_counts(counts: &BTreeMap<u64, u64>) -> Partition {
    let blocks: Vec<Block> = counts
        .iter()
        .rev()
        .map(|(&size, &mult)| Block { size, mult })
        .collect();
    Partition::from_blocks(blocks).expect("counts map is canonical by construction")
}

/// One disagreement between the closed form and the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMismatch {
    /// The offending partition.
    pub partition: Partition,
    /// Closed-form degree.
    pub formula: u64,
    /// Brute-force neighbor count.
    pub brute: u64,
}

/// Per-n slice of a verification run.
#[derive(Debug, Clone)]
pub struct VerifyRow {
    /// Total mass checked.
    pub n: u64,
    /// How many partitions of `n` were checked (all of them).
    pub checked: u64,
    /// Wall-clock time for this n.
    pub elapsed: Duration,
    /// Counterexamples, in enumeration order. Expected to be empty.
    pub mismatches: Vec<DegreeMismatch>,
}

/// Outcome of a formula-vs-oracle sweep, sorted by n.
#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    /// One row per checked n, ascending.
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    /// True when no counterexample was found.
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.mismatches.is_empty())
    }

    /// Total number of partitions checked.
    pub fn total_checked(&self) -> u64 {
        self.rows.iter().map(|r| r.checked).sum()
    }

    /// All counterexamples across the run.
    pub fn mismatches(&self) -> impl Iterator<Item = &DegreeMismatch> {
        self.rows.iter().flat_map(|r| r.mismatches.iter())
    }
}

/// Checks `brute_degree == degree` on every partition of every `n <= n_max`.
///
/// Returns a report rather than panicking, so callers can render failures.
pub fn verify_degree_formula(n_max: u64) -> VerifyReport {
    verify_degree_formula_with(n_max, degree)
}

/// Same sweep with an injectable closed-form side; the seam exists so tests
/// can prove that a wrong formula is actually caught.
pub fn verify_degree_formula_with(n_max: u64, formula: impl Fn(&Partition) -> u64) -> VerifyReport {
    VerifyReport {
        rows: (1..=n_max)
            .map(|n| verify_degree_row_with(n, &formula))
            .collect(),
    }
}

/// One-n slice of the sweep; callers fanning out across `n` in parallel
/// rebuild the report from these rows, sorted by `n`.
pub fn verify_degree_row(n: u64) -> VerifyRow {
    verify_degree_row_with(n, degree)
}

fn verify_degree_row_with(n: u64, formula: impl Fn(&Partition) -> u64) -> VerifyRow {
    let start = Instant::now();
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for q in enumerate_partitions(n) {
        checked += 1;
        let f = formula(&q);
        let b = brute_degree(&q);
        if f != b {
            mismatches.push(DegreeMismatch {
                partition: q,
                formula: f,
                brute: b,
            });
        }
    }
    VerifyRow {
        n,
        checked,
        elapsed: start.elapsed(),
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::from_parts(parts.iter().copied())
    }

    fn neighbor_vec(parts: &[u64]) -> Vec<Partition> {
        neighbors(&p(parts)).neighbors.into_iter().collect()
    }

    #[test]
    fn antenna_neighbors() {
        for n in 2..=12 {
            let single = neighbors(&p(&[n]));
            assert_eq!(single.neighbors, BTreeSet::from([p(&[n - 1, 1])]));
            assert_eq!(brute_degree(&p(&vec![1; n as usize])), 1);
        }
    }

    #[test]
    fn small_neighbor_sets() {
        assert_eq!(neighbor_vec(&[2, 1]), vec![p(&[1, 1, 1]), p(&[3])]);
        assert_eq!(neighbor_vec(&[1, 1]), vec![p(&[2])]);
        assert_eq!(neighbor_vec(&[2, 2]), vec![p(&[2, 1, 1]), p(&[3, 1])]);
    }

    #[test]
    fn staircase_brute_degree_matches_table() {
        assert_eq!(brute_degree(&p(&[5, 4, 3, 2, 1])), 20);
    }

    #[test]
    fn neighbor_relation_is_symmetric_and_mass_preserving() {
        for n in 1..=15 {
            let sets: Vec<NeighborSet> = enumerate_partitions(n).map(|q| neighbors(&q)).collect();
            let by_source: BTreeMap<Partition, &BTreeSet<Partition>> = sets
                .iter()
                .map(|s| (s.source.clone(), &s.neighbors))
                .collect();
            for s in &sets {
                assert!(!s.neighbors.contains(&s.source));
                for q in &s.neighbors {
                    assert_eq!(q.n(), n);
                    assert!(
                        by_source[q].contains(&s.source),
                        "asymmetric: {} / {q}",
                        s.source
                    );
                }
            }
        }
    }

    #[test]
    fn neighbors_commute_with_conjugation() {
        for n in 1..=15 {
            for q in enumerate_partitions(n) {
                let direct: BTreeSet<Partition> =
                    neighbors(&q.conjugate()).neighbors.into_iter().collect();
                let mapped: BTreeSet<Partition> = neighbors(&q)
                    .neighbors
                    .iter()
                    .map(Partition::conjugate)
                    .collect();
                assert_eq!(direct, mapped, "{q}");
            }
        }
    }

    #[test]
    fn verify_small_range_passes() {
        let report = verify_degree_formula(9);
        assert!(report.passed());
        // p(1) + ... + p(9) per the pentagonal recurrence.
        let expected: u128 = (1..=9)
            .map(|n| crate::count::partition_count(n).unwrap())
            .sum();
        assert_eq!(expected, 96);
        assert_eq!(u128::from(report.total_checked()), expected);
        assert_eq!(report.rows.len(), 9);
    }

    #[test]
    fn trivial_range_passes() {
        let report = verify_degree_formula(1);
        assert!(report.passed());
        assert_eq!(report.total_checked(), 1);
    }

    #[test]
    fn injected_fault_is_caught() {
        let target = p(&[3, 1]);
        let report = verify_degree_formula_with(6, |q| {
            let d = degree(q);
            if *q == target {
                d + 1
            } else {
                d
            }
        });
        assert!(!report.passed());
        let bad: Vec<_> = report.mismatches().collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].partition, target);
        assert_eq!(bad[0].formula, bad[0].brute + 1);
    }
}
