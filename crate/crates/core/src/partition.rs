//! Canonical integer partitions in block form, their enumeration, and
//! conjugation.
//!
//! A partition is stored as strictly decreasing distinct part sizes with
//! multiplicities. The flat weakly-decreasing part list is a derived view;
//! every formula in this crate is stated on the block form.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// One block of a partition: a distinct part size and how often it occurs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    /// Distinct part size, `> 0`.
    pub size: u64,
    /// Multiplicity, `>= 1`.
    pub mult: u64,
}

/// An integer partition of `n` in canonical block form.
///
/// Invariants: block sizes are strictly decreasing and positive, all
/// multiplicities are at least one, and the weighted sum of the blocks
/// equals `n`. The empty block list is the unique partition of zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: u64,
    blocks: Vec<Block>,
}

impl Partition {
    /// The unique partition of zero.
    pub fn empty() -> Self {
        Partition {
            n: 0,
            blocks: Vec::new(),
        }
    }

    /// Builds a partition from arbitrary part values; zeros are ignored and
    /// the rest is sorted into canonical form.
    pub fn from_parts<I: IntoIterator<Item = u64>>(parts: I) -> Self {
        let mut flat: Vec<u64> = parts.into_iter().filter(|&p| p > 0).collect();
        flat.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_flat_desc(&flat)
    }

    /// Builds a partition from a block list, validating the canonical form.
    pub fn from_blocks(blocks: Vec<Block>) -> Result<Self> {
        let mut n: u64 = 0;
        for (i, b) in blocks.iter().enumerate() {
            if b.size == 0 {
                return Err(Error::InvalidBlocks("part size must be positive".into()));
            }
            if b.mult == 0 {
                return Err(Error::InvalidBlocks("multiplicity must be positive".into()));
            }
            if i > 0 && blocks[i - 1].size <= b.size {
                return Err(Error::InvalidBlocks(format!(
                    "sizes must be strictly decreasing ({} then {})",
                    blocks[i - 1].size,
                    b.size
                )));
            }
            n += b.size * b.mult;
        }
        Ok(Partition { n, blocks })
    }

    /// Groups a weakly-decreasing, zero-free part slice into blocks.
    pub(crate) fn from_flat_desc(flat: &[u64]) -> Self {
        let mut blocks: Vec<Block> = Vec::new();
        let mut n = 0;
        for &p in flat {
            debug_assert!(p > 0);
            n += p;
            match blocks.last_mut() {
                Some(b) if b.size == p => b.mult += 1,
                _ => blocks.push(Block { size: p, mult: 1 }),
            }
        }
        Partition { n, blocks }
    }

    /// Total mass (the partitioned integer).
    pub fn n(&self) -> u64 {
        self.n
    }

    /// True for the partition of zero.
    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The blocks, largest part size first.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of distinct part sizes.
    pub fn support_size(&self) -> usize {
        self.blocks.len()
    }

    /// Number of parts counted with multiplicity.
    pub fn part_count(&self) -> u64 {
        self.blocks.iter().map(|b| b.mult).sum()
    }

    /// The flat weakly-decreasing part list.
    pub fn parts(&self) -> impl Iterator<Item = u64> + '_ {
        self.blocks
            .iter()
            .flat_map(|b| std::iter::repeat_n(b.size, b.mult as usize))
    }

    /// Ordered support data: support size, gap vector, multiplicity vector.
    ///
    /// Gaps are `g_i = L_i - L_{i+1}` with the sentinel `L_{r+1} = 0`, so
    /// they telescope to the largest part. The empty partition has no
    /// support profile.
    pub fn support_profile(&self) -> Result<SupportProfile> {
        if self.blocks.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let r = self.blocks.len();
        let mut gaps = Vec::with_capacity(r);
        let mut mults = Vec::with_capacity(r);
        for i in 0..r {
            let next = self.blocks.get(i + 1).map_or(0, |b| b.size);
            gaps.push(self.blocks[i].size - next);
            mults.push(self.blocks[i].mult);
        }
        Ok(SupportProfile { r, gaps, mults })
    }

    /// The conjugate partition (transpose of the Ferrers diagram).
    ///
    /// In block form the transpose is direct: the cumulative multiplicity
    /// `M_i = m_1 + ... + m_i` becomes a distinct part size with
    /// multiplicity `g_i`, read bottom-up.
    pub fn conjugate(&self) -> Partition {
        let r = self.blocks.len();
        let mut out = Vec::with_capacity(r);
        let mut cum = 0;
        for i in 0..r {
            cum += self.blocks[i].mult;
            let next = self.blocks.get(i + 1).map_or(0, |b| b.size);
            out.push(Block {
                size: cum,
                mult: self.blocks[i].size - next,
            });
        }
        out.reverse();
        Partition {
            n: self.n,
            blocks: out,
        }
    }

    /// True iff the partition equals its conjugate.
    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }
}

/// Lexicographic order on the flat weakly-decreasing part lists; a proper
/// prefix sorts before its extensions. This is the order behind both the
/// enumeration stream (descending) and the choice of orbit representatives.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.blocks.iter().map(|b| (b.size, b.mult));
        let mut b = other.blocks.iter().map(|b| (b.size, b.mult));
        let (mut ca, mut cb) = (a.next(), b.next());
        loop {
            match (ca, cb) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((sa, ma)), Some((sb, mb))) => {
                    if sa != sb {
                        return sa.cmp(&sb);
                    }
                    // Equal sizes tie on the next min(ma, mb) flat entries.
                    match ma.cmp(&mb) {
                        Ordering::Equal => {
                            ca = a.next();
                            cb = b.next();
                        }
                        Ordering::Less => {
                            ca = a.next();
                            cb = Some((sb, mb - ma));
                        }
                        Ordering::Greater => {
                            ca = Some((sa, ma - mb));
                            cb = b.next();
                        }
                    }
                }
            }
        }
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let mut first = true;
        for p in self.parts() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        write!(f, ")")
    }
}

/// Derived local data of a nonempty partition: support size `r`, the gap
/// vector, and the multiplicity vector. Rebuilding blocks from the profile
/// reproduces the source partition exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportProfile {
    /// Support size (number of distinct part sizes).
    pub r: usize,
    /// Gaps `g_i = L_i - L_{i+1}`, `L_{r+1} = 0`; they sum to `L_1`.
    pub gaps: Vec<u64>,
    /// Multiplicities `m_i >= 1`.
    pub mults: Vec<u64>,
}

impl SupportProfile {
    /// Reconstructs the partition described by this profile.
    pub fn to_partition(&self) -> Partition {
        let mut blocks = Vec::with_capacity(self.r);
        let mut size: u64 = self.gaps.iter().sum();
        for i in 0..self.r {
            blocks.push(Block {
                size,
                mult: self.mults[i],
            });
            size -= self.gaps[i];
        }
        Partition::from_blocks(blocks).expect("profile data reconstructs a canonical partition")
    }
}

/// Streams every partition of `n` exactly once, in descending lexicographic
/// order of the flat part list, starting at `(n)` and ending at `(1^n)`.
/// Constant memory per item; nothing is materialized.
pub fn enumerate_partitions(n: u64) -> Partitions {
    let buf = if n == 0 { Vec::new() } else { vec![n] };
    Partitions { buf, done: false }
}

/// Iterator over all partitions of a fixed integer. See
/// [`enumerate_partitions`].
pub struct Partitions {
    buf: Vec<u64>,
    done: bool,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let item = Partition::from_flat_desc(&self.buf);
        self.done = !advance_desc(&mut self.buf);
        Some(item)
    }
}

/// Steps a flat part list to its successor in descending lexicographic
/// order. Returns false when the current list is the last one (all ones).
fn advance_desc(buf: &mut Vec<u64>) -> bool {
    let Some(j) = buf.iter().rposition(|&p| p > 1) else {
        return false;
    };
    // Shrink the pivot by one and redistribute the freed mass greedily:
    // the largest tail under the new pivot is the lex-largest successor.
    let d = buf[j] - 1;
    let rem = 1 + (buf.len() - 1 - j) as u64;
    buf.truncate(j);
    buf.push(d);
    buf.extend(std::iter::repeat_n(d, (rem / d) as usize));
    if !rem.is_multiple_of(d) {
        buf.push(rem % d);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::from_parts(parts.iter().copied())
    }

    #[test]
    fn empty_partition_is_the_only_partition_of_zero() {
        let all: Vec<_> = enumerate_partitions(0).collect();
        assert_eq!(all, vec![Partition::empty()]);
        assert_eq!(all[0].n(), 0);
        assert_eq!(all[0].support_size(), 0);
    }

    #[test]
    fn values_transfer_between_threads() {
        fn check<T: Send + Sync>() {}
        check::<Partition>();
        check::<SupportProfile>();
        check::<Partitions>();
    }

    #[test]
    fn partitions_of_four_in_descending_lex_order() {
        let all: Vec<_> = enumerate_partitions(4).collect();
        let expected = [
            p(&[4]),
            p(&[3, 1]),
            p(&[2, 2]),
            p(&[2, 1, 1]),
            p(&[1, 1, 1, 1]),
        ];
        assert_eq!(all, expected);
    }

    #[test]
    fn enumeration_is_strictly_descending_and_mass_preserving() {
        for n in 0..=20 {
            let mut prev: Option<Partition> = None;
            for q in enumerate_partitions(n) {
                assert_eq!(q.n(), n);
                assert_eq!(q.parts().sum::<u64>(), n);
                if let Some(ref pr) = prev {
                    assert!(pr > &q, "not strictly descending at n={n}: {pr} then {q}");
                }
                prev = Some(q);
            }
        }
    }

    #[test]
    fn block_form_is_canonical() {
        let q = p(&[5, 3, 3, 1, 1, 1]);
        assert_eq!(
            q.blocks(),
            &[
                Block { size: 5, mult: 1 },
                Block { size: 3, mult: 2 },
                Block { size: 1, mult: 3 },
            ]
        );
        assert_eq!(q.n(), 14);
        assert_eq!(q.part_count(), 6);
        assert_eq!(q.to_string(), "(5,3,3,1,1,1)");
    }

    #[test]
    fn from_blocks_rejects_non_canonical_input() {
        let bad = vec![Block { size: 3, mult: 1 }, Block { size: 3, mult: 1 }];
        assert!(matches!(
            Partition::from_blocks(bad),
            Err(Error::InvalidBlocks(_))
        ));
        let bad = vec![Block { size: 0, mult: 1 }];
        assert!(matches!(
            Partition::from_blocks(bad),
            Err(Error::InvalidBlocks(_))
        ));
        let bad = vec![Block { size: 2, mult: 0 }];
        assert!(matches!(
            Partition::from_blocks(bad),
            Err(Error::InvalidBlocks(_))
        ));
    }

    #[test]
    fn support_profile_examples() {
        let sp = p(&[5, 4, 3, 2, 1]).support_profile().unwrap();
        assert_eq!(sp.r, 5);
        assert_eq!(sp.gaps, vec![1, 1, 1, 1, 1]);
        assert_eq!(sp.mults, vec![1, 1, 1, 1, 1]);

        let sp = p(&[8, 5, 3, 2, 1, 1]).support_profile().unwrap();
        assert_eq!(sp.r, 5);
        assert_eq!(sp.gaps, vec![3, 2, 1, 1, 1]);
        assert_eq!(sp.mults, vec![1, 1, 1, 1, 2]);

        let sp = p(&[7]).support_profile().unwrap();
        assert_eq!(
            (sp.r, sp.gaps.clone(), sp.mults.clone()),
            (1, vec![7], vec![1])
        );

        assert_eq!(
            Partition::empty().support_profile(),
            Err(Error::EmptyPartition)
        );
    }

    #[test]
    fn support_profile_round_trips() {
        for n in 1..=18 {
            for q in enumerate_partitions(n) {
                let sp = q.support_profile().unwrap();
                assert_eq!(sp.gaps.iter().sum::<u64>(), q.blocks()[0].size);
                assert_eq!(sp.to_partition(), q);
            }
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[7]).conjugate(), p(&[1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(p(&[5, 4, 3, 2, 1]).conjugate(), p(&[5, 4, 3, 2, 1]));
        assert_eq!(p(&[6, 4, 3, 2, 1]).conjugate(), p(&[5, 4, 3, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn self_conjugacy_examples() {
        assert!(p(&[5, 4, 3, 2, 1]).is_self_conjugate());
        assert!(!p(&[6, 4, 3, 2, 1]).is_self_conjugate());
        assert!(p(&[6, 4, 3, 2, 1, 1]).is_self_conjugate());
    }

    #[test]
    fn conjugation_is_an_involution() {
        for n in 0..=22 {
            for q in enumerate_partitions(n) {
                assert_eq!(q.conjugate().conjugate(), q);
            }
        }
    }

    #[test]
    fn self_conjugate_count_matches_distinct_odd_parts() {
        // Classical bijection: self-conjugate partitions of n correspond to
        // partitions of n into distinct odd parts. Count the latter with an
        // independent recursion over the largest odd part allowed.
        fn distinct_odd(n: u64, largest: u64) -> u64 {
            if n == 0 {
                return 1;
            }
            let mut total = 0;
            let mut part = if largest.is_multiple_of(2) {
                largest - 1
            } else {
                largest
            };
            while part >= 1 {
                if part <= n {
                    total += if part >= 3 {
                        distinct_odd(n - part, part - 2)
                    } else {
                        u64::from(n == 1)
                    };
                }
                if part < 3 {
                    break;
                }
                part -= 2;
            }
            total
        }
        for n in 1..=24 {
            let observed = enumerate_partitions(n)
                .filter(|q| q.is_self_conjugate())
                .count() as u64;
            assert_eq!(observed, distinct_odd(n, n), "n = {n}");
        }
    }

    #[test]
    fn lexicographic_order_prefers_longer_on_prefix_ties() {
        assert!(p(&[5, 4, 3, 2, 1, 1]) > p(&[5, 4, 3, 2, 1]));
        assert!(p(&[8, 5, 3, 2, 1, 1]) > p(&[6, 4, 3, 2, 2, 1, 1, 1]));
        assert!(p(&[7, 5, 4, 2, 1, 1]) > p(&[7, 5, 3, 2, 2, 1]));
        assert!(p(&[7, 5, 3, 2, 2, 1]) > p(&[7, 5, 3, 2, 1, 1, 1]));
        assert!(Partition::empty() < p(&[1]));
    }
}
