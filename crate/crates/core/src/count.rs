//! The partition function p(n) via Euler's pentagonal-number recurrence.
//!
//! This is the independent completeness oracle for the enumeration stream:
//! it shares no code with [`crate::partition::enumerate_partitions`].

use crate::error::{Error, Result};

/// Computes p(n) exactly with checked 128-bit arithmetic.
///
/// Uses the recurrence over generalized pentagonal numbers
/// `p(i) = sum_k (-1)^{k+1} [p(i - k(3k-1)/2) + p(i - k(3k+1)/2)]`.
/// Overflow is reported, never wrapped; p(n) fits in 128 bits for
/// n up to roughly 1400.
pub fn partition_count(n: u64) -> Result<u128> {
    let len = usize::try_from(n).map_err(|_| Error::CountOverflow(n))? + 1;
    let mut table: Vec<i128> = Vec::with_capacity(len);
    table.push(1);
    for i in 1..len {
        let mut acc: i128 = 0;
        let mut k: usize = 1;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let positive = k % 2 == 1;
            let mut term = table[i - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                term = term
                    .checked_add(table[i - g2])
                    .ok_or(Error::CountOverflow(n))?;
            }
            acc = if positive {
                acc.checked_add(term).ok_or(Error::CountOverflow(n))?
            } else {
                acc.checked_sub(term).ok_or(Error::CountOverflow(n))?
            };
            k += 1;
        }
        table.push(acc);
    }
    let value = *table.last().expect("table is nonempty");
    debug_assert!(value > 0);
    u128::try_from(value).map_err(|_| Error::CountOverflow(n))
}
