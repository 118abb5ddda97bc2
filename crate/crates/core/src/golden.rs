//! The published degree-data table for `1 <= n <= 60`, embedded as the
//! reference the `verify` machinery and the golden tests compare against.

use crate::analytics::LandscapeRow;

/// The reference table as CSV, byte-for-byte what `table --from 1 --to 60`
/// must print: header `n,rho,nu,delta,m_delta,m_delta_sc,s`, one row per n,
/// LF line endings.
pub const TABLE_CSV: &str = include_str!("golden/table_n1_60.csv");

/// The reference table parsed into rows, ascending in n from 1 to 60.
pub fn table_rows() -> Vec<LandscapeRow> {
    TABLE_CSV
        .lines()
        .skip(1)
        .map(|line| {
            let mut fields = line
                .split(',')
                .map(|f| f.parse::<u64>().expect("numeric field"));
            let mut next = || fields.next().expect("seven fields per row");
            LandscapeRow {
                n: next(),
                rho: next(),
                nu: next(),
                delta: next(),
                m_delta: next(),
                m_delta_sc: next(),
                s: next(),
            }
        })
        .collect()
}
