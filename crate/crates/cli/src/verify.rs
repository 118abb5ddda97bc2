//! The `verify` subcommand: four independent cross-checks of the closed
//! forms against oracles, with a machine-readable failure list on any
//! mismatch.

use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use plandscape_core::{
    enumerate_max_support_stratum, enumerate_partitions, golden, landscape_row,
    max_degree_set_full, rho, verify_degree_row, Partition, VerifyReport,
};

use crate::with_pool;

/// One recorded verification failure.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    /// Which check produced it.
    pub check: &'static str,
    /// The mass at which it occurred.
    pub n: u64,
    /// Human-readable description of the mismatch.
    pub detail: String,
}

/// Outcome of one check over the whole range.
#[derive(Debug, Clone)]
pub struct CheckResult {
    /// Stable check name (also used in failure records).
    pub name: &'static str,
    /// Short description of what was covered, e.g. a partition count.
    pub coverage: String,
    /// Counterexamples; empty means the check passed.
    pub failures: Vec<Failure>,
}

impl CheckResult {
    /// True when no counterexample was found.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All checks of one `verify` run.
#[derive(Debug, Clone)]
pub struct VerifySummary {
    /// Largest n checked.
    pub max_n: u64,
    /// Results in execution order.
    pub checks: Vec<CheckResult>,
}

impl VerifySummary {
    /// True when every check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    /// All failures across all checks.
    pub fn failures(&self) -> Vec<&Failure> {
        self.checks.iter().flat_map(|c| c.failures.iter()).collect()
    }
}

/// The process exit code a summary maps to: 0 all-pass, 1 otherwise.
pub fn summary_exit_code(summary: &VerifySummary) -> u8 {
    if summary.passed() {
        0
    } else {
        1
    }
}

/// Runs all checks up to `max_n`, printing one summary line per check and,
/// on failure, a JSON failure list.
pub fn run_verify(max_n: u64, jobs: Option<u64>, w: &mut dyn Write) -> io::Result<VerifySummary> {
    let summary = with_pool(jobs, || VerifySummary {
        max_n,
        checks: vec![
            check_degree_oracle(max_n),
            check_support_principle(max_n),
            check_stratum_agreement(max_n),
            check_published_table(max_n),
        ],
    });
    for check in &summary.checks {
        let status = if check.passed() {
            "PASS".to_string()
        } else {
            format!("FAIL ({} counterexamples)", check.failures.len())
        };
        writeln!(
            w,
            "{} (n <= {}): {} [{}]",
            check.name, max_n, status, check.coverage
        )?;
    }
    if summary.passed() {
        writeln!(w, "verify: all {} checks passed", summary.checks.len())?;
    } else {
        let failed = summary.checks.iter().filter(|c| !c.passed()).count();
        writeln!(
            w,
            "verify: {failed} of {} checks failed",
            summary.checks.len()
        )?;
        serde_json::to_writer(&mut *w, &summary.failures())?;
        writeln!(w)?;
    }
    Ok(summary)
}

/// (i) Closed-form degree vs brute-force neighbor counts, every partition.
fn check_degree_oracle(max_n: u64) -> CheckResult {
    let mut rows: Vec<_> = (1..=max_n).into_par_iter().map(verify_degree_row).collect();
    rows.sort_unstable_by_key(|r| r.n);
    let report = VerifyReport { rows };
    let failures = report
        .mismatches()
        .map(|m| Failure {
            check: "degree-oracle",
            n: m.partition.n(),
            detail: format!(
                "{}: formula {}, brute force {}",
                m.partition, m.formula, m.brute
            ),
        })
        .collect();
    CheckResult {
        name: "degree formula vs brute-force oracle",
        coverage: format!("{} partitions", report.total_checked()),
        failures,
    }
}

/// (ii) Every full-enumeration extremizer has support size rho(n).
fn check_support_principle(max_n: u64) -> CheckResult {
    let failures: Vec<Failure> = (1..=max_n)
        .into_par_iter()
        .flat_map_iter(|n| {
            let r = rho(n);
            max_degree_set_full(n)
                .into_iter()
                .filter(move |q| q.support_size() as u64 != r)
                .map(move |q| Failure {
                    check: "support-principle",
                    n,
                    detail: format!(
                        "extremal {} has support size {}, expected {}",
                        q,
                        q.support_size(),
                        r
                    ),
                })
                .collect::<Vec<_>>()
                .into_iter()
        })
        .collect();
    let mut failures = failures;
    failures.sort_by_key(|f| f.n);
    CheckResult {
        name: "maximal-support principle",
        coverage: format!("{max_n} extremal sets"),
        failures,
    }
}

/// (iii) The surplus-encoding enumerator agrees with filtering the full
/// enumeration by support size.
fn check_stratum_agreement(max_n: u64) -> CheckResult {
    let mut failures: Vec<Failure> = (1..=max_n)
        .into_par_iter()
        .filter_map(|n| {
            let r = rho(n) as usize;
            let direct: Vec<Partition> = {
                let mut v: Vec<_> = enumerate_max_support_stratum(n).collect();
                v.sort_unstable();
                v
            };
            let filtered: Vec<Partition> = {
                let mut v: Vec<_> = enumerate_partitions(n)
                    .filter(|q| q.support_size() == r)
                    .collect();
                v.sort_unstable();
                v
            };
            (direct != filtered).then(|| Failure {
                check: "stratum-agreement",
                n,
                detail: format!(
                    "stratum enumeration yields {} partitions, filtered enumeration {}",
                    direct.len(),
                    filtered.len()
                ),
            })
        })
        .collect();
    failures.sort_by_key(|f| f.n);
    CheckResult {
        name: "stratum vs filtered enumeration",
        coverage: format!("{max_n} strata"),
        failures,
    }
}

/// (iv) Computed landscape rows match the published table where the ranges
/// overlap.
fn check_published_table(max_n: u64) -> CheckResult {
    let upto = max_n.min(60);
    let reference = golden::table_rows();
    let mut failures: Vec<Failure> = (1..=upto)
        .into_par_iter()
        .filter_map(|n| {
            let computed = landscape_row(n);
            let expected = reference[(n - 1) as usize];
            (computed != expected).then(|| Failure {
                check: "published-table",
                n,
                detail: format!("computed {computed:?}, published {expected:?}"),
            })
        })
        .collect();
    failures.sort_by_key(|f| f.n);
    CheckResult {
        name: "published table rows",
        coverage: format!("{upto} rows"),
        failures,
    }
}
