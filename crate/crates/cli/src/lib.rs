//! Command-line reporting for the partition-graph degree landscape.
//!
//! Subcommands reproduce the published tables (`table`, `extremal`), emit
//! histogram and spectrum data as CSV (`hist`, `spectrum`), print extremal
//! witnesses (`witness`), and cross-check the closed forms against
//! brute-force oracles (`verify`).
//!
//! Output contracts are frozen: CSV is comma-separated, unquoted, LF-ended,
//! header always present; JSON partitions are flat part lists. Identical
//! inputs produce byte-identical output at any `--jobs` level.
//!
//! Exit codes: 0 success, 1 verification or I/O failure, 2 usage error.

mod report;
mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use verify::{run_verify, summary_exit_code, CheckResult, Failure, VerifySummary};

/// Top-level argument parser.
#[derive(Debug, Parser)]
#[command(
    name = "plandscape",
    version,
    about = "Degree landscape of the partition graph"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Output format for tabular commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Comma-separated values with a header line.
    Csv,
    /// Pretty-printed JSON.
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit one landscape row per n: n, rho, nu, delta, m_delta, m_delta_sc, s.
    Table(TableArgs),
    /// Emit the degree histogram of one n, zero-filled up to the maximal degree.
    Hist(HistArgs),
    /// Emit the extremal conjugacy orbits of one n as JSON.
    Extremal(ExtremalArgs),
    /// Cross-check closed forms against brute-force oracles and the published table.
    Verify(VerifyArgs),
    /// Print a canonical maximal-degree witness for one n as JSON.
    Witness(WitnessArgs),
    /// Emit the sorted distinct degree values of one n as CSV.
    Spectrum(SpectrumArgs),
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// First n of the range (inclusive).
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub from: u64,
    /// Last n of the range (inclusive).
    #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
    pub to: u64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to a file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Worker threads (default: available cores).
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u64).range(1..=4096))]
    pub jobs: Option<u64>,
}

#[derive(Debug, Args)]
pub struct HistArgs {
    /// The partitioned integer.
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to a file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    /// The partitioned integer.
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Write to a file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest n to check exhaustively.
    #[arg(long = "max-n", default_value_t = 25, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: u64,
    /// Worker threads (default: available cores).
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u64).range(1..=4096))]
    pub jobs: Option<u64>,
    /// Write to a file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    /// The partitioned integer.
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Write to a file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    /// The partitioned integer.
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Write to a file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

/// Runs one parsed invocation and maps the outcome to an exit code.
pub fn run(cli: Cli) -> ExitCode {
    let outcome = match cli.command {
        Command::Table(args) => {
            if args.from > args.to {
                return usage_error(&format!(
                    "--from must not exceed --to (got {}..{})",
                    args.from, args.to
                ));
            }
            if args.to > 60 {
                eprintln!(
                    "note: rows above n = 60 enumerate all p(n) partitions each; \
                     expect runtime to grow steeply with n"
                );
            }
            with_output(args.out.as_deref(), |w| report::write_table(&args, w))
        }
        Command::Hist(args) => with_output(args.out.as_deref(), |w| report::write_hist(&args, w)),
        Command::Extremal(args) => {
            with_output(args.out.as_deref(), |w| report::write_extremal(&args, w))
        }
        Command::Witness(args) => {
            with_output(args.out.as_deref(), |w| report::write_witness(&args, w))
        }
        Command::Spectrum(args) => {
            with_output(args.out.as_deref(), |w| report::write_spectrum(&args, w))
        }
        Command::Verify(args) => {
            let mut code = 0;
            let io_result = with_output(args.out.as_deref(), |w| {
                let summary = run_verify(args.max_n, args.jobs, w)?;
                code = verify::summary_exit_code(&summary);
                Ok(())
            });
            match io_result {
                Ok(()) => return ExitCode::from(code),
                Err(e) => Err(e),
            }
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("plandscape: {e}");
            ExitCode::from(1)
        }
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("plandscape: usage error: {msg}");
    ExitCode::from(2)
}

fn with_output<F>(out: Option<&Path>, f: F) -> io::Result<()>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            f(&mut w)?;
            w.flush()
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            f(&mut w)?;
            w.flush()
        }
    }
}

/// Runs `f` inside a rayon pool of the requested width, or on the global
/// pool when no width is given.
pub(crate) fn with_pool<R: Send>(jobs: Option<u64>, f: impl FnOnce() -> R + Send) -> R {
    match jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k as usize)
            .build()
            .expect("failed to build worker pool")
            .install(f),
        None => f(),
    }
}
