//! Front end for the `maxseg` binary: segment search over FASTA/TSV input,
//! randomized verification against the brute-force oracle, and benchmarks.

pub mod bench;
pub mod find;
pub mod instances;
pub mod verify;

use std::io::{BufRead, Write};

use clap::{Parser, Subcommand};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "maxseg",
    version,
    about = "Maximum-density segments under width bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Densest segment of every input record.
    Find(find::FindArgs),
    /// Compare the solvers with the brute-force oracle on random instances.
    Verify(verify::VerifyArgs),
    /// Time a solver on random instances and print CSV.
    Bench(bench::BenchArgs),
}

/// Runs one parsed command and returns the process exit status.
pub fn run<R: BufRead, W: Write, E: Write>(cli: &Cli, stdin: R, out: &mut W, err: &mut E) -> i32 {
    match &cli.command {
        Command::Find(args) => find::cmd_find(args, stdin, out, err),
        Command::Verify(args) => verify::cmd_verify(args, out, err),
        Command::Bench(args) => bench::cmd_bench(args, out, err),
    }
}

/// Thread pool honoring `MAXSEG_THREADS` when set to a positive integer.
pub fn thread_pool() -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = std::env::var("MAXSEG_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        builder = builder.num_threads(n);
    }
    builder.build().expect("thread pool")
}
