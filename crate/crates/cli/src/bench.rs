use std::io::Write;
use std::time::Instant;

use clap::{Args, ValueEnum};
use maxseg::solvers::{
    max_density_general, max_density_min_width, max_density_min_width_baseline, max_density_uniform,
};
use maxseg::{solve, Error, Result, Solution, SolveRequest, WeightedSequence};

use crate::instances::{self, Model};
use crate::{EXIT_ERROR, EXIT_OK};

pub const CSV_HEADER: &str = "algo,n,L,U,wall_nanos,loop_iterations";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchAlgo {
    #[value(name = "l-only")]
    MinWidth,
    #[value(name = "uniform-lu")]
    Uniform,
    #[value(name = "general-lu")]
    General,
    #[value(name = "baseline-logl")]
    Baseline,
}

impl BenchAlgo {
    pub fn name(self) -> &'static str {
        match self {
            BenchAlgo::MinWidth => "l-only",
            BenchAlgo::Uniform => "uniform-lu",
            BenchAlgo::General => "general-lu",
            BenchAlgo::Baseline => "baseline-logl",
        }
    }

    pub fn model(self) -> Model {
        match self {
            BenchAlgo::General => Model::General,
            _ => Model::Uniform,
        }
    }

    fn uses_max_width(self) -> bool {
        matches!(self, BenchAlgo::Uniform | BenchAlgo::General)
    }
}

/// Parses sizes such as `1000`, `1e5` or `2.5e5`.
pub fn parse_size(s: &str) -> Result<usize> {
    let bad = || Error::InvalidNumber(format!("size {s:?}"));
    let v: f64 = s.trim().parse().map_err(|_| bad())?;
    if !(v >= 1.0 && v.fract() == 0.0 && v <= u32::MAX as f64) {
        return Err(bad());
    }
    Ok(v as usize)
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Comma-separated instance lengths, e.g. `1e5,2e5`.
    #[arg(long, value_delimiter = ',', value_parser = parse_size)]
    pub sizes: Vec<usize>,
    #[arg(long, value_enum, default_value = "l-only")]
    pub algo: BenchAlgo,
    /// Timed runs per size; the median is reported.
    #[arg(long, default_value_t = 5)]
    pub repeat: usize,
    #[arg(long = "L", default_value_t = 100)]
    pub min_width: i64,
    #[arg(long = "U", default_value_t = 5000)]
    pub max_width: i64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub algo: BenchAlgo,
    pub n: usize,
    pub min_width: i64,
    /// `None` for the unbounded solvers.
    pub max_width: Option<i64>,
    pub wall_nanos: u128,
    pub loop_iterations: u64,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        let u = self
            .max_width
            .map_or_else(|| "max".to_string(), |u| u.to_string());
        format!(
            "{},{},{},{},{},{}",
            self.algo.name(),
            self.n,
            self.min_width,
            u,
            self.wall_nanos,
            self.loop_iterations
        )
    }
}

/// Runs `algo` once. Bounds that the algorithm cannot take on a tiny
/// instance fall back to the dispatcher.
pub fn run_algo(
    algo: BenchAlgo,
    seq: &WeightedSequence,
    min_width: i64,
    max_width: i64,
) -> Result<Solution> {
    match algo {
        BenchAlgo::MinWidth => max_density_min_width(seq, min_width),
        BenchAlgo::Baseline => max_density_min_width_baseline(seq, min_width),
        BenchAlgo::Uniform if min_width < max_width.min(seq.total_width()) => {
            max_density_uniform(seq, min_width, max_width)
        }
        BenchAlgo::General => max_density_general(seq, min_width, max_width),
        BenchAlgo::Uniform => solve(&SolveRequest::new(seq, min_width, Some(max_width))),
    }
}

pub fn bench_one(args: &BenchArgs, n: usize) -> Result<BenchRow> {
    let mut rng = instances::rng(args.seed ^ n as u64);
    let seq = instances::sequence(&mut rng, args.algo.model(), n);
    let total = seq.total_width();
    let min_width = args.min_width.min(total);
    let max_width = args.max_width.max(min_width);

    let mut times = Vec::with_capacity(args.repeat.max(1));
    let mut iterations = 0;
    for _ in 0..args.repeat.max(1) {
        let t = Instant::now();
        let sol = run_algo(args.algo, &seq, min_width, max_width)?;
        times.push(t.elapsed().as_nanos());
        iterations = sol.stats.counters.query_iterations();
    }
    times.sort_unstable();
    Ok(BenchRow {
        algo: args.algo,
        n,
        min_width,
        max_width: args.algo.uses_max_width().then_some(max_width),
        wall_nanos: times[times.len() / 2],
        loop_iterations: iterations,
    })
}

pub fn cmd_bench<W: Write, E: Write>(args: &BenchArgs, out: &mut W, err: &mut E) -> i32 {
    let rows: Result<Vec<_>> = args.sizes.iter().map(|&n| bench_one(args, n)).collect();
    let rows = match rows {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_ERROR;
        }
    };
    let written = writeln!(out, "{CSV_HEADER}").and_then(|_| {
        rows.iter()
            .try_for_each(|r| writeln!(out, "{}", r.to_csv()))
    });
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: Io: {e}");
            EXIT_ERROR
        }
    }
}
