use std::fmt;
use std::io::Write;
use std::str::FromStr;

use clap::Args;
use maxseg::oracle::brute_force_best;
use maxseg::{solve, Error, Result, Segment, SolveRequest, WeightedSequence};
use rand::Rng;

use crate::instances::{self, Model};
use crate::{EXIT_ERROR, EXIT_OK};

/// How `--L-U` picks the width bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundsMode {
    Random,
    Fixed(i64, i64),
}

impl FromStr for BoundsMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "random" {
            return Ok(BoundsMode::Random);
        }
        let bad = || Error::InvalidNumber(format!("expected random or fixed:L,U, got {s:?}"));
        let (l, u) = s
            .strip_prefix("fixed:")
            .and_then(|r| r.split_once(','))
            .ok_or_else(bad)?;
        let l = l.trim().parse().map_err(|_| bad())?;
        let u = u.trim().parse().map_err(|_| bad())?;
        Ok(BoundsMode::Fixed(l, u))
    }
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Number of random instances.
    #[arg(long, default_value_t = 1000)]
    pub seeds: u64,
    /// Largest instance length.
    #[arg(long, default_value_t = 200)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value = "uniform")]
    pub model: Model,
    /// `random` or `fixed:L,U`.
    #[arg(long = "L-U", default_value = "random")]
    pub bounds: BoundsMode,
    /// Seed of the first instance; instance k uses `seed + k`.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub seed: u64,
    pub seq: WeightedSequence,
    pub min_width: i64,
    pub max_width: i64,
}

impl Instance {
    /// Instance generated by `seed`; reproducible on its own.
    pub fn generate(seed: u64, args: &VerifyArgs) -> Instance {
        let mut rng = instances::rng(seed);
        let n = rng.gen_range(1..=args.max_n.max(1));
        let seq = instances::sequence(&mut rng, args.model, n);
        let (min_width, max_width) = match args.bounds {
            BoundsMode::Random => instances::width_bounds(&mut rng, seq.total_width()),
            BoundsMode::Fixed(l, u) => (l, u),
        };
        Instance {
            seed,
            seq,
            min_width,
            max_width,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub seed: u64,
    pub n: usize,
    pub min_width: i64,
    pub max_width: i64,
    pub solver: Result<Segment>,
    pub oracle: Result<Segment>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |r: &Result<Segment>| match r {
            Ok(s) => format!("({}, {}) density {}", s.start, s.end, s.density),
            Err(e) => e.to_string(),
        };
        write!(
            f,
            "seed {} (n={}, L={}, U={}): solver {} vs oracle {}",
            self.seed,
            self.n,
            self.min_width,
            self.max_width,
            show(&self.solver),
            show(&self.oracle)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub passed: u64,
    pub total: u64,
    pub first_failure: Option<Counterexample>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.passed == self.total
    }
}

/// Densities must match exactly; both sides failing with the same error also
/// counts as agreement.
fn agrees(solver: &Result<Segment>, oracle: &Result<Segment>) -> bool {
    match (solver, oracle) {
        (Ok(s), Ok(o)) => s.density == o.density,
        (Err(a), Err(b)) => a == b,
        _ => false,
    }
}

/// Runs the differential check with an arbitrary solver under test.
pub fn verify_with<F>(args: &VerifyArgs, solver: F) -> VerifyReport
where
    F: Fn(&SolveRequest<'_>) -> Result<Segment>,
{
    let mut report = VerifyReport {
        passed: 0,
        total: args.seeds,
        first_failure: None,
    };
    for k in 0..args.seeds {
        let inst = Instance::generate(args.seed.wrapping_add(k), args);
        let req = SolveRequest::new(&inst.seq, inst.min_width, Some(inst.max_width));
        let got = solver(&req);
        let want = brute_force_best(&inst.seq, inst.min_width, Some(inst.max_width));
        if agrees(&got, &want) {
            report.passed += 1;
        } else if report.first_failure.is_none() {
            report.first_failure = Some(Counterexample {
                seed: inst.seed,
                n: inst.seq.len(),
                min_width: inst.min_width,
                max_width: inst.max_width,
                solver: got,
                oracle: want,
            });
        }
    }
    report
}

pub fn verify(args: &VerifyArgs) -> VerifyReport {
    verify_with(args, |req| solve(req).map(|s| s.segment))
}

pub fn write_report<W: Write>(report: &VerifyReport, out: &mut W) -> std::io::Result<()> {
    writeln!(out, "{}/{} pass", report.passed, report.total)?;
    if let Some(c) = &report.first_failure {
        writeln!(out, "first counterexample: {c}")?;
        writeln!(
            out,
            "reproduce with the same flags plus --seeds 1 --seed {}",
            c.seed
        )?;
    }
    Ok(())
}

pub fn cmd_verify<W: Write, E: Write>(args: &VerifyArgs, out: &mut W, err: &mut E) -> i32 {
    let report = verify(args);
    if let Err(e) = write_report(&report, out) {
        let _ = writeln!(err, "error: Io: {e}");
        return EXIT_ERROR;
    }
    if report.all_pass() {
        EXIT_OK
    } else {
        EXIT_ERROR
    }
}
