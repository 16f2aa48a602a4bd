//! End-to-end acceptance checks. Runs without the libtest harness so that
//! timing criteria execute alone and every criterion prints one line.

use std::io::Cursor;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::Parser;
use maxseg::oracle::{
    brute_force_best, brute_force_partition, brute_force_shortest_best,
    is_decreasing_right_skew_partition,
};
use maxseg::solvers::{
    collect_blocks, level_cap, max_density_general, max_density_min_width, max_density_uniform,
};
use maxseg::{
    compute_bounds, solve, MaxWidthSweep, MinWidthSweep, Result, Segment, Solution, SolveRequest,
    WeightedSequence,
};
use maxseg_cli::instances::{self, Model};
use maxseg_cli::{run, Cli, EXIT_OK};
use rand::Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn same_density(got: &Result<Solution>, want: &Result<Segment>) -> bool {
    match (got, want) {
        (Ok(g), Ok(w)) => g.segment.density == w.density,
        (Err(a), Err(b)) => a == b,
        _ => false,
    }
}

/// Criterion-1 instance for `seed`: n in [1, 200], values in [0, 9],
/// `1 <= L <= U <= n`.
fn uniform_instance(seed: u64) -> (WeightedSequence, i64, i64) {
    let mut rng = instances::rng(seed);
    let n = rng.gen_range(1..=200);
    let seq = instances::sequence(&mut rng, Model::Uniform, n);
    let (l, u) = instances::width_bounds(&mut rng, seq.total_width());
    (seq, l, u)
}

fn general_instance(seed: u64) -> (WeightedSequence, i64, i64) {
    let mut rng = instances::rng(seed);
    let n = rng.gen_range(1..=200);
    let seq = instances::sequence(&mut rng, Model::General, n);
    let (l, u) = instances::width_bounds(&mut rng, seq.total_width());
    (seq, l, u)
}

fn oracle_uniform() -> Outcome {
    let ok = (1..=1000u64)
        .filter(|&seed| {
            let (s, l, u) = uniform_instance(seed);
            same_density(
                &solve(&SolveRequest::new(&s, l, Some(u))),
                &brute_force_best(&s, l, Some(u)),
            )
        })
        .count();
    outcome(ok == 1000, format!("{ok}/1000 exact density matches"))
}

fn oracle_general() -> Outcome {
    let ok = (1..=1000u64)
        .filter(|&seed| {
            let (s, l, u) = general_instance(10_000 + seed);
            same_density(
                &max_density_general(&s, l, u),
                &brute_force_best(&s, l, Some(u)),
            )
        })
        .count();
    outcome(ok == 1000, format!("{ok}/1000 exact density matches"))
}

fn oracle_min_width() -> Outcome {
    let ok = (1..=1000u64)
        .filter(|&seed| {
            let model = if seed % 2 == 0 {
                Model::Uniform
            } else {
                Model::General
            };
            let mut rng = instances::rng(20_000 + seed);
            let n = rng.gen_range(1..=200);
            let s = instances::sequence(&mut rng, model, n);
            let l = rng.gen_range(1..=s.total_width());
            same_density(
                &max_density_min_width(&s, l),
                &brute_force_best(&s, l, Some(s.total_width())),
            )
        })
        .count();
    outcome(ok == 1000, format!("{ok}/1000 exact density matches"))
}

fn partition_invariants() -> Outcome {
    let mut violations = 0usize;
    let mut checked = 0usize;
    for seed in 1..=500u64 {
        let mut rng = instances::rng(30_000 + seed);
        let model = if seed % 2 == 0 {
            Model::Uniform
        } else {
            Model::General
        };
        let n = rng.gen_range(2..=100);
        let s = instances::sequence(&mut rng, model, n);
        let b = compute_bounds(&s, 1, None).expect("unit bounds");
        let left = MinWidthSweep::new(&s, &b, 1, n).expect("sweep");
        let right = MaxWidthSweep::new(&s, &b, 1, n).expect("sweep");
        for k in 2..=n {
            // Suffix A(k, n) from p, prefix A(2, k) from q.
            let mut suffix = Vec::new();
            let mut at = k;
            while at <= n {
                suffix.push((at, left.pointer(at)));
                at = left.pointer(at) + 1;
            }
            let mut prefix = Vec::new();
            let mut at = k;
            while at > 1 {
                prefix.push((right.pointer(at), at));
                at = right.pointer(at) - 1;
            }
            prefix.reverse();
            checked += 2;
            if suffix != brute_force_partition(&s, k, n).expect("small")
                || !is_decreasing_right_skew_partition(&s, k, n, &suffix)
            {
                violations += 1;
            }
            if prefix != brute_force_partition(&s, 2, k).expect("small")
                || !is_decreasing_right_skew_partition(&s, 2, k, &prefix)
            {
                violations += 1;
            }
            let strictly_decreasing = |blocks: &[(usize, usize)]| {
                blocks.windows(2).all(|w| {
                    s.density(w[0].0, w[0].1).unwrap() > s.density(w[1].0, w[1].1).unwrap()
                })
            };
            if !strictly_decreasing(&suffix) || !strictly_decreasing(&prefix) {
                violations += 1;
            }
            for m in k + 1..=n {
                checked += 1;
                let (pk, pm) = (left.pointer(k), left.pointer(m));
                if m <= pk && pk < pm {
                    violations += 1;
                }
            }
        }
    }
    outcome(
        violations == 0,
        format!("{violations} violations in {checked} checks"),
    )
}

fn width_bound() -> Outcome {
    let mut violations = 0;
    for seed in 1..=500u64 {
        let mut rng = instances::rng(40_000 + seed);
        let n = rng.gen_range(1..=200);
        let s = instances::sequence(&mut rng, Model::Uniform, n);
        let l = rng.gen_range(1..=s.total_width());
        let best = brute_force_shortest_best(&s, l, None).expect("L <= n");
        if s.width(best.start, best.end) > 2 * l - 1 {
            violations += 1;
        }
    }
    outcome(
        violations == 0,
        format!("{violations} violations in 500 instances"),
    )
}

fn block_cover() -> Outcome {
    let n = 256;
    let (mut violations, mut intervals) = (0usize, 0usize);
    for beta in 0..=4u32 {
        let max_len = (1usize << (beta + 1)) - 1;
        for p in 1..=n {
            for q in p..=(p + max_len - 1).min(n) {
                intervals += 1;
                let blocks = collect_blocks(p, q, beta, n).expect("valid interval");
                let mut next = p;
                let mut ok = blocks.len() <= 2 * (beta as usize + 1);
                for b in &blocks {
                    ok &= b.start == next && b.level <= beta && b.start <= b.end;
                    next = b.end + 1;
                }
                ok &= next == q + 1;
                if !ok {
                    violations += 1;
                }
            }
        }
    }
    outcome(
        violations == 0,
        format!("{violations} violations over {intervals} intervals"),
    )
}

fn median_time(mut f: impl FnMut()) -> Duration {
    f();
    let mut times: Vec<_> = (0..5)
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed()
        })
        .collect();
    times.sort();
    times[2]
}

/// 5-run medians of `a` and `b`, with the runs interleaved so that drift in
/// machine load affects both equally.
fn paired_medians(mut a: impl FnMut(), mut b: impl FnMut()) -> (Duration, Duration) {
    a();
    b();
    let time = |f: &mut dyn FnMut()| {
        let t = Instant::now();
        f();
        t.elapsed()
    };
    let (mut ta, mut tb): (Vec<_>, Vec<_>) = (0..5).map(|_| (time(&mut a), time(&mut b))).unzip();
    ta.sort();
    tb.sort();
    (ta[2], tb[2])
}

fn linearity() -> Outcome {
    let (l, u_uniform) = (100, 5000);
    let u_general = l + 1023;
    let beta = level_cap(((u_general - l) + 1) as u64) as u64;
    let mut pass = true;
    let mut notes = Vec::new();
    for (name, model) in [
        ("l-only", Model::Uniform),
        ("uniform-lu", Model::Uniform),
        ("general-lu", Model::General),
    ] {
        let seqs: Vec<_> = [100_000usize, 200_000]
            .iter()
            .map(|&n| instances::sequence(&mut instances::rng(50_000 + n as u64), model, n))
            .collect();
        let run_once = |s: &WeightedSequence| match name {
            "l-only" => max_density_min_width(s, l),
            "uniform-lu" => max_density_uniform(s, l, u_uniform),
            _ => max_density_general(s, l, u_general),
        };
        for s in &seqs {
            let n = s.len() as u64;
            let sol = run_once(s).expect("feasible");
            let loops = sol.stats.counters.query_iterations();
            let bound = match name {
                "general-lu" => 4 * n * (beta + 1),
                _ => 4 * n,
            };
            pass &= loops <= bound;
            notes.push(format!(
                "{name} n={n} loops={loops} (bound {bound}, init {})",
                sol.stats.counters.init
            ));
        }
        let (t1, t2) = paired_medians(
            || {
                std::hint::black_box(run_once(&seqs[0]).expect("feasible"));
            },
            || {
                std::hint::black_box(run_once(&seqs[1]).expect("feasible"));
            },
        );
        let ratio = t2.as_secs_f64() / t1.as_secs_f64();
        pass &= (1.5..=2.6).contains(&ratio);
        notes.push(format!("{name} t(2n)/t(n)={ratio:.2} ({t2:?} / {t1:?})"));
    }
    outcome(pass, notes.join("; "))
}

fn desk_scale() -> Outcome {
    let mut rng = instances::rng(60_000);
    let s = instances::sequence(&mut rng, Model::Uniform, 1_000_000);
    let t = median_time(|| {
        std::hint::black_box(solve(&SolveRequest::new(&s, 100, Some(5000))).expect("feasible"));
    });
    outcome(
        t < Duration::from_secs(2),
        format!("median {t:?} for n=1e6, L=100, U=5000"),
    )
}

fn gc_planted() -> Outcome {
    let (len, region) = (100_000usize, 150usize);
    let cli = Cli::try_parse_from([
        "maxseg",
        "find",
        "--mapping",
        "gc",
        "--L",
        "100",
        "--U",
        "200",
    ])
    .expect("valid flags");
    let mut hits = 0;
    for seed in 1..=20u64 {
        let mut rng = instances::rng(70_000 + seed);
        let mut dna = instances::dna(&mut rng, len, 0.4);
        let at = rng.gen_range(0..=len - region);
        dna[at..at + region].copy_from_slice(&instances::dna(&mut rng, region, 0.95));
        let fasta = format!(">g{seed}\n{}\n", String::from_utf8(dna).expect("ascii"));
        let (mut out, mut err) = (Vec::new(), Vec::new());
        if run(&cli, Cursor::new(fasta.into_bytes()), &mut out, &mut err) != EXIT_OK {
            continue;
        }
        let out = String::from_utf8(out).expect("utf8");
        let fields: Vec<&str> = out.lines().nth(1).unwrap_or("").split('\t').collect();
        let (Ok(start), Ok(end)) = (fields[1].parse::<usize>(), fields[2].parse::<usize>()) else {
            continue;
        };
        let (lo, hi) = (at + 1, at + region);
        let overlap =
            end.min(hi).saturating_sub(start.max(lo)) + usize::from(start.max(lo) <= end.min(hi));
        if 2 * overlap >= region {
            hits += 1;
        }
    }
    outcome(
        hits >= 19,
        format!("{hits}/20 seeds overlap the planted region by >= 50%"),
    )
}

fn cross_agreement() -> Outcome {
    let (mut ok, mut total) = (0, 0);
    for seed in 1..=1000u64 {
        let (s, l, u) = uniform_instance(seed);
        if l >= u {
            continue;
        }
        total += 1;
        let a = max_density_uniform(&s, l, u).map(|x| x.segment.density);
        let b = max_density_general(&s, l, u).map(|x| x.segment.density);
        if a.is_ok() && a == b {
            ok += 1;
        }
    }
    outcome(
        ok == total,
        format!("{ok}/{total} instances with L < U agree"),
    )
}

fn main() -> ExitCode {
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let criteria: [Criterion; 10] = [
        ("oracle equivalence, uniform", oracle_uniform),
        ("oracle equivalence, general weights", oracle_general),
        ("oracle equivalence, minimum width only", oracle_min_width),
        ("partition invariants", partition_invariants),
        ("shortest optimum width bound", width_bound),
        ("aligned block cover", block_cover),
        ("linearity counters and time ratio", linearity),
        ("desk-scale performance", desk_scale),
        ("GC planted region", gc_planted),
        ("uniform and general agree", cross_agreement),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = check();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {verdict}: {name}: {} [{:.1?}]",
            k + 1,
            o.detail,
            t.elapsed()
        );
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {}/10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
