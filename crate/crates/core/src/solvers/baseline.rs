use crate::bounds::compute_bounds;
use crate::counters::SweepCounters;
use crate::error::{Error, Result};
use crate::sequence::WeightedSequence;

use super::{ties, Algorithm, Best, Solution, SolveStats};

/// Width-lower-bound search by binary lifting over right-skew pointer
/// chains, O(n log L). Benchmark baseline for the linear-time solver;
/// uniform input only.
///
/// For left index `i` the candidates are `L_i` and the ends of the blocks
/// in the partition chain starting at `L_i + 1`. Densities along the chain
/// rise then fall, and the shortest optimum lies within `L - 1` blocks, so
/// `ceil(log2 L)` lifting levels suffice.
pub fn max_density_min_width_baseline(seq: &WeightedSequence, min_width: i64) -> Result<Solution> {
    if !seq.is_uniform() {
        return Err(Error::NonUniformInput);
    }
    let n = seq.len();
    let bounds = compute_bounds(seq, min_width, None)?;
    let last = bounds.last_feasible().ok_or(Error::InfeasibleWidthWindow)?;
    let l_items = super::ceil_div(min_width, seq.unit()) as usize;
    let mut counters = SweepCounters::default();

    // pointer[k]: end of the first block of the partition of A(k, n).
    let mut pointer = vec![0usize; n + 2];
    for k in (1..=n).rev() {
        let mut p = k;
        while p < n && seq.density_at(k, p) <= seq.density_at(p + 1, pointer[p + 1]) {
            p = pointer[p + 1];
            counters.init += 1;
        }
        pointer[k] = p;
    }

    let levels = (usize::BITS - l_items.leading_zeros()).max(1) as usize;
    let sentinel = n + 1;
    let mut jump = vec![vec![sentinel; n + 2]; levels];
    for c in 1..=n {
        jump[0][c] = pointer[c] + 1;
    }
    for lv in 1..levels {
        for c in 1..=n {
            let mid = jump[lv - 1][c];
            jump[lv][c] = if mid == sentinel {
                sentinel
            } else {
                jump[lv - 1][mid]
            };
        }
    }

    let mut best = Best::default();
    for i in (1..=last).rev() {
        let li = bounds.lower(i).expect("defined up to last_feasible");
        // Merging the block at c strictly raises the density of A(i, c-1).
        let rises = |c: usize| c <= n && seq.density_at(i, c - 1) < seq.density_at(c, pointer[c]);
        let mut c = li + 1;
        let g = if !rises(c) {
            li
        } else {
            for lv in (0..levels).rev() {
                counters.bitonic += 1;
                let next = jump[lv][c];
                if rises(next) {
                    c = next;
                }
            }
            pointer[c]
        };
        best.offer(seq.segment_at(i, g));
    }

    let segment = ties::first_optimal(seq, &bounds, best.get()?);
    Ok(Solution {
        segment,
        algorithm: Algorithm::Baseline,
        stats: SolveStats {
            counters,
            structures: 1,
        },
    })
}
