use crate::bounds::compute_bounds;
use crate::error::{Error, Result};
use crate::sequence::WeightedSequence;
use crate::sweep_left::MinWidthSweep;

use super::blocks::{level_cap, BlockCover, BlockId};
use super::{over_pieces, ties, Algorithm, Best, Solution, SolveStats};

/// Densest segment with `min_width <= width <= max_width` when every weight
/// is at least one unit, in O(n + n log(U - L + 1)).
///
/// With weights >= 1 the feasible endpoints `[L_i, U_i]` of any left index
/// number at most `U - L + 1`, so they are covered by O(β) aligned dyadic
/// blocks of level at most `β = floor(log2(U - L + 1))`. Each block carries
/// its own lower-bound sweep; queries on a block arrive in decreasing `i`
/// because the outer loop is descending. Items wider than `max_width` split
/// the sequence into independently solved pieces.
pub fn max_density_general(
    seq: &WeightedSequence,
    min_width: i64,
    max_width: i64,
) -> Result<Solution> {
    if min_width <= 0 || max_width < min_width {
        return Err(Error::InvalidWidthBounds);
    }
    let unit = seq.unit();
    if let Some(k) = (1..=seq.len()).find(|&k| seq.width(k, k) < unit) {
        return Err(Error::WeightBelowOne { index: k });
    }
    if (1..=seq.len()).any(|k| seq.width(k, k) > max_width) {
        return over_pieces(seq, Some(max_width), |piece| {
            max_density_general(piece, min_width, max_width)
        });
    }
    let n = seq.len();
    let bounds = compute_bounds(seq, min_width, Some(max_width))?;
    let last = bounds.last_feasible().ok_or(Error::InfeasibleWidthWindow)?;
    let span = ((max_width - min_width) / unit) as u64 + 1;
    let max_level = level_cap(span);

    // Sweeps are built on first use; a block only exists once some left
    // index needs it.
    let mut levels: Vec<Vec<Option<MinWidthSweep<'_>>>> = (0..=max_level)
        .map(|k| {
            let count = n.div_ceil(1usize << k);
            std::iter::repeat_with(|| None).take(count).collect()
        })
        .collect();

    let mut best = Best::default();
    for i in (1..=last).rev() {
        let li = bounds.lower(i).expect("defined up to last_feasible");
        let ui = bounds.upper(i);
        if ui < li {
            continue;
        }
        debug_assert!(((ui - li + 1) as u64) <= span);
        for block in BlockCover::new(li, ui, max_level) {
            let g = if block.start == block.end {
                block.end
            } else {
                let slot = &mut levels[block.level as usize][block.ordinal];
                if slot.is_none() {
                    let BlockId { start, end, .. } = block;
                    *slot = Some(MinWidthSweep::new(seq, &bounds, start, end)?);
                }
                slot.as_mut().expect("initialized above").find_match(i)?
            };
            best.offer(seq.segment_at(i, g));
        }
    }

    let segment = ties::first_optimal(seq, &bounds, best.get()?);
    let mut stats = SolveStats::default();
    for sweep in levels.iter().flatten().flatten() {
        stats.counters += sweep.counters();
        stats.structures += 1;
    }
    Ok(Solution {
        segment,
        algorithm: Algorithm::General,
        stats,
    })
}
