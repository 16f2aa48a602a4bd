use crate::bounds::compute_bounds;
use crate::error::{Error, Result};
use crate::sequence::WeightedSequence;
use crate::sweep_left::MinWidthSweep;

use super::{ties, Algorithm, Best, Solution, SolveStats};

/// Densest segment of width at least `min_width`, in O(n).
///
/// One sweep structure spans the whole sequence; left indices are fed to it
/// from the last feasible one down to 1.
pub fn max_density_min_width(seq: &WeightedSequence, min_width: i64) -> Result<Solution> {
    let n = seq.len();
    let bounds = compute_bounds(seq, min_width, None)?;
    let last = bounds.last_feasible().ok_or(Error::InfeasibleWidthWindow)?;
    let mut sweep = MinWidthSweep::new(seq, &bounds, 1, n)?;
    let mut best = Best::default();
    for i in (1..=last).rev() {
        let li = bounds.lower(i).expect("defined up to last_feasible");
        let g = if li == n { n } else { sweep.find_match(i)? };
        best.offer(seq.segment_at(i, g));
    }
    let segment = ties::first_optimal(seq, &bounds, best.get()?);
    Ok(Solution {
        segment,
        algorithm: Algorithm::MinWidth,
        stats: SolveStats {
            counters: sweep.counters(),
            structures: 1,
        },
    })
}
