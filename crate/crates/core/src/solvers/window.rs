use crate::error::{Error, Result};
use crate::sequence::{Segment, WeightedSequence};

use super::{Algorithm, Best, Solution, SolveStats};

/// The `L = U` case on uniform input: every window of exactly `width / unit`
/// items. Ties go to the smallest start.
pub fn sliding_window(seq: &WeightedSequence, width: i64) -> Result<Solution> {
    if width <= 0 {
        return Err(Error::InvalidWidthBounds);
    }
    if !seq.is_uniform() {
        return Err(Error::NonUniformInput);
    }
    let unit = seq.unit();
    let n = seq.len();
    if width % unit != 0 || (width / unit) as usize > n {
        return Err(Error::InfeasibleWidthWindow);
    }
    let k = (width / unit) as usize;
    let mut best = Best::default();
    for i in 1..=n + 1 - k {
        best.offer(seq.segment_at(i, i + k - 1));
    }
    let segment: Segment = best.get()?;
    Ok(Solution {
        segment,
        algorithm: Algorithm::SlidingWindow,
        stats: SolveStats::default(),
    })
}
