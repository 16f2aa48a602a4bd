use crate::bounds::compute_bounds;
use crate::error::{Error, Result};
use crate::sequence::WeightedSequence;
use crate::sweep_left::MinWidthSweep;
use crate::sweep_right::MaxWidthSweep;

use super::{ceil_div, ties, Algorithm, Best, Solution, SolveStats};

/// Densest segment with `min_width <= width <= max_width` on uniform input,
/// in O(n).
///
/// The sequence is cut into blocks of `d = U - L` items (in item counts).
/// For left index `i` the feasible endpoints `[L_i, U_i]` meet exactly two
/// consecutive blocks: the part inside the block holding `L_i` is searched
/// with a lower-bound sweep, the rest with an upper-bound sweep on the next
/// block.
pub fn max_density_uniform(
    seq: &WeightedSequence,
    min_width: i64,
    max_width: i64,
) -> Result<Solution> {
    if !seq.is_uniform() {
        return Err(Error::NonUniformInput);
    }
    if min_width <= 0 || max_width < min_width {
        return Err(Error::InvalidWidthBounds);
    }
    let n = seq.len();
    let unit = seq.unit();
    let lo = ceil_div(min_width, unit) as usize;
    let hi = ((max_width / unit) as usize).min(n);
    if lo > n {
        return Err(Error::InfeasibleWidthWindow);
    }
    if lo >= hi {
        return Err(Error::InvalidWidthBounds);
    }
    let bounds = compute_bounds(seq, lo as i64 * unit, Some(hi as i64 * unit))?;
    let last = bounds.last_feasible().ok_or(Error::InfeasibleWidthWindow)?;

    let d = hi - lo;
    let block_count = n.div_ceil(d);
    let block_range = |z: usize| (z * d + 1, ((z + 1) * d).min(n));
    let mut left = Vec::with_capacity(block_count);
    let mut right = Vec::with_capacity(block_count);
    for z in 0..block_count {
        let (x, y) = block_range(z);
        left.push(MinWidthSweep::new(seq, &bounds, x, y)?);
        right.push(MaxWidthSweep::new(seq, &bounds, x, y)?);
    }

    let mut best = Best::default();
    for i in (1..=last).rev() {
        let li = bounds.lower(i).expect("defined up to last_feasible");
        let ui = bounds.upper(i);
        let z = (li - 1) / d;
        let (x, y) = block_range(z);
        debug_assert!(x <= li && li <= y);
        let g_left = if li == y { li } else { left[z].find_match(i)? };
        let mut g = g_left;
        if z + 1 < block_count && ui > y {
            let g_right = right[z + 1].find_match(i)?;
            if seq.density_at(i, g_right) > seq.density_at(i, g_left) {
                g = g_right;
            }
        }
        best.offer(seq.segment_at(i, g));
    }

    let segment = ties::first_optimal(seq, &bounds, best.get()?);
    let mut stats = SolveStats {
        structures: 2 * block_count,
        ..SolveStats::default()
    };
    for s in &left {
        stats.counters += s.counters();
    }
    for s in &right {
        stats.counters += s.counters();
    }
    Ok(Solution {
        segment,
        algorithm: Algorithm::Uniform,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::DensityValue;

    #[test]
    fn examples() {
        let s = WeightedSequence::uniform(&[1, 0, 1, 1, 0, 1, 1, 1]).unwrap();
        let seg = max_density_uniform(&s, 3, 4).unwrap().segment;
        assert_eq!((seg.start, seg.end), (6, 8));
        assert_eq!(seg.density, DensityValue::new(1, 1).unwrap());

        let s = WeightedSequence::uniform(&[7; 9]).unwrap();
        let seg = max_density_uniform(&s, 2, 5).unwrap().segment;
        assert_eq!(seg.density, DensityValue::new(7, 1).unwrap());
        assert_eq!((seg.start, seg.end), (1, 2));

        let s = WeightedSequence::uniform(&[1, 3, 9, 2, 4]).unwrap();
        let seg = max_density_uniform(&s, 1, 5).unwrap().segment;
        assert_eq!((seg.start, seg.end), (3, 3));
    }

    #[test]
    fn rejects() {
        let s = WeightedSequence::from_pairs(&[(1, 1), (1, 2)]).unwrap();
        assert_eq!(
            max_density_uniform(&s, 1, 2).unwrap_err(),
            Error::NonUniformInput
        );
        let s = WeightedSequence::uniform(&[1, 2, 3]).unwrap();
        assert_eq!(
            max_density_uniform(&s, 2, 2).unwrap_err(),
            Error::InvalidWidthBounds
        );
        assert_eq!(
            max_density_uniform(&s, 4, 6).unwrap_err(),
            Error::InfeasibleWidthWindow
        );
    }
}
