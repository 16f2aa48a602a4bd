//! Brute-force reference implementations for differential testing.
//!
//! Nothing here shares code with the sweep structures or solvers. Segment
//! sums are accumulated item by item rather than read from prefix sums.

use crate::error::{Error, Result};
use crate::sequence::{DensityValue, Segment, WeightedSequence};

pub const DEFAULT_CAP: usize = 10_000;
pub const DEFAULT_PARTITION_CAP: usize = 2_000;

/// All-pairs search for the densest segment with `min_width <= width <= max_width`.
///
/// Ties go to the smallest start, then the smallest end.
pub fn brute_force_best(
    seq: &WeightedSequence,
    min_width: i64,
    max_width: Option<i64>,
) -> Result<Segment> {
    brute_force_best_capped(seq, min_width, max_width, DEFAULT_CAP)
}

pub fn brute_force_best_capped(
    seq: &WeightedSequence,
    min_width: i64,
    max_width: Option<i64>,
    cap: usize,
) -> Result<Segment> {
    best_by(seq, min_width, max_width, cap, |cand, best| {
        cand.density > best.density
    })
}

/// Among maximum-density segments of width in bounds, the shortest one
/// (ties by smallest start).
pub fn brute_force_shortest_best(
    seq: &WeightedSequence,
    min_width: i64,
    max_width: Option<i64>,
) -> Result<Segment> {
    best_by(seq, min_width, max_width, DEFAULT_CAP, |cand, best| {
        cand.density > best.density
            || (cand.density == best.density && cand.density.width < best.density.width)
    })
}

fn best_by(
    seq: &WeightedSequence,
    min_width: i64,
    max_width: Option<i64>,
    cap: usize,
    better: impl Fn(&Segment, &Segment) -> bool,
) -> Result<Segment> {
    let n = seq.len();
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    if min_width <= 0 || max_width.is_some_and(|u| u < min_width) {
        return Err(Error::InvalidWidthBounds);
    }
    let items: Vec<_> = seq.items().collect();
    let mut best: Option<Segment> = None;
    for i in 0..n {
        let (mut sum, mut width) = (0i64, 0i64);
        for (j, it) in items.iter().enumerate().skip(i) {
            sum += it.value;
            width += it.weight;
            if max_width.is_some_and(|u| width > u) {
                break;
            }
            if width < min_width {
                continue;
            }
            let cand = Segment {
                start: i + 1,
                end: j + 1,
                density: DensityValue { sum, width },
            };
            if best.as_ref().is_none_or(|b| better(&cand, b)) {
                best = Some(cand);
            }
        }
    }
    best.ok_or(Error::InfeasibleWidthWindow)
}

/// `A(i, k)` is right-skew when every split `i <= j < k` has
/// `μ(i, j) <= μ(j+1, k)`.
pub fn is_right_skew(seq: &WeightedSequence, i: usize, k: usize) -> bool {
    (i..k).all(|j| direct_density(seq, i, j) <= direct_density(seq, j + 1, k))
}

fn direct_density(seq: &WeightedSequence, i: usize, j: usize) -> DensityValue {
    let (sum, width) = (i..=j)
        .map(|k| seq.item(k))
        .fold((0, 0), |(s, w), it| (s + it.value, w + it.weight));
    DensityValue { sum, width }
}

/// Decreasingly right-skew partition of `A(x, y)` as `(start, end)` blocks,
/// built by repeatedly peeling the longest right-skew prefix.
pub fn brute_force_partition(
    seq: &WeightedSequence,
    x: usize,
    y: usize,
) -> Result<Vec<(usize, usize)>> {
    seq.check_segment(x, y)?;
    if y - x > DEFAULT_PARTITION_CAP {
        return Err(Error::CapExceeded {
            size: y - x,
            cap: DEFAULT_PARTITION_CAP,
        });
    }
    let mut blocks = Vec::new();
    let mut s = x;
    while s <= y {
        let e = (s..=y)
            .rev()
            .find(|&e| is_right_skew(seq, s, e))
            .expect("single items are right-skew");
        blocks.push((s, e));
        s = e + 1;
    }
    Ok(blocks)
}

/// Whether `blocks` is a decreasingly right-skew partition of `A(x, y)`.
pub fn is_decreasing_right_skew_partition(
    seq: &WeightedSequence,
    x: usize,
    y: usize,
    blocks: &[(usize, usize)],
) -> bool {
    let contiguous = blocks.first().is_some_and(|b| b.0 == x)
        && blocks.last().is_some_and(|b| b.1 == y)
        && blocks.windows(2).all(|w| w[0].1 + 1 == w[1].0)
        && blocks.iter().all(|b| b.0 <= b.1);
    contiguous
        && blocks.iter().all(|&(s, e)| is_right_skew(seq, s, e))
        && blocks
            .windows(2)
            .all(|w| direct_density(seq, w[0].0, w[0].1) > direct_density(seq, w[1].0, w[1].1))
}
