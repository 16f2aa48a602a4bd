//! Tie normalization.
//!
//! Given the optimal density `S/W`, find the first feasible segment (by
//! start, then end) reaching it. With `c_k = W*a_k - S*w_k` and prefix sums
//! `C`, `μ(i, j) >= S/W` iff `C[j] >= C[i-1]`. Since `[L_i, U_i]` slides
//! monotonically, a max-deque over `C` answers each left index in O(1)
//! amortized time.

use std::collections::VecDeque;

use crate::bounds::FeasibilityBounds;
use crate::sequence::{Segment, WeightedSequence};

pub(crate) fn first_optimal(
    seq: &WeightedSequence,
    bounds: &FeasibilityBounds,
    found: Segment,
) -> Segment {
    let Some(last) = bounds.last_feasible() else {
        return found;
    };
    let (s, w) = (found.density.sum as i128, found.density.width as i128);
    let pv = seq.prefix_values();
    let pw = seq.prefix_weights();
    let c = |j: usize| w * pv[j] as i128 - s * pw[j] as i128;

    let mut window: VecDeque<usize> = VecDeque::new();
    let mut pushed = 0usize;
    for i in 1..=last.min(found.start) {
        let lo = bounds.lower(i).expect("defined up to last_feasible");
        let hi = bounds.upper(i);
        if hi < lo {
            continue;
        }
        while pushed < hi {
            pushed += 1;
            let v = c(pushed);
            while window.back().is_some_and(|&b| c(b) <= v) {
                window.pop_back();
            }
            window.push_back(pushed);
        }
        while window.front().is_some_and(|&f| f < lo) {
            window.pop_front();
        }
        let base = c(i - 1);
        if window.front().is_some_and(|&f| c(f) >= base) {
            let end = (lo..=hi)
                .find(|&j| c(j) >= base)
                .expect("window maximum reaches the base");
            return seq.segment_at(i, end);
        }
    }
    found
}
