#![allow(dead_code)]

use maxseg::{WeightedItem, WeightedSequence};
use proptest::prelude::*;

pub fn uniform_seq(max_n: usize, lo: i64, hi: i64) -> impl Strategy<Value = WeightedSequence> {
    prop::collection::vec(lo..=hi, 1..=max_n).prop_map(|v| WeightedSequence::uniform(&v).unwrap())
}

pub fn weighted_seq(
    max_n: usize,
    lo: i64,
    hi: i64,
    max_w: i64,
) -> impl Strategy<Value = WeightedSequence> {
    prop::collection::vec((lo..=hi, 1..=max_w), 1..=max_n).prop_map(|v| {
        let items: Vec<_> = v
            .into_iter()
            .map(|(a, w)| WeightedItem::new(a, w))
            .collect();
        WeightedSequence::new(&items, 0).unwrap()
    })
}

/// Sequence plus width bounds `1 <= L <= U <= total width`.
pub fn with_bounds(
    seq: impl Strategy<Value = WeightedSequence>,
) -> impl Strategy<Value = (WeightedSequence, i64, i64)> {
    seq.prop_flat_map(|s| {
        let total = s.total_width();
        (Just(s), 1..=total).prop_flat_map(move |(s, l)| (Just(s), Just(l), l..=total))
    })
}

/// Largest endpoint in `lo..=hi` maximizing `μ(i, ·)`, by direct summation.
pub fn largest_best_endpoint(seq: &WeightedSequence, i: usize, lo: usize, hi: usize) -> usize {
    let mut best: Option<(i64, i64, usize)> = None;
    for j in lo..=hi {
        let (s, w) = (i..=j)
            .map(|k| seq.item(k))
            .fold((0i64, 0i64), |(s, w), it| (s + it.value, w + it.weight));
        let better = match best {
            None => true,
            Some((bs, bw, _)) => (s as i128) * (bw as i128) >= (bs as i128) * (w as i128),
        };
        if better {
            best = Some((s, w, j));
        }
    }
    best.unwrap().2
}
