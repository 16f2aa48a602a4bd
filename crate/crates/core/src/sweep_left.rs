//! Sweep structure for the width-lower-bound query.
//!
//! Built over a range `[x, y]`, it answers "which right endpoint in `[x, y]`
//! maximizes `μ(i, ·)` subject to `w(i, ·) >= L`" for left indices `i`
//! presented in strictly decreasing order. Answers never exceed the previous
//! answer: a query returns `min(m, m0)` where `m` is the true best endpoint
//! and `m0` the previous return (initially `y`). Whenever the true best is
//! skipped, an earlier query already found a segment at least as dense, so
//! taking the maximum over all queries still yields the optimum.
//!
//! State:
//! - `p[k]` for `k` in `[x+1, y]`: `A(k, p[k])` is the leftmost block of the
//!   decreasingly right-skew partition of `A(k, y)`.
//! - `S[k]`: ascending list of all `j` with `p[j] == k`.
//! - cursors `ℓ` (lower) and `u` (upper), both non-increasing.
//! - bridge `b`: the block of the partition of `A(ℓ, y)` containing `u`
//!   starts at `b`.
//!
//! Amortized cost is O(y - x + 1) for initialization plus O(1) per query.

use std::io::{self, Write};

use crate::bounds::FeasibilityBounds;
use crate::counters::SweepCounters;
use crate::error::{Error, Result};
use crate::sequence::WeightedSequence;

#[derive(Debug, Clone)]
pub struct MinWidthSweep<'a> {
    seq: &'a WeightedSequence,
    bounds: &'a FeasibilityBounds,
    x: usize,
    y: usize,
    // p[k - x - 1]
    pointer: Vec<usize>,
    // CSR layout of the S lists: bucket k is bucket_items[bucket_start[k-x-1]..bucket_start[k-x]]
    bucket_start: Vec<usize>,
    bucket_items: Vec<usize>,
    lower: usize,
    upper: usize,
    bridge: usize,
    last_query: Option<usize>,
    counters: SweepCounters,
}

impl<'a> MinWidthSweep<'a> {
    pub fn new(
        seq: &'a WeightedSequence,
        bounds: &'a FeasibilityBounds,
        x: usize,
        y: usize,
    ) -> Result<Self> {
        seq.check_segment(x.max(1), y)?;
        if x == 0 {
            return Err(Error::IndexOutOfRange {
                start: x,
                end: y,
                len: seq.len(),
            });
        }
        let m = y - x;
        let mut pointer = vec![0usize; m];
        let mut counters = SweepCounters::default();
        for i in (x + 1..=y).rev() {
            let mut p = i;
            while p < y {
                let next = pointer[p - x];
                if seq.density_at(i, p) > seq.density_at(p + 1, next) {
                    break;
                }
                p = next;
                counters.init += 1;
            }
            pointer[i - x - 1] = p;
        }

        let mut bucket_start = vec![0usize; m + 1];
        for &p in &pointer {
            bucket_start[p - x] += 1;
        }
        for k in 0..m {
            bucket_start[k + 1] += bucket_start[k];
        }
        // Filling back to front leaves every bucket in ascending order.
        let mut bucket_items = vec![0usize; m];
        let mut fill = bucket_start.clone();
        for j in (x + 1..=y).rev() {
            let slot = pointer[j - x - 1] - x;
            fill[slot] -= 1;
            bucket_items[fill[slot]] = j;
        }

        Ok(MinWidthSweep {
            seq,
            bounds,
            x,
            y,
            pointer,
            bucket_start,
            bucket_items,
            lower: y,
            upper: y,
            bridge: y,
            last_query: None,
            counters,
        })
    }

    pub fn range(&self) -> (usize, usize) {
        (self.x, self.y)
    }

    /// `p[k]` for `k` in `[x+1, y]`.
    pub fn pointer(&self, k: usize) -> usize {
        self.pointer[k - self.x - 1]
    }

    /// `S[k]` for `k` in `[x+1, y]`.
    pub fn bucket(&self, k: usize) -> &[usize] {
        let s = k - self.x - 1;
        &self.bucket_items[self.bucket_start[s]..self.bucket_start[s + 1]]
    }

    pub fn lower_cursor(&self) -> usize {
        self.lower
    }

    pub fn upper_cursor(&self) -> usize {
        self.upper
    }

    pub fn bridge(&self) -> usize {
        self.bridge
    }

    pub fn counters(&self) -> SweepCounters {
        self.counters
    }

    /// Best right endpoint for left index `i`, capped by the previous answer.
    pub fn find_match(&mut self, i: usize) -> Result<usize> {
        if let Some(prev) = self.last_query {
            if i >= prev {
                return Err(Error::QueryOrderViolation {
                    previous: prev,
                    got: i,
                });
            }
        }
        let li = self
            .bounds
            .lower(i)
            .filter(|&li| li <= self.y)
            .ok_or(Error::InfeasibleQuery { index: i })?;
        self.last_query = Some(i);
        let floor = self.x.max(li);
        if floor >= self.y {
            // Only `y` itself is admissible; `u` has never moved.
            return Ok(self.upper);
        }

        while self.lower > floor + 1 {
            self.lower -= 1;
            self.counters.cursor += 1;
            if self.pointer(self.lower) >= self.upper {
                self.bridge = self.lower;
            }
        }

        let seq = self.seq;
        while self.upper >= self.lower
            && seq.density_at(i, self.bridge - 1) > seq.density_at(i, self.pointer(self.bridge))
        {
            self.counters.bitonic += 1;
            self.upper = self.bridge - 1;
            if self.upper >= self.lower {
                self.bridge = self.next_bridge();
            }
        }
        Ok(self.upper)
    }

    // Minimum k in S[u] with k >= ℓ. Each list is scanned at most once over
    // the structure's lifetime because u strictly decreases.
    fn next_bridge(&mut self) -> usize {
        let s = self.upper - self.x - 1;
        let lower = self.lower;
        let mut found = None;
        for &k in &self.bucket_items[self.bucket_start[s]..self.bucket_start[s + 1]] {
            self.counters.scan += 1;
            if k >= lower {
                found = Some(k);
                break;
            }
        }
        found.expect("bridge list holds an index >= lower cursor")
    }

    /// TSV dump of `p[]` and `S[]`: one row per `k` in `[x+1, y]`.
    pub fn write_tsv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        writeln!(out, "k\tp\tS")?;
        for k in self.x + 1..=self.y {
            let list: Vec<String> = self.bucket(k).iter().map(|v| v.to_string()).collect();
            writeln!(out, "{k}\t{}\t{}", self.pointer(k), list.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::compute_bounds;
    use crate::oracle::brute_force_partition;

    fn uniform(v: &[i64]) -> WeightedSequence {
        WeightedSequence::uniform(v).unwrap()
    }

    #[test]
    fn pointers_and_buckets() {
        let s = uniform(&[9, 5, 3, 4]);
        let b = compute_bounds(&s, 2, None).unwrap();
        let sw = MinWidthSweep::new(&s, &b, 1, 4).unwrap();
        assert_eq!((sw.pointer(2), sw.pointer(3), sw.pointer(4)), (2, 4, 4));
        assert_eq!(sw.bucket(4), &[3, 4]);
        assert_eq!(sw.bucket(2), &[2]);
        assert!(sw.bucket(3).is_empty());
        for k in 2..=4 {
            let blocks = brute_force_partition(&s, k, 4).unwrap();
            assert_eq!(blocks[0], (k, sw.pointer(k)));
        }
    }

    #[test]
    fn increasing_suffix_is_one_block() {
        let s = uniform(&[1, 2, 3]);
        let b = compute_bounds(&s, 1, None).unwrap();
        let sw = MinWidthSweep::new(&s, &b, 1, 3).unwrap();
        assert_eq!((sw.pointer(2), sw.pointer(3)), (3, 3));
    }

    #[test]
    fn degenerate_range() {
        let s = uniform(&[4, 1, 7]);
        let b = compute_bounds(&s, 1, None).unwrap();
        let mut sw = MinWidthSweep::new(&s, &b, 2, 2).unwrap();
        assert_eq!(
            (sw.lower_cursor(), sw.upper_cursor(), sw.bridge()),
            (2, 2, 2)
        );
        assert_eq!(sw.find_match(1).unwrap(), 2);
    }

    #[test]
    fn first_query_traces_bitonic_search() {
        let s = uniform(&[9, 5, 3, 4]);
        let b = compute_bounds(&s, 2, None).unwrap();
        let mut sw = MinWidthSweep::new(&s, &b, 1, 4).unwrap();
        assert_eq!(sw.find_match(1).unwrap(), 2);
        assert_eq!(sw.lower_cursor(), 3);
        assert_eq!(sw.upper_cursor(), 2);
    }

    #[test]
    fn answers_are_non_increasing() {
        let s = uniform(&[0, 10, 0, 0, 10]);
        let b = compute_bounds(&s, 2, None).unwrap();
        let mut sw = MinWidthSweep::new(&s, &b, 1, 5).unwrap();
        let g2 = sw.find_match(2).unwrap();
        // μ(2,3) = μ(2,5) = 5 tie; strict comparison keeps the larger endpoint.
        assert_eq!(g2, 5);
        let g1 = sw.find_match(1).unwrap();
        assert_eq!(g1, 2);
        assert!(g1 <= g2);
    }

    #[test]
    fn whole_tail_right_skew_returns_y() {
        let s = uniform(&[1, 1, 2, 3]);
        let b = compute_bounds(&s, 1, None).unwrap();
        let mut sw = MinWidthSweep::new(&s, &b, 1, 4).unwrap();
        assert_eq!(sw.find_match(1).unwrap(), 4);
    }

    #[test]
    fn query_errors() {
        let s = uniform(&[1, 2, 3, 4]);
        let b = compute_bounds(&s, 3, None).unwrap();
        let mut sw = MinWidthSweep::new(&s, &b, 1, 4).unwrap();
        assert_eq!(sw.find_match(4), Err(Error::InfeasibleQuery { index: 4 }));
        sw.find_match(2).unwrap();
        assert_eq!(
            sw.find_match(2),
            Err(Error::QueryOrderViolation {
                previous: 2,
                got: 2
            })
        );
        assert!(MinWidthSweep::new(&s, &b, 0, 4).is_err());
        assert!(MinWidthSweep::new(&s, &b, 3, 5).is_err());
    }

    #[test]
    fn dump_lists_every_pointer() {
        let s = uniform(&[9, 5, 3, 4]);
        let b = compute_bounds(&s, 2, None).unwrap();
        let sw = MinWidthSweep::new(&s, &b, 1, 4).unwrap();
        let mut out = Vec::new();
        sw.write_tsv(&mut out).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "k\tp\tS\n2\t2\t2\n3\t4\t\n4\t4\t3,4\n"
        );
    }
}
