//! Sweep structure for the width-upper-bound query.
//!
//! Built over `[x, y]`, it answers "which right endpoint in
//! `[x, min(U_i, m0)]` maximizes `μ(i, ·)`" for strictly decreasing left
//! indices `i <= x`, where `m0` is the previous answer (initially `y`).
//! Unlike [`MinWidthSweep`](crate::MinWidthSweep) it always returns the true
//! optimum of that shrunken range.
//!
//! `q[k]` for `k` in `[x+1, y]` is the start of the rightmost block of the
//! decreasingly right-skew partition of the prefix `A(x+1, k)`.

use std::io::{self, Write};

use crate::bounds::FeasibilityBounds;
use crate::counters::SweepCounters;
use crate::error::{Error, Result};
use crate::sequence::WeightedSequence;

#[derive(Debug, Clone)]
pub struct MaxWidthSweep<'a> {
    seq: &'a WeightedSequence,
    bounds: &'a FeasibilityBounds,
    x: usize,
    y: usize,
    // q[k - x - 1]
    prefix_pointer: Vec<usize>,
    upper: usize,
    last_query: Option<usize>,
    counters: SweepCounters,
}

impl<'a> MaxWidthSweep<'a> {
    pub fn new(
        seq: &'a WeightedSequence,
        bounds: &'a FeasibilityBounds,
        x: usize,
        y: usize,
    ) -> Result<Self> {
        if x == 0 {
            return Err(Error::IndexOutOfRange {
                start: x,
                end: y,
                len: seq.len(),
            });
        }
        seq.check_segment(x, y)?;
        let mut q = vec![0usize; y - x];
        let mut counters = SweepCounters::default();
        for i in x + 1..=y {
            let mut start = i;
            // A block starting at x+1 has no left neighbour inside the range.
            while start > x + 1 {
                let prev = q[start - 1 - x - 1];
                if seq.density_at(prev, start - 1) > seq.density_at(start, i) {
                    break;
                }
                start = prev;
                counters.init += 1;
            }
            q[i - x - 1] = start;
        }
        Ok(MaxWidthSweep {
            seq,
            bounds,
            x,
            y,
            prefix_pointer: q,
            upper: y,
            last_query: None,
            counters,
        })
    }

    pub fn range(&self) -> (usize, usize) {
        (self.x, self.y)
    }

    /// `q[k]` for `k` in `[x+1, y]`.
    pub fn pointer(&self, k: usize) -> usize {
        self.prefix_pointer[k - self.x - 1]
    }

    pub fn upper_cursor(&self) -> usize {
        self.upper
    }

    pub fn counters(&self) -> SweepCounters {
        self.counters
    }

    pub fn find_match(&mut self, i: usize) -> Result<usize> {
        if let Some(prev) = self.last_query {
            if i >= prev {
                return Err(Error::QueryOrderViolation {
                    previous: prev,
                    got: i,
                });
            }
        }
        let ui = self.bounds.upper(i);
        if i > self.x || ui < self.x {
            return Err(Error::RangeViolation { index: i });
        }
        self.last_query = Some(i);

        while self.upper > ui {
            self.upper -= 1;
            self.counters.cursor += 1;
        }
        let seq = self.seq;
        while self.upper > self.x {
            let start = self.pointer(self.upper);
            if seq.density_at(i, start - 1) <= seq.density_at(i, self.upper) {
                break;
            }
            self.upper = start - 1;
            self.counters.bitonic += 1;
        }
        Ok(self.upper)
    }

    /// TSV dump of `q[]`: one row per `k` in `[x+1, y]`.
    pub fn write_tsv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        writeln!(out, "k\tq")?;
        for k in self.x + 1..=self.y {
            writeln!(out, "{k}\t{}", self.pointer(k))?;
        }
        Ok(())
    }
}
