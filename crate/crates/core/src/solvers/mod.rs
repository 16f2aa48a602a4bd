//! Top-level algorithms and the dispatcher.
//!
//! Every solver returns the optimum under one fixed tie rule: among
//! maximum-density segments, the smallest start, then the smallest end.
//! Widths `min_width` / `max_width` are raw fixed-point values in the
//! sequence's scale.

mod baseline;
pub mod blocks;
mod general;
mod min_width;
mod ties;
mod uniform;
mod window;

pub use baseline::max_density_min_width_baseline;
pub use blocks::{collect_blocks, level_cap, BlockId};
pub use general::max_density_general;
pub use min_width::max_density_min_width;
pub use uniform::max_density_uniform;
pub use window::sliding_window;

use crate::counters::SweepCounters;
use crate::error::{Error, Result};
use crate::sequence::{Segment, WeightedSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    SlidingWindow,
    MinWidth,
    Uniform,
    General,
    Baseline,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::SlidingWindow => "sliding-window",
            Algorithm::MinWidth => "l-only",
            Algorithm::Uniform => "uniform-lu",
            Algorithm::General => "general-lu",
            Algorithm::Baseline => "baseline-logl",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub counters: SweepCounters,
    /// Number of sweep structures built.
    pub structures: usize,
}

impl SolveStats {
    pub fn merge(&mut self, o: &SolveStats) {
        self.counters += o.counters;
        self.structures += o.structures;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Solution {
    pub segment: Segment,
    pub algorithm: Algorithm,
    pub stats: SolveStats,
}

#[derive(Debug, Clone, Copy)]
pub struct SolveRequest<'a> {
    pub seq: &'a WeightedSequence,
    pub min_width: i64,
    /// `None` is unbounded.
    pub max_width: Option<i64>,
}

impl<'a> SolveRequest<'a> {
    pub fn new(seq: &'a WeightedSequence, min_width: i64, max_width: Option<i64>) -> Self {
        SolveRequest {
            seq,
            min_width,
            max_width,
        }
    }
}

/// Densest segment with `min_width <= width <= max_width`.
///
/// Items wider than `max_width` can never be part of an answer, so the
/// sequence is first split around them and each remaining piece is solved
/// with the cheapest applicable algorithm.
pub fn solve(req: &SolveRequest<'_>) -> Result<Solution> {
    let seq = req.seq;
    if req.min_width <= 0 || req.max_width.is_some_and(|u| u < req.min_width) {
        return Err(Error::InvalidWidthBounds);
    }
    over_pieces(seq, req.max_width, |piece| {
        solve_piece(piece, req.min_width, req.max_width)
    })
}

/// Runs `solve_piece` on every maximal run of items no wider than
/// `max_width` and keeps the best answer in original coordinates.
pub(crate) fn over_pieces(
    seq: &WeightedSequence,
    max_width: Option<i64>,
    mut solve_piece: impl FnMut(&WeightedSequence) -> Result<Solution>,
) -> Result<Solution> {
    let pieces = split_pieces(seq, max_width);
    if let [(1, end)] = pieces[..] {
        if end == seq.len() {
            return solve_piece(seq);
        }
    }

    let mut best: Option<Solution> = None;
    let mut stats = SolveStats::default();
    for (start, end) in pieces {
        let piece = seq.slice(start, end)?;
        let sol = match solve_piece(&piece) {
            Ok(sol) => sol,
            Err(Error::InfeasibleWidthWindow) => continue,
            Err(e) => return Err(e),
        };
        stats.merge(&sol.stats);
        let seg = sol.segment.shifted(start - 1);
        // Pieces come in order, so an equal density never displaces an
        // earlier piece.
        if best.is_none_or(|b| seg.density > b.segment.density) {
            best = Some(Solution {
                segment: seg,
                ..sol
            });
        }
    }
    best.map(|b| Solution { stats, ..b })
        .ok_or(Error::InfeasibleWidthWindow)
}

fn split_pieces(seq: &WeightedSequence, max_width: Option<i64>) -> Vec<(usize, usize)> {
    let n = seq.len();
    let Some(u) = max_width else {
        return vec![(1, n)];
    };
    let mut pieces = Vec::new();
    let mut start = None;
    for k in 1..=n {
        if seq.width(k, k) > u {
            if let Some(s) = start.take() {
                pieces.push((s, k - 1));
            }
        } else if start.is_none() {
            start = Some(k);
        }
    }
    if let Some(s) = start {
        pieces.push((s, n));
    }
    pieces
}

fn solve_piece(seq: &WeightedSequence, min_width: i64, max_width: Option<i64>) -> Result<Solution> {
    if min_width > seq.total_width() {
        return Err(Error::InfeasibleWidthWindow);
    }
    let max_width = match max_width {
        Some(u) if u < seq.total_width() => u,
        _ => return max_density_min_width(seq, min_width),
    };
    if seq.is_uniform() {
        let unit = seq.unit();
        let lo = ceil_div(min_width, unit);
        let hi = max_width / unit;
        if lo > hi {
            return Err(Error::InfeasibleWidthWindow);
        }
        if lo == hi {
            return sliding_window(seq, lo * unit);
        }
        return max_density_uniform(seq, min_width, max_width);
    }
    max_density_general(seq, min_width, max_width)
}

pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    (a + b - 1) / b
}

/// Running maximum over candidate segments; keeps the first of equal densities.
#[derive(Debug, Default)]
pub(crate) struct Best(Option<Segment>);

impl Best {
    #[inline]
    pub(crate) fn offer(&mut self, seg: Segment) {
        if self.0.is_none_or(|b| seg.density > b.density) {
            self.0 = Some(seg);
        }
    }

    pub(crate) fn get(self) -> Result<Segment> {
        self.0.ok_or(Error::InfeasibleWidthWindow)
    }
}
