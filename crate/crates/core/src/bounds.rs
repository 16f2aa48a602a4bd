//! Feasible right endpoints per left index.
//!
//! For left index `i`, `lower(i)` is the smallest `j` with `w(i, j) >= L` and
//! `upper(i)` the largest `j >= i` with `w(i, j) <= U`. A segment `A(i, j)`
//! has admissible width exactly when `lower(i)` exists and
//! `lower(i) <= j <= upper(i)`.

use crate::error::{Error, Result};
use crate::sequence::WeightedSequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityBounds {
    // 1-based; 0 marks "undefined" in `lower`, slot 0 unused.
    lower: Vec<usize>,
    upper: Vec<usize>,
    last_feasible: Option<usize>,
    min_width: i64,
    max_width: i64,
    cursor_advances: usize,
}

impl FeasibilityBounds {
    pub fn len(&self) -> usize {
        self.upper.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn lower(&self, i: usize) -> Option<usize> {
        match self.lower[i] {
            0 => None,
            j => Some(j),
        }
    }

    #[inline]
    pub fn upper(&self, i: usize) -> usize {
        self.upper[i]
    }

    /// Largest `i` with `lower(i)` defined (`i0`).
    pub fn last_feasible(&self) -> Option<usize> {
        self.last_feasible
    }

    pub fn min_width(&self) -> i64 {
        self.min_width
    }

    pub fn max_width(&self) -> i64 {
        self.max_width
    }

    /// Total cursor moves made while computing both arrays.
    pub fn cursor_advances(&self) -> usize {
        self.cursor_advances
    }
}

/// Two-cursor sweep computing `lower` and `upper` in O(n).
///
/// `max_width = None` means unbounded (the total width). Every item must be
/// at most `max_width` wide.
#[allow(clippy::needless_range_loop)]
pub fn compute_bounds(
    seq: &WeightedSequence,
    min_width: i64,
    max_width: Option<i64>,
) -> Result<FeasibilityBounds> {
    let n = seq.len();
    if min_width <= 0 || max_width.is_some_and(|u| u < min_width) {
        return Err(Error::InvalidWidthBounds);
    }
    let max_width = max_width.unwrap_or_else(|| seq.total_width());
    if let Some(k) = (1..=n).find(|&k| seq.width(k, k) > max_width) {
        return Err(Error::ItemWiderThanMax { index: k });
    }
    if min_width > seq.total_width() {
        return Err(Error::InfeasibleWidthWindow);
    }

    let mut advances = 0usize;

    let mut upper = vec![0usize; n + 1];
    let mut j = n;
    for i in (1..=n).rev() {
        while seq.width(i, j) > max_width {
            j -= 1;
            advances += 1;
        }
        upper[i] = j;
    }

    let mut lower = vec![0usize; n + 1];
    let mut last_feasible = None;
    let mut j = 1usize;
    for i in 1..=n {
        if j < i {
            j = i;
            advances += 1;
        }
        while j <= n && seq.width(i, j) < min_width {
            j += 1;
            advances += 1;
        }
        if j > n {
            break;
        }
        lower[i] = j;
        last_feasible = Some(i);
    }

    Ok(FeasibilityBounds {
        lower,
        upper,
        last_feasible,
        min_width,
        max_width,
        cursor_advances: advances,
    })
}
