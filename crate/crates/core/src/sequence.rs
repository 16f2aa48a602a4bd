//! Weighted sequences, exact densities, and segments.
//!
//! Indices in the public API are 1-based and inclusive: `A(i, j)` covers
//! items `i..=j` of a sequence of length `n`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::fixed::{self, Decimal};

/// Bound on the magnitude of every prefix sum. Differences of two prefix
/// sums then fit in an `i64`, and the product of two differences fits in an
/// `i128`.
pub const MAX_PREFIX_MAGNITUDE: i64 = 1 << 62;

/// One item `(a_i, w_i)` in fixed-point units of the owning sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightedItem {
    pub value: i64,
    pub weight: i64,
}

impl WeightedItem {
    pub fn new(value: i64, weight: i64) -> Self {
        WeightedItem { value, weight }
    }
}

/// An immutable sequence with prefix sums for O(1) width and density queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedSequence {
    prefix_value: Vec<i64>,
    prefix_weight: Vec<i64>,
    scale: u32,
}

impl WeightedSequence {
    /// Build from fixed-point items where one unit is `10^scale` raw.
    pub fn new(items: &[WeightedItem], scale: u32) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::EmptySequence);
        }
        if scale > fixed::MAX_SCALE {
            return Err(Error::NumericRange(format!(
                "scale {scale} exceeds {} decimal places",
                fixed::MAX_SCALE
            )));
        }
        let mut prefix_value = Vec::with_capacity(items.len() + 1);
        let mut prefix_weight = Vec::with_capacity(items.len() + 1);
        prefix_value.push(0i64);
        prefix_weight.push(0i64);
        let (mut sv, mut sw) = (0i64, 0i64);
        for (k, item) in items.iter().enumerate() {
            if item.weight <= 0 {
                return Err(Error::NonPositiveWeight { index: k + 1 });
            }
            sv = checked_prefix(sv, item.value, "value")?;
            sw = checked_prefix(sw, item.weight, "width")?;
            prefix_value.push(sv);
            prefix_weight.push(sw);
        }
        Ok(WeightedSequence {
            prefix_value,
            prefix_weight,
            scale,
        })
    }

    /// Uniform model: every weight is one unit, scale 0.
    pub fn uniform(values: &[i64]) -> Result<Self> {
        let items: Vec<_> = values.iter().map(|&v| WeightedItem::new(v, 1)).collect();
        Self::new(&items, 0)
    }

    /// Build from integer `(value, weight)` pairs at scale 0.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        let items: Vec<_> = pairs
            .iter()
            .map(|&(v, w)| WeightedItem::new(v, w))
            .collect();
        Self::new(&items, 0)
    }

    /// Build from decimal pairs, picking the smallest scale that represents
    /// every number exactly.
    pub fn from_decimals(pairs: &[(Decimal, Decimal)]) -> Result<Self> {
        let scale = pairs
            .iter()
            .map(|(v, w)| v.significant_places().max(w.significant_places()))
            .max()
            .unwrap_or(0);
        let items = pairs
            .iter()
            .map(|(v, w)| Ok(WeightedItem::new(v.to_scaled(scale)?, w.to_scaled(scale)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&items, scale)
    }

    pub fn len(&self) -> usize {
        self.prefix_value.len() - 1
    }

    /// Always false; construction rejects empty input.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Decimal places of the fixed-point representation.
    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// Raw representation of one width unit.
    pub fn unit(&self) -> i64 {
        fixed::pow10(self.scale)
    }

    pub fn prefix_values(&self) -> &[i64] {
        &self.prefix_value
    }

    pub fn prefix_weights(&self) -> &[i64] {
        &self.prefix_weight
    }

    /// Item `k` (1-based).
    pub fn item(&self, k: usize) -> WeightedItem {
        WeightedItem {
            value: self.prefix_value[k] - self.prefix_value[k - 1],
            weight: self.prefix_weight[k] - self.prefix_weight[k - 1],
        }
    }

    pub fn items(&self) -> impl ExactSizeIterator<Item = WeightedItem> + '_ {
        (1..self.len() + 1).map(|k| self.item(k))
    }

    pub fn total_width(&self) -> i64 {
        self.prefix_weight[self.len()]
    }

    /// Width `w(i, j)`; unchecked beyond slice bounds.
    #[inline]
    pub fn width(&self, i: usize, j: usize) -> i64 {
        self.prefix_weight[j] - self.prefix_weight[i - 1]
    }

    #[inline]
    pub fn sum(&self, i: usize, j: usize) -> i64 {
        self.prefix_value[j] - self.prefix_value[i - 1]
    }

    /// Density of `A(i, j)`.
    pub fn density(&self, i: usize, j: usize) -> Result<DensityValue> {
        self.check_segment(i, j)?;
        Ok(self.density_at(i, j))
    }

    #[inline]
    pub(crate) fn density_at(&self, i: usize, j: usize) -> DensityValue {
        debug_assert!(1 <= i && i <= j && j <= self.len());
        DensityValue {
            sum: self.sum(i, j),
            width: self.width(i, j),
        }
    }

    pub fn segment(&self, i: usize, j: usize) -> Result<Segment> {
        Ok(Segment {
            start: i,
            end: j,
            density: self.density(i, j)?,
        })
    }

    pub(crate) fn segment_at(&self, i: usize, j: usize) -> Segment {
        Segment {
            start: i,
            end: j,
            density: self.density_at(i, j),
        }
    }

    pub fn check_segment(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || i > j || j > self.len() {
            return Err(Error::IndexOutOfRange {
                start: i,
                end: j,
                len: self.len(),
            });
        }
        Ok(())
    }

    /// True when every weight equals one unit.
    pub fn is_uniform(&self) -> bool {
        let unit = self.unit();
        self.items().all(|it| it.weight == unit)
    }

    /// Items `start..=end` as a new sequence with the same scale.
    pub fn slice(&self, start: usize, end: usize) -> Result<Self> {
        self.check_segment(start, end)?;
        let items: Vec<_> = (start..=end).map(|k| self.item(k)).collect();
        Self::new(&items, self.scale)
    }

    /// The same sequence at a larger scale.
    pub fn rescaled(&self, scale: u32) -> Result<Self> {
        if scale < self.scale {
            return Err(Error::NumericRange(format!(
                "cannot reduce scale from {} to {scale}",
                self.scale
            )));
        }
        if scale > fixed::MAX_SCALE {
            return Err(Error::NumericRange(format!(
                "scale {scale} exceeds {} decimal places",
                fixed::MAX_SCALE
            )));
        }
        let f = fixed::pow10(scale - self.scale);
        let items = self
            .items()
            .map(|it| {
                Ok(WeightedItem::new(
                    it.value.checked_mul(f).ok_or_else(overflow)?,
                    it.weight.checked_mul(f).ok_or_else(overflow)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&items, scale)
    }
}

fn overflow() -> Error {
    Error::NumericRange("rescaled item overflows".into())
}

fn checked_prefix(acc: i64, add: i64, what: &str) -> Result<i64> {
    acc.checked_add(add)
        .filter(|s| s.unsigned_abs() <= MAX_PREFIX_MAGNITUDE as u64)
        .ok_or_else(|| {
            Error::NumericRange(format!(
                "running {what} sum exceeds the exact comparison range (2^62)"
            ))
        })
}

/// An exact density `sum / width` with `width > 0`.
///
/// Equality and ordering compare the rational value, so `2/4 == 1/2`.
#[derive(Debug, Clone, Copy)]
pub struct DensityValue {
    pub sum: i64,
    pub width: i64,
}

impl DensityValue {
    pub fn new(sum: i64, width: i64) -> Result<Self> {
        if width <= 0 {
            return Err(Error::NonPositiveWeight { index: 0 });
        }
        Ok(DensityValue { sum, width })
    }

    pub fn to_f64(&self) -> f64 {
        self.sum as f64 / self.width as f64
    }
}

impl PartialEq for DensityValue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for DensityValue {}

impl PartialOrd for DensityValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DensityValue {
    #[inline]
    fn cmp(&self, other: &Self) -> Ordering {
        (self.sum as i128 * other.width as i128).cmp(&(other.sum as i128 * self.width as i128))
    }
}

impl fmt::Display for DensityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.sum, self.width)
    }
}

/// Segment `A(start, end)`, inclusive and 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub start: usize,
    pub end: usize,
    pub density: DensityValue,
}

impl Segment {
    /// Whether `self` should replace `best` under the global tie rule:
    /// larger density, then smaller start, then smaller end.
    pub fn beats(&self, best: &Segment) -> bool {
        match self.density.cmp(&best.density) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => (self.start, self.end) < (best.start, best.end),
        }
    }

    pub fn shifted(self, offset: usize) -> Segment {
        Segment {
            start: self.start + offset,
            end: self.end + offset,
            density: self.density,
        }
    }
}
