//! Aligned dyadic blocks and interval covers.

use crate::error::{Error, Result};

/// Block `B(j, k) = A(1 + j*2^k, (j+1)*2^k)`, with the end clipped to `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockId {
    pub level: u32,
    pub ordinal: usize,
    pub start: usize,
    pub end: usize,
}

impl BlockId {
    pub fn new(level: u32, ordinal: usize, n: usize) -> Self {
        let size = 1usize << level;
        BlockId {
            level,
            ordinal,
            start: 1 + ordinal * size,
            end: ((ordinal + 1) * size).min(n),
        }
    }

    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Largest level `β = floor(log2(span))`, `span >= 1`.
pub fn level_cap(span: u64) -> u32 {
    assert!(span >= 1);
    63 - span.leading_zeros()
}

/// Disjoint aligned blocks of level at most `max_level` whose union is
/// exactly `A(p, q)`.
///
/// Greedy: at each position take the largest aligned block that fits. When
/// `q - p + 1 < 2^(max_level+1)` this yields at most `2(max_level+1)`
/// blocks.
pub fn collect_blocks(p: usize, q: usize, max_level: u32, n: usize) -> Result<Vec<BlockId>> {
    if p == 0 || p > q || q > n {
        return Err(Error::IndexOutOfRange {
            start: p,
            end: q,
            len: n,
        });
    }
    Ok(BlockCover::new(p, q, max_level).collect())
}

/// Iterator form of [`collect_blocks`]; does not validate its input.
#[derive(Debug, Clone)]
pub(crate) struct BlockCover {
    next: usize,
    last: usize,
    max_level: u32,
}

impl BlockCover {
    pub(crate) fn new(p: usize, q: usize, max_level: u32) -> Self {
        BlockCover {
            next: p,
            last: q,
            max_level,
        }
    }
}

impl Iterator for BlockCover {
    type Item = BlockId;

    fn next(&mut self) -> Option<BlockId> {
        if self.next > self.last {
            return None;
        }
        let offset = self.next - 1;
        let align = if offset == 0 {
            u32::MAX
        } else {
            offset.trailing_zeros()
        };
        let fit = level_cap((self.last - self.next + 1) as u64);
        let level = align.min(fit).min(self.max_level);
        let size = 1usize << level;
        let block = BlockId {
            level,
            ordinal: offset >> level,
            start: self.next,
            end: self.next + size - 1,
        };
        self.next += size;
        Some(block)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spans(v: &[BlockId]) -> Vec<(usize, usize)> {
        v.iter().map(|b| (b.start, b.end)).collect()
    }

    #[test]
    fn covers() {
        let b = collect_blocks(5, 12, 3, 16).unwrap();
        assert_eq!(spans(&b), vec![(5, 8), (9, 12)]);
        assert_eq!((b[0].level, b[0].ordinal), (2, 1));
        assert_eq!((b[1].level, b[1].ordinal), (2, 2));

        let b = collect_blocks(2, 8, 3, 8).unwrap();
        assert_eq!(spans(&b), vec![(2, 2), (3, 4), (5, 8)]);

        let b = collect_blocks(7, 7, 3, 9).unwrap();
        assert_eq!(b, vec![BlockId::new(0, 6, 9)]);
    }

    #[test]
    fn level_cap_respected() {
        let b = collect_blocks(1, 8, 1, 8).unwrap();
        assert_eq!(spans(&b), vec![(1, 2), (3, 4), (5, 6), (7, 8)]);
    }

    #[test]
    fn invalid_ranges() {
        assert!(collect_blocks(0, 3, 2, 4).is_err());
        assert!(collect_blocks(3, 2, 2, 4).is_err());
        assert!(collect_blocks(3, 5, 2, 4).is_err());
    }

    #[test]
    fn block_geometry() {
        assert_eq!(level_cap(1), 0);
        assert_eq!(level_cap(7), 2);
        assert_eq!(level_cap(8), 3);
        let b = BlockId::new(2, 2, 10);
        assert_eq!((b.start, b.end, b.len()), (9, 10, 2));
    }
}
