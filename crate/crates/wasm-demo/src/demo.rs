//! Target-independent logic behind the browser bindings.

use maxseg::bio::{map_to_sequence, DnaRecord, MappingSpec};
use maxseg::fixed::{render_ratio, render_scaled, MAX_SCALE};
use maxseg::{
    compute_bounds, solve, Decimal, Error, MinWidthSweep, Result, SolveRequest, WeightedItem,
    WeightedSequence,
};

/// Parsed demo input: numbers, `value:weight` pairs, or mapped DNA.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemoSequence {
    seq: WeightedSequence,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SegmentSummary {
    pub start: usize,
    pub end: usize,
    pub width: String,
    pub sum: String,
    pub density: String,
    pub density_value: f64,
    pub algorithm: &'static str,
}

impl DemoSequence {
    /// Tokens separated by whitespace or commas; each is `value` (weight 1)
    /// or `value:weight`.
    pub fn parse_numbers(text: &str) -> Result<Self> {
        let pairs = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| match t.split_once(':') {
                Some((v, w)) => Ok((v.parse::<Decimal>()?, w.parse::<Decimal>()?)),
                None => Ok((t.parse::<Decimal>()?, Decimal::from_int(1))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DemoSequence {
            seq: WeightedSequence::from_decimals(&pairs)?,
        })
    }

    /// DNA bases scored by `mapping` (`gc` or `huang:P`); whitespace and
    /// FASTA headers are ignored.
    pub fn parse_dna(text: &str, mapping: &str) -> Result<Self> {
        let bases: String = text
            .lines()
            .filter(|l| !l.starts_with('>'))
            .flat_map(|l| l.chars().filter(|c| !c.is_whitespace()))
            .collect();
        let rec = DnaRecord {
            id: "input".into(),
            bases,
        };
        Ok(DemoSequence {
            seq: map_to_sequence(&rec, &mapping.parse::<MappingSpec>()?, false)?,
        })
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn values(&self) -> Vec<f64> {
        let unit = self.seq.unit() as f64;
        self.seq.items().map(|it| it.value as f64 / unit).collect()
    }

    pub fn weights(&self) -> Vec<f64> {
        let unit = self.seq.unit() as f64;
        self.seq.items().map(|it| it.weight as f64 / unit).collect()
    }

    /// Densest segment with width in `[min_width, max_width]`; an empty or
    /// `max` upper bound means unbounded.
    pub fn densest(&self, min_width: &str, max_width: &str) -> Result<SegmentSummary> {
        let l: Decimal = min_width.trim().parse()?;
        let u: Option<Decimal> = match max_width.trim() {
            "" | "max" => None,
            s => Some(s.parse()?),
        };
        let scale = [
            Some(self.seq.scale()),
            Some(l.significant_places()),
            u.map(|u| u.significant_places()),
        ]
        .into_iter()
        .flatten()
        .max()
        .unwrap_or(0);
        if scale > MAX_SCALE {
            return Err(Error::NumericRange(format!(
                "scale {scale} exceeds {MAX_SCALE}"
            )));
        }
        let seq = self.seq.rescaled(scale)?;
        let u = u.map(|u| u.to_scaled(scale)).transpose()?;
        let sol = solve(&SolveRequest::new(&seq, l.to_scaled(scale)?, u))?;
        let seg = sol.segment;
        let (sum, width) = (seg.density.sum, seg.density.width);
        Ok(SegmentSummary {
            start: seg.start,
            end: seg.end,
            width: render_scaled(width, scale),
            sum: render_scaled(sum, scale),
            density: render_ratio(sum, width, 9),
            density_value: seg.density.to_f64(),
            algorithm: sol.algorithm.name(),
        })
    }

    /// Decreasingly right-skew partition of the whole sequence as
    /// `(start, end)` blocks, from the sweep's suffix pointers.
    pub fn partition(&self) -> Result<Vec<(usize, usize)>> {
        let n = self.seq.len();
        // A leading placeholder lets the sweep's range start before item 1;
        // pointers at k >= 2 never look left of k.
        let mut items = vec![WeightedItem::new(0, self.seq.unit())];
        items.extend(self.seq.items());
        let padded = WeightedSequence::new(&items, self.seq.scale())?;
        let bounds = compute_bounds(&padded, 1, None)?;
        let sweep = MinWidthSweep::new(&padded, &bounds, 1, n + 1)?;
        let mut blocks = Vec::new();
        let mut k = 2;
        while k <= n + 1 {
            let end = sweep.pointer(k);
            blocks.push((k - 1, end - 1));
            k = end + 1;
        }
        Ok(blocks)
    }

    /// Density of each partition block, in order.
    pub fn block_densities(&self, blocks: &[(usize, usize)]) -> Result<Vec<f64>> {
        blocks
            .iter()
            .map(|&(s, e)| self.seq.density(s, e).map(|d| d.to_f64()))
            .collect()
    }
}
