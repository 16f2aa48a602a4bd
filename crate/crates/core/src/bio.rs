//! Sequence ingestion: FASTA and weighted TSV parsing, nucleotide scoring,
//! and run-length compression.
//!
//! Scoring schemes:
//! - `gc`: `a_i = 1` for G/C, `0` otherwise; the densest segment is the
//!   GC-richest region.
//! - `huang:p`: `1 - p` for G/C and `-p` for A/T/U, so positive-sum
//!   segments are those with GC ratio above `p`.
//!
//! Every nucleotide has weight 1. Ambiguity codes (N, R, Y, ...) score as
//! non-GC unless strict mode is on.

use std::io::{BufRead, Write};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fixed::{self, Decimal};
use crate::sequence::{WeightedItem, WeightedSequence};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DnaRecord {
    pub id: String,
    pub bases: String,
}

/// Parse FASTA text. Header lines start with `>`; the record id is the
/// first word of the header. Sequence lines are concatenated with
/// whitespace removed; case is preserved. Lines starting with `;` are
/// comments.
pub fn parse_fasta<R: BufRead>(reader: R) -> Result<Vec<DnaRecord>> {
    let mut records: Vec<DnaRecord> = Vec::new();
    let mut header_line = 0;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        if let Some(header) = line.strip_prefix('>') {
            if records.last().is_some_and(|r| r.bases.is_empty()) {
                return Err(Error::MalformedFasta { line: header_line });
            }
            let id = header
                .split_whitespace()
                .next()
                .map(str::to_string)
                .unwrap_or_else(|| format!("r{}", records.len() + 1));
            records.push(DnaRecord {
                id,
                bases: String::new(),
            });
            header_line = lineno;
        } else if line.starts_with(';') || line.trim().is_empty() {
            continue;
        } else {
            let rec = records
                .last_mut()
                .ok_or(Error::MalformedFasta { line: lineno })?;
            rec.bases
                .extend(line.chars().filter(|c| !c.is_whitespace()));
        }
    }
    if records.last().is_some_and(|r| r.bases.is_empty()) {
        return Err(Error::MalformedFasta { line: header_line });
    }
    Ok(records)
}

/// Write records as FASTA, wrapping sequence lines at `width` characters.
pub fn write_fasta<W: Write>(records: &[DnaRecord], width: usize, out: &mut W) -> Result<()> {
    let width = width.max(1);
    for rec in records {
        writeln!(out, ">{}", rec.id)?;
        let bytes = rec.bases.as_bytes();
        for chunk in bytes.chunks(width) {
            out.write_all(chunk)?;
            out.write_all(b"\n")?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MappingSpec {
    Gc01,
    Huang { p: Decimal },
    TsvWeighted,
}

impl MappingSpec {
    pub fn huang(p: Decimal) -> Result<Self> {
        let lo = Decimal::from_int(0);
        let hi = Decimal::from_int(1);
        let scale = p.places();
        let raw = p.to_scaled(scale.min(fixed::MAX_SCALE))?;
        if raw < lo.to_scaled(scale)? || raw > hi.to_scaled(scale)? {
            return Err(Error::InvalidMapping(format!(
                "huang p={p} is outside [0, 1]"
            )));
        }
        Ok(MappingSpec::Huang { p })
    }
}

impl FromStr for MappingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gc" | "gc01" => Ok(MappingSpec::Gc01),
            "tsv" => Ok(MappingSpec::TsvWeighted),
            _ => match s.strip_prefix("huang:") {
                Some(p) => MappingSpec::huang(p.parse()?),
                None => Err(Error::InvalidMapping(format!(
                    "unknown mapping {s:?}; expected gc, huang:P or tsv"
                ))),
            },
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Base {
    Strong,
    Weak,
    Ambiguous,
}

fn classify(c: char) -> Option<Base> {
    match c {
        'G' | 'C' | 'g' | 'c' => Some(Base::Strong),
        'A' | 'T' | 'U' | 'a' | 't' | 'u' => Some(Base::Weak),
        'N' | 'n' | 'R' | 'r' | 'Y' | 'y' | 'K' | 'k' | 'M' | 'm' | 'S' | 's' | 'W' | 'w' | 'B'
        | 'b' | 'D' | 'd' | 'H' | 'h' | 'V' | 'v' | '-' | '.' => Some(Base::Ambiguous),
        _ => None,
    }
}

/// Score a DNA record. With `strict`, ambiguity codes and unknown symbols
/// are errors; otherwise they score as non-GC (`0` for gc, `-p` for huang).
pub fn map_to_sequence(
    rec: &DnaRecord,
    mapping: &MappingSpec,
    strict: bool,
) -> Result<WeightedSequence> {
    let (scale, strong, weak) = match *mapping {
        MappingSpec::Gc01 => (0, 1, 0),
        MappingSpec::Huang { p } => {
            let scale = p.significant_places();
            let unit = fixed::pow10(scale);
            let p = p.to_scaled(scale)?;
            (scale, unit - p, -p)
        }
        MappingSpec::TsvWeighted => {
            return Err(Error::InvalidMapping(
                "tsv mapping applies to TSV input, not DNA".into(),
            ))
        }
    };
    let unit = fixed::pow10(scale);
    let items = rec
        .bases
        .chars()
        .enumerate()
        .map(|(k, c)| {
            let value = match classify(c) {
                Some(Base::Strong) => strong,
                Some(Base::Weak) => weak,
                _ if strict => {
                    return Err(Error::UnknownSymbol {
                        record: rec.id.clone(),
                        position: k + 1,
                        symbol: c,
                    })
                }
                _ => weak,
            };
            Ok(WeightedItem::new(value, unit))
        })
        .collect::<Result<Vec<_>>>()?;
    WeightedSequence::new(&items, scale)
}

/// One record of weighted TSV input, numbers kept as parsed decimals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TsvRecord {
    pub id: String,
    pub items: Vec<(Decimal, Decimal)>,
}

impl TsvRecord {
    pub fn to_sequence(&self) -> Result<WeightedSequence> {
        WeightedSequence::from_decimals(&self.items)
    }
}

/// Parse `value<TAB>weight` lines. `#` lines are comments; blank lines
/// separate records, which are named `r1`, `r2`, ...
pub fn parse_weighted_tsv<R: BufRead>(reader: R) -> Result<Vec<TsvRecord>> {
    let mut records = Vec::new();
    let mut current: Vec<(Decimal, Decimal)> = Vec::new();
    let flush = |items: &mut Vec<(Decimal, Decimal)>, records: &mut Vec<TsvRecord>| {
        if !items.is_empty() {
            records.push(TsvRecord {
                id: format!("r{}", records.len() + 1),
                items: std::mem::take(items),
            });
        }
    };
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.starts_with('#') {
            continue;
        }
        if t.is_empty() {
            flush(&mut current, &mut records);
            continue;
        }
        let malformed = |reason: String| Error::MalformedTsv {
            line: idx + 1,
            reason,
        };
        let fields: Vec<&str> = t.split('\t').map(str::trim).collect();
        if fields.len() != 2 {
            return Err(malformed(format!(
                "expected 2 tab-separated fields, found {}",
                fields.len()
            )));
        }
        let value = fields[0]
            .parse()
            .map_err(|e: Error| malformed(e.to_string()))?;
        let weight = fields[1]
            .parse()
            .map_err(|e: Error| malformed(e.to_string()))?;
        current.push((value, weight));
    }
    flush(&mut current, &mut records);
    Ok(records)
}

/// Merge maximal runs of items with equal density `a_i / w_i`.
pub fn compress_runs(seq: &WeightedSequence) -> WeightedSequence {
    compress_runs_with_map(seq).0
}

/// Like [`compress_runs`], also returning for each merged item the original
/// index of the last item in its run.
pub fn compress_runs_with_map(seq: &WeightedSequence) -> (WeightedSequence, Vec<usize>) {
    let mut merged: Vec<WeightedItem> = Vec::new();
    let mut run_ends = Vec::new();
    let mut prev: Option<WeightedItem> = None;
    for (k, item) in seq.items().enumerate() {
        let same = prev.is_some_and(|p| {
            p.value as i128 * item.weight as i128 == item.value as i128 * p.weight as i128
        });
        if same {
            let last = merged.last_mut().expect("run started");
            last.value += item.value;
            last.weight += item.weight;
            *run_ends.last_mut().expect("run started") = k + 1;
        } else {
            merged.push(item);
            run_ends.push(k + 1);
        }
        prev = Some(item);
    }
    // Prefix sums are unchanged by merging, so range checks cannot fail.
    let out =
        WeightedSequence::new(&merged, seq.scale()).expect("merged prefix sums stay in range");
    (out, run_ends)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fasta(s: &str) -> Result<Vec<DnaRecord>> {
        parse_fasta(s.as_bytes())
    }

    fn values(seq: &WeightedSequence) -> Vec<i64> {
        seq.items().map(|it| it.value).collect()
    }

    #[test]
    fn fasta_records() {
        let r = fasta(">s1\nACGT\n").unwrap();
        assert_eq!(
            r,
            vec![DnaRecord {
                id: "s1".into(),
                bases: "ACGT".into()
            }]
        );

        let r = fasta(">a desc\nAC\nGT\n>b\nTT\n").unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!((r[0].id.as_str(), r[0].bases.as_str()), ("a", "ACGT"));
        assert_eq!((r[1].id.as_str(), r[1].bases.as_str()), ("b", "TT"));

        let r = fasta(">x\nac gt\n\n;note\nNN\n").unwrap();
        assert_eq!(r[0].bases, "acgtNN");
    }

    #[test]
    fn fasta_errors() {
        assert_eq!(fasta("ACGT\n"), Err(Error::MalformedFasta { line: 1 }));
        assert_eq!(
            fasta(">a\n>b\nAC\n"),
            Err(Error::MalformedFasta { line: 1 })
        );
        assert_eq!(
            fasta(">a\nAC\n>b\n"),
            Err(Error::MalformedFasta { line: 3 })
        );
    }

    #[test]
    fn fasta_round_trip() {
        let src = ">one\nACGTNacgt\nGG\n>two\nT\n";
        let recs = fasta(src).unwrap();
        let mut out = Vec::new();
        write_fasta(&recs, 4, &mut out).unwrap();
        assert_eq!(fasta(std::str::from_utf8(&out).unwrap()).unwrap(), recs);
    }

    #[test]
    fn gc_mapping() {
        let rec = DnaRecord {
            id: "r".into(),
            bases: "ACGT".into(),
        };
        let seq = map_to_sequence(&rec, &MappingSpec::Gc01, false).unwrap();
        assert_eq!(values(&seq), vec![0, 1, 1, 0]);
        assert!(seq.is_uniform());

        let rec = DnaRecord {
            id: "r".into(),
            bases: "AN".into(),
        };
        let seq = map_to_sequence(&rec, &MappingSpec::Gc01, false).unwrap();
        assert_eq!(values(&seq), vec![0, 0]);
        assert_eq!(
            map_to_sequence(&rec, &MappingSpec::Gc01, true).unwrap_err(),
            Error::UnknownSymbol {
                record: "r".into(),
                position: 2,
                symbol: 'N'
            }
        );
    }

    #[test]
    fn huang_mapping() {
        let mapping: MappingSpec = "huang:0.5".parse().unwrap();
        let rec = DnaRecord {
            id: "r".into(),
            bases: "GCAt".into(),
        };
        let seq = map_to_sequence(&rec, &mapping, false).unwrap();
        assert_eq!(seq.scale(), 1);
        assert_eq!(values(&seq), vec![5, 5, -5, -5]);

        let mapping: MappingSpec = "huang:0.25".parse().unwrap();
        let seq = map_to_sequence(&rec, &mapping, false).unwrap();
        assert_eq!(values(&seq), vec![75, 75, -25, -25]);

        assert!("huang:1.5".parse::<MappingSpec>().is_err());
        assert!("huang:-0.1".parse::<MappingSpec>().is_err());
        assert!("kmer".parse::<MappingSpec>().is_err());
        assert_eq!(
            "huang:1".parse::<MappingSpec>().unwrap(),
            MappingSpec::Huang {
                p: Decimal::from_int(1)
            }
        );
    }

    #[test]
    fn tsv_records() {
        let recs = parse_weighted_tsv("# c\n5\t1\n-1.5\t2\n\n3\t1\n".as_bytes()).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].id, "r1");
        let s = recs[0].to_sequence().unwrap();
        assert_eq!(s.scale(), 1);
        assert_eq!(s.item(2), WeightedItem::new(-15, 20));
        assert_eq!(recs[1].id, "r2");

        assert!(matches!(
            parse_weighted_tsv("5\n".as_bytes()),
            Err(Error::MalformedTsv { line: 1, .. })
        ));
        assert!(matches!(
            parse_weighted_tsv("1\t1\n5\tx\n".as_bytes()),
            Err(Error::MalformedTsv { line: 2, .. })
        ));
        let recs = parse_weighted_tsv("1\t0\n".as_bytes()).unwrap();
        assert_eq!(
            recs[0].to_sequence(),
            Err(Error::NonPositiveWeight { index: 1 })
        );
    }

    #[test]
    fn compression() {
        let s = WeightedSequence::uniform(&[1, 1, 1, 0, 0]).unwrap();
        let (c, ends) = compress_runs_with_map(&s);
        let items: Vec<_> = c.items().map(|it| (it.value, it.weight)).collect();
        assert_eq!(items, vec![(3, 3), (0, 2)]);
        assert_eq!(ends, vec![3, 5]);

        let s = WeightedSequence::uniform(&[1, 2, 1]).unwrap();
        assert_eq!(compress_runs(&s), s);
        let s = WeightedSequence::uniform(&[4]).unwrap();
        assert_eq!(compress_runs(&s), s);

        // (2,2) and (1,1) share density 1.
        let s = WeightedSequence::from_pairs(&[(2, 2), (1, 1), (0, 3)]).unwrap();
        let items: Vec<_> = compress_runs(&s)
            .items()
            .map(|it| (it.value, it.weight))
            .collect();
        assert_eq!(items, vec![(3, 3), (0, 3)]);
    }
}
