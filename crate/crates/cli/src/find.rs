use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::str::FromStr;

use clap::{Args, ValueEnum};
use maxseg::bio::{
    compress_runs_with_map, map_to_sequence, parse_fasta, parse_weighted_tsv, MappingSpec,
};
use maxseg::fixed::{render_ratio, render_scaled, MAX_SCALE};
use maxseg::{
    compute_bounds, solve, Decimal, Error, MaxWidthSweep, MinWidthSweep, Result, SolveRequest,
    WeightedSequence,
};
use rayon::prelude::*;

use crate::{thread_pool, EXIT_ERROR, EXIT_INFEASIBLE, EXIT_OK};

pub const HEADER: &str = "record_id\tstart\tend\twidth\tsum\tdensity";
const DENSITY_DIGITS: u32 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Fasta,
    Tsv,
}

/// `--U` value: a width or `max` for no upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaxBound {
    Unbounded,
    Width(Decimal),
}

impl FromStr for MaxBound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("max") {
            Ok(MaxBound::Unbounded)
        } else {
            s.parse().map(MaxBound::Width)
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct FindArgs {
    /// Input file, or `-` for standard input.
    #[arg(long, default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value = "fasta")]
    pub format: InputFormat,
    /// Base scoring for FASTA input: `gc` or `huang:P`.
    #[arg(long)]
    pub mapping: Option<MappingSpec>,
    /// Minimum segment width.
    #[arg(long = "L", allow_negative_numbers = true)]
    pub min_width: Decimal,
    /// Maximum segment width, or `max`.
    #[arg(long = "U", default_value = "max", allow_negative_numbers = true)]
    pub max_width: MaxBound,
    /// Merge runs of equal-density items before searching.
    #[arg(long)]
    pub compress: bool,
    /// Reject ambiguity codes in DNA input.
    #[arg(long)]
    pub strict: bool,
    /// Write the sweep pointer tables of each record to standard error.
    #[arg(long)]
    pub debug_dump: bool,
    /// Print densities as exact `sum/width` fractions.
    #[arg(long)]
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentReport {
    pub record_id: String,
    pub start: usize,
    pub end: usize,
    /// Raw fixed-point values at `scale`.
    pub width: i64,
    pub sum: i64,
    pub scale: u32,
}

impl SegmentReport {
    pub fn render(&self, exact: bool) -> String {
        let width = render_scaled(self.width, self.scale);
        let sum = render_scaled(self.sum, self.scale);
        let density = if exact {
            format!("{sum}/{width}")
        } else {
            render_ratio(self.sum, self.width, DENSITY_DIGITS)
        };
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.record_id, self.start, self.end, width, sum, density
        )
    }
}

enum Record {
    Dna(maxseg::bio::DnaRecord),
    Weighted(maxseg::bio::TsvRecord),
}

impl Record {
    fn id(&self) -> &str {
        match self {
            Record::Dna(r) => &r.id,
            Record::Weighted(r) => &r.id,
        }
    }
}

/// Outcome of one record plus its optional pointer dump.
struct Outcome {
    id: String,
    report: Result<SegmentReport>,
    dump: Vec<u8>,
}

pub fn cmd_find<R: BufRead, W: Write, E: Write>(
    args: &FindArgs,
    stdin: R,
    out: &mut W,
    err: &mut E,
) -> i32 {
    let records = match read_records(args, stdin) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_ERROR;
        }
    };

    let outcomes: Vec<Outcome> = thread_pool().install(|| {
        records
            .par_iter()
            .map(|rec| {
                let mut dump = Vec::new();
                let report = sequence_of(rec, args)
                    .and_then(|seq| find_in_record(rec.id(), seq, args, &mut dump));
                Outcome {
                    id: rec.id().to_string(),
                    report,
                    dump,
                }
            })
            .collect()
    });

    let mut status = EXIT_OK;
    let written = (|| -> io::Result<()> {
        writeln!(out, "{HEADER}")?;
        for o in &outcomes {
            err.write_all(&o.dump)?;
            match &o.report {
                Ok(r) => writeln!(out, "{}", r.render(args.exact))?,
                Err(e) => {
                    writeln!(err, "record {}: {e}", o.id)?;
                    status = match (status, e) {
                        (EXIT_ERROR, _) => EXIT_ERROR,
                        (_, Error::InfeasibleWidthWindow) => EXIT_INFEASIBLE,
                        _ => EXIT_ERROR,
                    };
                }
            }
        }
        Ok(())
    })();
    if let Err(e) = written {
        let _ = writeln!(err, "error: Io: {e}");
        return EXIT_ERROR;
    }
    status
}

fn read_records<R: BufRead>(args: &FindArgs, stdin: R) -> Result<Vec<Record>> {
    if args.format == InputFormat::Tsv
        && args.mapping.is_some_and(|m| m != MappingSpec::TsvWeighted)
    {
        return Err(Error::InvalidMapping(
            "--mapping applies to fasta input only".into(),
        ));
    }
    let reader: Box<dyn BufRead + '_> = if args.input == "-" {
        Box::new(stdin)
    } else {
        let file =
            File::open(&args.input).map_err(|e| Error::Io(format!("{}: {e}", args.input)))?;
        Box::new(BufReader::new(file))
    };
    Ok(match args.format {
        InputFormat::Fasta => parse_fasta(reader)?.into_iter().map(Record::Dna).collect(),
        InputFormat::Tsv => parse_weighted_tsv(reader)?
            .into_iter()
            .map(Record::Weighted)
            .collect(),
    })
}

fn sequence_of(rec: &Record, args: &FindArgs) -> Result<WeightedSequence> {
    match rec {
        Record::Dna(r) => {
            map_to_sequence(r, &args.mapping.unwrap_or(MappingSpec::Gc01), args.strict)
        }
        Record::Weighted(r) => r.to_sequence(),
    }
}

/// Solves one record in the common scale of its items and the width bounds.
pub fn find_in_record(
    id: &str,
    seq: WeightedSequence,
    args: &FindArgs,
    dump: &mut Vec<u8>,
) -> Result<SegmentReport> {
    let mut scale = seq.scale().max(args.min_width.significant_places());
    if let MaxBound::Width(u) = args.max_width {
        scale = scale.max(u.significant_places());
    }
    if scale > MAX_SCALE {
        return Err(Error::NumericRange(format!(
            "scale {scale} exceeds {MAX_SCALE}"
        )));
    }
    let seq = if scale == seq.scale() {
        seq
    } else {
        seq.rescaled(scale)?
    };
    let min_width = args.min_width.to_scaled(scale)?;
    let max_width = match args.max_width {
        MaxBound::Unbounded => None,
        MaxBound::Width(u) => Some(u.to_scaled(scale)?),
    };

    if args.debug_dump {
        write_dump(id, &seq, dump).map_err(Error::from)?;
    }

    let (start, end) = if args.compress {
        let (packed, run_ends) = compress_runs_with_map(&seq);
        let seg = solve(&SolveRequest::new(&packed, min_width, max_width))?.segment;
        let start = if seg.start == 1 {
            1
        } else {
            run_ends[seg.start - 2] + 1
        };
        (start, run_ends[seg.end - 1])
    } else {
        let seg = solve(&SolveRequest::new(&seq, min_width, max_width))?.segment;
        (seg.start, seg.end)
    };
    Ok(SegmentReport {
        record_id: id.to_string(),
        start,
        end,
        width: seq.width(start, end),
        sum: seq.sum(start, end),
        scale,
    })
}

fn write_dump(id: &str, seq: &WeightedSequence, out: &mut Vec<u8>) -> io::Result<()> {
    let n = seq.len();
    if n < 2 {
        return Ok(());
    }
    let bounds = compute_bounds(seq, 1, None).map_err(io::Error::other)?;
    writeln!(out, "# {id}: suffix partition pointers over [2, {n}]")?;
    MinWidthSweep::new(seq, &bounds, 1, n)
        .map_err(io::Error::other)?
        .write_tsv(out)?;
    writeln!(out, "# {id}: prefix partition pointers over [2, {n}]")?;
    MaxWidthSweep::new(seq, &bounds, 1, n)
        .map_err(io::Error::other)?
        .write_tsv(out)
}
