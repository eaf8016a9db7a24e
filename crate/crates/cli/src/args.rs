use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use hankel_core::exact::scalar::parse_scalar;
use hankel_core::exact::Scalar;
use hankel_core::hankel::PolyKind;
use hankel_core::ortho::SequenceFamily;
use hankel_core::staircase::Model;
use hankel_core::suites::Suite;

/// Largest `n`, `k` or term count accepted on the command line.
pub const MAX_INDEX: usize = 64;

#[derive(Parser, Debug)]
#[command(
    name = "hankel",
    version,
    about = "Exact shifted Hankel determinants, their closed forms, and staircase plane partitions"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the result to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Worker threads for parallel sweeps; defaults to one per core.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the first terms of a moment sequence.
    Moments {
        /// catalan, shifted-catalan, Mb, Mcap, central or middle.
        #[arg(long, value_parser = parse_family)]
        family: SequenceFamily,
        /// Parameter of the Mb and Mcap families, as `p` or `p/q`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_b)]
        b: Option<Scalar>,
        #[arg(long, default_value_t = 10, value_parser = parse_count)]
        count: usize,
    },

    /// Print closed-form polynomials in `b` and `x`.
    Poly {
        /// H, Hb, H2, V or h.
        #[arg(long, value_parser = parse_kind)]
        which: PolyKind,
        /// Index or inclusive range `lo..hi`.
        #[arg(long, value_parser = parse_range)]
        n: IndexRange,
        /// Substitute this value for `b`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_b)]
        b: Option<Scalar>,
        /// Substitute this value for `x`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_b)]
        x: Option<Scalar>,
    },

    /// Tabulate shifted Hankel determinants `det(a_{n+i+j})` of size `k`.
    Hankel {
        #[arg(long, value_parser = parse_family)]
        family: SequenceFamily,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_b)]
        b: Option<Scalar>,
        #[arg(long, value_parser = parse_range)]
        n: IndexRange,
        #[arg(long, value_parser = parse_range)]
        k: IndexRange,
    },

    /// Run a verification suite and emit its report.
    Verify {
        /// th1, th2, th4, th5, cor7, lemma8, eq1_6, h1-shift, th10,
        /// condensation, gf, basis, pp-count or bijection-roundtrip.
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, value_parser = parse_index)]
        n_max: Option<usize>,
        #[arg(long, value_parser = parse_index)]
        k_max: Option<usize>,
        /// Comma-separated `b` values for suites that sweep `b`.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',', value_parser = parse_b)]
        b: Option<Vec<Scalar>>,
        /// Brute-force limit on candidate path tuples.
        #[arg(long, default_value_t = 100_000)]
        cap: u64,
    },

    /// Count, and optionally list, plane partitions of staircase shape.
    EnumeratePp {
        #[arg(long, value_parser = parse_index)]
        n: usize,
        #[arg(long, value_parser = parse_index)]
        k: usize,
        /// Print every partition after the count.
        #[arg(long)]
        list: bool,
    },

    /// Map every partition to its path family and check the inverse.
    Bijection {
        #[arg(long, value_parser = parse_index)]
        n: usize,
        #[arg(long, value_parser = parse_index)]
        k: usize,
        /// dyck or hv.
        #[arg(long, value_parser = parse_model)]
        which: Model,
    },
}

/// Inclusive index range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexRange {
    pub lo: usize,
    pub hi: usize,
}

impl IndexRange {
    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }

    pub fn is_single(self) -> bool {
        self.lo == self.hi
    }
}

fn parse_index(s: &str) -> Result<usize, String> {
    let v: usize = s
        .trim()
        .parse()
        .map_err(|_| format!("{s:?} is not a nonnegative integer"))?;
    if v > MAX_INDEX {
        return Err(format!("{v} exceeds the maximum {MAX_INDEX}"));
    }
    Ok(v)
}

fn parse_count(s: &str) -> Result<usize, String> {
    let v = parse_index(s)?;
    if v == 0 {
        return Err("count must be at least 1".into());
    }
    Ok(v)
}

fn parse_range(s: &str) -> Result<IndexRange, String> {
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse_index(lo)?, parse_index(hi)?),
        None => {
            let v = parse_index(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(IndexRange { lo, hi })
}

fn parse_b(s: &str) -> Result<Scalar, String> {
    parse_scalar(s).map_err(|e| e.to_string())
}

fn via_from_str<T: FromStr>(s: &str) -> Result<T, String>
where
    T::Err: std::fmt::Display,
{
    s.parse().map_err(|e: T::Err| e.to_string())
}

fn parse_family(s: &str) -> Result<SequenceFamily, String> {
    via_from_str(s)
}

fn parse_kind(s: &str) -> Result<PolyKind, String> {
    via_from_str(s)
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    via_from_str(s)
}

fn parse_model(s: &str) -> Result<Model, String> {
    via_from_str(s)
}
