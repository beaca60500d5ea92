use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug, Clone)]
#[command(
    name = "iring",
    version,
    about = "Relations, Groebner bases and characteristic classes of the invariant ring <a, b, c>"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Verb,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Directory holding cached Groebner bases (ideal_g{genus}.json).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChernTarget {
    /// the quotient bundle pulled back along the embedding
    Q,
    /// the tangent bundle of the moduli space
    Ng,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Verb {
    /// Relation triple by recursion and by Taylor coefficients
    Relations(GenusArg),
    /// Reduced Groebner basis and its initial ideal
    Groebner(GenusArg),
    /// Normal form of a polynomial modulo the relation ideal
    Nf {
        #[command(flatten)]
        genus: GenusArg,
        #[arg(long)]
        poly: String,
    },
    /// Standard monomials of the quotient
    Basis(GenusArg),
    /// Hilbert series of the quotient by weighted degree
    Hilbert(GenusArg),
    /// Coefficient of the socle monomial in the normal form of a top-degree monomial
    Pairing {
        #[command(flatten)]
        genus: GenusArg,
        #[arg(long)]
        mono: String,
    },
    /// Graded components of a total Chern class
    Chern {
        #[command(flatten)]
        genus: GenusArg,
        #[arg(long, value_enum, default_value_t = ChernTarget::Q)]
        target: ChernTarget,
        /// Highest weighted degree to expand (default g+2 for q, 3g-3 for ng)
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Even Betti numbers by recursion and by enumeration
    Betti(GenusArg),
    /// Run every consistency check over a genus range
    Verify(GenusArg),
}

#[derive(Args, Debug, Clone)]
pub struct GenusArg {
    /// Genus `g` or inclusive range `lo..hi`
    #[arg(short = 'g', long = "genus")]
    pub genus: GenusRange,
}

/// Inclusive range of genera.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenusRange {
    pub lo: u32,
    pub hi: u32,
}

impl GenusRange {
    pub fn single(g: u32) -> Self {
        GenusRange { lo: g, hi: g }
    }

    pub fn is_single(&self) -> bool {
        self.lo == self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

impl fmt::Display for GenusRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_single() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

impl FromStr for GenusRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid genus {t:?}"))
        };
        let range = match s.split_once("..") {
            Some((lo, hi)) => {
                let hi = hi.strip_prefix('=').unwrap_or(hi);
                GenusRange {
                    lo: num(lo)?,
                    hi: num(hi)?,
                }
            }
            None => GenusRange::single(num(s)?),
        };
        if range.lo < 1 {
            return Err("genus must be at least 1".into());
        }
        if range.lo > range.hi {
            return Err(format!("empty genus range {s}"));
        }
        Ok(range)
    }
}
