use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "pshuffle",
    version,
    about = "Partial shuffle pattern classes: enumeration and verification"
)]
pub struct Cli {
    /// Worker threads for exhaustive sweeps (1 runs sequentially; default uses every core)
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Allow sizes beyond the desk-scale limits
    #[arg(long, global = true)]
    pub force: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the partial shuffle basis Π(a,b), or σ_{a,b} with --sigma
    Shuffle {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        sigma: bool,
    },
    /// Apply the S-map once, or iterate it to a fixed point with --iterate
    Smap {
        #[arg(long)]
        perm: String,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        iterate: bool,
    },
    /// Count Av_n(basis) for a range of n
    Count {
        /// Explicit basis, e.g. "132,312,321"
        #[arg(long, conflicts_with_all = ["a", "b", "delta"])]
        basis: Option<String>,
        #[arg(long, requires = "b")]
        a: Option<usize>,
        #[arg(long, requires = "a")]
        b: Option<usize>,
        /// Add δ_m to the partial shuffle basis
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        min_n: usize,
    },
    /// Compare counts across every split a + b = size
    Wilf {
        #[arg(long, required = true, value_delimiter = ',')]
        size: Vec<usize>,
        /// One bound for all sizes, or one per size
        #[arg(long, required = true, value_delimiter = ',')]
        max_n: Vec<usize>,
        #[arg(long)]
        delta: Option<usize>,
    },
    /// Fit counts of Av_n(Π(a,b), δ_m) with a polynomial in the binomial basis
    Fit {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        max_n: usize,
        /// First n to fit from; by default the smallest one that works
        #[arg(long)]
        n_start: Option<usize>,
    },
    /// Check the degree (a+b-2)(m-2) and, for m = 3, the Catalan leading coefficient
    Degree {
        /// Cases written SIZE:M, comma-separated
        #[arg(long, required = true, value_delimiter = ',')]
        case: Vec<Pair>,
        #[arg(long)]
        max_n: usize,
    },
    /// Compare Av_n(Π(a,b), δ_3) with the conjectured polynomial
    Conjecture {
        #[arg(long, value_delimiter = ',', required_unless_present = "a", conflicts_with = "a")]
        sum: Vec<usize>,
        #[arg(long, requires = "b")]
        a: Option<usize>,
        #[arg(long, requires = "a")]
        b: Option<usize>,
        /// One bound for all sums, or one per sum
        #[arg(long, required = true, value_delimiter = ',')]
        max_n: Vec<usize>,
        /// First n to compare; defaults to 2(a+b-2)+1, or to --max-n when that is smaller
        #[arg(long)]
        min_n: Option<usize>,
    },
    /// Run the S-map lemma checks over all of S_n
    VerifyLemmas(Sweep),
    /// Check that S^(n-a) maps Av_n(Π(a,b)) onto Av_n(Π(a-1,b+1))
    Bijection(Sweep),
    /// Count bounded-sum sequences against the Catalan numbers
    Catalan {
        #[arg(long)]
        max_k: usize,
        /// List the sequences of this length
        #[arg(long)]
        witnesses: Option<usize>,
    },
    /// Inflate a permutation by a list of permutations
    Inflate {
        #[arg(long)]
        base: String,
        /// Comma-separated parts, one per entry of the base
        #[arg(long, required = true, value_delimiter = ',')]
        parts: Vec<String>,
    },
    /// Check that a peg permutation's grid class avoids Π(a,b) and δ_m
    Peg {
        /// Peg in text form, e.g. "3+ 1. 2-"
        #[arg(long)]
        peg: String,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        max_n: usize,
    },
    /// Build the extremal peg with (a+b-2)(m-2)+1 free slots and check it
    FreeSlots {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        max_n: usize,
    },
    /// Largest permutation avoiding both ι_p and δ_q
    Extremal {
        #[arg(long, required = true, value_delimiter = ',')]
        p: Vec<usize>,
        #[arg(long, required = true, value_delimiter = ',')]
        q: Vec<usize>,
    },
    /// Compare the pruned enumerator with filtering all of S_n
    Oracle {
        /// Explicit basis; repeat the flag for several
        #[arg(long)]
        basis: Vec<String>,
        /// Partial shuffle sizes; every split is included
        #[arg(long, value_delimiter = ',')]
        size: Vec<usize>,
        /// Also include each shuffle basis with these δ_m added
        #[arg(long, value_delimiter = ',')]
        delta: Vec<usize>,
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Params {
    #[arg(long)]
    pub a: usize,
    #[arg(long)]
    pub b: usize,
}

#[derive(Args, Debug)]
pub struct Sweep {
    /// Parameter pairs written A:B, comma-separated
    #[arg(long, value_delimiter = ',', required_unless_present = "a", conflicts_with = "a")]
    pub pair: Vec<Pair>,
    #[arg(long, requires = "b")]
    pub a: Option<usize>,
    #[arg(long, requires = "a")]
    pub b: Option<usize>,
    /// A single n
    #[arg(long, required_unless_present = "max_n", conflicts_with = "max_n")]
    pub n: Option<usize>,
    /// Every n from 0 up to this bound
    #[arg(long)]
    pub max_n: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pair(pub usize, pub usize);

impl FromStr for Pair {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (x, y) = s.split_once(':').ok_or_else(|| format!("expected X:Y, got {s:?}"))?;
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
        Ok(Pair(parse(x)?, parse(y)?))
    }
}
