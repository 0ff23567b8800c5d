//! Partial shuffle pattern classes.
//!
//! A partial shuffle Π(a,b) is the set of size-(a+b) patterns obtained by
//! moving the value a to every other slot of the identity. This crate
//! builds those bases, implements the S-map that carries Av_n(Π(a,b)) onto
//! Av_n(Π(a−1,b+1)), enumerates avoidance classes with and without a
//! decreasing pattern, and fits their eventually polynomial counts exactly.
//!
//! Everything is exact integer arithmetic. Sweeps take a [`Parallelism`]
//! and return identical results for every setting.

pub mod analysis;
pub mod enumerate;
pub mod error;
pub mod par;
pub mod peg;
pub mod perm;
pub mod shuffles;
pub mod smap;

pub use enumerate::{
    check_wilf, count_avoiders, enumerate_avoiders, shuffle_basis, Avoiders, CountSequence, WilfReport,
};
pub use error::{Error, Result};
pub use par::Parallelism;
pub use perm::{Occurrence, PatternBasis, Permutation};
pub use shuffles::{find_mark, partial_shuffle, sigma, ShuffleMark, ShuffleParams};
pub use smap::{check_injectivity, check_lemmas, s_apply, s_iterate, SMap, SStep};
