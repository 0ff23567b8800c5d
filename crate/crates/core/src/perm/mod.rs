//! Permutations in one-line notation, pattern containment and the
//! elementary statistics used by the rest of the crate.
//!
//! Positions are 1-indexed in every public signature.

mod matching;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
pub(crate) use matching::Plan;

/// Largest permutation size the crate accepts.
pub const MAX_SIZE: usize = 64;

/// A permutation of 1..n written as the sequence of its values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    values: Vec<u32>,
}

/// Strictly increasing 1-indexed host positions of a pattern occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Occurrence {
    pub positions: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        if n > MAX_SIZE {
            return Err(Error::input(format!("size {n} exceeds {MAX_SIZE}")));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::input(format!("{values:?} is not a rearrangement of 1..{n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    /// The increasing permutation 1 2 … k.
    pub fn iota(k: usize) -> Self {
        Permutation {
            values: (1..=k as u32).collect(),
        }
    }

    /// The decreasing permutation k … 2 1.
    pub fn delta(k: usize) -> Self {
        Permutation {
            values: (1..=k as u32).rev().collect(),
        }
    }

    /// The permutation order-isomorphic to `seq`, whose entries must be distinct.
    pub fn standardize<T: Ord + Copy>(seq: &[T]) -> Self {
        let mut idx: Vec<usize> = (0..seq.len()).collect();
        idx.sort_by_key(|&i| seq[i]);
        let mut values = vec![0; seq.len()];
        for (rank, i) in idx.into_iter().enumerate() {
            values[i] = rank as u32 + 1;
        }
        Permutation { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    /// Value at 1-indexed position `pos`.
    pub fn value_at(&self, pos: usize) -> u32 {
        self.values[pos - 1]
    }

    /// 1-indexed position of `value`.
    pub fn position_of(&self, value: u32) -> Option<usize> {
        self.values.iter().position(|&v| v == value).map(|i| i + 1)
    }

    pub fn reverse(&self) -> Self {
        Permutation {
            values: self.values.iter().rev().copied().collect(),
        }
    }

    pub fn complement(&self) -> Self {
        let n = self.len() as u32;
        Permutation {
            values: self.values.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    pub fn reverse_complement(&self) -> Self {
        let n = self.len() as u32;
        Permutation {
            values: self.values.iter().rev().map(|&v| n + 1 - v).collect(),
        }
    }

    pub fn contains(&self, pattern: &Permutation) -> bool {
        pattern.len() <= self.len() && Plan::new(&pattern.values, &[]).exists(&self.values, &[])
    }

    pub fn find_occurrence(&self, pattern: &Permutation) -> Option<Occurrence> {
        if pattern.len() > self.len() {
            return None;
        }
        Plan::new(&pattern.values, &[])
            .find(&self.values, &[])
            .map(|pos| Occurrence {
                positions: pos.into_iter().map(|p| p + 1).collect(),
            })
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains(pattern)
    }

    pub fn avoids_all(&self, basis: &PatternBasis) -> bool {
        basis.patterns.iter().all(|p| self.avoids(p))
    }

    /// Positions i in 1..n-1 with π_i > π_{i+1}.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        self.values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Length of the longest strictly decreasing subsequence.
    pub fn longest_decreasing(&self) -> usize {
        longest_run(&self.values, |x, y| x > y)
    }

    pub fn longest_increasing(&self) -> usize {
        longest_run(&self.values, |x, y| x < y)
    }

    /// Compact digit form, available when n ≤ 9.
    pub fn to_compact(&self) -> Option<String> {
        (self.len() <= 9).then(|| self.values.iter().map(|v| v.to_string()).collect())
    }

    /// Compact form when it exists, canonical form otherwise.
    pub fn to_short_string(&self) -> String {
        self.to_compact().unwrap_or_else(|| self.to_string())
    }

    /// All permutations of size n in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((1..=n as u32).collect()),
        }
    }
}

// quadratic scan: best[i] is the longest chain ending at i
fn longest_run(values: &[u32], precedes: impl Fn(u32, u32) -> bool) -> usize {
    let mut best = vec![1usize; values.len()];
    for i in 0..values.len() {
        for j in 0..i {
            if precedes(values[j], values[i]) && best[j] + 1 > best[i] {
                best[i] = best[j] + 1;
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Iterator over S_n in lexicographic order.
#[derive(Debug, Clone)]
pub struct AllPermutations {
    next: Option<Vec<u32>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { values: current })
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.to_short_string())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts "5 8 2 9 1 6 7 4 3" and, for n ≤ 9, "582916743".
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        let values: Vec<u32> = if trimmed.contains(char::is_whitespace) {
            trimmed
                .split_whitespace()
                .map(|tok| tok.parse::<u32>().map_err(|_| err("non-numeric entry")))
                .collect::<Result<_>>()?
        } else {
            if !trimmed.chars().all(|c| c.is_ascii_digit()) {
                return Err(err("expected digits"));
            }
            if trimmed.len() > 9 {
                return Err(err("compact form is limited to n <= 9; separate values with spaces"));
            }
            trimmed.chars().map(|c| c.to_digit(10).unwrap()).collect()
        };
        Permutation::new(values).map_err(|e| err(&e.to_string()))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite set of patterns, deduplicated and sorted by size then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PatternBasis {
    patterns: Vec<Permutation>,
}

impl PatternBasis {
    pub fn new(patterns: impl IntoIterator<Item = Permutation>) -> Self {
        let mut patterns: Vec<Permutation> = patterns.into_iter().collect();
        patterns.sort_by(|p, q| p.len().cmp(&q.len()).then_with(|| p.values.cmp(&q.values)));
        patterns.dedup();
        PatternBasis { patterns }
    }

    pub fn empty() -> Self {
        PatternBasis::default()
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn contains_pattern(&self, p: &Permutation) -> bool {
        self.patterns.contains(p)
    }

    pub fn with(&self, extra: Permutation) -> Self {
        PatternBasis::new(self.patterns.iter().cloned().chain(std::iter::once(extra)))
    }

    pub fn union(&self, other: &PatternBasis) -> Self {
        PatternBasis::new(self.patterns.iter().chain(&other.patterns).cloned())
    }

    pub fn reverse_complement(&self) -> Self {
        PatternBasis::new(self.patterns.iter().map(Permutation::reverse_complement))
    }

    /// Pairs (i, j) where pattern i contains pattern j; empty for a proper basis.
    pub fn redundancies(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, p) in self.patterns.iter().enumerate() {
            for (j, q) in self.patterns.iter().enumerate() {
                if i != j && p.contains(q) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_antichain(&self) -> bool {
        self.redundancies().is_empty()
    }
}

impl FromIterator<Permutation> for PatternBasis {
    fn from_iter<I: IntoIterator<Item = Permutation>>(iter: I) -> Self {
        PatternBasis::new(iter)
    }
}

impl fmt::Display for PatternBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.patterns.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&p.to_short_string())?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for PatternBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PatternBasis{self}")
    }
}

impl FromStr for PatternBasis {
    type Err = Error;

    /// Comma-separated patterns, each in either permutation text form.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        if s.trim().is_empty() {
            return Ok(PatternBasis::empty());
        }
        s.split(',').map(str::parse).collect()
    }
}
