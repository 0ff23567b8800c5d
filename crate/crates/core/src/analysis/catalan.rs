//! Catalan numbers, the transposed Catalan triangle, and the sequences with
//! bounded partial sums that the Catalan numbers count.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::analysis::poly::binomial;
use crate::error::{Error, Result};

/// C_k = C(2k, k) / (k + 1).
pub fn catalan(k: usize) -> Result<i128> {
    let mut c: i128 = 1;
    for i in 0..k as i128 {
        // C_{i+1} = C_i · 2(2i+1) / (i+2)
        c = c.checked_mul(2 * (2 * i + 1)).ok_or(Error::ArithmeticOverflow)? / (i + 2);
    }
    Ok(c)
}

/// T_{p,q} = q · C(2p − q, p) / (2p − q), for 1 ≤ q ≤ p.
pub fn transposed_catalan(p: usize, q: usize) -> Result<i128> {
    if q < 1 || q > p {
        return Err(Error::params(format!(
            "transposed Catalan entry needs 1 <= q <= p, got p = {p}, q = {q}"
        )));
    }
    let top = (2 * p - q) as i128;
    let b = binomial(top, p)?;
    Ok(b.checked_mul(q as i128).ok_or(Error::ArithmeticOverflow)? / top)
}

/// Nonnegative integers a_1 … a_k with a_1 + … + a_j < j for every j.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundedSumSequence {
    terms: Vec<u32>,
}

impl BoundedSumSequence {
    pub fn new(terms: Vec<u32>) -> Result<Self> {
        let mut sum = 0u64;
        for (j, &t) in terms.iter().enumerate() {
            sum += u64::from(t);
            if sum > j as u64 {
                return Err(Error::input(format!(
                    "{terms:?}: partial sum {sum} at j = {} is not below j",
                    j + 1
                )));
            }
        }
        Ok(BoundedSumSequence { terms })
    }

    pub fn terms(&self) -> &[u32] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for BoundedSumSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.iter().all(|&t| t < 10) {
            self.terms.iter().try_for_each(|t| write!(f, "{t}"))
        } else {
            let parts: Vec<String> = self.terms.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(" "))
        }
    }
}

impl Serialize for BoundedSumSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Largest k for which [`count_bounded_sequences`] returns the sequences themselves.
pub const WITNESS_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundedCount {
    pub k: usize,
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<BoundedSumSequence>>,
}

/// Counts the bounded-sum sequences of length k by exhaustive search, listing them for small k.
pub fn count_bounded_sequences(k: usize) -> BoundedCount {
    fn walk(k: usize, terms: &mut Vec<u32>, sum: u32, count: &mut u64, keep: &mut Option<Vec<BoundedSumSequence>>) {
        let j = terms.len() as u32 + 1;
        if terms.len() == k {
            *count += 1;
            if let Some(list) = keep {
                list.push(BoundedSumSequence { terms: terms.clone() });
            }
            return;
        }
        for t in 0..j - sum {
            terms.push(t);
            walk(k, terms, sum + t, count, keep);
            terms.pop();
        }
    }
    let mut count = 0;
    let mut witnesses = (k <= WITNESS_LIMIT).then(Vec::new);
    walk(k, &mut Vec::with_capacity(k), 0, &mut count, &mut witnesses);
    BoundedCount { k, count, witnesses }
}

/// b_j = 1 + a_1 + … + a_j.
pub fn a_to_b_sequence(s: &BoundedSumSequence) -> Vec<u32> {
    s.terms
        .iter()
        .scan(1u32, |acc, &t| {
            *acc += t;
            Some(*acc)
        })
        .collect()
}

/// Inverse of [`a_to_b_sequence`]; `b` must satisfy 1 ≤ b_1 ≤ … ≤ b_k and b_j ≤ j.
pub fn b_to_a_sequence(b: &[u32]) -> Result<BoundedSumSequence> {
    for (j, &bj) in b.iter().enumerate() {
        let prev = if j == 0 { 1 } else { b[j - 1] };
        if bj < prev || bj as usize > j + 1 {
            return Err(Error::input(format!(
                "{b:?} is not a valid b-sequence at j = {}",
                j + 1
            )));
        }
    }
    let terms = b
        .iter()
        .enumerate()
        .map(|(j, &bj)| if j == 0 { 0 } else { bj - b[j - 1] })
        .collect();
    BoundedSumSequence::new(terms)
}
