//! Partial shuffles Π(a,b), the shared pattern σ_{a,b}, and the marked
//! element that drives the S-map.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{PatternBasis, Permutation, Plan};

/// The pair (a, b) indexing a partial shuffle; a ≥ 1, b ≥ 0, a + b ≥ 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShuffleParams {
    pub a: usize,
    pub b: usize,
}

impl ShuffleParams {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a < 1 || a + b < 2 {
            return Err(Error::params(format!(
                "partial shuffle needs a >= 1 and a + b >= 2, got a = {a}, b = {b}"
            )));
        }
        Ok(ShuffleParams { a, b })
    }

    pub fn size(self) -> usize {
        self.a + self.b
    }

    /// (a−1, b+1), the target of the S-map. Requires a ≥ 2.
    pub fn lowered(self) -> Result<Self> {
        self.require_s_domain()?;
        Ok(ShuffleParams {
            a: self.a - 1,
            b: self.b + 1,
        })
    }

    /// Every split (c, d) with c ≥ 1 and c + d = size, from (size, 0) down to (1, size − 1).
    pub fn splits(size: usize) -> Result<Vec<Self>> {
        if size < 2 {
            return Err(Error::params(format!("shuffle size must be >= 2, got {size}")));
        }
        Ok((1..=size).rev().map(|a| ShuffleParams { a, b: size - a }).collect())
    }

    pub(crate) fn require_s_domain(self) -> Result<()> {
        if self.a < 2 {
            return Err(Error::params(format!(
                "the S-map is defined for a >= 2, got a = {}",
                self.a
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ShuffleParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Π(a,b): value a inserted into the increasing word on [a+b]∖{a} at every
/// position except the one giving the identity.
pub fn partial_shuffle(p: ShuffleParams) -> PatternBasis {
    let a = p.a as u32;
    let rest: Vec<u32> = (1..=p.size() as u32).filter(|&v| v != a).collect();
    (0..p.size())
        .filter(|&slot| slot != p.a - 1)
        .map(|slot| {
            let mut values = rest.clone();
            values.insert(slot, a);
            Permutation::from_vec_unchecked(values)
        })
        .collect()
}

/// σ_{a,b}: the identity of size a+b with a−1 and a swapped.
pub fn sigma(p: ShuffleParams) -> Result<Permutation> {
    p.require_s_domain()?;
    let mut values: Vec<u32> = (1..=p.size() as u32).collect();
    values.swap(p.a - 2, p.a - 1);
    Ok(Permutation::from_vec_unchecked(values))
}

/// The smallest element acting as the a in a Π(a−1,b+1) occurrence, and
/// the value interval of the a−1 elements associated with it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShuffleMark {
    pub underline_a_value: u32,
    /// 1-indexed.
    pub underline_a_position: usize,
    pub assoc_low: u32,
    pub assoc_high: u32,
}

impl ShuffleMark {
    /// Values moved by the S-map: [assoc_low, underline_a_value].
    pub fn rotated_range(&self) -> std::ops::RangeInclusive<u32> {
        self.assoc_low..=self.underline_a_value
    }
}

/// Precompiled searches for the roles of a and a−1 in Π(a−1,b+1).
#[derive(Debug, Clone)]
pub(crate) struct MarkFinder {
    params: ShuffleParams,
    // per pattern of Π(a−1,b+1): plan pinned at the a, plan pinned at (a, a−1)
    as_a: Vec<Plan>,
    as_pair: Vec<Plan>,
}

impl MarkFinder {
    pub(crate) fn new(params: ShuffleParams) -> Result<Self> {
        let lower = params.lowered()?;
        let a = params.a as u32;
        let basis = partial_shuffle(lower);
        let mut as_a = Vec::new();
        let mut as_pair = Vec::new();
        for q in basis.patterns() {
            let ia = q.position_of(a).expect("pattern has value a") - 1;
            let ib = q.position_of(a - 1).expect("pattern has value a-1") - 1;
            as_a.push(Plan::new(q.values(), &[ia]));
            as_pair.push(Plan::new(q.values(), &[ia, ib]));
        }
        Ok(MarkFinder { params, as_a, as_pair })
    }

    /// Whether the element at 0-indexed `pos` acts as the a in some Π(a−1,b+1) occurrence.
    pub(crate) fn acts_as_a(&self, values: &[u32], pos: usize) -> bool {
        self.as_a.iter().any(|plan| plan.exists(values, &[pos]))
    }

    pub(crate) fn find(&self, pi: &Permutation) -> Option<ShuffleMark> {
        let values = pi.values();
        let n = values.len();
        if n < self.params.size() {
            return None;
        }
        let (rise_into, rise_from) = increasing_runs(values);
        let need_below = self.params.a - 2;
        let need_above = self.params.b + 1;
        let mut by_value = vec![0usize; n + 1];
        for (i, &v) in values.iter().enumerate() {
            by_value[v as usize] = i;
        }

        let (ua_value, ua_pos) = (1..=n as u32).find_map(|v| {
            let i = by_value[v as usize];
            let feasible = rise_from[i] >= need_above && rise_into[i] >= need_below;
            (feasible && self.acts_as_a(values, i)).then_some((v, i))
        })?;

        let assoc_low = (1..ua_value)
            .find(|&w| self.is_associated(values, ua_pos, by_value[w as usize]))
            .expect("an element acting as a has an associated a-1");
        Some(ShuffleMark {
            underline_a_value: ua_value,
            underline_a_position: ua_pos + 1,
            assoc_low,
            assoc_high: ua_value - 1,
        })
    }

    fn is_associated(&self, values: &[u32], a_pos: usize, pos: usize) -> bool {
        self.as_pair.iter().any(|plan| plan.exists(values, &[a_pos, pos]))
    }

    /// Every value acting as an a−1 with the element at 1-indexed `a_position` as the a.
    pub(crate) fn associated_values(&self, pi: &Permutation, a_position: usize) -> BTreeSet<u32> {
        let values = pi.values();
        (0..values.len())
            .filter(|&i| i != a_position - 1 && self.is_associated(values, a_position - 1, i))
            .map(|i| values[i])
            .collect()
    }
}

// rise_into[i]: longest increasing run strictly southwest of i (not counting i);
// rise_from[i]: longest increasing run starting at i going northeast (counting i)
fn increasing_runs(values: &[u32]) -> (Vec<usize>, Vec<usize>) {
    let n = values.len();
    let mut ending = vec![1usize; n];
    let mut rise_into = vec![0usize; n];
    for i in 0..n {
        for j in 0..i {
            if values[j] < values[i] {
                rise_into[i] = rise_into[i].max(ending[j]);
            }
        }
        ending[i] = rise_into[i] + 1;
    }
    let mut rise_from = vec![1usize; n];
    for i in (0..n).rev() {
        for j in i + 1..n {
            if values[j] > values[i] {
                rise_from[i] = rise_from[i].max(rise_from[j] + 1);
            }
        }
    }
    (rise_into, rise_from)
}

/// The mark of `pi` for parameters (a, b), or `None` when `pi` avoids Π(a−1,b+1).
pub fn find_mark(pi: &Permutation, p: ShuffleParams) -> Result<Option<ShuffleMark>> {
    Ok(MarkFinder::new(p)?.find(pi))
}

/// Values acting as an associated a−1 for the a at 1-indexed `a_position`,
/// found by exhaustive occurrence search.
pub fn associated_values(pi: &Permutation, p: ShuffleParams, a_position: usize) -> Result<BTreeSet<u32>> {
    Ok(MarkFinder::new(p)?.associated_values(pi, a_position))
}

/// 1-indexed positions of the host elements that play pattern value `role`
/// in at least one occurrence of a pattern from `basis`.
pub fn positions_acting_as(host: &Permutation, basis: &PatternBasis, role: u32) -> BTreeSet<usize> {
    let plans: Vec<Plan> = basis
        .patterns()
        .iter()
        .filter_map(|q| q.position_of(role).map(|i| Plan::new(q.values(), &[i - 1])))
        .collect();
    (0..host.len())
        .filter(|&i| plans.iter().any(|plan| plan.exists(host.values(), &[i])))
        .map(|i| i + 1)
        .collect()
}
