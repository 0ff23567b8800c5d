//! Pruned backtracking over Av_n(Π).
//!
//! Permutations are grown left to right from the unused values in increasing
//! order, so the traversal is lexicographic. Containment is monotone under
//! extension: once a prefix contains a basis pattern, every extension does
//! too, so a prefix is cut as soon as its newest entry completes an
//! occurrence. Only occurrences ending at the newest entry are searched.
//!
//! Parallel runs split the tree into the subtrees below short prefixes and
//! merge their results in prefix order.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::par::{map_ordered, Parallelism};
use crate::perm::{PatternBasis, Permutation, Plan, MAX_SIZE};
use crate::shuffles::{partial_shuffle, ShuffleParams};

/// A compiled basis ready for enumeration.
#[derive(Debug, Clone)]
pub struct Avoiders {
    basis: PatternBasis,
    // plans with the last pattern entry pinned, ordered by pattern length
    plans: Vec<Plan>,
    has_empty: bool,
}

impl Avoiders {
    pub fn new(basis: &PatternBasis) -> Self {
        let plans = basis
            .patterns()
            .iter()
            .filter(|p| !p.is_empty())
            .map(|p| Plan::new(p.values(), &[p.len() - 1]))
            .collect();
        Avoiders {
            basis: basis.clone(),
            plans,
            has_empty: basis.patterns().iter().any(Permutation::is_empty),
        }
    }

    pub fn basis(&self) -> &PatternBasis {
        &self.basis
    }

    /// Assuming `prefix` minus its last entry avoids the basis, whether `prefix` does.
    #[inline]
    fn last_entry_ok(&self, prefix: &[u8]) -> bool {
        let last = prefix.len() - 1;
        self.plans
            .iter()
            .take_while(|plan| plan.len() <= prefix.len())
            .all(|plan| !plan.exists(prefix, &[last]))
    }

    /// Whether the pruner keeps `prefix`, i.e. no prefix of it completes an occurrence.
    pub fn accepts_prefix(&self, prefix: &[u32]) -> bool {
        if self.has_empty {
            return false;
        }
        let bytes: Vec<u8> = prefix.iter().map(|&v| v as u8).collect();
        (1..=bytes.len()).all(|len| self.last_entry_ok(&bytes[..len]))
    }

    fn check_size(n: usize) -> Result<()> {
        if n > MAX_SIZE.min(u8::MAX as usize) {
            return Err(Error::params(format!("enumeration size {n} is too large")));
        }
        Ok(())
    }

    /// Calls `visit` on each avoider of size n in lexicographic order.
    pub fn for_each(&self, n: usize, mut visit: impl FnMut(&Permutation)) -> Result<()> {
        Self::check_size(n)?;
        if self.has_empty {
            return Ok(());
        }
        let mut prefix = Vec::with_capacity(n);
        self.walk(n, &mut prefix, 0, &mut |values: &[u8]| {
            let perm = Permutation::from_vec_unchecked(values.iter().map(|&v| u32::from(v)).collect());
            visit(&perm);
        });
        Ok(())
    }

    fn walk(&self, n: usize, prefix: &mut Vec<u8>, used: u64, visit: &mut dyn FnMut(&[u8])) {
        if prefix.len() == n {
            visit(prefix);
            return;
        }
        for v in 1..=n as u8 {
            if used & (1 << v) != 0 {
                continue;
            }
            prefix.push(v);
            if self.last_entry_ok(prefix) {
                self.walk(n, prefix, used | (1 << v), visit);
            }
            prefix.pop();
        }
    }

    fn count_below(&self, n: usize, prefix: &mut Vec<u8>, used: u64) -> Option<u64> {
        if prefix.len() == n {
            return Some(1);
        }
        let mut total = 0u64;
        for v in 1..=n as u8 {
            if used & (1 << v) != 0 {
                continue;
            }
            prefix.push(v);
            if self.last_entry_ok(prefix) {
                total = total.checked_add(self.count_below(n, prefix, used | (1 << v))?)?;
            }
            prefix.pop();
        }
        Some(total)
    }

    // surviving prefixes of length `depth`, in lexicographic order
    fn frontier(&self, n: usize, depth: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(depth);
        collect_frontier(self, n, depth.min(n), &mut prefix, 0, &mut out);
        out
    }

    fn split_depth(n: usize) -> usize {
        match n {
            0..=6 => 0,
            7..=9 => 1,
            _ => 2,
        }
    }

    /// |Av_n(basis)|, counted without materializing permutations.
    pub fn count(&self, n: usize, par: Parallelism) -> Result<u64> {
        Self::check_size(n)?;
        if self.has_empty {
            return Ok(0);
        }
        let depth = if par.is_sequential() { 0 } else { Self::split_depth(n) };
        let tasks = self.frontier(n, depth);
        let partial = map_ordered(tasks, par, |mut prefix| {
            let used = prefix.iter().fold(0u64, |m, &v| m | (1 << v));
            self.count_below(n, &mut prefix, used)
        });
        partial
            .into_iter()
            .try_fold(0u64, |acc, c| acc.checked_add(c?))
            .ok_or(Error::Overflow { n })
    }

    /// Av_n(basis) in lexicographic order.
    pub fn collect(&self, n: usize, par: Parallelism) -> Result<Vec<Permutation>> {
        Self::check_size(n)?;
        if self.has_empty {
            return Ok(Vec::new());
        }
        let depth = if par.is_sequential() { 0 } else { Self::split_depth(n) };
        let tasks = self.frontier(n, depth);
        let chunks = map_ordered(tasks, par, |mut prefix| {
            let used = prefix.iter().fold(0u64, |m, &v| m | (1 << v));
            let mut out = Vec::new();
            self.walk(n, &mut prefix, used, &mut |values: &[u8]| {
                out.push(Permutation::from_vec_unchecked(
                    values.iter().map(|&v| u32::from(v)).collect(),
                ));
            });
            out
        });
        Ok(chunks.into_iter().flatten().collect())
    }
}

fn collect_frontier(av: &Avoiders, n: usize, depth: usize, prefix: &mut Vec<u8>, used: u64, out: &mut Vec<Vec<u8>>) {
    if prefix.len() == depth {
        out.push(prefix.clone());
        return;
    }
    for v in 1..=n as u8 {
        if used & (1 << v) != 0 {
            continue;
        }
        prefix.push(v);
        if av.last_entry_ok(prefix) {
            collect_frontier(av, n, depth, prefix, used | (1 << v), out);
        }
        prefix.pop();
    }
}

/// Av_n(basis) in lexicographic order.
pub fn enumerate_avoiders(basis: &PatternBasis, n: usize, par: Parallelism) -> Result<Vec<Permutation>> {
    Avoiders::new(basis).collect(n, par)
}

/// Exact counts |Av_n(basis)| for consecutive n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSequence {
    pub basis: PatternBasis,
    pub n_min: usize,
    pub counts: Vec<u64>,
}

#[derive(Serialize)]
struct CountRow {
    n: usize,
    count: u64,
}

impl Serialize for CountSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            basis: &'a PatternBasis,
            n_min: usize,
            counts: Vec<CountRow>,
        }
        Repr {
            basis: &self.basis,
            n_min: self.n_min,
            counts: self.rows().map(|(n, count)| CountRow { n, count }).collect(),
        }
        .serialize(serializer)
    }
}

impl CountSequence {
    pub fn n_max(&self) -> usize {
        self.n_min + self.counts.len() - 1
    }

    pub fn count(&self, n: usize) -> Option<u64> {
        n.checked_sub(self.n_min).and_then(|i| self.counts.get(i)).copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().enumerate().map(|(i, &c)| (self.n_min + i, c))
    }

    /// "n,count" rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        for (n, count) in self.rows() {
            writer
                .serialize(CountRow { n, count })
                .expect("writing to memory cannot fail");
        }
        String::from_utf8(writer.into_inner().expect("flush to memory")).expect("csv is utf-8")
    }
}

/// Counts of Av_n(basis) for n in [n_min, n_max].
pub fn count_avoiders(basis: &PatternBasis, n_max: usize, n_min: usize, par: Parallelism) -> Result<CountSequence> {
    if n_min > n_max {
        return Err(Error::params(format!("n_min {n_min} exceeds n_max {n_max}")));
    }
    let av = Avoiders::new(basis);
    let counts = (n_min..=n_max).map(|n| av.count(n, par)).collect::<Result<Vec<_>>>()?;
    Ok(CountSequence {
        basis: basis.clone(),
        n_min,
        counts,
    })
}

/// Π(a,b), optionally with δ_m added.
pub fn shuffle_basis(p: ShuffleParams, delta_m: Option<usize>) -> PatternBasis {
    let basis = partial_shuffle(p);
    match delta_m {
        Some(m) => basis.with(Permutation::delta(m)),
        None => basis,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub params: ShuffleParams,
    pub basis: PatternBasis,
    pub counts: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub n: usize,
    pub params: ShuffleParams,
    pub count: u64,
    pub reference_params: ShuffleParams,
    pub reference_count: u64,
}

/// Outcome of comparing the count sequences of every equal-size partial shuffle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WilfReport {
    pub check: &'static str,
    pub size_sum: usize,
    pub n_max: usize,
    pub delta_m: Option<usize>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub common: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divergence: Option<Divergence>,
    pub classes: Vec<ClassCounts>,
}

/// Counts Av_n(Π(a,b) [∪ δ_m]) for n = 0..=n_max across every split a + b = size_sum.
pub fn check_wilf(size_sum: usize, n_max: usize, delta_m: Option<usize>, par: Parallelism) -> Result<WilfReport> {
    if delta_m == Some(0) {
        return Err(Error::params("delta_m must be at least 1"));
    }
    let classes = ShuffleParams::splits(size_sum)?
        .into_iter()
        .map(|params| {
            let basis = shuffle_basis(params, delta_m);
            let seq = count_avoiders(&basis, n_max, 0, par)?;
            Ok(ClassCounts {
                params,
                basis,
                counts: seq.counts,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let reference = &classes[0];
    let divergence = (0..=n_max).find_map(|n| {
        classes.iter().find_map(|c| {
            (c.counts[n] != reference.counts[n]).then(|| Divergence {
                n,
                params: c.params,
                count: c.counts[n],
                reference_params: reference.params,
                reference_count: reference.counts[n],
            })
        })
    });
    let pass = divergence.is_none();
    Ok(WilfReport {
        check: "wilf",
        size_sum,
        n_max,
        delta_m,
        pass,
        common: pass.then(|| reference.counts.clone()),
        divergence,
        classes,
    })
}
