//! Peg permutations: permutations whose entries are marked for inflation by
//! an increasing run (+), a decreasing run (−) or a single point (.).

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::enumerate::{shuffle_basis, Avoiders};
use crate::error::{Error, Result};
use crate::par::{map_ordered, Parallelism};
use crate::perm::{PatternBasis, Permutation};
use crate::shuffles::ShuffleParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mark {
    Plus,
    Minus,
    Dot,
}

impl Mark {
    fn symbol(self) -> char {
        match self {
            Mark::Plus => '+',
            Mark::Minus => '-',
            Mark::Dot => '.',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PegPermutation {
    base: Permutation,
    marks: Vec<Mark>,
}

/// Block sizes, one per base entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inflation {
    pub sizes: Vec<usize>,
}

impl PegPermutation {
    pub fn new(base: Permutation, marks: Vec<Mark>) -> Result<Self> {
        if base.len() != marks.len() {
            return Err(Error::input(format!(
                "{} marks for a base of size {}",
                marks.len(),
                base.len()
            )));
        }
        Ok(PegPermutation { base, marks })
    }

    pub fn base(&self) -> &Permutation {
        &self.base
    }

    pub fn marks(&self) -> &[Mark] {
        &self.marks
    }

    pub fn count_marks(&self, mark: Mark) -> usize {
        self.marks.iter().filter(|&&m| m == mark).count()
    }

    /// Inflates each entry by the run its mark prescribes.
    pub fn inflate(&self, inflation: &Inflation) -> Result<Permutation> {
        if inflation.sizes.len() != self.marks.len() {
            return Err(Error::input("one size per peg entry required"));
        }
        let parts = self
            .marks
            .iter()
            .zip(&inflation.sizes)
            .map(|(&mark, &size)| match mark {
                Mark::Dot if size != 1 => Err(Error::input("dot entries inflate to a single point")),
                _ if size == 0 => Err(Error::input("block sizes are positive")),
                Mark::Minus => Ok(Permutation::delta(size)),
                _ => Ok(Permutation::iota(size)),
            })
            .collect::<Result<Vec<_>>>()?;
        inflate(&self.base, &parts)
    }
}

impl fmt::Display for PegPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, m)) in self.base.values().iter().zip(&self.marks).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}{}", m.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for PegPermutation {
    type Err = Error;

    /// Parses "3+ 1. 2-": each entry is a value followed by its mark.
    fn from_str(s: &str) -> Result<Self> {
        let mut values = Vec::new();
        let mut marks = Vec::new();
        for token in s.split_whitespace() {
            let mark_char = token.chars().last().expect("tokens are nonempty");
            let mark = match mark_char {
                '+' => Mark::Plus,
                '-' | '−' => Mark::Minus,
                '.' | '·' => Mark::Dot,
                _ => return Err(Error::input(format!("entry {token:?} lacks a mark"))),
            };
            let digits = &token[..token.len() - mark_char.len_utf8()];
            let v = digits
                .parse::<u32>()
                .map_err(|_| Error::input(format!("entry {token:?} has no value")))?;
            values.push(v);
            marks.push(mark);
        }
        PegPermutation::new(Permutation::new(values)?, marks)
    }
}

impl Serialize for PegPermutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn is_monotone(p: &Permutation) -> bool {
    let v = p.values();
    v.windows(2).all(|w| w[0] < w[1]) || v.windows(2).all(|w| w[0] > w[1])
}

/// σ[α_1, …, α_m]: entry i of `base` becomes a block of contiguous values shaped like `parts[i]`.
pub fn inflate(base: &Permutation, parts: &[Permutation]) -> Result<Permutation> {
    if parts.len() != base.len() {
        return Err(Error::input(format!(
            "{} parts for a base of size {}",
            parts.len(),
            base.len()
        )));
    }
    if let Some(bad) = parts.iter().find(|p| p.is_empty() || !is_monotone(p)) {
        return Err(Error::input(format!(
            "part {bad} is not a nonempty monotone permutation"
        )));
    }
    // offset[v] = total size of the blocks for base values below v
    let mut size_by_value = vec![0u32; base.len() + 1];
    for (&v, part) in base.values().iter().zip(parts) {
        size_by_value[v as usize] = part.len() as u32;
    }
    let mut offset = vec![0u32; base.len() + 1];
    for v in 2..=base.len() {
        offset[v] = offset[v - 1] + size_by_value[v - 1];
    }
    let values = base
        .values()
        .iter()
        .zip(parts)
        .flat_map(|(&v, part)| {
            let shift = offset[v as usize];
            part.values().iter().map(move |&w| w + shift)
        })
        .collect();
    Ok(Permutation::from_vec_unchecked(values))
}

// compositions of `total` into `parts` positive summands, first summand fixed
fn compositions_with_first(total: usize, parts: usize, first: usize) -> Vec<Vec<usize>> {
    fn rec(total: usize, parts: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if total == 0 {
                out.push(current.clone());
            }
            return;
        }
        if total < parts {
            return;
        }
        for s in 1..=total - (parts - 1) {
            current.push(s);
            rec(total - s, parts - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 && first >= 1 && first <= total {
        let mut current = vec![first];
        rec(total - first, parts - 1, &mut current, &mut out);
    }
    out
}

/// All permutations of size n in the grid class of `peg`, sorted and deduplicated.
pub fn grid_class_members(peg: &PegPermutation, n: usize, par: Parallelism) -> Vec<Permutation> {
    let dots = peg.count_marks(Mark::Dot);
    let slots: Vec<usize> = (0..peg.marks.len()).filter(|&i| peg.marks[i] != Mark::Dot).collect();
    if n < dots {
        return Vec::new();
    }
    let free = n - dots;
    if slots.is_empty() {
        return if free == 0 { vec![peg.base.clone()] } else { Vec::new() };
    }
    let build = |composition: Vec<usize>| {
        let mut sizes = vec![1usize; peg.marks.len()];
        for (&slot, size) in slots.iter().zip(composition) {
            sizes[slot] = size;
        }
        peg.inflate(&Inflation { sizes })
            .expect("compositions respect the marks")
    };
    let firsts: Vec<usize> = (1..=free).collect();
    let mut members: Vec<Permutation> = map_ordered(firsts, par, |first| {
        compositions_with_first(free, slots.len(), first)
            .into_iter()
            .map(build)
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();
    members.sort();
    members.dedup();
    members
}

/// (a+b−2)(m−2)+1: the most non-dominated left-to-right maxima that can be inflated.
pub fn free_slot_count(p: ShuffleParams, m: usize) -> usize {
    (p.size() - 2) * m.saturating_sub(2) + 1
}

/// The extremal peg built for Av(Π(a+b,0), δ_m), with the outcome of checking its inflations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreeSlots {
    pub check: &'static str,
    pub params: ShuffleParams,
    pub m: usize,
    pub slots: usize,
    pub separators: Permutation,
    pub peg: PegPermutation,
    pub n_max: usize,
    pub members_checked: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Permutation>,
}

/// Peg whose plus entries are left-to-right maxima interleaved with the
/// separating entries `separators`, which sit below all of them.
pub fn separated_maxima_peg(separators: &Permutation) -> PegPermutation {
    let k = separators.len() as u32;
    let mut values = Vec::new();
    let mut marks = Vec::new();
    for (i, &s) in separators.values().iter().enumerate() {
        values.push(k + 1 + i as u32);
        marks.push(Mark::Plus);
        values.push(s);
        marks.push(Mark::Dot);
    }
    values.push(2 * k + 1);
    marks.push(Mark::Plus);
    PegPermutation::new(Permutation::from_vec_unchecked(values), marks).expect("lengths agree")
}

/// Indices of the left-to-right maxima lying above every entry that is not one.
pub fn non_dominated_maxima(p: &Permutation) -> Vec<usize> {
    let v = p.values();
    let mut running = 0;
    let is_max: Vec<bool> = v
        .iter()
        .map(|&x| {
            let new_max = x > running;
            running = running.max(x);
            new_max
        })
        .collect();
    let ceiling = v
        .iter()
        .zip(&is_max)
        .filter(|(_, &m)| !m)
        .map(|(&x, _)| x)
        .max()
        .unwrap_or(0);
    (0..v.len()).filter(|&i| is_max[i] && v[i] > ceiling).collect()
}

/// Builds the extremal peg for Π(a+b,0) and δ_m from the first separator
/// pattern in Av_k(ι_{a+b−1}, δ_{m−1}), k = (a+b−2)(m−2), and checks that
/// every grid class member up to size `n_max` avoids Π(a+b,0) ∪ {δ_m}.
pub fn verify_free_slots(p: ShuffleParams, m: usize, n_max: usize, par: Parallelism) -> Result<FreeSlots> {
    if m < 2 {
        return Err(Error::params(format!("m must be at least 2, got {m}")));
    }
    let slots = free_slot_count(p, m);
    let k = slots - 1;
    let separator_basis = PatternBasis::new([Permutation::iota(p.size() - 1), Permutation::delta(m - 1)]);
    let separators = Avoiders::new(&separator_basis)
        .collect(k, Parallelism::Sequential)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::params(format!("no separator pattern of size {k}")))?;
    let peg = separated_maxima_peg(&separators);
    check_peg(p, m, separators, peg, n_max, par)
}

fn check_peg(
    p: ShuffleParams,
    m: usize,
    separators: Permutation,
    peg: PegPermutation,
    n_max: usize,
    par: Parallelism,
) -> Result<FreeSlots> {
    let basis = shuffle_basis(ShuffleParams::new(p.size(), 0)?, Some(m));
    let slots = peg.count_marks(Mark::Plus);
    let plus_at: Vec<usize> = (0..peg.marks.len()).filter(|&i| peg.marks[i] == Mark::Plus).collect();
    let mut members_checked = 0;
    let mut counterexample = None;
    let structure_ok = non_dominated_maxima(&peg.base) == plus_at;
    for n in peg.marks.len()..=n_max {
        for member in grid_class_members(&peg, n, par) {
            members_checked += 1;
            if counterexample.is_none() && !member.avoids_all(&basis) {
                counterexample = Some(member);
            }
        }
    }
    Ok(FreeSlots {
        check: "free-slots",
        params: p,
        m,
        slots,
        separators,
        pass: structure_ok && counterexample.is_none(),
        peg,
        n_max,
        members_checked,
        counterexample,
    })
}

/// Checks a given peg against Π(a+b,0) ∪ {δ_m} the same way as [`verify_free_slots`].
pub fn verify_peg(
    p: ShuffleParams,
    m: usize,
    peg: &PegPermutation,
    n_max: usize,
    par: Parallelism,
) -> Result<FreeSlots> {
    let dots: Vec<u32> = peg
        .base
        .values()
        .iter()
        .zip(&peg.marks)
        .filter(|(_, &mk)| mk == Mark::Dot)
        .map(|(&v, _)| v)
        .collect();
    check_peg(p, m, Permutation::standardize(&dots), peg.clone(), n_max, par)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    const SEQ: Parallelism = Parallelism::Sequential;

    #[test]
    fn inflation_examples() {
        let parts = ["1", "321", "12", "21"].map(perm);
        assert_eq!(inflate(&perm("3412"), &parts).unwrap(), perm("58761243"));
        let pi = perm("31524");
        assert_eq!(inflate(&pi, &vec![perm("1"); 5]).unwrap(), pi);
        assert_eq!(inflate(&perm("1"), &[perm("123")]).unwrap(), perm("123"));
        assert!(inflate(&perm("21"), &[perm("132"), perm("1")]).is_err());
        assert!(inflate(&perm("21"), &[perm("1")]).is_err());
    }

    #[test]
    fn peg_text_and_inflation() {
        let peg: PegPermutation = "3. 4- 1+ 2-".parse().unwrap();
        assert_eq!(peg.to_string(), "3. 4- 1+ 2-");
        let out = peg
            .inflate(&Inflation {
                sizes: vec![1, 3, 2, 2],
            })
            .unwrap();
        assert_eq!(out, perm("58761243"));
        assert!(peg
            .inflate(&Inflation {
                sizes: vec![2, 3, 2, 2]
            })
            .is_err());
        assert!(peg
            .inflate(&Inflation {
                sizes: vec![1, 0, 2, 2]
            })
            .is_err());
        assert!("3 1+".parse::<PegPermutation>().is_err());
        assert!("2+ 2.".parse::<PegPermutation>().is_err());
    }

    #[test]
    fn grid_class_basics() {
        let one_plus: PegPermutation = "1+".parse().unwrap();
        for n in 1..6 {
            assert_eq!(grid_class_members(&one_plus, n, SEQ), vec![Permutation::iota(n)]);
        }
        let with_dot: PegPermutation = "1+ 2.".parse().unwrap();
        for n in 0..7 {
            let small = grid_class_members(&with_dot, n, SEQ);
            let big = grid_class_members(&one_plus, n, SEQ);
            assert!(small.iter().all(|p| big.contains(p)));
        }
        assert!(grid_class_members(&with_dot, 1, SEQ).is_empty());
        let dots_only: PegPermutation = "2. 1.".parse().unwrap();
        assert_eq!(grid_class_members(&dots_only, 2, SEQ), vec![perm("21")]);
        assert!(grid_class_members(&dots_only, 3, SEQ).is_empty());
    }

    #[test]
    fn members_match_in_parallel() {
        let peg: PegPermutation = "2+ 1. 3- 4+".parse().unwrap();
        assert_eq!(
            grid_class_members(&peg, 9, SEQ),
            grid_class_members(&peg, 9, Parallelism::Threads(3))
        );
    }

    #[test]
    fn free_slot_constructions() {
        let r = verify_free_slots(ShuffleParams::new(2, 1).unwrap(), 3, 9, SEQ).unwrap();
        assert!(r.pass, "{r:#?}");
        assert_eq!(r.slots, 2);
        assert_eq!(r.peg.to_string(), "2+ 1. 3+");
        let r = verify_free_slots(ShuffleParams::new(1, 1).unwrap(), 4, 6, SEQ).unwrap();
        assert!(r.pass);
        assert_eq!(r.slots, 1);
        assert_eq!(r.peg.to_string(), "1+");
    }

    #[test]
    fn non_dominated() {
        // 2 is a maximum but dominated by the 3 after 4
        assert_eq!(non_dominated_maxima(&perm("2143")), vec![2]);
        assert_eq!(non_dominated_maxima(&perm("213")), vec![0, 2]);
        assert_eq!(non_dominated_maxima(&perm("123")), vec![0, 1, 2]);
    }
}
