//! The S-map: rotate the values [underline(a−1), underline(a)] so that the
//! marked a drops to the bottom of the interval and every associated a−1
//! moves up by one. Iterating it sends Av_n(Π(a,b)) into Av_n(Π(a−1,b+1)).
//!
//! Besides the map itself this module carries exhaustive checkers for the
//! properties the map is known to have: closure on Av(σ_{a,b}), descent-set
//! preservation, control of the longest decreasing subsequence, where new
//! Π(a,b) occurrences may appear, and bijectivity of the iterate.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::enumerate::Avoiders;
use crate::error::{Error, Result};
use crate::par::{map_ordered, Parallelism};
use crate::perm::{PatternBasis, Permutation};
use crate::shuffles::{partial_shuffle, positions_acting_as, sigma, MarkFinder, ShuffleMark, ShuffleParams};

/// One application of S.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SStep {
    pub input: Permutation,
    pub output: Permutation,
    /// `None` exactly when `input` is a fixed point.
    pub mark: Option<ShuffleMark>,
}

/// Result of iterating S to a fixed point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Iteration {
    #[serde(rename = "final")]
    pub final_perm: Permutation,
    pub steps: usize,
    /// The non-trivial applications, in order.
    pub trace: Vec<SStep>,
}

/// S for fixed parameters, with its searches compiled once.
#[derive(Debug, Clone)]
pub struct SMap {
    params: ShuffleParams,
    finder: MarkFinder,
}

impl SMap {
    pub fn new(params: ShuffleParams) -> Result<Self> {
        Ok(SMap {
            params,
            finder: MarkFinder::new(params)?,
        })
    }

    pub fn params(&self) -> ShuffleParams {
        self.params
    }

    pub fn mark(&self, pi: &Permutation) -> Option<ShuffleMark> {
        self.finder.find(pi)
    }

    pub fn apply(&self, pi: &Permutation) -> SStep {
        let mark = self.finder.find(pi);
        let output = match &mark {
            Some(mark) => rotate(pi, mark),
            None => pi.clone(),
        };
        SStep {
            input: pi.clone(),
            output,
            mark,
        }
    }

    /// Applies S until a fixed point, at most n − a times.
    pub fn iterate(&self, pi: &Permutation) -> Result<Iteration> {
        let cap = pi.len().saturating_sub(self.params.a);
        let mut current = pi.clone();
        let mut trace = Vec::new();
        loop {
            let step = self.apply(&current);
            if step.mark.is_none() {
                return Ok(Iteration {
                    final_perm: current,
                    steps: trace.len(),
                    trace,
                });
            }
            if trace.len() == cap {
                return Err(Error::NoFixedPoint {
                    perm: pi.to_string(),
                    steps: cap,
                });
            }
            current = step.output.clone();
            trace.push(step);
        }
    }

    /// S^{n−a}(π), the image under the iterate.
    pub fn iterate_final(&self, pi: &Permutation) -> Result<Permutation> {
        self.iterate(pi).map(|it| it.final_perm)
    }
}

fn rotate(pi: &Permutation, mark: &ShuffleMark) -> Permutation {
    let values = pi
        .values()
        .iter()
        .map(|&v| {
            if v == mark.underline_a_value {
                mark.assoc_low
            } else if (mark.assoc_low..mark.underline_a_value).contains(&v) {
                v + 1
            } else {
                v
            }
        })
        .collect();
    // the rotated values form an interval, so this is a permutation again
    Permutation::new(values).expect("S maps permutations to permutations")
}

pub fn s_apply(pi: &Permutation, p: ShuffleParams) -> Result<SStep> {
    Ok(SMap::new(p)?.apply(pi))
}

pub fn s_iterate(pi: &Permutation, p: ShuffleParams) -> Result<Iteration> {
    SMap::new(p)?.iterate(pi)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub perm: Permutation,
    pub detail: String,
}

/// Outcome of one exhaustive check. `checked` counts the permutations that
/// satisfied the check's hypothesis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: ShuffleParams,
    pub n: usize,
    pub pass: bool,
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

/// The checks run by [`check_lemmas`], in report order.
pub const LEMMA_CHECKS: [(&str, &str); 7] = [
    (
        "interval",
        "associated a-1 values are exactly [assoc_low, underline_a - 1]",
    ),
    ("L1", "Av(sigma) is closed under S"),
    (
        "L2",
        "new Pi(a,b) a-elements come from underline_a or its associated interval",
    ),
    ("L3", "S preserves the descent set on Av(sigma)"),
    (
        "L4",
        "S does not lengthen the longest decreasing subsequence on Av(sigma)",
    ),
    (
        "L5",
        "S^(n-a) preserves the longest decreasing subsequence on Av(Pi(a,b))",
    ),
    ("progress", "underline_a strictly increases under S on Av(sigma)"),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub params: ShuffleParams,
    pub n: usize,
    pub pass: bool,
    pub checks: Vec<CheckReport>,
}

#[derive(Clone, Default)]
struct Tally {
    checked: u64,
    failure: Option<Counterexample>,
}

impl Tally {
    fn record(&mut self, pi: &Permutation, outcome: std::result::Result<(), String>) {
        self.checked += 1;
        if let Err(detail) = outcome {
            if self.failure.is_none() {
                self.failure = Some(Counterexample {
                    perm: pi.clone(),
                    detail,
                });
            }
        }
    }

    fn merge(&mut self, later: Tally) {
        self.checked += later.checked;
        if self.failure.is_none() {
            self.failure = later.failure;
        }
    }
}

struct LemmaContext {
    smap: SMap,
    sigma: Permutation,
    upper: PatternBasis,
}

impl LemmaContext {
    fn run(&self, pi: &Permutation, tallies: &mut [Tally; 7]) {
        let a = self.smap.params.a;
        let step = self.smap.apply(pi);
        let image = &step.output;
        let in_sigma_class = pi.avoids(&self.sigma);

        if let Some(mark) = &step.mark {
            let assoc = self.smap.finder.associated_values(pi, mark.underline_a_position);
            let expected: BTreeSet<u32> = (mark.assoc_low..=mark.assoc_high).collect();
            tallies[0].record(
                pi,
                if assoc == expected {
                    Ok(())
                } else {
                    Err(format!("associated values {assoc:?}, mark interval {expected:?}"))
                },
            );
        }

        if in_sigma_class {
            tallies[1].record(
                pi,
                if image.avoids(&self.sigma) {
                    Ok(())
                } else {
                    Err(format!("S(pi) = {image} contains {}", self.sigma))
                },
            );
        }

        // positions keep their identity under S, only values move
        let before = positions_acting_as(pi, &self.upper, a as u32);
        let after = positions_acting_as(image, &self.upper, a as u32);
        let stray: Vec<u32> = after
            .difference(&before)
            .map(|&i| pi.value_at(i))
            .filter(|&v| match &step.mark {
                Some(m) => v != m.underline_a_value && !(m.assoc_low..=m.assoc_high).contains(&v),
                None => true,
            })
            .collect();
        tallies[2].record(
            pi,
            if stray.is_empty() {
                Ok(())
            } else {
                Err(format!("values {stray:?} became an a of Pi(a,b) in S(pi) = {image}"))
            },
        );

        if in_sigma_class {
            let (d0, d1) = (pi.descent_set(), image.descent_set());
            tallies[3].record(
                pi,
                if d0 == d1 {
                    Ok(())
                } else {
                    Err(format!("descents {d0:?} became {d1:?} in {image}"))
                },
            );
            let (l0, l1) = (pi.longest_decreasing(), image.longest_decreasing());
            tallies[4].record(
                pi,
                if l1 <= l0 {
                    Ok(())
                } else {
                    Err(format!("longest decreasing grew from {l0} to {l1} in {image}"))
                },
            );
            if let Some(mark) = &step.mark {
                if let Some(next) = self.smap.mark(image) {
                    tallies[6].record(
                        pi,
                        if next.underline_a_value > mark.underline_a_value {
                            Ok(())
                        } else {
                            Err(format!(
                                "underline_a went from {} to {}",
                                mark.underline_a_value, next.underline_a_value
                            ))
                        },
                    );
                }
            }
        }

        if pi.avoids_all(&self.upper) {
            let outcome = match self.smap.iterate_final(pi) {
                Ok(fin) if fin.longest_decreasing() == pi.longest_decreasing() => Ok(()),
                Ok(fin) => Err(format!(
                    "longest decreasing {} became {} in {fin}",
                    pi.longest_decreasing(),
                    fin.longest_decreasing()
                )),
                Err(e) => Err(e.to_string()),
            };
            tallies[5].record(pi, outcome);
        }
    }
}

// S_n split by first value, each chunk in lexicographic order
fn first_value_chunks(n: usize) -> Vec<Vec<Permutation>> {
    if n == 0 {
        return vec![vec![Permutation::iota(0)]];
    }
    (1..=n as u32)
        .map(|first| {
            let rest: Vec<u32> = (1..=n as u32).filter(|&v| v != first).collect();
            Permutation::all(n - 1)
                .map(|tail| {
                    let mut values = Vec::with_capacity(n);
                    values.push(first);
                    values.extend(tail.values().iter().map(|&w| rest[w as usize - 1]));
                    Permutation::from_vec_unchecked(values)
                })
                .collect()
        })
        .collect()
}

/// Runs every check in [`LEMMA_CHECKS`] over all of S_n.
pub fn check_lemmas(p: ShuffleParams, n: usize, par: Parallelism) -> Result<LemmaReport> {
    let ctx = LemmaContext {
        smap: SMap::new(p)?,
        sigma: sigma(p)?,
        upper: partial_shuffle(p),
    };
    let partial = map_ordered(first_value_chunks(n), par, |chunk| {
        let mut tallies: [Tally; 7] = Default::default();
        for pi in &chunk {
            ctx.run(pi, &mut tallies);
        }
        tallies
    });
    let mut totals: [Tally; 7] = Default::default();
    for tallies in partial {
        for (total, t) in totals.iter_mut().zip(tallies) {
            total.merge(t);
        }
    }
    let checks: Vec<CheckReport> = LEMMA_CHECKS
        .iter()
        .zip(totals)
        .map(|((name, _), t)| CheckReport {
            check: name.to_string(),
            params: p,
            n,
            pass: t.failure.is_none(),
            checked: t.checked,
            counterexample: t.failure,
        })
        .collect();
    Ok(LemmaReport {
        params: p,
        n,
        pass: checks.iter().all(|c| c.pass),
        checks,
    })
}

/// Outcome of [`check_injectivity`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub check: &'static str,
    pub params: ShuffleParams,
    pub n: usize,
    pub pass: bool,
    pub domain_size: usize,
    pub image_size: usize,
    pub target_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

/// Maps Av_n(Π(a,b)) through S^{n−a} and compares the image with Av_n(Π(a−1,b+1)).
pub fn check_injectivity(p: ShuffleParams, n: usize, par: Parallelism) -> Result<BijectionReport> {
    let smap = SMap::new(p)?;
    let domain = Avoiders::new(&partial_shuffle(p)).collect(n, par)?;
    let target_basis = partial_shuffle(p.lowered()?);
    let target = Avoiders::new(&target_basis).collect(n, par)?;

    let chunk_len = (domain.len() / 64).max(1);
    let chunks: Vec<&[Permutation]> = domain.chunks(chunk_len).collect();
    let images = map_ordered(chunks, par, |chunk| {
        chunk.iter().map(|pi| smap.iterate_final(pi)).collect::<Vec<_>>()
    });

    let mut counterexample = None;
    let mut preimage: BTreeMap<Permutation, &Permutation> = BTreeMap::new();
    for (pi, image) in domain.iter().zip(images.into_iter().flatten()) {
        let found = match image {
            Err(e) => Some(e.to_string()),
            Ok(image) if !image.avoids_all(&target_basis) => {
                Some(format!("image {image} contains a pattern of {target_basis}"))
            }
            Ok(image) => preimage
                .insert(image.clone(), pi)
                .map(|other| format!("{other} and {pi} both map to {image}")),
        };
        if let (Some(detail), None) = (found, &counterexample) {
            counterexample = Some(Counterexample {
                perm: pi.clone(),
                detail,
            });
        }
    }
    if counterexample.is_none() {
        if let Some(missed) = target.iter().find(|t| !preimage.contains_key(*t)) {
            counterexample = Some(Counterexample {
                perm: missed.clone(),
                detail: "not in the image of S^(n-a)".to_string(),
            });
        }
    }
    Ok(BijectionReport {
        check: "injectivity",
        params: p,
        n,
        pass: counterexample.is_none(),
        domain_size: domain.len(),
        image_size: preimage.len(),
        target_size: target.len(),
        counterexample,
    })
}
