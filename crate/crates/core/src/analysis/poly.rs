//! Integer-valued polynomials in the Newton basis {C(n,k)}.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::enumerate::CountSequence;
use crate::error::{Error, Result};

/// C(x, k) for any integer x, via the falling-factorial product.
pub fn binomial(x: i128, k: usize) -> Result<i128> {
    let mut acc: i128 = 1;
    for i in 0..k as i128 {
        // acc = C(x, i) here, so acc * (x - i) is divisible by i + 1
        acc = acc.checked_mul(x - i).ok_or(Error::ArithmeticOverflow)? / (i + 1);
    }
    Ok(acc)
}

/// p(n) = Σ coeffs[k] · C(n, k), trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BinomialPolynomial {
    coeffs: Vec<i128>,
}

impl BinomialPolynomial {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        BinomialPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    /// Coefficient of C(n, k).
    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> i128 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, n: i128) -> Result<i128> {
        self.coeffs.iter().enumerate().try_fold(0i128, |acc, (k, &c)| {
            c.checked_mul(binomial(n, k)?)
                .and_then(|t| acc.checked_add(t))
                .ok_or(Error::ArithmeticOverflow)
        })
    }

    /// Monomial form as (denominator, m) with p(n) = Σ m[j]·n^j / denominator,
    /// the denominator being D! for degree D.
    pub fn to_monomial(&self) -> Result<(i128, Vec<i128>)> {
        let overflow = || Error::ArithmeticOverflow;
        let degree = self.coeffs.len().saturating_sub(1);
        let denom = (1..=degree as i128).try_fold(1i128, |f, i| f.checked_mul(i).ok_or_else(overflow))?;
        let mut out = vec![0i128; degree + 1];
        // falling[j] holds the coefficients of n(n-1)…(n-k+1)
        let mut falling = vec![1i128];
        let mut k_fact = 1i128;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                k_fact *= k as i128;
                let shift = (k - 1) as i128;
                let mut next = vec![0i128; falling.len() + 1];
                for (j, &f) in falling.iter().enumerate() {
                    next[j + 1] = next[j + 1].checked_add(f).ok_or_else(overflow)?;
                    next[j] = next[j]
                        .checked_sub(f.checked_mul(shift).ok_or_else(overflow)?)
                        .ok_or_else(overflow)?;
                }
                falling = next;
            }
            let scale = c.checked_mul(denom / k_fact).ok_or_else(overflow)?;
            for (j, &f) in falling.iter().enumerate() {
                out[j] = out[j]
                    .checked_add(scale.checked_mul(f).ok_or_else(overflow)?)
                    .ok_or_else(overflow)?;
            }
        }
        Ok((denom, out))
    }
}

impl fmt::Display for BinomialPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            match (first, c < 0) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            write!(f, "{}·C(n,{k})", c.unsigned_abs())?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for BinomialPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BinomialPolynomial", 2)?;
        s.serialize_field("basis", "binomial")?;
        s.serialize_field("coeffs", &self.coeffs)?;
        s.end()
    }
}

/// Holdout points required beyond those that determine the polynomial.
pub const HOLDOUT: usize = 3;

/// Fits the counts from `n_start` to the end of `seq`.
///
/// The degree is the index of the last nonzero forward difference at
/// `n_start`; at least [`HOLDOUT`] vanishing differences must follow it,
/// otherwise the window is too short or the tail is not polynomial.
pub fn fit_binomial_polynomial(seq: &CountSequence, n_start: usize) -> Result<BinomialPolynomial> {
    if n_start < seq.n_min || n_start > seq.n_max() {
        return Err(Error::params(format!(
            "n_start {n_start} outside the sequence range [{}, {}]",
            seq.n_min,
            seq.n_max()
        )));
    }
    let window: Vec<i128> = (n_start..=seq.n_max())
        .map(|n| i128::from(seq.count(n).expect("n within range")))
        .collect();
    let mut diffs = Vec::with_capacity(window.len());
    let mut row = window.clone();
    while !row.is_empty() {
        diffs.push(row[0]);
        row = row.windows(2).map(|w| w[1] - w[0]).collect();
    }
    let vanishing = diffs.iter().rev().take_while(|&&d| d == 0).count();
    if vanishing < HOLDOUT {
        return Err(Error::NoStabilization(format!(
            "only {vanishing} vanishing differences on [{n_start}, {}], need {HOLDOUT}",
            seq.n_max()
        )));
    }
    let degree_plus_one = diffs.len() - vanishing;

    // C(n − s, j) = Σ_i C(−s, j − i) C(n, i)
    let shift = -(n_start as i128);
    let mut coeffs = vec![0i128; degree_plus_one];
    for (j, &d) in diffs.iter().take(degree_plus_one).enumerate() {
        for (i, c) in coeffs.iter_mut().enumerate().take(j + 1) {
            let term = d
                .checked_mul(binomial(shift, j - i)?)
                .ok_or(Error::ArithmeticOverflow)?;
            *c = c.checked_add(term).ok_or(Error::ArithmeticOverflow)?;
        }
    }
    let poly = BinomialPolynomial::new(coeffs);
    for (offset, &expected) in window.iter().enumerate() {
        if poly.eval((n_start + offset) as i128)? != expected {
            return Err(Error::NoStabilization(format!(
                "fit does not reproduce n = {}",
                n_start + offset
            )));
        }
    }
    Ok(poly)
}

/// Smallest n_start from which the tail of `seq` fits a polynomial with holdouts.
pub fn stabilization_threshold(seq: &CountSequence) -> Option<(usize, BinomialPolynomial)> {
    (seq.n_min..=seq.n_max()).find_map(|s| fit_binomial_polynomial(seq, s).ok().map(|p| (s, p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::PatternBasis;

    fn seq(n_min: usize, counts: &[u64]) -> CountSequence {
        CountSequence {
            basis: PatternBasis::empty(),
            n_min,
            counts: counts.to_vec(),
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(13, 7).unwrap(), 1716);
        assert_eq!(binomial(5, 0).unwrap(), 1);
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert_eq!(binomial(-1, 3).unwrap(), -1);
        assert_eq!(binomial(-3, 2).unwrap(), 6);
    }

    #[test]
    fn display_and_degree() {
        let p = BinomialPolynomial::new(vec![-6, -20, 0, 0, 0, -132, 0, 429, 0]);
        assert_eq!(p.degree(), Some(7));
        assert_eq!(p.leading(), 429);
        assert_eq!(p.to_string(), "429·C(n,7) - 132·C(n,5) - 20·C(n,1) - 6·C(n,0)");
        assert_eq!(BinomialPolynomial::new(vec![0, 1]).to_string(), "1·C(n,1)");
        assert_eq!(BinomialPolynomial::default().to_string(), "0");
        assert_eq!(BinomialPolynomial::default().degree(), None);
        assert_eq!(BinomialPolynomial::new(vec![0, -2]).to_string(), "-2·C(n,1)");
    }

    #[test]
    fn json_shape() {
        let p = BinomialPolynomial::new(vec![1, 0, 2]);
        assert_eq!(
            serde_json::to_value(&p).unwrap(),
            serde_json::json!({"basis": "binomial", "coeffs": [1, 0, 2]})
        );
    }

    #[test]
    fn fit_linear_tail() {
        // 1, 1, 2, 3, 4, ... : p(n) = n from n = 1
        let s = seq(0, &[1, 1, 2, 3, 4, 5, 6, 7]);
        let p = fit_binomial_polynomial(&s, 3).unwrap();
        assert_eq!(p, BinomialPolynomial::new(vec![0, 1]));
        assert!(fit_binomial_polynomial(&s, 0).is_err());
        let (threshold, _) = stabilization_threshold(&s).unwrap();
        assert_eq!(threshold, 1);
    }

    #[test]
    fn fit_needs_holdouts() {
        let squares: Vec<u64> = (0..6u64).map(|n| n * n).collect();
        // degree 2 with 6 points leaves 3 vanishing differences
        let p = fit_binomial_polynomial(&seq(0, &squares), 0).unwrap();
        assert_eq!(p.coeffs(), &[0, 1, 2]);
        assert!(matches!(
            fit_binomial_polynomial(&seq(0, &squares[..5]), 0),
            Err(Error::NoStabilization(_))
        ));
        let powers: Vec<u64> = (0..10).map(|n| 1 << n).collect();
        assert!(fit_binomial_polynomial(&seq(0, &powers), 0).is_err());
        assert!(fit_binomial_polynomial(&seq(2, &squares), 1).is_err());
    }

    #[test]
    fn fit_from_offset_start() {
        let cubes: Vec<u64> = (5..15u64).map(|n| n * n * n + 7).collect();
        let p = fit_binomial_polynomial(&seq(5, &cubes), 5).unwrap();
        assert_eq!(p.degree(), Some(3));
        for n in 0..20i128 {
            assert_eq!(p.eval(n).unwrap(), n * n * n + 7);
        }
    }

    #[test]
    fn monomial_expansion() {
        // C(n,2) = (n^2 - n)/2
        let (d, m) = BinomialPolynomial::new(vec![0, 0, 1]).to_monomial().unwrap();
        assert_eq!((d, m), (2, vec![0, -1, 1]));
        let (d, m) = BinomialPolynomial::new(vec![3]).to_monomial().unwrap();
        assert_eq!((d, m), (1, vec![3]));
    }
}
