//! Polynomial counting of Av_n(Π(a,b), δ_m): exact fitting, the degree and
//! leading-coefficient checks, the conjectured coefficient pattern for
//! m = 3, and the Erdős–Szekeres extremal sizes behind the degree bound.

pub mod catalan;
pub mod poly;

use serde::Serialize;

use crate::enumerate::{count_avoiders, shuffle_basis, Avoiders, CountSequence};
use crate::error::{Error, Result};
use crate::par::Parallelism;
use crate::perm::{PatternBasis, Permutation};
use crate::shuffles::ShuffleParams;

pub use catalan::{
    a_to_b_sequence, b_to_a_sequence, catalan, count_bounded_sequences, transposed_catalan, BoundedCount,
    BoundedSumSequence,
};
pub use poly::{binomial, fit_binomial_polynomial, stabilization_threshold, BinomialPolynomial};

/// (a+b−2)(m−2), the degree of the eventual counting polynomial.
pub fn expected_degree(p: ShuffleParams, m: usize) -> usize {
    (p.size() - 2) * m.saturating_sub(2)
}

/// 2(a+b−2)+1, where the m = 3 coefficient pattern is expected to hold.
pub fn conjecture_threshold(p: ShuffleParams) -> usize {
    2 * (p.size() - 2) + 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub check: &'static str,
    pub params: ShuffleParams,
    pub m: usize,
    pub n_max: usize,
    pub pass: bool,
    /// Smallest n from which the counts fit a polynomial with holdouts.
    pub threshold: usize,
    pub expected_degree: usize,
    pub fitted_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_leading: Option<i128>,
    pub fitted_leading: i128,
    pub polynomial: BinomialPolynomial,
    pub counts: CountSequence,
}

/// Enumerates Av_n(Π(a,b), δ_m) for n ≤ n_max, fits the tail, and compares
/// the degree with (a+b−2)(m−2) and, for m = 3, the leading coefficient with C_{a+b−2}.
pub fn check_degree_and_leading(p: ShuffleParams, m: usize, n_max: usize, par: Parallelism) -> Result<DegreeReport> {
    if m < 2 {
        return Err(Error::params(format!("m must be at least 2, got {m}")));
    }
    let counts = count_avoiders(&shuffle_basis(p, Some(m)), n_max, 0, par)?;
    let (threshold, polynomial) = stabilization_threshold(&counts).ok_or_else(|| {
        Error::NoStabilization(format!("counts for {p} with delta_{m} do not stabilize by n = {n_max}"))
    })?;
    let expected_degree = expected_degree(p, m);
    let expected_leading = (m == 3 && p.size() >= 3).then(|| catalan(p.size() - 2)).transpose()?;
    let fitted_degree = polynomial.degree();
    let fitted_leading = polynomial.leading();
    let pass = fitted_degree == Some(expected_degree) && expected_leading.is_none_or(|c| c == fitted_leading);
    Ok(DegreeReport {
        check: "degree",
        params: p,
        m,
        n_max,
        pass,
        threshold,
        expected_degree,
        fitted_degree,
        expected_leading,
        fitted_leading,
        polynomial,
        counts,
    })
}

/// C_{a+b−2}·C(n, a+b−2) − Σ_{h=1}^{a+b−3} T_{a+b−2,h}·C(n, a+b−3−h).
pub fn conjecture_polynomial(p: ShuffleParams) -> Result<BinomialPolynomial> {
    if p.size() < 3 {
        return Err(Error::params(format!("needs a + b >= 3, got {p}")));
    }
    let top = p.size() - 2;
    let mut coeffs = vec![0i128; top + 1];
    coeffs[top] = catalan(top)?;
    // terms with a negative lower index vanish, so h stops at top − 1
    for h in 1..top {
        coeffs[top - 1 - h] = -transposed_catalan(top, h)?;
    }
    Ok(BinomialPolynomial::new(coeffs))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub predicted: i128,
    pub enumerated: u64,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub check: &'static str,
    pub params: ShuffleParams,
    pub m: usize,
    pub pass: bool,
    /// 2(a+b−2)+1; rows below it lie outside the conjectured range.
    pub threshold: usize,
    pub polynomial: BinomialPolynomial,
    pub rows: Vec<ConjectureRow>,
}

/// Compares [`conjecture_polynomial`] with enumerated |Av_n(Π(a,b), δ_3)|
/// for n from `n_min` to n_max. Without `n_min` the rows start at
/// 2(a+b−2)+1, or at n_max alone when that is smaller. A mismatch in any
/// row is a finding, not an error.
pub fn check_conjecture(
    p: ShuffleParams,
    n_min: Option<usize>,
    n_max: usize,
    par: Parallelism,
) -> Result<ConjectureReport> {
    let polynomial = conjecture_polynomial(p)?;
    let threshold = conjecture_threshold(p);
    let n_from = n_min.unwrap_or(threshold.min(n_max));
    if n_from > n_max {
        return Err(Error::params(format!("n_min {n_from} exceeds n_max {n_max}")));
    }
    let counts = count_avoiders(&shuffle_basis(p, Some(3)), n_max, n_from, par)?;
    let rows = counts
        .rows()
        .map(|(n, enumerated)| {
            let predicted = polynomial.eval(n as i128)?;
            Ok(ConjectureRow {
                n,
                predicted,
                enumerated,
                matches: predicted == i128::from(enumerated),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConjectureReport {
        check: "conjecture",
        params: p,
        m: 3,
        pass: rows.iter().all(|r| r.matches),
        threshold,
        polynomial,
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalClass {
    pub p: usize,
    pub q: usize,
    /// Largest n with Av_n(ι_p, δ_q) nonempty.
    pub size: usize,
    /// Lexicographically first permutation of that size in the class.
    pub witness: Permutation,
}

/// Largest size of a permutation avoiding both ι_p and δ_q, found by enumeration.
pub fn erdos_szekeres_extremal(p: usize, q: usize, par: Parallelism) -> Result<ExtremalClass> {
    if p < 2 || q < 2 {
        return Err(Error::params(format!("needs p, q >= 2, got p = {p}, q = {q}")));
    }
    let av = Avoiders::new(&PatternBasis::new([Permutation::iota(p), Permutation::delta(q)]));
    // a class is closed under patterns, so the first empty level ends the search
    let mut n = 0;
    while av.count(n + 1, par)? > 0 {
        n += 1;
    }
    let witness = av
        .collect(n, Parallelism::Sequential)?
        .into_iter()
        .next()
        .expect("level n is nonempty");
    Ok(ExtremalClass { p, q, size: n, witness })
}
