//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use common::oracle;
use pshuffle::analysis::{
    catalan, check_conjecture, check_degree_and_leading, conjecture_polynomial, count_bounded_sequences,
    erdos_szekeres_extremal,
};
use pshuffle::peg::{grid_class_members, inflate, verify_free_slots, verify_peg, PegPermutation};
use pshuffle::{
    check_injectivity, check_lemmas, check_wilf, count_avoiders, enumerate_avoiders, partial_shuffle, s_apply,
    shuffle_basis, sigma, Parallelism, PatternBasis, Permutation, ShuffleParams,
};

type Outcome = Result<String, String>;

const PAR: Parallelism = Parallelism::Auto;

const SMAP_PARAMS: [(usize, usize); 5] = [(2, 0), (2, 1), (3, 1), (3, 2), (2, 2)];

fn params(a: usize, b: usize) -> ShuffleParams {
    ShuffleParams::new(a, b).unwrap()
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ac01_basis_construction() -> Outcome {
    let got: BTreeSet<String> = partial_shuffle(params(3, 2))
        .patterns()
        .iter()
        .map(|p| p.to_short_string())
        .collect();
    let want: BTreeSet<String> = ["12453", "12435", "13245", "31245"].map(String::from).into();
    ensure(got == want, || format!("Pi(3,2) = {got:?}"))?;
    let s = sigma(params(3, 1)).map_err(|e| e.to_string())?;
    ensure(s == perm("1324"), || format!("sigma(3,1) = {s}"))?;
    Ok("Pi(3,2) and sigma(3,1) exact".into())
}

fn ac02_smap_golden_step() -> Outcome {
    let step = s_apply(&perm("582916743"), params(3, 1)).map_err(|e| e.to_string())?;
    ensure(step.output == perm("683912754"), || format!("S(pi) = {}", step.output))?;
    let mark = step.mark.ok_or("no mark")?;
    ensure(
        (
            mark.underline_a_value,
            mark.underline_a_position,
            mark.assoc_low,
            mark.assoc_high,
        ) == (6, 6, 2, 5),
        || format!("mark {mark:?}"),
    )?;
    let want = BTreeSet::from([2, 4, 7, 8]);
    ensure(
        step.input.descent_set() == want && step.output.descent_set() == want,
        || "descent sets differ from {2,4,7,8}".into(),
    )?;
    Ok("S(582916743) = 683912754, mark 6 @ 6, interval [2,5]".into())
}

fn ac03_lemma_suite() -> Outcome {
    let mut sweeps = 0;
    for (a, b) in SMAP_PARAMS {
        for n in 0..=7 {
            let report = check_lemmas(params(a, b), n, PAR).map_err(|e| e.to_string())?;
            if let Some(bad) = report.checks.iter().find(|c| !c.pass) {
                return Err(format!("({a},{b}) n={n}: {bad:?}"));
            }
            sweeps += 1;
        }
    }
    Ok(format!("{sweeps} sweeps over S_n, n <= 7, zero counterexamples"))
}

fn ac04_bijectivity() -> Outcome {
    let mut largest = 0;
    for (a, b) in SMAP_PARAMS {
        for n in 0..=9 {
            let r = check_injectivity(params(a, b), n, PAR).map_err(|e| e.to_string())?;
            ensure(
                r.pass && r.image_size == r.target_size && r.domain_size == r.image_size,
                || format!("({a},{b}) n={n}: {r:?}"),
            )?;
            largest = largest.max(r.domain_size);
        }
    }
    Ok(format!("S^(n-a) bijective for n <= 9, largest class {largest}"))
}

fn ac05_wilf() -> Outcome {
    let mut lines = Vec::new();
    for (size, n_max) in [(3, 10), (4, 9), (5, 8)] {
        let r = check_wilf(size, n_max, None, PAR).map_err(|e| e.to_string())?;
        ensure(r.pass, || format!("size {size}: {:?}", r.divergence))?;
        lines.push(format!("{size}: {}", r.common.unwrap().last().unwrap()));
    }
    for size in [3, 4, 5] {
        let r = check_wilf(size, 12, Some(3), PAR).map_err(|e| e.to_string())?;
        ensure(r.pass, || format!("size {size} with delta_3: {:?}", r.divergence))?;
        lines.push(format!("{size}+d3: {}", r.common.unwrap().last().unwrap()));
    }
    Ok(format!("all splits agree; last counts {}", lines.join(", ")))
}

fn ac06_catalan_lemma() -> Outcome {
    for k in 0..=12 {
        let c = count_bounded_sequences(k);
        let expected = catalan(k).map_err(|e| e.to_string())?;
        ensure(i128::from(c.count) == expected, || {
            format!("k={k}: {} vs {expected}", c.count)
        })?;
    }
    let shown: BTreeSet<String> = count_bounded_sequences(3)
        .witnesses
        .ok_or("no witnesses for k = 3")?
        .iter()
        .map(|s| s.to_string())
        .collect();
    let want: BTreeSet<String> = ["000", "001", "010", "011", "002"].map(String::from).into();
    ensure(shown == want, || format!("k=3 witnesses {shown:?}"))?;
    Ok("count = C_k for k <= 12; k=3 witnesses exact".into())
}

// (a+b, m, n_max)
const DEGREE_CASES: [(usize, usize, usize); 5] = [(3, 3, 12), (4, 3, 12), (5, 3, 13), (3, 4, 12), (4, 4, 13)];

fn ac07_ac08_degree_and_leading() -> (Outcome, Outcome) {
    let mut degree_notes = Vec::new();
    let mut leading_notes = Vec::new();
    let mut degree_err = None;
    let mut leading_err = None;
    for (size, m, n_max) in DEGREE_CASES {
        let r = match check_degree_and_leading(params(size, 0), m, n_max, PAR) {
            Ok(r) => r,
            Err(e) => {
                degree_err.get_or_insert(format!("({size},{m}): {e}"));
                continue;
            }
        };
        if r.fitted_degree != Some(r.expected_degree) {
            degree_err.get_or_insert(format!(
                "({size},{m}): fitted {:?}, expected {}",
                r.fitted_degree, r.expected_degree
            ));
        }
        degree_notes.push(format!("({size},{m})->{} from n={}", r.expected_degree, r.threshold));
        if m == 3 {
            let want = catalan(size - 2).unwrap();
            if r.fitted_leading != want {
                leading_err.get_or_insert(format!("a+b={size}: leading {} vs C = {want}", r.fitted_leading));
            }
            leading_notes.push(format!("{}", r.fitted_leading));
        }
    }
    let degree = match degree_err {
        Some(e) => Err(e),
        None => Ok(degree_notes.join(", ")),
    };
    let leading = match leading_err {
        Some(e) => Err(e),
        None => Ok(format!(
            "leading coefficients {} = C_1, C_2, C_3",
            leading_notes.join(", ")
        )),
    };
    (degree, leading)
}

fn ac09_conjecture_fast() -> Outcome {
    let mut notes = Vec::new();
    for (size, n_max) in [(3, 12), (4, 12), (5, 13)] {
        let r = check_conjecture(params(size, 0), None, n_max, PAR).map_err(|e| e.to_string())?;
        if let Some(row) = r.rows.iter().find(|row| !row.matches) {
            return Err(format!(
                "finding: a+b={size}, n={}: predicted {}, enumerated {}",
                row.n, row.predicted, row.enumerated
            ));
        }
        notes.push(format!("{size}: n in [{}, {n_max}]", r.rows[0].n));
    }
    Ok(notes.join("; "))
}

fn ac10_conjecture_extended() -> Outcome {
    let predicted = conjecture_polynomial(params(9, 0))
        .and_then(|p| p.eval(13))
        .map_err(|e| e.to_string())?;
    ensure(predicted == 442150, || format!("polynomial at 13 = {predicted}"))?;
    let counted = count_avoiders(&shuffle_basis(params(9, 0), Some(3)), 13, 13, PAR)
        .map_err(|e| e.to_string())?
        .counts[0];
    ensure(counted == 442150, || format!("#Av_13(Pi(9,0), delta_3) = {counted}"))?;
    Ok("#Av_13(Pi(9,0), delta_3) = 442150".into())
}

fn bases_in_use() -> Vec<PatternBasis> {
    let mut bases = Vec::new();
    for size in 2..=5 {
        for p in ShuffleParams::splits(size).unwrap() {
            bases.push(shuffle_basis(p, None));
            for m in 3..=5 {
                bases.push(shuffle_basis(p, Some(m)));
            }
        }
    }
    for p in 2..=4 {
        for q in 2..=4 {
            bases.push(PatternBasis::new([Permutation::iota(p), Permutation::delta(q)]));
        }
    }
    bases.push(PatternBasis::new([Permutation::iota(2), Permutation::delta(4)]));
    bases.push("132,312,321".parse().unwrap());
    bases.push("21".parse().unwrap());
    bases.sort_by_key(|b| b.to_string());
    bases.dedup();
    bases
}

fn ac11_oracle_equivalence() -> Outcome {
    let bases = bases_in_use();
    for basis in &bases {
        let raw: Vec<Vec<u32>> = basis.patterns().iter().map(|p| p.values().to_vec()).collect();
        for n in 0..=7 {
            let fast: Vec<Vec<u32>> = enumerate_avoiders(basis, n, PAR)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(Permutation::into_values)
                .collect();
            let slow = oracle::avoiders(&raw, n);
            ensure(fast == slow, || {
                format!("{basis} n={n}: {} vs {}", fast.len(), slow.len())
            })?;
        }
    }
    Ok(format!("{} bases, n <= 7, identical lexicographic lists", bases.len()))
}

fn ac12_peg_construction() -> Outcome {
    let parts = ["1", "321", "12", "21"].map(perm);
    let inflated = inflate(&perm("3412"), &parts).map_err(|e| e.to_string())?;
    ensure(inflated == perm("58761243"), || {
        format!("3412[1,321,12,21] = {inflated}")
    })?;

    let peg: PegPermutation = "7+ 5. 8+ 6. 9+ 3. 10+ 4. 11+ 1. 12+ 2. 13+"
        .parse()
        .map_err(|e: pshuffle::Error| e.to_string())?;
    let basis = shuffle_basis(params(4, 0), Some(5));
    let mut members = 0;
    for n in 0..=15 {
        for member in grid_class_members(&peg, n, PAR) {
            members += 1;
            ensure(member.avoids_all(&basis), || {
                format!("{member} contains a pattern of {basis}")
            })?;
        }
    }
    let report = verify_peg(params(4, 0), 5, &peg, 15, PAR).map_err(|e| e.to_string())?;
    ensure(report.pass && report.slots == 7, || format!("{report:?}"))?;
    let built = verify_free_slots(params(4, 0), 5, 15, PAR).map_err(|e| e.to_string())?;
    ensure(built.pass && built.slots == 7, || format!("{built:?}"))?;
    Ok(format!(
        "{members} members of sizes 13..15 avoid Pi(4,0) + delta_5; constructed peg {}",
        built.peg
    ))
}

fn ac13_erdos_szekeres() -> Outcome {
    for p in 2..=4 {
        for q in 2..=4 {
            let e = erdos_szekeres_extremal(p, q, PAR).map_err(|e| e.to_string())?;
            ensure(e.size == (p - 1) * (q - 1), || format!("({p},{q}) -> {}", e.size))?;
        }
    }
    Ok("extremal size (p-1)(q-1) for 2 <= p, q <= 4".into())
}

type Entry = (&'static str, &'static str, Outcome, f64);

fn selected(filter: Option<&str>, id: &str, name: &str) -> bool {
    filter.is_none_or(|pat| id.contains(pat) || name.contains(pat))
}

fn run(results: &mut Vec<Entry>, filter: Option<&str>, id: &'static str, name: &'static str, f: fn() -> Outcome) {
    if !selected(filter, id, name) {
        return;
    }
    let start = Instant::now();
    let outcome = f();
    results.push((id, name, outcome, start.elapsed().as_secs_f64()));
}

fn main() {
    // libtest flags such as --nocapture are accepted and ignored
    let filter: Option<String> = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let filter = filter.as_deref();
    let mut results: Vec<Entry> = Vec::new();

    run(
        &mut results,
        filter,
        "AC01",
        "basis construction",
        ac01_basis_construction,
    );
    run(&mut results, filter, "AC02", "S-map golden step", ac02_smap_golden_step);
    run(&mut results, filter, "AC03", "lemma suite", ac03_lemma_suite);
    run(&mut results, filter, "AC04", "bijectivity", ac04_bijectivity);
    run(&mut results, filter, "AC05", "Wilf-equivalence", ac05_wilf);
    run(&mut results, filter, "AC06", "Catalan lemma", ac06_catalan_lemma);
    if selected(filter, "AC07 AC08", "degree theorem leading coefficient") {
        let start = Instant::now();
        let (degree, leading) = ac07_ac08_degree_and_leading();
        results.push(("AC07", "degree theorem", degree, start.elapsed().as_secs_f64()));
        results.push(("AC08", "leading coefficient", leading, 0.0));
    }
    run(
        &mut results,
        filter,
        "AC09",
        "conjecture check (fast)",
        ac09_conjecture_fast,
    );
    run(
        &mut results,
        filter,
        "AC10",
        "conjecture check (extended)",
        ac10_conjecture_extended,
    );
    run(
        &mut results,
        filter,
        "AC11",
        "oracle equivalence",
        ac11_oracle_equivalence,
    );
    run(&mut results, filter, "AC12", "peg construction", ac12_peg_construction);
    run(
        &mut results,
        filter,
        "AC13",
        "Erdos-Szekeres extremal",
        ac13_erdos_szekeres,
    );

    let mut failed = 0;
    for (id, name, outcome, secs) in &results {
        match outcome {
            Ok(detail) => println!("[PASS] {id} {name} ({secs:.2}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {id} {name} ({secs:.2}s): {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
