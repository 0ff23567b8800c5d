use pshuffle::analysis::catalan::WITNESS_LIMIT;
use pshuffle::analysis::{
    catalan, check_conjecture, check_degree_and_leading, count_bounded_sequences, erdos_szekeres_extremal,
    fit_binomial_polynomial, stabilization_threshold,
};
use pshuffle::peg::{inflate, verify_free_slots, verify_peg, FreeSlots, PegPermutation};
use pshuffle::smap::LEMMA_CHECKS;
use pshuffle::{
    check_injectivity, check_lemmas, check_wilf, count_avoiders, enumerate_avoiders, partial_shuffle, s_apply,
    s_iterate, shuffle_basis, sigma, Parallelism, PatternBasis, Permutation, SStep, ShuffleParams,
};
use serde_json::json;

use crate::args::{Cli, Command, Format, Pair, Params, Sweep};
use crate::render::{json, yes_no, Table};
use crate::{Failure, Output};

// Desk-scale limits; --force lifts them.
const COUNT_MAX_N: usize = 13;
const LEMMA_MAX_N: usize = 9;
const BIJECTION_MAX_N: usize = 10;
const ORACLE_MAX_N: usize = 9;
const PEG_MAX_N: usize = 16;
const CATALAN_MAX_K: usize = 15;
const EXTREMAL_MAX: usize = 4;

type Run = Result<Output, Failure>;

struct Ctx {
    par: Parallelism,
    format: Format,
    force: bool,
}

impl Ctx {
    fn bound(&self, what: &str, value: usize, limit: usize) -> Result<(), Failure> {
        if value > limit && !self.force {
            return Err(Failure::Usage(format!(
                "{what} = {value} exceeds the desk-scale limit {limit}; pass --force to run it anyway"
            )));
        }
        Ok(())
    }

    fn no_csv(&self, command: &str) -> Result<(), Failure> {
        if self.format == Format::Csv {
            return Err(Failure::Usage(format!(
                "{command} has no CSV output; use table or json"
            )));
        }
        Ok(())
    }
}

fn ok(text: String) -> Run {
    Ok(Output { text, pass: true })
}

fn params(a: usize, b: usize) -> Result<ShuffleParams, Failure> {
    Ok(ShuffleParams::new(a, b)?)
}

fn parse_perm(s: &str) -> Result<Permutation, Failure> {
    Ok(s.parse::<Permutation>()?)
}

fn parse_basis(s: &str) -> Result<PatternBasis, Failure> {
    let basis: PatternBasis = s.parse()?;
    let redundant = basis.redundancies();
    if !redundant.is_empty() {
        let pairs: Vec<String> = redundant
            .iter()
            .map(|&(i, j)| {
                format!(
                    "{} contains {}",
                    short(&basis.patterns()[i]),
                    short(&basis.patterns()[j])
                )
            })
            .collect();
        eprintln!("warning: basis {basis} is not an antichain ({})", pairs.join("; "));
    }
    Ok(basis)
}

/// Either one bound for every item or one per item.
fn per_item(bounds: &[usize], items: usize) -> Result<Vec<usize>, Failure> {
    match bounds.len() {
        1 => Ok(vec![bounds[0]; items]),
        k if k == items => Ok(bounds.to_vec()),
        k => Err(Failure::Usage(format!("--max-n takes 1 or {items} values, got {k}"))),
    }
}

fn short(p: &Permutation) -> String {
    p.to_short_string()
}

pub fn run(cli: &Cli) -> Run {
    let ctx = Ctx {
        par: cli
            .workers
            .map_or(Parallelism::Auto, |w| Parallelism::from_workers(w as usize)),
        format: cli.format,
        force: cli.force,
    };
    match &cli.command {
        Command::Shuffle { params: p, sigma } => shuffle(&ctx, *p, *sigma),
        Command::Smap {
            perm,
            params: p,
            iterate,
        } => smap(&ctx, perm, *p, *iterate),
        Command::Count {
            basis,
            a,
            b,
            delta,
            max_n,
            min_n,
        } => count(&ctx, basis.as_deref(), a.zip(*b), *delta, *max_n, *min_n),
        Command::Wilf { size, max_n, delta } => wilf(&ctx, size, max_n, *delta),
        Command::Fit {
            params: p,
            delta,
            max_n,
            n_start,
        } => fit(&ctx, *p, *delta, *max_n, *n_start),
        Command::Degree { case, max_n } => degree(&ctx, case, *max_n),
        Command::Conjecture {
            sum,
            a,
            b,
            max_n,
            min_n,
        } => conjecture(&ctx, sum, a.zip(*b), *min_n, max_n),
        Command::VerifyLemmas(sweep) => verify_lemmas(&ctx, sweep),
        Command::Bijection(sweep) => bijection(&ctx, sweep),
        Command::Catalan { max_k, witnesses } => catalan_cmd(&ctx, *max_k, *witnesses),
        Command::Inflate { base, parts } => inflate_cmd(&ctx, base, parts),
        Command::Peg {
            peg,
            params: p,
            delta,
            max_n,
        } => {
            ctx.bound("--max-n", *max_n, PEG_MAX_N)?;
            let peg: PegPermutation = peg.parse()?;
            let report = verify_peg(params(p.a, p.b)?, *delta, &peg, *max_n, ctx.par)?;
            free_slots_output(&ctx, &report)
        }
        Command::FreeSlots {
            params: p,
            delta,
            max_n,
        } => {
            ctx.bound("--max-n", *max_n, PEG_MAX_N)?;
            let report = verify_free_slots(params(p.a, p.b)?, *delta, *max_n, ctx.par)?;
            free_slots_output(&ctx, &report)
        }
        Command::Extremal { p, q } => extremal(&ctx, p, q),
        Command::Oracle {
            basis,
            size,
            delta,
            max_n,
        } => oracle(&ctx, basis, size, delta, *max_n),
    }
}

fn shuffle(ctx: &Ctx, p: Params, with_sigma: bool) -> Run {
    let p = params(p.a, p.b)?;
    let perms: Vec<Permutation> = if with_sigma {
        vec![sigma(p)?]
    } else {
        // canonical order: the slot of a runs from the right end to the left
        let mut basis = partial_shuffle(p).patterns().to_vec();
        basis.sort_by_key(|q| std::cmp::Reverse(q.position_of(p.a as u32)));
        basis
    };
    let shown: Vec<String> = perms.iter().map(short).collect();
    match ctx.format {
        Format::Json if with_sigma => ok(json(&json!({ "params": p, "sigma": perms[0] }))),
        Format::Json => ok(json(&json!({ "params": p, "basis": perms }))),
        Format::Csv => {
            let mut t = Table::new(&["pattern"]);
            for s in shown {
                t.row(vec![s]);
            }
            ok(t.csv())
        }
        Format::Table => ok(format!("{}\n", shown.join(" "))),
    }
}

fn describe_step(step: &SStep) -> String {
    match &step.mark {
        None => "fixed point".to_string(),
        Some(m) => format!(
            "underline a = {} at position {}, interval [{},{}]",
            m.underline_a_value, m.underline_a_position, m.assoc_low, m.assoc_high
        ),
    }
}

fn step_table(steps: &[SStep]) -> Table {
    let mut t = Table::new(&[
        "step",
        "input",
        "output",
        "underline_a",
        "position",
        "assoc_low",
        "assoc_high",
    ]);
    for (i, s) in steps.iter().enumerate() {
        let mark = |f: fn(&pshuffle::ShuffleMark) -> usize| s.mark.as_ref().map_or(String::new(), |m| f(m).to_string());
        t.row(vec![
            (i + 1).to_string(),
            short(&s.input),
            short(&s.output),
            mark(|m| m.underline_a_value as usize),
            mark(|m| m.underline_a_position),
            mark(|m| m.assoc_low as usize),
            mark(|m| m.assoc_high as usize),
        ]);
    }
    t
}

fn smap(ctx: &Ctx, perm: &str, p: Params, iterate: bool) -> Run {
    let p = params(p.a, p.b)?;
    let pi = parse_perm(perm)?;
    if !iterate {
        let step = s_apply(&pi, p)?;
        return match ctx.format {
            Format::Json => ok(json(&step)),
            Format::Csv => ok(step_table(std::slice::from_ref(&step)).csv()),
            Format::Table => ok(format!("{}\n{}\n", short(&step.output), describe_step(&step))),
        };
    }
    let it = s_iterate(&pi, p)?;
    let lowered = partial_shuffle(p.lowered()?);
    let lands = it.final_perm.avoids_all(&lowered);
    let text = match ctx.format {
        Format::Json => json(&it),
        Format::Csv => step_table(&it.trace).csv(),
        Format::Table => {
            let mut s = String::new();
            for (i, step) in it.trace.iter().enumerate() {
                s.push_str(&format!("{i:>3}  {}  {}\n", short(&step.input), describe_step(step)));
            }
            s.push_str(&format!(
                "final {} {} Av(Pi{})\n",
                short(&it.final_perm),
                if lands { "lies in" } else { "is NOT in" },
                p.lowered()?
            ));
            s
        }
    };
    Ok(Output { text, pass: lands })
}

fn count(
    ctx: &Ctx,
    basis: Option<&str>,
    ab: Option<(usize, usize)>,
    delta: Option<usize>,
    max_n: usize,
    min_n: usize,
) -> Run {
    ctx.bound("--max-n", max_n, COUNT_MAX_N)?;
    let basis = match (basis, ab) {
        (Some(s), _) => parse_basis(s)?,
        (None, Some((a, b))) => shuffle_basis(params(a, b)?, delta),
        (None, None) => return Err(Failure::Usage("count needs --basis or --a and --b".into())),
    };
    let seq = count_avoiders(&basis, max_n, min_n, ctx.par)?;
    let text = match ctx.format {
        Format::Json => json(&seq),
        Format::Csv => seq.to_csv(),
        Format::Table => {
            let mut t = Table::new(&["n", "count"]);
            for (n, c) in seq.rows() {
                t.row(vec![n.to_string(), c.to_string()]);
            }
            format!("Av({})\n{}", seq.basis, t.aligned())
        }
    };
    ok(text)
}

fn wilf(ctx: &Ctx, sizes: &[usize], max_n: &[usize], delta: Option<usize>) -> Run {
    let bounds = per_item(max_n, sizes.len())?;
    for &n in &bounds {
        ctx.bound("--max-n", n, COUNT_MAX_N)?;
    }
    let reports = sizes
        .iter()
        .zip(&bounds)
        .map(|(&size, &n)| check_wilf(size, n, delta, ctx.par))
        .collect::<pshuffle::Result<Vec<_>>>()?;
    let pass = reports.iter().all(|r| r.pass);
    let text = match ctx.format {
        Format::Json => json(&reports),
        Format::Csv => {
            let mut t = Table::new(&["size", "delta", "a", "b", "n", "count"]);
            for r in &reports {
                for c in &r.classes {
                    for (n, count) in c.counts.iter().enumerate() {
                        t.row(vec![
                            r.size_sum.to_string(),
                            r.delta_m.map_or(String::new(), |m| m.to_string()),
                            c.params.a.to_string(),
                            c.params.b.to_string(),
                            n.to_string(),
                            count.to_string(),
                        ]);
                    }
                }
            }
            t.csv()
        }
        Format::Table => {
            let mut s = String::new();
            for r in &reports {
                let extra = r.delta_m.map_or(String::new(), |m| format!(" with delta_{m}"));
                let status = match &r.divergence {
                    None => "pass".to_string(),
                    Some(d) => format!(
                        "FAIL at n = {}: Pi{} has {}, Pi{} has {}",
                        d.n, d.params, d.count, d.reference_params, d.reference_count
                    ),
                };
                s.push_str(&format!("a+b = {}{extra}, n <= {}: {status}\n", r.size_sum, r.n_max));
                let header: Vec<String> = std::iter::once("n".to_string())
                    .chain(r.classes.iter().map(|c| format!("Pi{}", c.params)))
                    .collect();
                let header: Vec<&str> = header.iter().map(String::as_str).collect();
                let mut t = Table::new(&header);
                for n in 0..=r.n_max {
                    t.row(
                        std::iter::once(n.to_string())
                            .chain(r.classes.iter().map(|c| c.counts[n].to_string()))
                            .collect(),
                    );
                }
                s.push_str(&t.aligned());
            }
            s
        }
    };
    Ok(Output { text, pass })
}

fn fit(ctx: &Ctx, p: Params, delta: usize, max_n: usize, n_start: Option<usize>) -> Run {
    ctx.bound("--max-n", max_n, COUNT_MAX_N)?;
    let p = params(p.a, p.b)?;
    let seq = count_avoiders(&shuffle_basis(p, Some(delta)), max_n, 0, ctx.par)?;
    let (start, poly) = match n_start {
        Some(start) => (start, fit_binomial_polynomial(&seq, start)?),
        None => stabilization_threshold(&seq).ok_or_else(|| {
            Failure::Runtime(format!(
                "counts up to n = {max_n} do not settle on a polynomial; raise --max-n"
            ))
        })?,
    };
    let text = match ctx.format {
        Format::Json => json(&json!({
            "params": p,
            "m": delta,
            "n_start": start,
            "polynomial": poly,
            "counts": seq,
        })),
        Format::Csv => {
            let mut t = Table::new(&["k", "coeff"]);
            for (k, c) in poly.coeffs().iter().enumerate() {
                t.row(vec![k.to_string(), c.to_string()]);
            }
            t.csv()
        }
        Format::Table => format!("{poly}\n"),
    };
    ok(text)
}

fn degree(ctx: &Ctx, cases: &[Pair], max_n: usize) -> Run {
    ctx.bound("--max-n", max_n, COUNT_MAX_N)?;
    let reports = cases
        .iter()
        .map(|&Pair(size, m)| check_degree_and_leading(params(size, 0)?, m, max_n, ctx.par).map_err(Failure::from))
        .collect::<Result<Vec<_>, _>>()?;
    let pass = reports.iter().all(|r| r.pass);
    if ctx.format == Format::Json {
        return Ok(Output {
            text: json(&reports),
            pass,
        });
    }
    let mut t = Table::new(&[
        "a+b",
        "m",
        "from_n",
        "expected_degree",
        "fitted_degree",
        "expected_leading",
        "fitted_leading",
        "result",
    ]);
    for r in &reports {
        t.row(vec![
            r.params.size().to_string(),
            r.m.to_string(),
            r.threshold.to_string(),
            r.expected_degree.to_string(),
            r.fitted_degree.map_or("-".into(), |d| d.to_string()),
            r.expected_leading.map_or("-".into(), |c| c.to_string()),
            r.fitted_leading.to_string(),
            yes_no(r.pass),
        ]);
    }
    Ok(Output {
        text: t.render(ctx.format),
        pass,
    })
}

fn conjecture(ctx: &Ctx, sums: &[usize], ab: Option<(usize, usize)>, min_n: Option<usize>, max_n: &[usize]) -> Run {
    let cases: Vec<ShuffleParams> = match ab {
        Some((a, b)) => vec![params(a, b)?],
        None => sums.iter().map(|&s| params(s, 0)).collect::<Result<_, _>>()?,
    };
    let bounds = per_item(max_n, cases.len())?;
    for &n in &bounds {
        ctx.bound("--max-n", n, COUNT_MAX_N)?;
    }
    let reports = cases
        .iter()
        .zip(&bounds)
        .map(|(&p, &n)| check_conjecture(p, min_n, n, ctx.par))
        .collect::<pshuffle::Result<Vec<_>>>()?;
    let pass = reports.iter().all(|r| r.pass);
    let text = match ctx.format {
        Format::Json => json(&reports),
        Format::Csv => {
            let mut t = Table::new(&["a", "b", "n", "predicted", "enumerated", "matches"]);
            for r in &reports {
                for row in &r.rows {
                    t.row(vec![
                        r.params.a.to_string(),
                        r.params.b.to_string(),
                        row.n.to_string(),
                        row.predicted.to_string(),
                        row.enumerated.to_string(),
                        row.matches.to_string(),
                    ]);
                }
            }
            t.csv()
        }
        Format::Table => {
            let mut s = String::new();
            for r in &reports {
                let status = if r.pass {
                    "pass"
                } else {
                    "FINDING: counts leave the conjectured polynomial"
                };
                s.push_str(&format!(
                    "Pi{} with delta_3, conjectured from n = {}: {status}\n{}\n",
                    r.params, r.threshold, r.polynomial
                ));
                let mut t = Table::new(&["n", "predicted", "enumerated", "match"]);
                for row in &r.rows {
                    t.row(vec![
                        row.n.to_string(),
                        row.predicted.to_string(),
                        row.enumerated.to_string(),
                        if row.matches { "yes" } else { "NO" }.into(),
                    ]);
                }
                s.push_str(&t.aligned());
            }
            s
        }
    };
    Ok(Output { text, pass })
}

fn sweep_cases(sweep: &Sweep) -> Result<(Vec<ShuffleParams>, Vec<usize>), Failure> {
    let cases = match sweep.a.zip(sweep.b) {
        Some((a, b)) => vec![params(a, b)?],
        None => sweep
            .pair
            .iter()
            .map(|&Pair(a, b)| params(a, b))
            .collect::<Result<_, _>>()?,
    };
    let ns = match (sweep.n, sweep.max_n) {
        (Some(n), _) => vec![n],
        (None, Some(max)) => (0..=max).collect(),
        (None, None) => return Err(Failure::Usage("pass --n or --max-n".into())),
    };
    Ok((cases, ns))
}

fn verify_lemmas(ctx: &Ctx, sweep: &Sweep) -> Run {
    let (cases, ns) = sweep_cases(sweep)?;
    ctx.bound("n", *ns.last().unwrap(), LEMMA_MAX_N)?;
    let mut reports = Vec::new();
    for &p in &cases {
        for &n in &ns {
            reports.push(check_lemmas(p, n, ctx.par)?);
        }
    }
    let pass = reports.iter().all(|r| r.pass);
    if ctx.format == Format::Json {
        return Ok(Output {
            text: json(&reports),
            pass,
        });
    }
    let mut t = Table::new(&["params", "n", "check", "checked", "result", "counterexample"]);
    for r in &reports {
        for c in &r.checks {
            t.row(vec![
                r.params.to_string(),
                r.n.to_string(),
                c.check.clone(),
                c.checked.to_string(),
                yes_no(c.pass),
                c.counterexample
                    .as_ref()
                    .map_or(String::new(), |x| format!("{}: {}", short(&x.perm), x.detail)),
            ]);
        }
    }
    let mut text = t.render(ctx.format);
    if ctx.format == Format::Table {
        for (name, meaning) in LEMMA_CHECKS {
            text.push_str(&format!("{name:>8}: {meaning}\n"));
        }
    }
    Ok(Output { text, pass })
}

fn bijection(ctx: &Ctx, sweep: &Sweep) -> Run {
    let (cases, ns) = sweep_cases(sweep)?;
    ctx.bound("n", *ns.last().unwrap(), BIJECTION_MAX_N)?;
    let mut reports = Vec::new();
    for &p in &cases {
        for &n in &ns {
            reports.push(check_injectivity(p, n, ctx.par)?);
        }
    }
    let pass = reports.iter().all(|r| r.pass);
    if ctx.format == Format::Json {
        return Ok(Output {
            text: json(&reports),
            pass,
        });
    }
    let mut t = Table::new(&["params", "n", "domain", "image", "target", "result", "counterexample"]);
    for r in &reports {
        t.row(vec![
            r.params.to_string(),
            r.n.to_string(),
            r.domain_size.to_string(),
            r.image_size.to_string(),
            r.target_size.to_string(),
            yes_no(r.pass),
            r.counterexample
                .as_ref()
                .map_or(String::new(), |x| format!("{}: {}", short(&x.perm), x.detail)),
        ]);
    }
    Ok(Output {
        text: t.render(ctx.format),
        pass,
    })
}

fn catalan_cmd(ctx: &Ctx, max_k: usize, witnesses: Option<usize>) -> Run {
    ctx.bound("--max-k", max_k, CATALAN_MAX_K)?;
    if let Some(k) = witnesses.filter(|&k| k > WITNESS_LIMIT) {
        return Err(Failure::Usage(format!(
            "--witnesses is limited to k <= {WITNESS_LIMIT}, got {k}"
        )));
    }
    let mut rows = Vec::new();
    for k in 0..=max_k {
        let c = count_bounded_sequences(k);
        let expected = catalan(k)?;
        rows.push((k, expected, c.count, i128::from(c.count) == expected));
    }
    let listed = witnesses.map(count_bounded_sequences);
    let pass = rows.iter().all(|r| r.3);
    let text = match ctx.format {
        Format::Json => json(&json!({
            "check": "catalan",
            "pass": pass,
            "rows": rows
                .iter()
                .map(|&(k, c, n, m)| json!({ "k": k, "catalan": c.to_string(), "count": n, "pass": m }))
                .collect::<Vec<_>>(),
            "witnesses": listed,
        })),
        _ => {
            let mut t = Table::new(&["k", "catalan", "count", "result"]);
            for &(k, c, n, m) in &rows {
                t.row(vec![k.to_string(), c.to_string(), n.to_string(), yes_no(m)]);
            }
            let mut s = t.render(ctx.format);
            if let (Format::Table, Some(list)) = (ctx.format, &listed) {
                let seqs: Vec<String> = list.witnesses.iter().flatten().map(|w| w.to_string()).collect();
                s.push_str(&format!("k = {}: {}\n", list.k, seqs.join(" ")));
            }
            s
        }
    };
    Ok(Output { text, pass })
}

fn inflate_cmd(ctx: &Ctx, base: &str, parts: &[String]) -> Run {
    ctx.no_csv("inflate")?;
    let base = parse_perm(base)?;
    let parts = parts.iter().map(|s| parse_perm(s)).collect::<Result<Vec<_>, _>>()?;
    let result = inflate(&base, &parts)?;
    match ctx.format {
        Format::Json => ok(json(&json!({ "base": base, "parts": parts, "result": result }))),
        _ => ok(format!("{}\n", short(&result))),
    }
}

fn free_slots_output(ctx: &Ctx, r: &FreeSlots) -> Run {
    ctx.no_csv("peg")?;
    let text = match ctx.format {
        Format::Json => json(r),
        _ => {
            let mut s = format!(
                "peg        {}\nclass      Av(Pi{}, delta_{})\nfree slots {}\nmembers    {} of size <= {}\nresult     {}\n",
                r.peg,
                r.params,
                r.m,
                r.slots,
                r.members_checked,
                r.n_max,
                yes_no(r.pass)
            );
            if let Some(bad) = &r.counterexample {
                s.push_str(&format!("offender   {}\n", short(bad)));
            }
            s
        }
    };
    Ok(Output { text, pass: r.pass })
}

fn extremal(ctx: &Ctx, ps: &[usize], qs: &[usize]) -> Run {
    for &v in ps.iter().chain(qs) {
        ctx.bound("p, q", v, EXTREMAL_MAX)?;
    }
    let mut results = Vec::new();
    for &p in ps {
        for &q in qs {
            let e = erdos_szekeres_extremal(p, q, ctx.par)?;
            let expected = (p - 1) * (q - 1);
            results.push((e, expected));
        }
    }
    let pass = results.iter().all(|(e, want)| e.size == *want);
    if ctx.format == Format::Json {
        let rows: Vec<_> = results
            .iter()
            .map(|(e, want)| json!({ "p": e.p, "q": e.q, "size": e.size, "expected": want, "witness": e.witness, "pass": e.size == *want }))
            .collect();
        return Ok(Output {
            text: json(&rows),
            pass,
        });
    }
    let mut t = Table::new(&["p", "q", "size", "(p-1)(q-1)", "witness", "result"]);
    for (e, want) in &results {
        t.row(vec![
            e.p.to_string(),
            e.q.to_string(),
            e.size.to_string(),
            want.to_string(),
            short(&e.witness),
            yes_no(e.size == *want),
        ]);
    }
    Ok(Output {
        text: t.render(ctx.format),
        pass,
    })
}

fn oracle(ctx: &Ctx, explicit: &[String], sizes: &[usize], deltas: &[usize], max_n: usize) -> Run {
    ctx.bound("--max-n", max_n, ORACLE_MAX_N)?;
    let mut bases = explicit.iter().map(|s| parse_basis(s)).collect::<Result<Vec<_>, _>>()?;
    for &size in sizes {
        for p in ShuffleParams::splits(size)? {
            bases.push(shuffle_basis(p, None));
            bases.extend(deltas.iter().map(|&m| shuffle_basis(p, Some(m))));
        }
    }
    if bases.is_empty() {
        return Err(Failure::Usage("oracle needs --basis or --size".into()));
    }
    let mut rows = Vec::new();
    for basis in &bases {
        for n in 0..=max_n {
            let pruned = enumerate_avoiders(basis, n, ctx.par)?;
            let naive: Vec<Permutation> = Permutation::all(n).filter(|p| p.avoids_all(basis)).collect();
            rows.push((basis.to_string(), n, pruned.len(), naive.len(), pruned == naive));
        }
    }
    let pass = rows.iter().all(|r| r.4);
    if ctx.format == Format::Json {
        let rows: Vec<_> = rows
            .iter()
            .map(|(b, n, x, y, m)| json!({ "basis": b, "n": n, "pruned": x, "naive": y, "pass": m }))
            .collect();
        return Ok(Output {
            text: json(&json!({ "check": "oracle", "pass": pass, "rows": rows })),
            pass,
        });
    }
    let mut t = Table::new(&["basis", "n", "pruned", "naive", "result"]);
    for (b, n, x, y, m) in rows {
        t.row(vec![b, n.to_string(), x.to_string(), y.to_string(), yes_no(m)]);
    }
    Ok(Output {
        text: t.render(ctx.format),
        pass,
    })
}
