//! The reproduction suite behind `examples` and the acceptance test.
//!
//! Each criterion returns an [`Outcome`] with a pass flag, human detail lines,
//! a JSON record and every Betti table it computed. The last criterion runs
//! the Betti property checks over all of those tables.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::{json, Value};

use lefschetz_core::apolar::apolar_algebra;
use lefschetz_core::betti::{eliahou_kervaire_table, euler_identity_holds, koszul_betti_table, lex_betti_numbers};
use lefschetz_core::ci::{check_restriction, monomial_ci, random_ci_degrees, sample_ci, CiOptions};
use lefschetz_core::construction::{build_construction, plan_construction, random_admissible_hf, verify_construction, Mode};
use lefschetz_core::ideal::lex_segment_ideal;
use lefschetz_core::lefschetz::{check_slp, check_wlp, Certificate};
use lefschetz_core::parse::parse_polynomial;
use lefschetz_core::random::{random_binary_artinian_ideal, trial_rng};
use lefschetz_core::{BettiTable, GradedAlgebra, HilbertFunction, IdealSpan, LefschetzOptions, MonomialIdeal, Ring};

use crate::idealfile::parse_ideal_file;
use crate::report;

/// Ideal files shipped with the tool.
pub const CORPUS: &[(&str, &str)] = &[
    ("ex1331", include_str!("../corpus/ex1331.ideal")),
    ("lex13431", include_str!("../corpus/lex13431.ideal")),
    ("squares_char2", include_str!("../corpus/squares_char2.ideal")),
    ("squares_q", include_str!("../corpus/squares_q.ideal")),
    ("construction1331", include_str!("../corpus/construction1331.ideal")),
    ("stable132", include_str!("../corpus/stable132.ideal")),
    ("ci_dense", include_str!("../corpus/ci_dense.ideal")),
    ("binary", include_str!("../corpus/binary.ideal")),
];

pub fn corpus_ideal(name: &str) -> IdealSpan {
    let (_, text) = CORPUS.iter().find(|(n, _)| *n == name).expect("corpus entry");
    parse_ideal_file(text).expect("corpus files parse")
}

#[derive(Debug, Clone, Copy)]
pub struct Criterion {
    pub id: u8,
    pub key: &'static str,
    pub title: &'static str,
    pub budget: Duration,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, key: "example-1331", title: "(1,3,3,1) ideal fails WLP with x1 in the kernel", budget: secs(1) },
    Criterion { id: 2, key: "lex-resolution-1331", title: "lex (1,3,3,1) resolution by Eliahou-Kervaire and Koszul", budget: secs(5) },
    Criterion { id: 3, key: "lex-13431", title: "lex (1,3,4,3,1): WLP holds, SLP fails at (1,2)", budget: secs(5) },
    Criterion { id: 4, key: "construction-suite", title: "extremal constructions meet all four checks", budget: secs(120) },
    Criterion { id: 5, key: "ci-campaign", title: "random height-three complete intersections over Q", budget: secs(600) },
    Criterion { id: 6, key: "squares-char-2", title: "(x1^2,x2^2,x3^2) over F_2 fails WLP exactly", budget: secs(1) },
    Criterion { id: 7, key: "two-variable-slp", title: "random Artinian ideals in two variables have SLP", budget: secs(60) },
    Criterion { id: 8, key: "apolar", title: "inverse systems (1,5,5,1) and (1,5,6,5,1)", budget: secs(30) },
    Criterion { id: 9, key: "monomial-ci-slp", title: "monomial complete intersections have SLP", budget: secs(60) },
    Criterion { id: 10, key: "betti-properties", title: "Euler identity, lex dominance, EK = Koszul", budget: secs(120) },
];

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub seed: u64,
    pub jobs: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 1, jobs: 1 }
    }
}

/// A Betti table computed along the way, with what is needed to re-check it.
#[derive(Debug, Clone)]
pub struct TableRecord {
    pub label: String,
    pub table: BettiTable,
    pub hf: HilbertFunction,
    pub ring: Arc<Ring>,
    /// Set when the ideal is monomial.
    pub monomial: Option<MonomialIdeal>,
}

impl TableRecord {
    fn of(label: impl Into<String>, a: &GradedAlgebra, table: BettiTable, monomial: Option<MonomialIdeal>) -> Self {
        TableRecord {
            label: label.into(),
            table,
            hf: a.hilbert_function().clone(),
            ring: a.ring().clone(),
            monomial,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub criterion: Criterion,
    pub passed: bool,
    pub details: Vec<String>,
    pub elapsed: Duration,
    pub json: Value,
    pub tables: Vec<TableRecord>,
}

impl Outcome {
    pub fn within_budget(&self) -> bool {
        self.elapsed <= self.criterion.budget
    }
}

#[derive(Default)]
struct Log {
    ok: bool,
    details: Vec<String>,
    tables: Vec<TableRecord>,
    json: serde_json::Map<String, Value>,
}

impl Log {
    fn new() -> Self {
        Log {
            ok: true,
            ..Default::default()
        }
    }

    fn check(&mut self, cond: bool, what: impl Into<String>) {
        let what = what.into();
        if !cond {
            self.ok = false;
            self.details.push(format!("FAILED: {what}"));
        } else {
            self.details.push(format!("ok: {what}"));
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.details.push(what.into());
    }

    fn put(&mut self, key: &str, v: Value) {
        self.json.insert(key.into(), v);
    }
}

fn monomial_ideal_of(span: &IdealSpan) -> Option<MonomialIdeal> {
    let mut gens = Vec::new();
    for g in span.gens() {
        if g.num_terms() != 1 {
            return None;
        }
        gens.push(g.leading_monomial()?.clone());
    }
    Some(MonomialIdeal::new(span.ring(), gens))
}

fn hf(v: &[u64]) -> HilbertFunction {
    HilbertFunction::new(v.to_vec()).expect("valid Hilbert function")
}

fn ring3(names: [&str; 3], ch: u32) -> Arc<Ring> {
    Arc::new(Ring::with_var_names(&names, ch).expect("valid ring"))
}

fn lopts(seed: u64) -> LefschetzOptions {
    LefschetzOptions {
        seed,
        ..Default::default()
    }
}

fn c1(log: &mut Log, opts: &SuiteOptions) {
    let i = corpus_ideal("ex1331");
    let a = GradedAlgebra::new(&i).expect("Artinian");
    log.check(a.hilbert_function().values() == [1, 3, 3, 1], format!("Hilbert function {}", a.hilbert_function()));
    let v = check_wlp(&a, &lopts(opts.seed));
    log.check(!v.holds, "WLP fails");
    log.check(v.failing_steps == [(1, 1)], format!("failing steps {:?}", v.failing_steps));
    let x1 = parse_polynomial("x1", i.ring()).expect("variable");
    let cert_ok = matches!(&v.certificate, Some(Certificate::CommonKernel { degree: 1, step: 1, basis }) if *basis == [x1.clone()]);
    log.check(cert_ok, report::describe_verdict(&v));
    log.put("verdict", report::verdict(&v));
}

fn c2(log: &mut Log, _opts: &SuiteOptions) {
    let ring = ring3(["x1", "x2", "x3"], 0);
    let lex = lex_segment_ideal(&hf(&[1, 3, 3, 1]), &ring).expect("O-sequence");
    let a = GradedAlgebra::new(&lex.to_span()).expect("Artinian");
    let ek = eliahou_kervaire_table(&lex).expect("stable");
    let kz = koszul_betti_table(&a);
    let mut want = BettiTable::new(3);
    want.set(0, 0, 1);
    for (i, row) in [(1, [3, 3, 1]), (2, [3, 5, 2]), (3, [1, 2, 1])] {
        for (j, v) in (1..=3).zip(row) {
            want.set(i, j, v);
        }
    }
    log.check(ek == want, format!("Eliahou-Kervaire table\n{}", ek.diagram()));
    log.check(kz == want, format!("Koszul table\n{}", kz.diagram()));
    log.check(a.socle_type() == [0, 1, 2, 1], format!("socle type {:?}", a.socle_type()));
    let ex = monomial_ideal_of(&corpus_ideal("ex1331")).expect("monomial");
    log.check(ex == lex, "the (1,3,3,1) example ideal is the lex-segment ideal");
    log.put("betti", report::betti(&kz));
    log.tables.push(TableRecord::of("lex 1331 (Koszul)", &a, kz, Some(lex.clone())));
    log.tables.push(TableRecord::of("lex 1331 (EK)", &a, ek, Some(lex)));
}

fn c3(log: &mut Log, opts: &SuiteOptions) {
    let ring = ring3(["x1", "x2", "x3"], 0);
    let lex = lex_segment_ideal(&hf(&[1, 3, 4, 3, 1]), &ring).expect("O-sequence");
    let file = monomial_ideal_of(&corpus_ideal("lex13431")).expect("monomial");
    log.check(file == lex, "corpus file matches the computed lex ideal");
    let a = GradedAlgebra::new(&lex.to_span()).expect("Artinian");
    let w = check_wlp(&a, &lopts(opts.seed));
    log.check(w.holds, report::describe_verdict(&w));
    let s = check_slp(&a, &lopts(opts.seed));
    log.check(!s.holds && s.is_exact(), report::describe_verdict(&s));
    log.check(s.failing_steps == [(1, 2)], format!("failing steps {:?}", s.failing_steps));
    log.put("wlp", report::verdict(&w));
    log.put("slp", report::verdict(&s));
    log.tables.push(TableRecord::of("lex 13431", &a, koszul_betti_table(&a), Some(lex)));
}

fn c4(log: &mut Log, opts: &SuiteOptions) {
    let mut hs = vec![hf(&[1, 3, 3, 1]), hf(&[1, 3, 4, 3, 1]), hf(&[1, 3, 4, 5, 4])];
    for k in 0..10 {
        hs.push(random_admissible_hf(&mut trial_rng(opts.seed, 2000 + k), 4, 6));
    }
    let results: Vec<_> = hs
        .par_iter()
        .map(|h| {
            let plan = plan_construction(h, h.get(1) as usize, Mode::SlpLex).map_err(|e| e.to_string())?;
            let c = build_construction(&plan, 0).map_err(|e| e.to_string())?;
            let r = verify_construction(&c).map_err(|e| e.to_string())?;
            Ok::<_, String>((c, r))
        })
        .collect();
    let mut records = Vec::new();
    for (h, res) in hs.iter().zip(results) {
        match res {
            Ok((c, r)) => {
                log.check(
                    r.all_pass(),
                    format!(
                        "h = {h}: hf {} / x0 SLP {} / socle {} / Betti {}",
                        r.hilbert_ok, r.lefschetz_ok, r.socle_ok, r.betti_ok
                    ),
                );
                records.push(json!({ "h": h.to_string(), "report": report::construction(&r) }));
                log.tables.push(TableRecord::of(format!("construction {h}"), &c.algebra, r.betti.clone(), Some(c.ideal.clone())));
            }
            Err(e) => log.check(false, format!("h = {h}: {e}")),
        }
    }
    log.put("constructions", Value::Array(records));
}

fn c5(log: &mut Log, opts: &SuiteOptions) {
    let ci_opts = CiOptions {
        seed: opts.seed,
        ..Default::default()
    };
    let results: Vec<_> = (0..25u64)
        .into_par_iter()
        .map(|t| {
            let degs = random_ci_degrees(&mut trial_rng(opts.seed, 1000 + t), 5);
            let sample = sample_ci(degs, &ci_opts, t).map_err(|e| (degs, e.to_string()))?;
            let wlp = check_wlp(&sample.algebra, &lopts(opts.seed.wrapping_add(t)));
            let slp = check_slp(&sample.algebra, &lopts(opts.seed.wrapping_add(t)));
            let restr = check_restriction(&sample).map_err(|e| (degs, e.to_string()))?;
            let table = koszul_betti_table(&sample.algebra);
            Ok((t, sample, wlp, slp, restr, table))
        })
        .collect();
    let (mut wlp_ok, mut split_ok, mut mu_ok, mut table_ok, mut slp_holds) = (0, 0, 0, 0, 0);
    let mut trials = Vec::new();
    for r in results {
        match r {
            Ok((t, sample, wlp, slp, restr, table)) => {
                let d = sample.degs;
                wlp_ok += wlp.holds as usize;
                let split = restr.splitting_ok() && restr.degree_sum_ok(d);
                split_ok += split as usize;
                mu_ok += restr.mu_ok() as usize;
                table_ok += restr.table_ok() as usize;
                slp_holds += slp.holds as usize;
                if !(wlp.holds && split && restr.mu_ok() && restr.table_ok()) {
                    log.note(format!("trial {t} {:?}: finding", d.get()));
                }
                trials.push(json!({
                    "trial": t,
                    "degrees": d.get(),
                    "wlp": wlp.holds,
                    "slp": slp.holds,
                    "line": report::scalars(&sample.line),
                    "restriction": report::restriction(&restr),
                }));
                log.tables.push(TableRecord::of(format!("CI {:?} #{t}", d.get()), &sample.algebra, table, None));
                let with_line = sample
                    .ideal
                    .sum(&IdealSpan::new(sample.ideal.ring(), vec![lefschetz_core::Polynomial::linear_form(sample.ideal.ring(), &sample.line)]).expect("linear"));
                let al = GradedAlgebra::new(&with_line).expect("Artinian");
                log.tables.push(TableRecord::of(format!("CI {:?} #{t} + L", d.get()), &al, restr.iplusl_table.clone(), None));
            }
            Err((d, e)) => log.check(false, format!("{:?}: {e}", d.get())),
        }
    }
    log.check(wlp_ok == 25, format!("WLP holds in {wlp_ok}/25"));
    log.check(split_ok == 25, format!("splitting type as predicted in {split_ok}/25"));
    log.check(mu_ok == 25, format!("mu of the restriction as predicted in {mu_ok}/25"));
    log.check(table_ok == 25, format!("Betti table of R/(I+L) as predicted in {table_ok}/25"));
    log.note(format!("SLP (recorded only) held in {slp_holds}/25"));
    log.put("trials", Value::Array(trials));
}

fn c6(log: &mut Log, opts: &SuiteOptions) {
    let a = GradedAlgebra::new(&corpus_ideal("squares_char2")).expect("Artinian");
    let v = check_wlp(&a, &lopts(opts.seed));
    log.check(!v.holds && v.is_exact(), report::describe_verdict(&v));
    log.check(
        v.certificate == Some(Certificate::NilpotentForm { exponent: 2 }),
        "certificate: ell^2 = 0 identically",
    );
    log.put("verdict", report::verdict(&v));
    let t = koszul_betti_table(&a);
    log.tables.push(TableRecord::of("squares over F_2", &a, t, monomial_ideal_of(a.ideal())));
}

fn c7(log: &mut Log, opts: &SuiteOptions) {
    let ring = Arc::new(Ring::with_var_names(&["x", "y"], 0).expect("valid ring"));
    let results: Vec<_> = (0..25u64)
        .into_par_iter()
        .map(|t| {
            let i = random_binary_artinian_ideal(&mut trial_rng(opts.seed, 3000 + t), &ring, 10, 10);
            let a = GradedAlgebra::new(&i).expect("Artinian by construction");
            let v = check_slp(&a, &lopts(opts.seed.wrapping_add(t)));
            let table = koszul_betti_table(&a);
            (t, i, a, v, table)
        })
        .collect();
    let mut held = 0;
    for (t, i, a, v, table) in results {
        held += v.holds as usize;
        if !v.holds {
            log.note(format!("trial {t}: {}", crate::idealfile::render_ideal_file(&i, None)));
        }
        log.tables.push(TableRecord::of(format!("binary #{t} (s = {})", a.socle_degree()), &a, table, monomial_ideal_of(&i)));
    }
    log.check(held == 25, format!("SLP holds in {held}/25"));
}

fn c8(log: &mut Log, opts: &SuiteOptions) {
    let ring = Arc::new(Ring::with_var_names(&["x", "y", "z", "u", "v"], 0).expect("valid ring"));
    let f = parse_polynomial("x*u^2 + y*u*v + z*v^2", &ring).expect("form");
    let a = apolar_algebra(&f).expect("apolar algebra");
    log.check(a.hilbert_function().values() == [1, 5, 5, 1], format!("Ann(f): h = {}", a.hilbert_function()));
    let w = check_wlp(&a, &lopts(opts.seed));
    log.check(!w.holds && w.is_exact(), report::describe_verdict(&w));
    let s = check_slp(&a, &lopts(opts.seed));
    log.check(!s.holds, report::describe_verdict(&s));
    let g = &parse_polynomial("u", &ring).expect("variable") * &f;
    let b = apolar_algebra(&g).expect("apolar algebra");
    log.check(b.hilbert_function().values() == [1, 5, 6, 5, 1], format!("Ann(u f): h = {}", b.hilbert_function()));
    let w2 = check_wlp(&b, &lopts(opts.seed));
    log.check(w2.holds, report::describe_verdict(&w2));
    let s2 = check_slp(&b, &lopts(opts.seed));
    log.check(!s2.holds && s2.is_exact() && s2.failing_steps == [(1, 2)], report::describe_verdict(&s2));
    for (name, alg) in [("Ann(f)", &a), ("Ann(u f)", &b)] {
        let soc = alg.socle_type();
        let top = alg.socle_degree();
        log.check(
            soc.iter().enumerate().all(|(j, &v)| v == u64::from(j == top)),
            format!("{name} is Gorenstein: socle type {soc:?}"),
        );
        log.tables.push(TableRecord::of(name, alg, koszul_betti_table(alg), None));
    }
    log.put("f", json!({ "wlp": report::verdict(&w), "slp": report::verdict(&s) }));
    log.put("uf", json!({ "wlp": report::verdict(&w2), "slp": report::verdict(&s2) }));
}

fn c9(log: &mut Log, opts: &SuiteOptions) {
    let ring = ring3(["x", "y", "z"], 0);
    for a in 2..=3 {
        for b in 2..=3 {
            for c in 2..=3 {
                let i = monomial_ci(&ring, [a, b, c]);
                let alg = GradedAlgebra::new(&i).expect("Artinian");
                let v = check_slp(&alg, &lopts(opts.seed));
                log.check(v.holds, format!("(x^{a}, y^{b}, z^{c}): {}", report::describe_verdict(&v)));
                log.tables.push(TableRecord::of(format!("monomial CI {a}{b}{c}"), &alg, koszul_betti_table(&alg), monomial_ideal_of(&i)));
            }
        }
    }
}

/// Euler identity and lex dominance on every record; EK = Koszul on stable monomial ones.
fn c10(log: &mut Log, records: &[TableRecord]) {
    let (mut euler, mut dominated, mut ek) = (0, 0, 0);
    for r in records {
        let e = euler_identity_holds(&r.table, r.hf.values());
        euler += e as usize;
        if !e {
            log.check(false, format!("{}: Euler identity", r.label));
        }
        match lex_betti_numbers(&r.hf, &r.ring) {
            Ok(lex) => {
                let d = r.table.is_dominated_by(&lex);
                dominated += d as usize;
                if !d {
                    log.check(false, format!("{}: not dominated by the lex table", r.label));
                }
            }
            Err(err) => log.check(false, format!("{}: lex table unavailable: {err}", r.label)),
        }
        if let Some(m) = r.monomial.as_ref().filter(|m| m.is_stable()) {
            let same = eliahou_kervaire_table(m).is_ok_and(|t| t == r.table);
            ek += 1;
            if !same {
                log.check(false, format!("{}: Eliahou-Kervaire differs from Koszul", r.label));
            }
        }
    }
    log.check(euler == records.len(), format!("Euler identity on {euler}/{} tables", records.len()));
    log.check(dominated == records.len(), format!("lex dominance on {dominated}/{} tables", records.len()));
    log.note(format!("Eliahou-Kervaire compared on {ek} stable monomial ideals"));
    log.put("tables_checked", json!(records.len()));
    log.put("stable_checked", json!(ek));
}

/// Tables from the bundled corpus, used by criterion 10.
pub fn corpus_tables() -> Vec<TableRecord> {
    CORPUS
        .iter()
        .map(|(name, text)| {
            let i = parse_ideal_file(text).expect("corpus files parse");
            let a = GradedAlgebra::new(&i).expect("corpus ideals are Artinian");
            TableRecord::of(format!("corpus {name}"), &a, koszul_betti_table(&a), monomial_ideal_of(&i))
        })
        .collect()
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool")
}

fn finish(criterion: Criterion, log: Log, start: Instant) -> Outcome {
    let mut json = log.json;
    json.insert("id".into(), json!(criterion.id));
    json.insert("key".into(), json!(criterion.key));
    json.insert("passed".into(), json!(log.ok));
    json.insert("details".into(), json!(log.details));
    let elapsed = start.elapsed();
    json.insert("seconds".into(), json!(elapsed.as_secs_f64()));
    Outcome {
        criterion,
        passed: log.ok,
        details: log.details,
        elapsed,
        json: Value::Object(json),
        tables: log.tables,
    }
}

/// Runs one criterion. Criterion 10 needs tables; pass those from the others.
pub fn run_criterion(id: u8, opts: &SuiteOptions, tables: &[TableRecord]) -> Option<Outcome> {
    let criterion = *CRITERIA.iter().find(|c| c.id == id)?;
    let start = Instant::now();
    let mut log = Log::new();
    pool(opts.jobs).install(|| match id {
        1 => c1(&mut log, opts),
        2 => c2(&mut log, opts),
        3 => c3(&mut log, opts),
        4 => c4(&mut log, opts),
        5 => c5(&mut log, opts),
        6 => c6(&mut log, opts),
        7 => c7(&mut log, opts),
        8 => c8(&mut log, opts),
        9 => c9(&mut log, opts),
        _ => c10(&mut log, tables),
    });
    Some(finish(criterion, log, start))
}

/// Runs criteria `1..=9`, then 10 over every table they produced plus the corpus.
pub fn run_all(opts: &SuiteOptions, mut on_outcome: impl FnMut(&Outcome)) -> Vec<Outcome> {
    let mut outcomes = Vec::new();
    let mut tables = corpus_tables();
    for c in CRITERIA.iter().filter(|c| c.id != 10) {
        let o = run_criterion(c.id, opts, &[]).expect("known id");
        on_outcome(&o);
        tables.extend(o.tables.iter().cloned());
        outcomes.push(o);
    }
    let o = run_criterion(10, opts, &tables).expect("known id");
    on_outcome(&o);
    outcomes.push(o);
    outcomes
}

/// Runs a single criterion; criterion 10 first gathers tables from all others.
pub fn run_one(id: u8, opts: &SuiteOptions) -> Option<Outcome> {
    if id == 10 {
        return run_all(opts, |_| {}).pop();
    }
    run_criterion(id, opts, &[])
}
