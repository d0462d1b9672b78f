//! Argument definitions and dispatch for the `lefschetz` binary.
//!
//! Every command produces a [`CommandResult`]: an exit code, a human summary
//! and a JSON document. The binary prints one of the two to standard output
//! and optionally writes the JSON to `--report`.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use lefschetz_core::apolar::apolar_algebra;
use lefschetz_core::betti::{betti_bounds, eliahou_kervaire_table, koszul_betti_table};
use lefschetz_core::ci::{
    check_restriction, ci_ring, jumping_line_ci, random_ci_degrees, restrict_mod_linear, sample_ci, syzygy_splitting_type,
    CiDegrees, CiOptions,
};
use lefschetz_core::construction::{build_construction, plan_construction, verify_construction, Mode};
use lefschetz_core::hilbert::{is_o_sequence, wlp_admissible};
use lefschetz_core::ideal::lex_segment_ideal;
use lefschetz_core::lefschetz::check_lefschetz;
use lefschetz_core::parse::parse_polynomial;
use lefschetz_core::random::{random_linear_coefficients, trial_rng};
use lefschetz_core::{GradedAlgebra, HilbertFunction, IdealSpan, LefschetzOptions, MonomialIdeal, Polynomial, Property, Ring};

use crate::idealfile::{parse_ideal_file, render_ideal_file};
use crate::report;
use crate::suite::{self, SuiteOptions, CRITERIA};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lefschetz", version, about = "Lefschetz properties, Betti tables and extremal constructions for graded Artinian algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print the JSON document instead of the human summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the JSON document to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub report: Option<PathBuf>,
    /// Worker threads for commands with independent trials.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function of an ideal, or admissibility of a sequence.
    Hilbert(HilbertArgs),
    /// Lex-segment ideal of a Hilbert function.
    Lex(LexArgs),
    /// Extremal monomial ideal with a given Hilbert function.
    Construct(ConstructArgs),
    /// Weak Lefschetz property.
    Wlp(LefschetzArgs),
    /// Strong Lefschetz property.
    Slp(LefschetzArgs),
    /// Socle type and socle basis.
    Socle(IdealArg),
    /// Graded Betti numbers.
    Betti(BettiArgs),
    /// Largest Betti numbers allowed by a Hilbert function under WLP.
    Bounds(HfArgs),
    /// Height-three complete intersection experiments.
    #[command(subcommand)]
    Ci(CiCommand),
    /// Apolar algebra of a form.
    Apolar(ApolarArgs),
    /// The reproduction suite: `all`, `list` or one criterion id or key.
    Examples(ExamplesArgs),
}

#[derive(Debug, Args)]
pub struct IdealArg {
    #[arg(long, value_name = "FILE")]
    pub ideal: PathBuf,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct HilbertSource {
    #[arg(long, value_name = "FILE")]
    pub ideal: Option<PathBuf>,
    /// Comma-separated sequence to test for WLP admissibility.
    #[arg(long, alias = "hf", value_name = "LIST")]
    pub check: Option<String>,
}

#[derive(Debug, Args)]
pub struct HilbertArgs {
    #[command(flatten)]
    pub source: HilbertSource,
    /// Number of variables; defaults to h_1.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct HfArgs {
    #[arg(long, value_name = "LIST")]
    pub hf: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u32,
    /// Variable names, comma separated; default `x0,..,x{N-1}`.
    #[arg(long, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
}

#[derive(Debug, Args)]
pub struct LexArgs {
    #[command(flatten)]
    pub hf: HfArgs,
    /// Write the ideal file here.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Slp,
    Basic,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub hf: HfArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::Slp)]
    pub mode: ModeArg,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SamplingArgs {
    /// Random linear forms tried before declaring failure.
    #[arg(long, default_value_t = 3)]
    pub trials: usize,
    #[arg(long, default_value_t = 10_000)]
    pub coeff_bound: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Rank evaluations allowed for a grid certificate.
    #[arg(long, default_value_t = 100_000)]
    pub grid_budget: u64,
}

impl SamplingArgs {
    fn options(&self) -> LefschetzOptions {
        LefschetzOptions {
            trials: self.trials,
            coeff_bound: self.coeff_bound,
            seed: self.seed,
            candidates: Vec::new(),
            grid_budget: self.grid_budget,
        }
    }
}

#[derive(Debug, Args)]
pub struct LefschetzArgs {
    #[arg(long, value_name = "FILE")]
    pub ideal: PathBuf,
    #[command(flatten)]
    pub sampling: SamplingArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BettiMethod {
    Koszul,
    Ek,
    Both,
}

#[derive(Debug, Args)]
pub struct BettiArgs {
    #[arg(long, value_name = "FILE")]
    pub ideal: PathBuf,
    #[arg(long, value_enum, default_value_t = BettiMethod::Koszul)]
    pub method: BettiMethod,
}

#[derive(Debug, Subcommand)]
pub enum CiCommand {
    /// Random complete intersections: WLP, restriction to a line, Betti table of R/(I+L).
    Fuzz(CiFuzzArgs),
    /// A (4,4,4) complete intersection whose restriction jumps on three lines.
    Jumping(CiJumpingArgs),
}

#[derive(Debug, Args)]
pub struct CiFuzzArgs {
    /// Degrees `d1,d2,d3`; drawn at random per trial when absent.
    #[arg(long, value_name = "LIST")]
    pub degs: Option<String>,
    /// Largest degree when drawing degrees at random.
    #[arg(long, default_value_t = 5)]
    pub max_degree: u32,
    #[arg(long, default_value_t = 10)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u32,
    /// Bound on the coefficients of the random forms.
    #[arg(long, default_value_t = 10)]
    pub form_bound: u64,
    /// Bound on the coefficients of the random line.
    #[arg(long, default_value_t = 100)]
    pub coeff_bound: u64,
    /// Also run the strong Lefschetz check (recorded, never fails the run).
    #[arg(long)]
    pub slp: bool,
}

#[derive(Debug, Args)]
pub struct CiJumpingArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub coeff_bound: u64,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ApolarArgs {
    /// A homogeneous form, e.g. `x*u^2 + y*u*v + z*v^2`.
    #[arg(long)]
    pub form: String,
    /// Variable names, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub vars: Vec<String>,
    #[command(flatten)]
    pub sampling: SamplingArgs,
}

#[derive(Debug, Args)]
pub struct ExamplesArgs {
    /// `all`, `list`, a criterion number or a key.
    #[arg(default_value = "all")]
    pub which: String,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

/// What a command hands back to `main`.
#[derive(Debug, Clone)]
pub struct CommandResult {
    pub code: i32,
    pub summary: String,
    pub json: Value,
    /// Print the JSON document even without `--json`.
    pub json_by_default: bool,
}

impl CommandResult {
    fn new(code: i32, summary: String, command: &str, body: Value) -> Self {
        CommandResult {
            code,
            summary,
            json: report::document(command, body),
            json_by_default: false,
        }
    }
}

/// An input or usage problem; the binary exits with status 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct InputError(pub String);

fn input<E: std::fmt::Display>(context: &str) -> impl FnOnce(E) -> InputError + '_ {
    move |e| InputError(format!("{context}: {e}"))
}

fn read_ideal(path: &PathBuf) -> Result<IdealSpan, InputError> {
    let text = std::fs::read_to_string(path).map_err(input(&path.display().to_string()))?;
    parse_ideal_file(&text).map_err(input(&path.display().to_string()))
}

fn algebra(ideal: &IdealSpan) -> Result<GradedAlgebra, InputError> {
    GradedAlgebra::new(ideal).map_err(input("ideal"))
}

fn parse_hf(list: &str) -> Result<HilbertFunction, InputError> {
    list.parse().map_err(input("Hilbert function"))
}

fn parse_list(list: &str) -> Result<Vec<u64>, InputError> {
    list.split(',')
        .map(|s| s.trim().parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(input("list"))
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), InputError> {
    std::fs::write(path, text).map_err(input(&path.display().to_string()))
}

fn default_n(h: &HilbertFunction, n: Option<usize>) -> usize {
    n.unwrap_or(h.get(1) as usize).max(1)
}

pub fn run(cli: &Cli) -> Result<CommandResult, InputError> {
    match &cli.command {
        Command::Hilbert(a) => hilbert(a),
        Command::Lex(a) => lex(a),
        Command::Construct(a) => construct(a),
        Command::Wlp(a) => lefschetz(a, Property::Weak),
        Command::Slp(a) => lefschetz(a, Property::Strong),
        Command::Socle(a) => socle(a),
        Command::Betti(a) => betti(a),
        Command::Bounds(a) => bounds(a),
        Command::Ci(CiCommand::Fuzz(a)) => ci_fuzz(a, cli.jobs),
        Command::Ci(CiCommand::Jumping(a)) => ci_jumping(a),
        Command::Apolar(a) => apolar(a),
        Command::Examples(a) => examples(a, cli.jobs),
    }
}

fn hilbert(a: &HilbertArgs) -> Result<CommandResult, InputError> {
    if let Some(path) = &a.source.ideal {
        let alg = algebra(&read_ideal(path)?)?;
        let h = alg.hilbert_function();
        let body = json!({ "hilbert_function": h.values(), "socle_degree": h.socle_degree(), "length": h.total() });
        return Ok(CommandResult::new(EXIT_OK, format!("h = {h}"), "hilbert", body));
    }
    let list = a.source.check.as_deref().unwrap_or_default();
    let raw = parse_list(list)?;
    let o_seq = is_o_sequence(&raw);
    let h = match HilbertFunction::from_dims(raw.clone()) {
        Ok(h) => h,
        Err(e) => {
            let body = json!({ "sequence": raw, "o_sequence": false, "admissible": false, "reason": e.to_string() });
            return Ok(CommandResult::new(EXIT_FAIL, format!("not admissible: {e}"), "hilbert", body));
        }
    };
    let n = default_n(&h, a.n);
    let (code, summary, body) = match wlp_admissible(&h, n) {
        Ok(p) => (
            EXIT_OK,
            format!(
                "{h} is the Hilbert function of an algebra with WLP in {n} variables (u = {:?}, Phi = {:?})",
                p.u, p.phi
            ),
            json!({ "sequence": h.values(), "num_vars": n, "o_sequence": o_seq, "admissible": true,
                    "u": p.u, "a": p.a, "hbar": p.hbar, "phi": p.phi }),
        ),
        Err(r) => (
            EXIT_FAIL,
            format!("not admissible: {r}"),
            json!({ "sequence": h.values(), "num_vars": n, "o_sequence": o_seq, "admissible": false, "reason": r.to_string() }),
        ),
    };
    Ok(CommandResult::new(code, summary, "hilbert", body))
}

fn hf_ring(a: &HfArgs) -> Result<(HilbertFunction, Arc<Ring>), InputError> {
    let h = parse_hf(&a.hf)?;
    let n = default_n(&h, a.n);
    Ok((h, hf_ring_with(a, n)?))
}

fn hf_ring_with(a: &HfArgs, n: usize) -> Result<Arc<Ring>, InputError> {
    let ring = match &a.vars {
        Some(v) if v.len() != n => return Err(InputError(format!("--vars names {} variables, expected {n}", v.len()))),
        Some(v) => Ring::with_names(v.clone(), a.characteristic),
        None => Ring::new(n, a.characteristic),
    };
    Ok(Arc::new(ring.map_err(input("ring"))?))
}

/// Generators by increasing degree, largest first within a degree.
fn sorted_span(m: &MonomialIdeal) -> IdealSpan {
    let mut gens = m.gens().to_vec();
    gens.sort_by_key(|g| (g.degree(), std::cmp::Reverse(g.clone())));
    let polys = gens.into_iter().map(|g| Polynomial::monomial(m.ring(), g)).collect();
    IdealSpan::new(m.ring(), polys).expect("monomials are homogeneous")
}

/// Same monomials, new variable names.
fn rename(m: &MonomialIdeal, ring: &Arc<Ring>) -> MonomialIdeal {
    MonomialIdeal::new(ring, m.gens().iter().cloned())
}

fn lex(a: &LexArgs) -> Result<CommandResult, InputError> {
    let (h, ring) = hf_ring(&a.hf)?;
    let lex = match lex_segment_ideal(&h, &ring) {
        Ok(l) => l,
        Err(e) => {
            let body = json!({ "hilbert_function": h.values(), "error": e.to_string() });
            return Ok(CommandResult::new(EXIT_FAIL, format!("no lex ideal: {e}"), "lex", body));
        }
    };
    let span = sorted_span(&lex);
    let text = render_ideal_file(&span, Some(&format!("lex-segment ideal of {h}")));
    if let Some(out) = &a.out {
        write_file(out, &text)?;
    }
    let gens: Vec<String> = span.gens().iter().map(|g| g.render()).collect();
    let body = json!({ "hilbert_function": h.values(), "generators": gens, "stable": lex.is_stable() });
    Ok(CommandResult::new(EXIT_OK, text.trim_end().to_string(), "lex", body))
}

fn construct(a: &ConstructArgs) -> Result<CommandResult, InputError> {
    let h = parse_hf(&a.hf.hf)?;
    let n = default_n(&h, a.hf.n);
    let mode = match a.mode {
        ModeArg::Slp => Mode::SlpLex,
        ModeArg::Basic => Mode::Basic,
    };
    let plan = match plan_construction(&h, n, mode) {
        Ok(p) => p,
        Err(e) => {
            let body = json!({ "hilbert_function": h.values(), "error": e.to_string() });
            return Ok(CommandResult::new(EXIT_FAIL, format!("cannot construct: {e}"), "construct", body));
        }
    };
    let c = build_construction(&plan, a.hf.characteristic).map_err(input("construction"))?;
    let r = verify_construction(&c).map_err(input("construction"))?;
    let named = rename(&c.ideal, &hf_ring_with(&a.hf, n)?);
    let span = sorted_span(&named);
    let text = render_ideal_file(&span, Some(&format!("{:?} construction for {h}", mode)));
    if let Some(out) = &a.out {
        write_file(out, &text)?;
    }
    let mut summary = text.clone();
    summary.push_str(&format!(
        "checks: Hilbert function {}, Lefschetz with x0 {}, socle {}, Betti {}\n",
        r.hilbert_ok, r.lefschetz_ok, r.socle_ok, r.betti_ok
    ));
    summary.push_str(&r.betti.diagram());
    let levels: Vec<Value> = plan
        .levels
        .iter()
        .zip(&c.levels)
        .map(|(l, j)| {
            json!({ "truncation": l.truncation, "target": l.target,
                    "generators": sorted_span(j).gens().iter().map(|g| g.render()).collect::<Vec<_>>() })
        })
        .collect();
    let body = json!({
        "generators": span.gens().iter().map(|g| g.render()).collect::<Vec<_>>(),
        "levels": levels,
        "report": report::construction(&r),
    });
    let code = if r.all_pass() { EXIT_OK } else { EXIT_FAIL };
    Ok(CommandResult::new(code, summary.trim_end().to_string(), "construct", body))
}

fn lefschetz(a: &LefschetzArgs, property: Property) -> Result<CommandResult, InputError> {
    let alg = algebra(&read_ideal(&a.ideal)?)?;
    let v = check_lefschetz(&alg, property, &a.sampling.options());
    let code = if v.holds { EXIT_OK } else { EXIT_FAIL };
    let summary = format!("h = {}\n{}", alg.hilbert_function(), report::describe_verdict(&v));
    let body = json!({ "hilbert_function": alg.hilbert_function().values(), "verdict": report::verdict(&v) });
    let name = match property {
        Property::Weak => "wlp",
        Property::Strong => "slp",
    };
    Ok(CommandResult::new(code, summary, name, body))
}

fn socle(a: &IdealArg) -> Result<CommandResult, InputError> {
    let alg = algebra(&read_ideal(&a.ideal)?)?;
    let t = alg.socle_type();
    let basis: Vec<Vec<String>> = alg.socle().iter().map(|d| d.iter().map(|p| p.render()).collect()).collect();
    let mut summary = format!("h = {}\nsocle type {:?}", alg.hilbert_function(), t);
    let phi = wlp_admissible(alg.hilbert_function(), alg.ring().num_vars()).ok().map(|p| p.phi);
    if let Some(phi) = &phi {
        summary.push_str(&format!("\nmaximal socle type under WLP {phi:?}"));
    }
    for (d, b) in basis.iter().enumerate().filter(|(_, b)| !b.is_empty()) {
        summary.push_str(&format!("\n  degree {d}: {}", b.join(", ")));
    }
    let body = json!({ "hilbert_function": alg.hilbert_function().values(), "socle_type": t, "basis": basis, "phi": phi });
    Ok(CommandResult::new(EXIT_OK, summary, "socle", body))
}

fn monomial_ideal_of(span: &IdealSpan) -> Option<MonomialIdeal> {
    let gens = span
        .gens()
        .iter()
        .map(|g| if g.num_terms() == 1 { g.leading_monomial().cloned() } else { None })
        .collect::<Option<Vec<_>>>()?;
    Some(MonomialIdeal::new(span.ring(), gens))
}

fn betti(a: &BettiArgs) -> Result<CommandResult, InputError> {
    let ideal = read_ideal(&a.ideal)?;
    let ek = || -> Result<_, InputError> {
        let m = monomial_ideal_of(&ideal).ok_or_else(|| InputError("Eliahou-Kervaire needs a monomial ideal".into()))?;
        eliahou_kervaire_table(&m).map_err(input("Eliahou-Kervaire"))
    };
    let (table, code, note) = match a.method {
        BettiMethod::Koszul => (koszul_betti_table(&algebra(&ideal)?), EXIT_OK, None),
        BettiMethod::Ek => (ek()?, EXIT_OK, None),
        BettiMethod::Both => {
            let k = koszul_betti_table(&algebra(&ideal)?);
            let same = ek()? == k;
            let code = if same { EXIT_OK } else { EXIT_FAIL };
            (k, code, Some(same))
        }
    };
    let mut summary = table.diagram();
    if let Some(same) = note {
        summary.push_str(if same {
            "\nEliahou-Kervaire and Koszul agree"
        } else {
            "\nEliahou-Kervaire and Koszul DIFFER"
        });
    }
    let body = json!({ "betti": report::betti(&table), "methods_agree": note });
    Ok(CommandResult::new(code, summary, "betti", body))
}

fn bounds(a: &HfArgs) -> Result<CommandResult, InputError> {
    let (h, ring) = hf_ring(a)?;
    match betti_bounds(&h, &ring) {
        Ok(t) => {
            let body = json!({ "hilbert_function": h.values(), "num_vars": ring.num_vars(), "bounds": report::betti(&t) });
            let mut r = CommandResult::new(EXIT_OK, t.diagram(), "bounds", body);
            r.json_by_default = true;
            Ok(r)
        }
        Err(e) => {
            let body = json!({ "hilbert_function": h.values(), "error": e.to_string() });
            Ok(CommandResult::new(EXIT_FAIL, format!("no bound: {e}"), "bounds", body))
        }
    }
}

fn ci_fuzz(a: &CiFuzzArgs, jobs: usize) -> Result<CommandResult, InputError> {
    let fixed = match &a.degs {
        Some(list) => {
            let v = parse_list(list)?;
            let [d1, d2, d3] = v[..] else {
                return Err(InputError("--degs needs three degrees".into()));
            };
            Some(CiDegrees::sorted([d1 as u32, d2 as u32, d3 as u32]).map_err(input("--degs"))?)
        }
        None => None,
    };
    if fixed.is_none() && a.max_degree < 2 {
        return Err(InputError("--max-degree must be at least 2".into()));
    }
    let opts = CiOptions {
        characteristic: a.characteristic,
        form_bound: a.form_bound,
        line_bound: a.coeff_bound,
        seed: a.seed,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(input("thread pool"))?;
    let trials: Vec<Result<Value, String>> = pool.install(|| {
        (0..a.trials)
            .into_par_iter()
            .map(|t| {
                let degs = fixed.unwrap_or_else(|| random_ci_degrees(&mut trial_rng(a.seed, 1000 + t), a.max_degree));
                let sample = sample_ci(degs, &opts, t).map_err(|e| format!("trial {t} {:?}: {e}", degs.get()))?;
                let lopts = LefschetzOptions {
                    seed: a.seed.wrapping_add(t),
                    ..Default::default()
                };
                let wlp = check_lefschetz(&sample.algebra, Property::Weak, &lopts);
                let slp = a.slp.then(|| check_lefschetz(&sample.algebra, Property::Strong, &lopts));
                let r = check_restriction(&sample).map_err(|e| format!("trial {t}: {e}"))?;
                let ok = wlp.holds && r.splitting_ok() && r.degree_sum_ok(degs) && r.mu_ok() && r.table_ok();
                Ok(json!({
                    "trial": t,
                    "degrees": degs.get(),
                    "ok": ok,
                    "wlp": report::verdict(&wlp),
                    "slp": slp.as_ref().map(report::verdict),
                    "line": report::scalars(&sample.line),
                    "restriction": report::restriction(&r),
                    "ideal_file": render_ideal_file(&sample.ideal, None),
                }))
            })
            .collect()
    });
    let mut lines = Vec::new();
    let mut records = Vec::new();
    let mut failures = 0;
    for t in trials {
        match t {
            Ok(v) => {
                let ok = v["ok"].as_bool().unwrap_or(false);
                failures += usize::from(!ok);
                let r = &v["restriction"];
                lines.push(format!(
                    "trial {:>3} {:?}: WLP {} | splitting {} (predicted {}) | mu {} (predicted {}) | R/(I+L) table {}{}{}",
                    v["trial"],
                    v["degrees"].as_array().map(|d| d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).unwrap_or_default(),
                    v["wlp"]["holds"],
                    r["splitting"],
                    r["predicted_splitting"],
                    r["mu_bar"],
                    r["predicted_mu_bar"],
                    if r["table_ok"].as_bool() == Some(true) { "as predicted" } else { "DIFFERS" },
                    if v["slp"].is_null() { String::new() } else { format!(" | SLP {}", v["slp"]["holds"]) },
                    if ok { "" } else { "  <-- finding" },
                ));
                records.push(v);
            }
            Err(e) => {
                failures += 1;
                lines.push(format!("error: {e}"));
                records.push(json!({ "error": e }));
            }
        }
    }
    lines.push(format!("{} of {} trials as predicted", a.trials as usize - failures, a.trials));
    let body = json!({ "seed": a.seed, "characteristic": a.characteristic, "form_bound": a.form_bound,
                       "coeff_bound": a.coeff_bound, "trials": records, "findings": failures });
    let code = if failures == 0 { EXIT_OK } else { EXIT_FAIL };
    Ok(CommandResult::new(code, lines.join("\n"), "ci fuzz", body))
}

fn ci_jumping(a: &CiJumpingArgs) -> Result<CommandResult, InputError> {
    let ring = ci_ring(0);
    let mut rng = trial_rng(a.seed, 0);
    let j = jumping_line_ci(&mut rng, &ring).map_err(input("jumping-line construction"))?;
    let degs = [4, 4, 4];
    let splitting_on = |coeffs: &[lefschetz_core::Scalar]| -> Result<_, InputError> {
        let ibar = restrict_mod_linear(&j.ideal, coeffs).map_err(input("restriction"))?;
        syzygy_splitting_type(&ibar, &degs).map_err(input("splitting type"))
    };
    let general = random_linear_coefficients(&mut trial_rng(a.seed, 1), 3, a.coeff_bound, ring.characteristic());
    let general_type = splitting_on(&general)?;
    let alg = GradedAlgebra::new(&j.ideal).map_err(input("jumping-line algebra"))?;
    let wlp = check_lefschetz(&alg, Property::Weak, &LefschetzOptions { seed: a.seed, ..Default::default() });
    let mut summary = format!("{}\ngeneral line: splitting type {general_type}", report::describe_verdict(&wlp));
    let mut special = Vec::new();
    let mut all_jump = true;
    for (k, l) in j.lines.iter().enumerate() {
        let s = splitting_on(l)?;
        all_jump &= s != general_type;
        summary.push_str(&format!(
            "\nline {}: {} -> splitting type {s}",
            k + 1,
            Polynomial::linear_form(&ring, l).render()
        ));
        special.push(json!({ "line": report::scalars(l), "splitting": [s.e1, s.e2] }));
    }
    let text = render_ideal_file(&j.ideal, Some("(4,4,4) complete intersection with three jumping lines"));
    if let Some(out) = &a.out {
        write_file(out, &text)?;
    }
    let body = json!({
        "seed": a.seed,
        "general_line": report::scalars(&general),
        "general_splitting": [general_type.e1, general_type.e2],
        "jumping_lines": special,
        "resamples": j.resamples,
        "wlp": report::verdict(&wlp),
        "ideal_file": text,
    });
    let code = if all_jump && wlp.holds { EXIT_OK } else { EXIT_FAIL };
    Ok(CommandResult::new(code, summary, "ci jumping", body))
}

fn apolar(a: &ApolarArgs) -> Result<CommandResult, InputError> {
    let ring = Arc::new(Ring::with_names(a.vars.clone(), 0).map_err(input("--vars"))?);
    let f = parse_polynomial(&a.form, &ring).map_err(input("--form"))?;
    let alg = apolar_algebra(&f).map_err(input("apolar algebra"))?;
    let opts = a.sampling.options();
    let w = check_lefschetz(&alg, Property::Weak, &opts);
    let s = check_lefschetz(&alg, Property::Strong, &opts);
    let text = render_ideal_file(alg.ideal(), Some(&format!("annihilator of {}", f.render())));
    let summary = format!(
        "h = {}\n{}\n{}\n{}",
        alg.hilbert_function(),
        report::describe_verdict(&w),
        report::describe_verdict(&s),
        text.trim_end()
    );
    let body = json!({
        "form": f.render(),
        "hilbert_function": alg.hilbert_function().values(),
        "wlp": report::verdict(&w),
        "slp": report::verdict(&s),
        "ideal_file": text,
    });
    Ok(CommandResult::new(EXIT_OK, summary, "apolar", body))
}

fn examples(a: &ExamplesArgs, jobs: usize) -> Result<CommandResult, InputError> {
    let opts = SuiteOptions { seed: a.seed, jobs };
    if a.which == "list" {
        let lines: Vec<String> = CRITERIA
            .iter()
            .map(|c| format!("{:>2}  {:<20} {} (budget {} s)", c.id, c.key, c.title, c.budget.as_secs()))
            .collect();
        let body = json!({ "criteria": CRITERIA.iter().map(|c| json!({ "id": c.id, "key": c.key, "title": c.title })).collect::<Vec<_>>() });
        return Ok(CommandResult::new(EXIT_OK, lines.join("\n"), "examples", body));
    }
    let outcomes = if a.which == "all" {
        suite::run_all(&opts, |_| {})
    } else {
        let c = CRITERIA
            .iter()
            .find(|c| c.key == a.which || c.id.to_string() == a.which)
            .ok_or_else(|| InputError(format!("unknown example `{}`; try `examples list`", a.which)))?;
        vec![suite::run_one(c.id, &opts).expect("known id")]
    };
    let mut lines = Vec::new();
    for o in &outcomes {
        lines.push(format!(
            "{} {:>2} {:<20} {:>8.2}s  {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.criterion.id,
            o.criterion.key,
            o.elapsed.as_secs_f64(),
            o.criterion.title
        ));
        if !o.passed {
            lines.extend(o.details.iter().filter(|d| !d.starts_with("ok:")).map(|d| format!("       {d}")));
        }
    }
    let all = outcomes.iter().all(|o| o.passed);
    let body = json!({ "seed": a.seed, "passed": all, "criteria": outcomes.iter().map(|o| o.json.clone()).collect::<Vec<_>>() });
    Ok(CommandResult::new(if all { EXIT_OK } else { EXIT_FAIL }, lines.join("\n"), "examples", body))
}
