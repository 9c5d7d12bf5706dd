//! `extbranch`: command line front end.
//!
//! Exit status 0 on success, 1 for a well-formed negative answer to a yes/no
//! question, 2 for input errors (reported with a JSON pointer).

mod docs;
mod fixtures;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use extbranch::arthur::{az_dual, highest_derivative, l_param_msegs, langlands_msegs, param_of, rep_of, zelevinsky_msegs, ArthurRep};
use extbranch::findim::{ext_dim_with, kunneth_reports, projective_resolution, tensor_algebra, KunnethInput};
use extbranch::hecke::{binomial, center_element, completion_commutes_report, induce_module, is_central};
use extbranch::linalg::{fmt_rat, parse_rat, Rat};
use extbranch::reduction::{build_trace, check_trace, transcript, ReductionError};
use extbranch::relevance::{strong_ext_relevant_param, strong_ext_relevant_rep};
use extbranch::segments::{c_omega_member, cuspidal_support, in_integral_line, Multisegment};
use extbranch::wire::{
    self, mseg_from_json, mseg_json, param_from_json, param_json, rep_from_json, rep_json, AlgebraDoc, CertificateJson,
    HElementJson, HModuleJson, LineTable, ParamJson, PointJson, RatStr, Schema, SegmentJson, SpehJson, TraceDoc,
};

use docs::*;
use fixtures::LoadedAlgebra;
use input::{InputError, Inputs, Result};

#[derive(Parser)]
#[command(name = "extbranch", version, about = "Ext branching combinatorics, quiver Ext groups and affine Hecke algebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// JSON document (`"schema": "v1"`) supplying the inputs of the subcommand.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Seed for randomized steps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Specialization of the Hecke parameter, as "p/q".
    #[arg(long, global = true, default_value = "2")]
    q: String,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide strong Ext relevance of (π₁, π₂) with a certificate.
    Relevant(PairArgs),
    /// Build the reduction trace for a relevant pair, or re-check a saved trace.
    Trace(TraceArgs),
    /// Aubert-Zelevinsky dual of an Arthur type representation.
    Dual(RepArgs),
    /// Highest derivative of an Arthur type representation.
    Derivative(RepArgs),
    /// Langlands and Zelevinsky multisegments and the cuspidal support.
    Msegs(RepArgs),
    /// Arthur parameter and the multisegment of its L-parameter.
    Lparam(LparamArgs),
    /// Membership of a cuspidal support in the category attached to ω.
    COmega(COmegaArgs),
    /// Ext groups between modules over a quiver algebra.
    Ext(ExtArgs),
    /// Künneth formula over a tensor product of quiver algebras.
    Kunneth(KunnethArgs),
    /// Product in the affine Hecke algebra, in normal form.
    HeckeMul(MulArgs),
    /// The central element attached to an orbit label.
    HeckeCenter(CenterArgs),
    /// Parabolic induction of two finite-dimensional modules.
    HeckeInduce(InduceArgs),
    /// Compare induction with completion at finite truncation levels.
    HeckeCompleteCheck(CompleteArgs),
}

#[derive(Args)]
struct PairArgs {
    /// π₁ as a list of Speh factors.
    #[arg(long)]
    pi1: Option<String>,
    /// π₂ as a list of Speh factors.
    #[arg(long)]
    pi2: Option<String>,
    /// A named pair instead of --pi1/--pi2.
    #[arg(long, conflicts_with_all = ["pi1", "pi2"])]
    fixture: Option<String>,
}

#[derive(Args)]
struct TraceArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Re-validate a saved trace document instead of building one.
    #[arg(long, conflicts_with_all = ["pi1", "pi2", "fixture"])]
    check: Option<PathBuf>,
}

#[derive(Args)]
struct RepArgs {
    /// A list of Speh factors.
    #[arg(long)]
    pi: Option<String>,
}

#[derive(Args)]
struct LparamArgs {
    /// A list of Speh factors.
    #[arg(long, conflicts_with = "psi")]
    pi: Option<String>,
    /// An Arthur parameter, as a list of summands.
    #[arg(long)]
    psi: Option<String>,
}

#[derive(Args)]
struct COmegaArgs {
    /// A multisegment whose cuspidal support is tested.
    #[arg(long)]
    sigma: Option<String>,
    /// A multisegment whose cuspidal support defines the category.
    #[arg(long)]
    omega: Option<String>,
    #[arg(long, conflicts_with_all = ["sigma", "omega"])]
    fixture: Option<String>,
}

#[derive(Args)]
struct ExtArgs {
    /// A built-in algebra (remark14-A, remark14-B) or a path to an algebra document.
    #[arg(long)]
    algebra: String,
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
    #[arg(long)]
    degree: usize,
    /// Also list every degree up to --degree.
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct KunnethArgs {
    /// First tensor factor.
    #[arg(long)]
    algebra: String,
    /// Second tensor factor; defaults to --algebra.
    #[arg(long)]
    with: Option<String>,
    #[arg(long, requires_all = ["f1", "e2", "f2"])]
    e1: Option<String>,
    #[arg(long)]
    f1: Option<String>,
    #[arg(long)]
    e2: Option<String>,
    #[arg(long)]
    f2: Option<String>,
    /// Highest degree checked.
    #[arg(long, default_value_t = 4)]
    degree: usize,
}

#[derive(Args)]
struct MulArgs {
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    b: Option<String>,
}

#[derive(Args)]
struct CenterArgs {
    /// Orbit label, e.g. "[1,0,-1]".
    #[arg(long)]
    label: Option<String>,
}

#[derive(Args)]
struct InduceArgs {
    #[arg(long)]
    m1: Option<String>,
    #[arg(long)]
    m2: Option<String>,
}

#[derive(Args)]
struct CompleteArgs {
    #[arg(long)]
    m1: Option<String>,
    #[arg(long)]
    m2: Option<String>,
    /// Truncation levels 1..=levels are compared.
    #[arg(long, default_value_t = 3)]
    levels: usize,
}

/// A result document, its text rendering, and whether the answer was positive.
struct Outcome {
    json: String,
    text: String,
    positive: bool,
}

impl Outcome {
    fn new<T: Serialize>(doc: &T, text: String, positive: bool) -> Self {
        Outcome { json: wire::to_canonical(doc), text, positive }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            // a closed pipe is not an error worth reporting
            let _ = match cli.format {
                Format::Json => write!(std::io::stdout(), "{}", out.json),
                Format::Text => writeln!(std::io::stdout(), "{}", out.text.trim_end()),
            };
            ExitCode::from(if out.positive { 0 } else { 1 })
        }
        Err(e) => {
            match cli.format {
                Format::Json => {
                    let doc = ErrorDoc {
                        schema: Schema,
                        error: ErrorBody { source: e.source.clone(), pointer: e.pointer.clone(), message: e.message.clone() },
                    };
                    eprint!("{}", wire::to_canonical(&doc));
                }
                Format::Text => eprintln!("error: {e}"),
            }
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let inputs = Inputs::load(cli.input.as_deref())?;
    match &cli.cmd {
        Cmd::Relevant(a) => relevant(&inputs, a),
        Cmd::Trace(a) => trace(&inputs, a),
        Cmd::Dual(a) => rep_op(&inputs, a, "dual"),
        Cmd::Derivative(a) => rep_op(&inputs, a, "derivative"),
        Cmd::Msegs(a) => msegs(&inputs, a),
        Cmd::Lparam(a) => lparam(&inputs, a),
        Cmd::COmega(a) => c_omega(&inputs, a),
        Cmd::Ext(a) => ext(&inputs, a),
        Cmd::Kunneth(a) => kunneth(&inputs, a),
        Cmd::HeckeMul(a) => hecke_mul(&inputs, a),
        Cmd::HeckeCenter(a) => hecke_center(&inputs, a),
        Cmd::HeckeInduce(a) => hecke_induce(&inputs, a, &q_of(cli)?),
        Cmd::HeckeCompleteCheck(a) => hecke_complete(&inputs, a, &q_of(cli)?, cli.seed),
    }
}

fn q_of(cli: &Cli) -> Result<Rat> {
    let q = parse_rat(&cli.q).ok_or_else(|| InputError::new("--q", "", format!("malformed rational {:?}", cli.q)))?;
    if q == Rat::from_integer(0.into()) {
        return Err(InputError::new("--q", "", "q must be nonzero"));
    }
    Ok(q)
}

fn read_rep(inputs: &Inputs, field: &str, inline: Option<&str>, lines: &mut LineTable) -> Result<ArthurRep> {
    let items: Vec<SpehJson> = inputs.require(field, inline)?;
    rep_from_json(&items, lines).map_err(|e| inputs.locate(field, inline, e))
}

fn read_pair(inputs: &Inputs, a: &PairArgs) -> Result<(ArthurRep, ArthurRep)> {
    inputs.allow(&["pi1", "pi2"])?;
    let (i1, i2) = match &a.fixture {
        Some(name) => {
            let (p1, p2) = fixtures::pair(name).ok_or_else(|| {
                InputError::new("--fixture", "", format!("unknown pair {name:?}; known: {}", fixtures::names(&fixtures::PAIRS)))
            })?;
            (Some(p1), Some(p2))
        }
        None => (a.pi1.as_deref(), a.pi2.as_deref()),
    };
    let mut lines = LineTable::default();
    Ok((read_rep(inputs, "pi1", i1, &mut lines)?, read_rep(inputs, "pi2", i2, &mut lines)?))
}

fn relevant(inputs: &Inputs, a: &PairArgs) -> Result<Outcome> {
    let (pi1, pi2) = read_pair(inputs, a)?;
    let by_rep = strong_ext_relevant_rep(&pi1, &pi2);
    let by_param = strong_ext_relevant_param(&param_of(&pi1), &param_of(&pi2));
    let doc = RelevantDoc {
        schema: Schema,
        pi1: rep_json(&pi1),
        pi2: rep_json(&pi2),
        relevant: by_rep.is_some(),
        deciders_agree: by_rep.is_some() == by_param.is_some(),
        certificate: by_rep.as_ref().map(CertificateJson::of),
    };
    let text = match &by_rep {
        Some(cert) => {
            let mut t = format!("({pi1}, {pi2}) is strongly Ext relevant\n");
            for (f, p) in cert.pairs() {
                t.push_str(&format!("  family {}: {p}\n", f.index()));
            }
            t
        }
        None => format!("({pi1}, {pi2}) is not strongly Ext relevant\n"),
    };
    Ok(Outcome::new(&doc, text, doc.relevant))
}

fn trace(inputs: &Inputs, a: &TraceArgs) -> Result<Outcome> {
    if let Some(path) = &a.check {
        let name = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| InputError::new(&name, "", e.to_string()))?;
        let doc: TraceDoc = wire::from_str(&text).map_err(|e| InputError::wire(&name, e))?;
        let t = doc.to_trace().map_err(|e| InputError::wire(&name, e))?;
        let verdict = check_trace(&t);
        let out = TraceCheckDoc {
            schema: Schema,
            valid: verdict.is_valid(),
            violations: verdict.violations.iter().map(ToString::to_string).collect(),
        };
        let text = if out.valid { "trace is valid".to_string() } else { format!("trace is invalid:\n  {}", out.violations.join("\n  ")) };
        return Ok(Outcome::new(&out, text, out.valid));
    }
    let (pi1, pi2) = read_pair(inputs, &a.pair)?;
    match build_trace(&pi1, &pi2) {
        Ok(t) => {
            let verdict = check_trace(&t);
            let lines = transcript(&t);
            let mut doc = TraceDoc::of(&t);
            doc.valid = Some(verdict.is_valid());
            doc.transcript = Some(lines.lines().map(str::to_string).collect());
            Ok(Outcome::new(&doc, lines, verdict.is_valid()))
        }
        Err(ReductionError::NotRelevant) => {
            let doc = RelevantDoc {
                schema: Schema,
                pi1: rep_json(&pi1),
                pi2: rep_json(&pi2),
                relevant: false,
                deciders_agree: strong_ext_relevant_param(&param_of(&pi1), &param_of(&pi2)).is_none(),
                certificate: None,
            };
            Ok(Outcome::new(&doc, format!("({pi1}, {pi2}) is not strongly Ext relevant; no trace\n"), false))
        }
        Err(e) => Err(InputError::usage(e.to_string())),
    }
}

fn rep_op(inputs: &Inputs, a: &RepArgs, op: &str) -> Result<Outcome> {
    inputs.allow(&["pi"])?;
    let pi = read_rep(inputs, "pi", a.pi.as_deref(), &mut LineTable::default())?;
    let result = if op == "dual" { az_dual(&pi) } else { highest_derivative(&pi) };
    let doc = RepResultDoc { schema: Schema, operation: op.to_string(), pi: rep_json(&pi), result: rep_json(&result), display: result.to_string() };
    Ok(Outcome::new(&doc, result.to_string(), true))
}

fn rep_msegs(pi: &ArthurRep, f: fn(&extbranch::arthur::Speh) -> Multisegment) -> Multisegment {
    pi.factors().iter().flat_map(|u| f(u).segments().to_vec()).collect()
}

fn msegs(inputs: &Inputs, a: &RepArgs) -> Result<Outcome> {
    inputs.allow(&["pi"])?;
    let pi = read_rep(inputs, "pi", a.pi.as_deref(), &mut LineTable::default())?;
    let (l, z) = (rep_msegs(&pi, langlands_msegs), rep_msegs(&pi, zelevinsky_msegs));
    let support = cuspidal_support(&l);
    let doc = MsegsDoc {
        schema: Schema,
        pi: rep_json(&pi),
        langlands: mseg_json(&l),
        zelevinsky: mseg_json(&z),
        support: support.points().iter().map(PointJson::of).collect(),
    };
    let pts: Vec<String> = support.points().iter().map(ToString::to_string).collect();
    let text = format!("Langlands:  Q{l}\nZelevinsky: Z{z}\nsupport:    {{{}}}\n", pts.join(", "));
    Ok(Outcome::new(&doc, text, true))
}

fn lparam(inputs: &Inputs, a: &LparamArgs) -> Result<Outcome> {
    inputs.allow(&["pi", "psi"])?;
    let mut lines = LineTable::default();
    let use_psi = a.psi.is_some() || (a.pi.is_none() && inputs.has("psi"));
    let pi = if use_psi {
        let items: Vec<ParamJson> = inputs.require("psi", a.psi.as_deref())?;
        rep_of(&param_from_json(&items, &mut lines).map_err(|e| inputs.locate("psi", a.psi.as_deref(), e))?)
    } else {
        read_rep(inputs, "pi", a.pi.as_deref(), &mut lines)?
    };
    let psi = param_of(&pi);
    let m = l_param_msegs(&psi);
    let doc = LparamDoc { schema: Schema, pi: rep_json(&pi), param: param_json(&psi), l_param_msegs: mseg_json(&m), display: psi.to_string() };
    Ok(Outcome::new(&doc, format!("ψ = {psi}\nφ_ψ: {m}\n"), true))
}

fn c_omega(inputs: &Inputs, a: &COmegaArgs) -> Result<Outcome> {
    inputs.allow(&["sigma", "omega"])?;
    let (si, oi) = match &a.fixture {
        Some(name) => {
            let (s, o) = fixtures::c_omega(name).ok_or_else(|| {
                InputError::new("--fixture", "", format!("unknown fixture {name:?}; known: {}", fixtures::names(&fixtures::C_OMEGA)))
            })?;
            (Some(s), Some(o))
        }
        None => (a.sigma.as_deref(), a.omega.as_deref()),
    };
    let mut lines = LineTable::default();
    let sj: Vec<SegmentJson> = inputs.require("sigma", si)?;
    let oj: Vec<SegmentJson> = inputs.require("omega", oi)?;
    let sigma = mseg_from_json(&sj, &mut lines).map_err(|e| inputs.locate("sigma", si, e))?;
    let omega = mseg_from_json(&oj, &mut lines).map_err(|e| inputs.locate("omega", oi, e))?;
    let (s, o) = (cuspidal_support(&sigma), cuspidal_support(&omega));
    let member = c_omega_member(&s, &o);
    let obstructions: Vec<_> = s.points().iter().filter(|p| !o.contains(p) && in_integral_line(p, &o)).collect();
    let doc = COmegaDoc {
        schema: Schema,
        sigma: mseg_json(&sigma),
        omega: mseg_json(&omega),
        member,
        obstructions: obstructions.iter().map(|p| PointJson::of(p)).collect(),
    };
    let text = if member {
        "member".to_string()
    } else {
        let pts: Vec<String> = obstructions.iter().map(ToString::to_string).collect();
        format!("not a member; obstructed by {}", pts.join(", "))
    };
    Ok(Outcome::new(&doc, text, member))
}

fn load_algebra(spec: &str, flag: &str) -> Result<LoadedAlgebra> {
    if let Some(a) = LoadedAlgebra::from_fixture(spec) {
        return Ok(a);
    }
    let path = std::path::Path::new(spec);
    if !path.exists() {
        return Err(InputError::new(
            flag,
            "",
            format!("{spec:?} is neither a built-in algebra ({}) nor a file", extbranch::findim::fixtures::FIXTURE_IDS.join(", ")),
        ));
    }
    let text = std::fs::read_to_string(path).map_err(|e| InputError::new(spec, "", e.to_string()))?;
    let doc: AlgebraDoc = wire::from_str(&text).map_err(|e| InputError::wire(spec, e))?;
    let (alg, modules) = doc.to_parts().map_err(|e| InputError::wire(spec, e))?;
    Ok(LoadedAlgebra::from_parts(doc.algebra.name.clone(), alg, modules))
}

fn module<'a>(alg: &'a LoadedAlgebra, name: &str, flag: &str) -> Result<&'a extbranch::findim::FDModule> {
    alg.module(name).ok_or_else(|| InputError::new(flag, "", format!("no module {name:?} over {}; known: {}", alg.name, alg.order.join(", "))))
}

fn fail(e: impl std::fmt::Display) -> InputError {
    InputError::usage(e.to_string())
}

fn ext(inputs: &Inputs, a: &ExtArgs) -> Result<Outcome> {
    inputs.allow(&[])?;
    let alg = load_algebra(&a.algebra, "--algebra")?;
    let (m, n) = (module(&alg, &a.from, "--from")?, module(&alg, &a.to, "--to")?);
    let res = projective_resolution(&alg.algebra, m, a.degree + 1).map_err(fail)?;
    let dims: Vec<usize> = (0..=a.degree).map(|i| ext_dim_with(&alg.algebra, &res, n, i)).collect();
    let doc = ExtDoc {
        schema: Schema,
        algebra: alg.name.clone(),
        from: a.from.clone(),
        to: a.to.clone(),
        degree: a.degree,
        ext_dim: dims[a.degree],
        table: a.table.then(|| dims.clone()),
        resolution: res.shape(&alg.projective_names, &a.from),
    };
    let text = if a.table {
        dims.iter().enumerate().map(|(i, d)| format!("Ext^{i}({}, {}) = {d}\n", a.from, a.to)).collect()
    } else {
        dims[a.degree].to_string()
    };
    Ok(Outcome::new(&doc, text, true))
}

fn kunneth(inputs: &Inputs, a: &KunnethArgs) -> Result<Outcome> {
    inputs.allow(&[])?;
    let first = load_algebra(&a.algebra, "--algebra")?;
    let second = match &a.with {
        Some(w) => load_algebra(w, "--with")?,
        None => load_algebra(&a.algebra, "--algebra")?,
    };
    let tensor = tensor_algebra(&first.algebra, &second.algebra);
    let quads: Vec<[String; 4]> = match (&a.e1, &a.f1, &a.e2, &a.f2) {
        (Some(e1), Some(f1), Some(e2), Some(f2)) => vec![[e1.clone(), f1.clone(), e2.clone(), f2.clone()]],
        _ => {
            let mut v = Vec::new();
            for e1 in &first.order {
                for f1 in &first.order {
                    for e2 in &second.order {
                        for f2 in &second.order {
                            v.push([e1.clone(), f1.clone(), e2.clone(), f2.clone()]);
                        }
                    }
                }
            }
            v
        }
    };
    let mut cases = Vec::new();
    for [e1, f1, e2, f2] in quads {
        let input = KunnethInput {
            a: &first.algebra,
            e1: module(&first, &e1, "--e1")?,
            f1: module(&first, &f1, "--f1")?,
            b: &second.algebra,
            e2: module(&second, &e2, "--e2")?,
            f2: module(&second, &f2, "--f2")?,
        };
        let levels = kunneth_reports(&input, &tensor, a.degree)
            .map_err(fail)?
            .into_iter()
            .map(|r| KunnethLevel { degree: r.degree, tensor_side: r.tensor_side, holds: r.holds(), products: r.products })
            .collect();
        cases.push(KunnethCase { e1, f1, e2, f2, levels });
    }
    let holds = cases.iter().all(|c| c.levels.iter().all(|l| l.holds));
    let failures: Vec<String> = cases
        .iter()
        .flat_map(|c| {
            c.levels.iter().filter(|l| !l.holds).map(move |l| {
                format!("  Ext^{}({}⊠{}, {}⊠{}): {} vs {}", l.degree, c.e1, c.e2, c.f1, c.f2, l.tensor_side, l.products.iter().sum::<usize>())
            })
        })
        .collect();
    let text = format!(
        "Künneth over {}⊗{}: {} cases, degrees 0..={}: {}\n{}",
        first.name,
        second.name,
        cases.len(),
        a.degree,
        if holds { "holds" } else { "FAILS" },
        failures.join("\n")
    );
    let doc = KunnethDoc { schema: Schema, algebra: first.name.clone(), with: second.name.clone(), degree: a.degree, cases, holds };
    Ok(Outcome::new(&doc, text, holds))
}

fn read_element(inputs: &Inputs, field: &str, inline: Option<&str>) -> Result<extbranch::hecke::HElement> {
    let j: HElementJson = inputs.require(field, inline)?;
    j.to_element().map_err(|e| inputs.locate(field, inline, e))
}

fn hecke_mul(inputs: &Inputs, a: &MulArgs) -> Result<Outcome> {
    inputs.allow(&["a", "b"])?;
    let x = read_element(inputs, "a", a.a.as_deref())?;
    let y = read_element(inputs, "b", a.b.as_deref())?;
    if x.n() != y.n() {
        return Err(InputError::usage(format!("ranks differ: {} and {}", x.n(), y.n())));
    }
    let p = x.mul(&y);
    let doc = HeckeMulDoc { schema: Schema, a: HElementJson::of(&x), b: HElementJson::of(&y), product: HElementJson::of(&p) };
    Ok(Outcome::new(&doc, p.to_string(), true))
}

fn hecke_center(inputs: &Inputs, a: &CenterArgs) -> Result<Outcome> {
    inputs.allow(&["label"])?;
    let label: Vec<i64> = inputs.require("label", a.label.as_deref())?;
    if label.is_empty() {
        let (source, pointer) = inputs.origin("label", a.label.as_deref());
        return Err(InputError::new(source, pointer, "the label needs at least one entry"));
    }
    let z = center_element(&label);
    let central = is_central(&z.expansion);
    let doc = HeckeCenterDoc { schema: Schema, label: label.clone(), element: HElementJson::of(&z.expansion), central };
    let text = format!("z_{label:?} = {}\ncentral: {central}\n", z.expansion);
    Ok(Outcome::new(&doc, text, central))
}

fn read_hmodule(inputs: &Inputs, field: &str, inline: Option<&str>, q: &Rat) -> Result<extbranch::hecke::FDHModule> {
    let j: HModuleJson = inputs.require(field, inline)?;
    j.to_module(q).map_err(|e| inputs.locate(field, inline, e))
}

fn hecke_induce(inputs: &Inputs, a: &InduceArgs, q: &Rat) -> Result<Outcome> {
    inputs.allow(&["m1", "m2"])?;
    let m1 = read_hmodule(inputs, "m1", a.m1.as_deref(), q)?;
    let m2 = read_hmodule(inputs, "m2", a.m2.as_deref(), q)?;
    let ind = induce_module(&m1, &m2).map_err(fail)?;
    let expected = binomial(m1.n + m2.n, m1.n) * m1.dim * m2.dim;
    let doc = HeckeInduceDoc { schema: Schema, q: RatStr(q.clone()), n: ind.n, dim: ind.dim, expected_dim: expected, module: HModuleJson::of(&ind) };
    let text = format!("induced module of H({}) at q = {}: dimension {} (expected {expected})\n", ind.n, fmt_rat(q), ind.dim);
    Ok(Outcome::new(&doc, text, true))
}

fn hecke_complete(inputs: &Inputs, a: &CompleteArgs, q: &Rat, seed: u64) -> Result<Outcome> {
    inputs.allow(&["m1", "m2"])?;
    let m1 = read_hmodule(inputs, "m1", a.m1.as_deref(), q)?;
    let m2 = read_hmodule(inputs, "m2", a.m2.as_deref(), q)?;
    let report = completion_commutes_report(&m1, &m2, a.levels, seed).map_err(fail)?;
    let holds = report.holds();
    let levels: Vec<CompletionLevel> = report
        .levels
        .iter()
        .map(|l| CompletionLevel {
            level: l.level,
            induced_of_truncations: l.induced_of_truncations,
            truncation_of_induced: l.truncation_of_induced,
            isomorphic: l.isomorphic,
        })
        .collect();
    let mut text: String = levels
        .iter()
        .map(|l| {
            format!(
                "level {}: dims {} / {}, {}\n",
                l.level,
                l.induced_of_truncations,
                l.truncation_of_induced,
                if l.isomorphic { "isomorphic" } else { "not isomorphic" }
            )
        })
        .collect();
    text.push_str(&format!("limit (level {}): {}\n", report.stable_level, if report.limits_agree { "agree" } else { "differ" }));
    let doc = HeckeCompleteDoc {
        schema: Schema,
        q: RatStr(q.clone()),
        seed,
        levels,
        stable_level: report.stable_level,
        limits_agree: report.limits_agree,
        holds,
    };
    Ok(Outcome::new(&doc, text, holds))
}
