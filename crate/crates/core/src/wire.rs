//! Versioned JSON formats for every object that crosses the command line.
//!
//! Documents carry a top-level `"schema": "v1"`. Deserialization errors are
//! reported with a JSON pointer to the offending value. Serialization is
//! canonical: object keys sorted at every level, factors and segments in
//! their canonical order, so equal objects print identically.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{DeserializeOwned, Error as _};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arthur::{ArthurParam, ArthurRep, ParamSummand, Speh};
use crate::findim::{Arrow, FDModule, Path, QuiverAlgebra, Relation};
use crate::hecke::{FDHModule, HElement, Perm, RatFunc};
use crate::linalg::{fmt_rat, parse_rat, Matrix, Rat};
use crate::reduction::{
    ExtProblem, ReducedLeft, ReductionStep, ReductionTrace, StepData, StepKind, TraceNode,
};
use crate::relevance::{CertPair, RelevanceCertificate};
use crate::segments::{
    default_dual_id, fmt_exponent, parse_exponent, CuspidalLine, CuspidalPoint, Exponent, Multisegment, Segment,
};

pub const SCHEMA: &str = "v1";

/// A schema violation located by a JSON pointer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WireError {
    pub pointer: String,
    pub message: String,
}

impl WireError {
    pub fn at(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        WireError { pointer: pointer.into(), message: message.into() }
    }

    /// The same error inside a value found at `prefix`.
    pub fn under(mut self, prefix: &str) -> Self {
        self.pointer = format!("{prefix}{}", self.pointer);
        self
    }
}

impl fmt::Display for WireError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = if self.pointer.is_empty() { "(root)" } else { &self.pointer };
        write!(f, "{at}: {}", self.message)
    }
}

impl std::error::Error for WireError {}

fn escape(token: &str) -> String {
    token.replace('~', "~0").replace('/', "~1")
}

fn pointer_of(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment as S;
    path.iter()
        .filter_map(|seg| match seg {
            S::Seq { index } => Some(format!("/{index}")),
            S::Map { key } => Some(format!("/{}", escape(key))),
            S::Enum { .. } | S::Unknown => None,
        })
        .collect()
}

fn strip_position(msg: String) -> String {
    // serde_json appends " at line L column C"; the pointer already locates the error
    match msg.rfind(" at line ") {
        Some(k) => msg[..k].to_string(),
        None => msg,
    }
}

pub fn from_str<T: DeserializeOwned>(s: &str) -> Result<T, WireError> {
    let de = &mut serde_json::Deserializer::from_str(s);
    let out = serde_path_to_error::deserialize(&mut *de)
        .map_err(|e| WireError::at(pointer_of(e.path()), strip_position(e.into_inner().to_string())))?;
    de.end().map_err(|e| WireError::at("", strip_position(e.to_string())))?;
    Ok(out)
}

pub fn from_value<T: DeserializeOwned>(v: serde_json::Value) -> Result<T, WireError> {
    serde_path_to_error::deserialize(v)
        .map_err(|e| WireError::at(pointer_of(e.path()), strip_position(e.into_inner().to_string())))
}

/// Pretty-printed JSON with sorted keys and a trailing newline.
pub fn to_canonical<T: Serialize>(doc: &T) -> String {
    // going through Value sorts every object's keys
    let mut s = serde_json::to_string_pretty(&value(doc)).expect("wire types always serialize");
    s.push('\n');
    s
}

/// The `"schema"` field: serializes as `"v1"` and rejects anything else.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Schema;

impl Serialize for Schema {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(SCHEMA)
    }
}

impl<'de> Deserialize<'de> for Schema {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s == SCHEMA {
            Ok(Schema)
        } else {
            Err(D::Error::custom(format!("unsupported schema version {s:?}, expected {SCHEMA:?}")))
        }
    }
}

/// An exact rational written as `"p/q"` or `"p"`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RatStr(pub Rat);

impl Serialize for RatStr {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rat(&self.0))
    }
}

impl<'de> Deserialize<'de> for RatStr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map(RatStr).ok_or_else(|| D::Error::custom(format!("malformed rational {s:?}, expected \"p/q\"")))
    }
}

/// An exponent written as `"p/q"` or `"p"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExponentStr(pub Exponent);

impl Serialize for ExponentStr {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_exponent(&self.0))
    }
}

impl<'de> Deserialize<'de> for ExponentStr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_exponent(&s)
            .map(ExponentStr)
            .ok_or_else(|| D::Error::custom(format!("malformed rational exponent {s:?}, expected \"p/q\"")))
    }
}

fn positive<'de, D: Deserializer<'de>>(d: D) -> Result<u32, D::Error> {
    let v = u32::deserialize(d)?;
    if v == 0 {
        return Err(D::Error::custom("expected a positive integer, got 0"));
    }
    Ok(v)
}

fn line_id<'de, D: Deserializer<'de>>(d: D) -> Result<String, D::Error> {
    let s = String::deserialize(d)?;
    if s.is_empty() {
        return Err(D::Error::custom("line ids must be non-empty"));
    }
    Ok(s)
}

fn dual_field(line: &CuspidalLine) -> Option<String> {
    (line.dual_id != default_dual_id(&line.id)).then(|| line.dual_id.clone())
}

/// Lines seen so far in a document; one id must always mean the same line.
#[derive(Clone, Debug, Default)]
pub struct LineTable(BTreeMap<String, CuspidalLine>);

impl LineTable {
    pub fn line(&mut self, id: &str, deg: u32, dual: Option<&str>, pointer: &str) -> Result<CuspidalLine, WireError> {
        let line = match dual {
            Some(d) => CuspidalLine::with_dual(id, deg, d),
            None => CuspidalLine::new(id, deg),
        };
        for l in [line.clone(), line.dual()] {
            match self.0.get(&l.id) {
                Some(old) if *old != l => {
                    return Err(WireError::at(
                        pointer,
                        format!("line {} is used with two different degrees or duals", l.id),
                    ))
                }
                Some(_) => {}
                None => {
                    self.0.insert(l.id.clone(), l);
                }
            }
        }
        Ok(line)
    }
}

// ---------------------------------------------------------------- segments

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentJson {
    #[serde(deserialize_with = "line_id")]
    pub line: String,
    #[serde(default = "one", deserialize_with = "positive")]
    pub deg: u32,
    pub a: ExponentStr,
    pub b: ExponentStr,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<String>,
}

fn one() -> u32 {
    1
}

impl SegmentJson {
    pub fn of(s: &Segment) -> Self {
        SegmentJson {
            line: s.line.id.clone(),
            deg: s.line.base_degree,
            a: ExponentStr(s.a),
            b: ExponentStr(s.b),
            dual: dual_field(&s.line),
        }
    }

    pub fn to_segment(&self, lines: &mut LineTable, pointer: &str) -> Result<Segment, WireError> {
        let line = lines.line(&self.line, self.deg, self.dual.as_deref(), pointer)?;
        Segment::new(line, self.a.0, self.b.0).map_err(|e| WireError::at(pointer, e.to_string()))
    }
}

/// A multisegment in standard order.
pub fn mseg_json(m: &Multisegment) -> Vec<SegmentJson> {
    crate::segments::standard_order(m).iter().map(SegmentJson::of).collect()
}

pub fn mseg_from_json(items: &[SegmentJson], lines: &mut LineTable) -> Result<Multisegment, WireError> {
    items.iter().enumerate().map(|(k, s)| s.to_segment(lines, &format!("/{k}"))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointJson {
    #[serde(deserialize_with = "line_id")]
    pub line: String,
    #[serde(deserialize_with = "positive")]
    pub deg: u32,
    pub x: ExponentStr,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<String>,
}

impl PointJson {
    pub fn of(p: &CuspidalPoint) -> Self {
        PointJson { line: p.line.id.clone(), deg: p.line.base_degree, x: ExponentStr(p.x), dual: dual_field(&p.line) }
    }

    pub fn to_point(&self, lines: &mut LineTable, pointer: &str) -> Result<CuspidalPoint, WireError> {
        Ok(lines.line(&self.line, self.deg, self.dual.as_deref(), pointer)?.at(self.x.0))
    }
}

// ------------------------------------------------------------------ arthur

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpehJson {
    #[serde(deserialize_with = "line_id")]
    pub line: String,
    #[serde(deserialize_with = "positive")]
    pub deg: u32,
    #[serde(deserialize_with = "positive")]
    pub a: u32,
    #[serde(deserialize_with = "positive")]
    pub b: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<String>,
}

impl SpehJson {
    pub fn of(u: &Speh) -> Self {
        SpehJson { line: u.line.id.clone(), deg: u.line.base_degree, a: u.a, b: u.b, dual: dual_field(&u.line) }
    }

    pub fn to_speh(&self, lines: &mut LineTable, pointer: &str) -> Result<Speh, WireError> {
        Ok(Speh::new(lines.line(&self.line, self.deg, self.dual.as_deref(), pointer)?, self.a, self.b))
    }
}

pub fn rep_json(pi: &ArthurRep) -> Vec<SpehJson> {
    pi.factors().iter().map(SpehJson::of).collect()
}

pub fn rep_from_json(items: &[SpehJson], lines: &mut LineTable) -> Result<ArthurRep, WireError> {
    items.iter().enumerate().map(|(k, u)| u.to_speh(lines, &format!("/{k}"))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamJson {
    #[serde(deserialize_with = "line_id")]
    pub phi: String,
    #[serde(deserialize_with = "positive")]
    pub deg: u32,
    #[serde(deserialize_with = "positive")]
    pub deligne: u32,
    #[serde(deserialize_with = "positive")]
    pub arthur: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<String>,
}

impl ParamJson {
    pub fn of(s: &ParamSummand) -> Self {
        ParamJson {
            phi: s.phi.id.clone(),
            deg: s.phi.base_degree,
            deligne: s.deligne,
            arthur: s.arthur,
            dual: dual_field(&s.phi),
        }
    }

    pub fn to_summand(&self, lines: &mut LineTable, pointer: &str) -> Result<ParamSummand, WireError> {
        Ok(ParamSummand::new(lines.line(&self.phi, self.deg, self.dual.as_deref(), pointer)?, self.deligne, self.arthur))
    }
}

pub fn param_json(psi: &ArthurParam) -> Vec<ParamJson> {
    psi.summands().iter().map(ParamJson::of).collect()
}

pub fn param_from_json(items: &[ParamJson], lines: &mut LineTable) -> Result<ArthurParam, WireError> {
    items.iter().enumerate().map(|(k, s)| s.to_summand(lines, &format!("/{k}"))).collect()
}

// --------------------------------------------------------------- relevance

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertPairJson {
    pub left: Option<ParamJson>,
    pub right: Option<ParamJson>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    pub family1: Vec<CertPairJson>,
    pub family2: Vec<CertPairJson>,
    pub family3: Vec<CertPairJson>,
    pub family4: Vec<CertPairJson>,
}

impl CertificateJson {
    pub fn of(cert: &RelevanceCertificate) -> Self {
        let mut c = cert.clone();
        c.canonicalize();
        let fam = |v: &[CertPair]| {
            v.iter()
                .map(|p| CertPairJson { left: p.left.as_ref().map(ParamJson::of), right: p.right.as_ref().map(ParamJson::of) })
                .collect()
        };
        CertificateJson { family1: fam(&c.family1), family2: fam(&c.family2), family3: fam(&c.family3), family4: fam(&c.family4) }
    }

    pub fn to_certificate(&self, lines: &mut LineTable) -> Result<RelevanceCertificate, WireError> {
        let fam = |name: &str, v: &[CertPairJson], lines: &mut LineTable| -> Result<Vec<CertPair>, WireError> {
            v.iter()
                .enumerate()
                .map(|(k, p)| {
                    let at = |side: &str| format!("/{name}/{k}/{side}");
                    let left = p.left.as_ref().map(|s| s.to_summand(lines, &at("left"))).transpose()?;
                    let right = p.right.as_ref().map(|s| s.to_summand(lines, &at("right"))).transpose()?;
                    if left.is_none() && right.is_none() {
                        return Err(WireError::at(format!("/{name}/{k}"), "a certificate term needs at least one side"));
                    }
                    Ok(CertPair::new(left, right))
                })
                .collect()
        };
        let mut cert = RelevanceCertificate {
            family1: fam("family1", &self.family1, lines)?,
            family2: fam("family2", &self.family2, lines)?,
            family3: fam("family3", &self.family3, lines)?,
            family4: fam("family4", &self.family4, lines)?,
        };
        cert.canonicalize();
        Ok(cert)
    }
}

// --------------------------------------------------------------- reduction

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemJson {
    pub left: Vec<SpehJson>,
    pub right: Vec<SpehJson>,
}

impl ProblemJson {
    pub fn of(p: &ExtProblem) -> Self {
        ProblemJson { left: rep_json(&p.left), right: rep_json(&p.right) }
    }

    pub fn to_problem(&self, lines: &mut LineTable) -> Result<ExtProblem, WireError> {
        let left = rep_from_json(&self.left, lines).map_err(|e| e.under("/left"))?;
        let right = rep_from_json(&self.right, lines).map_err(|e| e.under("/right"))?;
        Ok(ExtProblem::new(left, right))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TransferSwapData {
    sigma: PointJson,
    swapped: ProblemJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReducedJson {
    speh_head: Option<SpehJson>,
    fresh_sigma: PointJson,
    tail: Vec<SpehJson>,
    target: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MainReductionData {
    peeled: SpehJson,
    reduced: ReducedJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockEntry {
    line: String,
    count: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockSelectData {
    block: Vec<BlockEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CaseAData {
    matched: Option<SpehJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CaseBData {
    matched: SpehJson,
    dual_left: Vec<SpehJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NoData {}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepJson {
    pub step: String,
    pub cite: String,
    pub data: serde_json::Value,
}

fn value<T: Serialize>(t: &T) -> serde_json::Value {
    serde_json::to_value(t).expect("wire types always serialize")
}

impl StepJson {
    pub fn of(s: &ReductionStep) -> Self {
        let data = match &s.data {
            StepData::TransferSwap { sigma, swapped } => {
                value(&TransferSwapData { sigma: PointJson::of(sigma), swapped: ProblemJson::of(swapped) })
            }
            StepData::MainReduction { peeled, reduced } => value(&MainReductionData {
                peeled: SpehJson::of(peeled),
                reduced: ReducedJson {
                    speh_head: reduced.speh_head.as_ref().map(SpehJson::of),
                    fresh_sigma: PointJson::of(&reduced.fresh_sigma),
                    tail: rep_json(&reduced.tail),
                    target: reduced.target,
                },
            }),
            StepData::BlockSelect { block } => value(&BlockSelectData {
                block: block.iter().map(|(line, count)| BlockEntry { line: line.clone(), count: *count }).collect(),
            }),
            StepData::CaseA { matched } => value(&CaseAData { matched: matched.as_ref().map(SpehJson::of) }),
            StepData::CaseB { matched, dual_left } => {
                value(&CaseBData { matched: SpehJson::of(matched), dual_left: rep_json(dual_left) })
            }
            StepData::GenericBase => value(&NoData {}),
        };
        StepJson { step: s.kind.name().to_string(), cite: s.cite.clone(), data }
    }

    pub fn to_step(&self, lines: &mut LineTable) -> Result<ReductionStep, WireError> {
        let kind = StepKind::from_name(&self.step)
            .ok_or_else(|| WireError::at("/step", format!("unknown step kind {:?}", self.step)))?;
        let d = self.data.clone();
        let data = (|| -> Result<StepData, WireError> {
            Ok(match kind {
                StepKind::TransferSwap => {
                    let t: TransferSwapData = from_value(d)?;
                    StepData::TransferSwap {
                        sigma: t.sigma.to_point(lines, "/sigma")?,
                        swapped: t.swapped.to_problem(lines).map_err(|e| e.under("/swapped"))?,
                    }
                }
                StepKind::MainReduction => {
                    let m: MainReductionData = from_value(d)?;
                    let r = &m.reduced;
                    StepData::MainReduction {
                        peeled: m.peeled.to_speh(lines, "/peeled")?,
                        reduced: ReducedLeft {
                            speh_head: r.speh_head.as_ref().map(|u| u.to_speh(lines, "/reduced/speh_head")).transpose()?,
                            fresh_sigma: r.fresh_sigma.to_point(lines, "/reduced/fresh_sigma")?,
                            tail: rep_from_json(&r.tail, lines).map_err(|e| e.under("/reduced/tail"))?,
                            target: r.target,
                        },
                    }
                }
                StepKind::BlockSelect => {
                    let b: BlockSelectData = from_value(d)?;
                    StepData::BlockSelect { block: b.block.into_iter().map(|e| (e.line, e.count)).collect() }
                }
                StepKind::CaseA => {
                    let c: CaseAData = from_value(d)?;
                    StepData::CaseA { matched: c.matched.as_ref().map(|u| u.to_speh(lines, "/matched")).transpose()? }
                }
                StepKind::CaseBDuality => {
                    let c: CaseBData = from_value(d)?;
                    StepData::CaseB {
                        matched: c.matched.to_speh(lines, "/matched")?,
                        dual_left: rep_from_json(&c.dual_left, lines).map_err(|e| e.under("/dual_left"))?,
                    }
                }
                StepKind::GenericBase => {
                    let _: NoData = from_value(d)?;
                    StepData::GenericBase
                }
            })
        })()
        .map_err(|e| e.under("/data"))?;
        Ok(ReductionStep { kind, cite: self.cite.clone(), data })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceNodeJson {
    pub problem: ProblemJson,
    pub steps: Vec<StepJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub child: Option<Box<TraceNodeJson>>,
}

impl TraceNodeJson {
    pub fn of(n: &TraceNode) -> Self {
        TraceNodeJson {
            problem: ProblemJson::of(&n.problem),
            steps: n.steps.iter().map(StepJson::of).collect(),
            child: n.child.as_ref().map(|c| Box::new(TraceNodeJson::of(c))),
        }
    }

    pub fn to_node(&self, lines: &mut LineTable) -> Result<TraceNode, WireError> {
        let problem = self.problem.to_problem(lines).map_err(|e| e.under("/problem"))?;
        let steps = self
            .steps
            .iter()
            .enumerate()
            .map(|(k, s)| s.to_step(lines).map_err(|e| e.under(&format!("/steps/{k}"))))
            .collect::<Result<_, _>>()?;
        let child = match &self.child {
            Some(c) => Some(Box::new(c.to_node(lines).map_err(|e| e.under("/child"))?)),
            None => None,
        };
        Ok(TraceNode { problem, steps, child })
    }
}

/// A complete trace document; `transcript` and `valid` are informational.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceDoc {
    pub schema: Schema,
    pub root: ProblemJson,
    pub trace: TraceNodeJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transcript: Option<Vec<String>>,
}

impl TraceDoc {
    pub fn of(t: &ReductionTrace) -> Self {
        TraceDoc {
            schema: Schema,
            root: ProblemJson::of(&t.root),
            trace: TraceNodeJson::of(&t.node),
            valid: None,
            transcript: None,
        }
    }

    pub fn to_trace(&self) -> Result<ReductionTrace, WireError> {
        let mut lines = LineTable::default();
        let root = self.root.to_problem(&mut lines).map_err(|e| e.under("/root"))?;
        let node = self.trace.to_node(&mut lines).map_err(|e| e.under("/trace"))?;
        Ok(ReductionTrace { root, node })
    }
}

// ------------------------------------------------------------------ findim

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowJson {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelTermJson {
    pub coeff: RatStr,
    /// Arrow names in composition order, first arrow first.
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub name: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowJson>,
    #[serde(default)]
    pub relations: Vec<Vec<RelTermJson>>,
}

impl AlgebraJson {
    pub fn of(alg: &QuiverAlgebra) -> Self {
        let v = |i: usize| alg.vertices[i].clone();
        AlgebraJson {
            name: alg.name.clone(),
            vertices: alg.vertices.clone(),
            arrows: alg.arrows.iter().map(|a| ArrowJson { name: a.name.clone(), source: v(a.source), target: v(a.target) }).collect(),
            relations: alg
                .relations
                .iter()
                .map(|r| {
                    r.terms
                        .iter()
                        .map(|(c, p)| RelTermJson {
                            coeff: RatStr(c.clone()),
                            path: p.arrows.iter().map(|&a| alg.arrows[a].name.clone()).collect(),
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<QuiverAlgebra, WireError> {
        let vertex = |name: &str, at: String| {
            self.vertices.iter().position(|v| v == name).ok_or_else(|| WireError::at(at, format!("unknown vertex {name:?}")))
        };
        for (k, v) in self.vertices.iter().enumerate() {
            if self.vertices[..k].contains(v) {
                return Err(WireError::at(format!("/vertices/{k}"), format!("duplicate vertex {v:?}")));
            }
        }
        let mut arrows = Vec::new();
        for (k, a) in self.arrows.iter().enumerate() {
            if self.arrows[..k].iter().any(|b| b.name == a.name) {
                return Err(WireError::at(format!("/arrows/{k}/name"), format!("duplicate arrow {:?}", a.name)));
            }
            arrows.push(Arrow {
                name: a.name.clone(),
                source: vertex(&a.source, format!("/arrows/{k}/source"))?,
                target: vertex(&a.target, format!("/arrows/{k}/target"))?,
            });
        }
        let mut relations = Vec::new();
        for (r, terms) in self.relations.iter().enumerate() {
            let mut out = Vec::new();
            for (t, term) in terms.iter().enumerate() {
                let at = format!("/relations/{r}/{t}/path");
                let ids = term
                    .path
                    .iter()
                    .enumerate()
                    .map(|(k, n)| {
                        arrows.iter().position(|a| a.name == *n).ok_or_else(|| WireError::at(format!("{at}/{k}"), format!("unknown arrow {n:?}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let Some(&first) = ids.first() else {
                    return Err(WireError::at(at, "relation terms must be paths of length at least 2"));
                };
                out.push((term.coeff.0.clone(), Path { start: arrows[first].source, arrows: ids }));
            }
            relations.push(Relation { terms: out });
        }
        QuiverAlgebra::new(self.name.clone(), self.vertices.clone(), arrows, relations).map_err(|e| WireError::at("", e.to_string()))
    }
}

pub type MatrixJson = Vec<Vec<RatStr>>;

pub fn matrix_json(m: &Matrix) -> MatrixJson {
    m.to_rows().into_iter().map(|r| r.into_iter().map(RatStr).collect()).collect()
}

/// Reads a `rows × cols` matrix; an empty list stands for any matrix with no entries.
pub fn matrix_from_json(m: &MatrixJson, rows: usize, cols: usize, pointer: &str) -> Result<Matrix, WireError> {
    if rows * cols == 0 && m.iter().all(Vec::is_empty) {
        return Ok(Matrix::zeros(rows, cols));
    }
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(WireError::at(pointer, format!("expected a {rows}x{cols} matrix")));
    }
    Ok(Matrix::from_rows(m.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect()))
}

/// A representation: dimension per vertex and a matrix per arrow (target × source).
/// Vertices and arrows left out are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleJson {
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub maps: BTreeMap<String, MatrixJson>,
}

impl ModuleJson {
    pub fn of(alg: &QuiverAlgebra, m: &FDModule) -> Self {
        ModuleJson {
            dims: alg.vertices.iter().cloned().zip(m.dims.iter().copied()).filter(|(_, d)| *d > 0).collect(),
            maps: alg
                .arrows
                .iter()
                .zip(&m.maps)
                .filter(|(_, mat)| !mat.is_zero())
                .map(|(a, mat)| (a.name.clone(), matrix_json(mat)))
                .collect(),
        }
    }

    pub fn to_module(&self, alg: &QuiverAlgebra) -> Result<FDModule, WireError> {
        for v in self.dims.keys() {
            if alg.vertex_index(v).is_none() {
                return Err(WireError::at(format!("/dims/{}", escape(v)), format!("unknown vertex {v:?}")));
            }
        }
        for a in self.maps.keys() {
            if alg.arrow_index(a).is_none() {
                return Err(WireError::at(format!("/maps/{}", escape(a)), format!("unknown arrow {a:?}")));
            }
        }
        let dims: Vec<usize> = alg.vertices.iter().map(|v| self.dims.get(v).copied().unwrap_or(0)).collect();
        let maps = alg
            .arrows
            .iter()
            .map(|a| match self.maps.get(&a.name) {
                Some(m) => matrix_from_json(m, dims[a.target], dims[a.source], &format!("/maps/{}", escape(&a.name))),
                None => Ok(Matrix::zeros(dims[a.target], dims[a.source])),
            })
            .collect::<Result<Vec<_>, _>>()?;
        FDModule::new(alg, dims, maps).map_err(|e| WireError::at("", e.to_string()))
    }
}

/// An algebra together with named modules over it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub schema: Schema,
    pub algebra: AlgebraJson,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleJson>,
}

impl AlgebraDoc {
    pub fn to_parts(&self) -> Result<(QuiverAlgebra, BTreeMap<String, FDModule>), WireError> {
        let alg = self.algebra.to_algebra().map_err(|e| e.under("/algebra"))?;
        let modules = self
            .modules
            .iter()
            .map(|(n, m)| Ok((n.clone(), m.to_module(&alg).map_err(|e| e.under(&format!("/modules/{}", escape(n))))?)))
            .collect::<Result<_, WireError>>()?;
        Ok((alg, modules))
    }
}

// ------------------------------------------------------------------- hecke

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HTermJson {
    pub lambda: Vec<i64>,
    /// One-line notation, 1-based.
    pub w: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HElementJson {
    pub n: usize,
    pub terms: Vec<HTermJson>,
}

impl HElementJson {
    pub fn of(h: &HElement) -> Self {
        HElementJson {
            n: h.n(),
            terms: h
                .terms()
                .map(|((l, w), c)| HTermJson { lambda: l.clone(), w: w.one_based(), coeff: c.to_string() })
                .collect(),
        }
    }

    pub fn to_element(&self) -> Result<HElement, WireError> {
        let mut h = HElement::zero(self.n);
        for (k, t) in self.terms.iter().enumerate() {
            if t.lambda.len() != self.n {
                return Err(WireError::at(format!("/terms/{k}/lambda"), format!("expected {} exponents", self.n)));
            }
            let w = Perm::parse_one_based(&t.w)
                .filter(|w| w.n() == self.n)
                .ok_or_else(|| WireError::at(format!("/terms/{k}/w"), format!("not a permutation of 1..{}", self.n)))?;
            let c = RatFunc::parse(&t.coeff).map_err(|e| WireError::at(format!("/terms/{k}/coeff"), e))?;
            h.add_term(t.lambda.clone(), w, c);
        }
        Ok(h)
    }
}

/// A finite-dimensional module, either by explicit matrices or by a named construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum HModuleJson {
    /// `ℋ(1)` acting by `y ↦ α`.
    Character { alpha: RatStr },
    /// `ℋ(1)` acting by a 2×2 Jordan block with eigenvalue `α`.
    Jordan { alpha: RatStr },
    /// `T_i ↦ q` or `-1`, `y_1 ↦ α`.
    OneDimensional { n: usize, alpha: RatStr, trivial: bool },
    /// `t[i]` is `T_{i+1}`, `y[j]` is `y_{j+1}`.
    Matrices { dim: usize, t: Vec<MatrixJson>, y: Vec<MatrixJson> },
}

impl HModuleJson {
    pub fn of(m: &FDHModule) -> Self {
        HModuleJson::Matrices {
            dim: m.dim,
            t: m.t.iter().map(matrix_json).collect(),
            y: m.y.iter().map(matrix_json).collect(),
        }
    }

    pub fn to_module(&self, q: &Rat) -> Result<FDHModule, WireError> {
        let q = q.clone();
        let built = match self {
            HModuleJson::Character { alpha } => FDHModule::character(q, alpha.0.clone()),
            HModuleJson::Jordan { alpha } => FDHModule::jordan_block(q, alpha.0.clone()),
            HModuleJson::OneDimensional { n, alpha, trivial } => FDHModule::one_dimensional(*n, q, alpha.0.clone(), *trivial),
            HModuleJson::Matrices { dim, t, y } => {
                let read = |ms: &[MatrixJson], name: &str| {
                    ms.iter()
                        .enumerate()
                        .map(|(k, m)| matrix_from_json(m, *dim, *dim, &format!("/{name}/{k}")))
                        .collect::<Result<Vec<_>, _>>()
                };
                FDHModule::new(q, read(t, "t")?, read(y, "y")?)
            }
        };
        built.map_err(|e| WireError::at("", e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::{build_trace, validate_trace};

    fn rep(s: &str) -> ArthurRep {
        let items: Vec<SpehJson> = from_str(s).unwrap();
        rep_from_json(&items, &mut LineTable::default()).unwrap()
    }

    #[test]
    fn speh_round_trip() {
        let pi = rep(r#"[{"line":"r","deg":1,"a":2,"b":3},{"line":"s","deg":2,"a":1,"b":1,"dual":"s"}]"#);
        let again = rep(&serde_json::to_string(&rep_json(&pi)).unwrap());
        assert_eq!(pi, again);
        assert_eq!(pi.factors()[1].line.dual_id, "s");
    }

    #[test]
    fn malformed_exponent_points_at_field() {
        let e = from_str::<Vec<SegmentJson>>(r#"[{"line":"r","a":"0","b":"1/x"}]"#).unwrap_err();
        assert_eq!(e.pointer, "/0/b");
        assert!(e.message.contains("malformed rational exponent"), "{e}");
    }

    #[test]
    fn zero_size_and_unknown_fields_rejected() {
        let e = from_str::<Vec<SpehJson>>(r#"[{"line":"r","deg":1,"a":0,"b":1}]"#).unwrap_err();
        assert_eq!(e.pointer, "/0/a");
        let e = from_str::<Vec<SpehJson>>(r#"[{"line":"r","deg":1,"a":1,"b":1,"c":2}]"#).unwrap_err();
        assert_eq!(e.pointer, "/0/c");
    }

    #[test]
    fn conflicting_lines_rejected() {
        let items: Vec<SpehJson> = from_str(r#"[{"line":"r","deg":1,"a":1,"b":1},{"line":"r","deg":2,"a":1,"b":1}]"#).unwrap();
        let e = rep_from_json(&items, &mut LineTable::default()).unwrap_err();
        assert_eq!(e.pointer, "/1");
    }

    #[test]
    fn segment_requires_integral_length() {
        let items: Vec<SegmentJson> = from_str(r#"[{"line":"r","a":"0","b":"1/2"}]"#).unwrap();
        assert_eq!(mseg_from_json(&items, &mut LineTable::default()).unwrap_err().pointer, "/0");
    }

    #[test]
    fn schema_tag_checked() {
        #[derive(Deserialize)]
        struct Doc {
            #[allow(dead_code)]
            schema: Schema,
        }
        assert!(from_str::<Doc>(r#"{"schema":"v1"}"#).is_ok());
        assert_eq!(from_str::<Doc>(r#"{"schema":"v2"}"#).err().unwrap().pointer, "/schema");
    }

    #[test]
    fn trace_round_trip_validates() {
        let pi1 = rep(r#"[{"line":"r","deg":1,"a":1,"b":3}]"#);
        let pi2 = rep(r#"[{"line":"r","deg":1,"a":2,"b":1}]"#);
        let trace = build_trace(&pi1, &pi2).unwrap();
        let text = to_canonical(&TraceDoc::of(&trace));
        let doc: TraceDoc = from_str(&text).unwrap();
        let back = doc.to_trace().unwrap();
        assert_eq!(back, trace);
        assert!(validate_trace(&back));
        assert_eq!(to_canonical(&doc), text);
    }

    #[test]
    fn bad_step_kind_located() {
        let pi1 = rep(r#"[{"line":"r","deg":1,"a":1,"b":2}]"#);
        let pi2 = rep(r#"[{"line":"r","deg":1,"a":1,"b":1}]"#);
        let mut doc = TraceDoc::of(&build_trace(&pi1, &pi2).unwrap());
        doc.trace.steps[0].step = "Nope".into();
        assert_eq!(doc.to_trace().unwrap_err().pointer, "/trace/steps/0/step");
    }

    #[test]
    fn algebra_round_trip() {
        let fx = crate::findim::fixtures::by_id("remark14-A").unwrap();
        let doc = AlgebraJson::of(&fx.algebra);
        let alg = doc.to_algebra().unwrap();
        assert_eq!(AlgebraJson::of(&alg), doc);
        for (name, m) in &fx.modules {
            let j = ModuleJson::of(&fx.algebra, m);
            assert_eq!(&j.to_module(&alg).unwrap(), m, "{name}");
        }
    }

    #[test]
    fn module_shape_errors_located() {
        let fx = crate::findim::fixtures::by_id("remark14-B").unwrap();
        let m: ModuleJson = from_str(r#"{"dims":{"X":1,"Y":1},"maps":{"a":[["1","0"]]}}"#).unwrap();
        assert_eq!(m.to_module(&fx.algebra).unwrap_err().pointer, "/maps/a");
        let m: ModuleJson = from_str(r#"{"dims":{"W":1}}"#).unwrap();
        assert_eq!(m.to_module(&fx.algebra).unwrap_err().pointer, "/dims/W");
    }

    #[test]
    fn helement_round_trip() {
        let h = HElement::t(3, 0).mul(&HElement::y(3, 2, -1)).add(&HElement::t(3, 1));
        let j = HElementJson::of(&h);
        assert_eq!(j.to_element().unwrap(), h);
        let bad: HElementJson = from_str(r#"{"n":2,"terms":[{"lambda":[0,0],"w":[1,1],"coeff":"1"}]}"#).unwrap();
        assert_eq!(bad.to_element().unwrap_err().pointer, "/terms/0/w");
    }

    #[test]
    fn hmodule_kinds() {
        let q = crate::linalg::rat(2);
        let m: HModuleJson = from_str(r#"{"kind":"one-dimensional","n":2,"alpha":"3","trivial":true}"#).unwrap();
        let built = m.to_module(&q).unwrap();
        let again = HModuleJson::of(&built).to_module(&q).unwrap();
        assert_eq!(built, again);
        assert!(from_str::<HModuleJson>(r#"{"kind":"character","alpha":"1","x":1}"#).is_err());
    }
}
