//! Output documents. Every one of them re-parses under its own type.

use serde::{Deserialize, Serialize};

use extbranch::wire::{
    CertificateJson, HElementJson, HModuleJson, ParamJson, PointJson, RatStr, Schema, SegmentJson, SpehJson,
};

#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelevantDoc {
    pub schema: Schema,
    pub pi1: Vec<SpehJson>,
    pub pi2: Vec<SpehJson>,
    pub relevant: bool,
    /// Whether the parameter-side and factor-side deciders agree.
    pub deciders_agree: bool,
    pub certificate: Option<CertificateJson>,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceCheckDoc {
    pub schema: Schema,
    pub valid: bool,
    pub violations: Vec<String>,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepResultDoc {
    pub schema: Schema,
    pub operation: String,
    pub pi: Vec<SpehJson>,
    pub result: Vec<SpehJson>,
    pub display: String,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MsegsDoc {
    pub schema: Schema,
    pub pi: Vec<SpehJson>,
    pub langlands: Vec<SegmentJson>,
    pub zelevinsky: Vec<SegmentJson>,
    pub support: Vec<PointJson>,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LparamDoc {
    pub schema: Schema,
    pub pi: Vec<SpehJson>,
    pub param: Vec<ParamJson>,
    pub l_param_msegs: Vec<SegmentJson>,
    pub display: String,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct COmegaDoc {
    pub schema: Schema,
    pub sigma: Vec<SegmentJson>,
    pub omega: Vec<SegmentJson>,
    pub member: bool,
    /// Points of the support on an integral line of `ω` but outside its support.
    pub obstructions: Vec<PointJson>,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtDoc {
    pub schema: Schema,
    pub algebra: String,
    pub from: String,
    pub to: String,
    pub degree: usize,
    pub ext_dim: usize,
    /// `dim Ext^i` for `i = 0..=degree`, when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<usize>>,
    /// Shape of the minimal projective resolution of `from`.
    pub resolution: String,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KunnethLevel {
    pub degree: usize,
    pub tensor_side: usize,
    pub products: Vec<usize>,
    pub holds: bool,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KunnethCase {
    pub e1: String,
    pub f1: String,
    pub e2: String,
    pub f2: String,
    pub levels: Vec<KunnethLevel>,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KunnethDoc {
    pub schema: Schema,
    pub algebra: String,
    pub with: String,
    pub degree: usize,
    pub cases: Vec<KunnethCase>,
    pub holds: bool,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeckeMulDoc {
    pub schema: Schema,
    pub a: HElementJson,
    pub b: HElementJson,
    pub product: HElementJson,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeckeCenterDoc {
    pub schema: Schema,
    pub label: Vec<i64>,
    pub element: HElementJson,
    pub central: bool,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeckeInduceDoc {
    pub schema: Schema,
    pub q: RatStr,
    pub n: usize,
    pub dim: usize,
    /// `C(n, n₁)·d₁·d₂`.
    pub expected_dim: usize,
    pub module: HModuleJson,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompletionLevel {
    pub level: usize,
    pub induced_of_truncations: usize,
    pub truncation_of_induced: usize,
    pub isomorphic: bool,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeckeCompleteDoc {
    pub schema: Schema,
    pub q: RatStr,
    pub seed: u64,
    pub levels: Vec<CompletionLevel>,
    pub stable_level: usize,
    pub limits_agree: bool,
    pub holds: bool,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorBody {
    pub source: String,
    pub pointer: String,
    pub message: String,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorDoc {
    pub schema: Schema,
    pub error: ErrorBody,
}
