//! The JSON job format.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub command: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<Input>,
    #[serde(default)]
    pub options: Options,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    /// degree of the momentum polynomials (killing)
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extra_orders: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// name → rational, as "p/q" strings
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Value>,
    /// symcheck: a field preset such as "power_symmetries(3)" or coefficient rows
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fields: Option<Fields>,
    /// liealg: cohomology degrees to compute
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<usize>>,
    /// liealg: run the symbolic invariant checks
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub invariants: bool,
    /// gap-report: largest n
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_n: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Fields {
    Preset(String),
    Inline(Vec<Vec<String>>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Input {
    Preset(String),
    /// symmetric matrix of rational functions in x1..xn
    Metric(Vec<Vec<String>>),
    Distribution(InlineDistribution),
    Monge(InlineMonge),
    Gnla(InlineGnla),
    Symbol(InlineSymbol),
    Liealg(InlineLie),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InlineDistribution {
    pub vars: Vec<String>,
    /// one coefficient row per generator
    pub fields: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InlineMonge {
    pub n: usize,
    pub f: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InlineBracket {
    pub a: String,
    pub b: String,
    pub value: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InlineGnla {
    pub names: Vec<String>,
    pub depths: Vec<usize>,
    pub brackets: Vec<InlineBracket>,
}

/// Basis vectors of g_k inside S^k T* ⊗ W. Coordinate `index(σ)·w + a` is the
/// coefficient of x^σ in component a, monomials in descending grlex order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InlineSymbol {
    pub n: usize,
    pub w: usize,
    pub k: u32,
    pub basis: Vec<Vec<String>>,
    /// dimension of the order-zero part; defaults to n
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g0: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InlineLie {
    pub names: Vec<String>,
    #[serde(default)]
    pub params: Vec<String>,
    pub brackets: Vec<InlineBracket>,
}

fn json_error(source: &str, e: serde_json::Error) -> CliError {
    CliError::Json { file: source.to_string(), line: e.line(), column: e.column(), msg: strip_position(&e.to_string()) }
}

fn strip_position(s: &str) -> String {
    match s.rfind(" at line ") {
        Some(i) => s[..i].to_string(),
        None => s.to_string(),
    }
}

pub fn parse_job(text: &str, source: &str) -> Result<JobSpec, CliError> {
    serde_json::from_str(text).map_err(|e| json_error(source, e))
}

/// A batch file is either a list of jobs or {"jobs": [...]}.
pub fn parse_batch(text: &str, source: &str) -> Result<Vec<JobSpec>, CliError> {
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Wrapped {
        jobs: Vec<JobSpec>,
    }
    // dispatch on the top-level shape so errors keep their positions
    let v: Value = serde_json::from_str(text).map_err(|e| json_error(source, e))?;
    match v {
        Value::Array(_) => serde_json::from_str::<Vec<JobSpec>>(text).map_err(|e| json_error(source, e)),
        Value::Object(_) => Ok(serde_json::from_str::<Wrapped>(text).map_err(|e| json_error(source, e))?.jobs),
        _ => Err(CliError::Usage(format!("{source}: a batch file holds a list of jobs"))),
    }
}
