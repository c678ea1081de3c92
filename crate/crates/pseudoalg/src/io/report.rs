//! JSON reports.  Every report is an object with `kind` and
//! `format_version` fields followed by the kind-specific body; the schemas
//! live in `docs/schema/<kind>.schema.json`.

use serde::{Deserialize, Serialize};

use crate::algebra::{CheckReport, Classification, Failure, PseudoAlgebra};
use crate::catalog::{Correction, Family, Kind, Mode, Params};
use crate::derived::DerivedStep;
use crate::solver::mtype::MtypeRow;

pub const FORMAT_VERSION: u32 = 1;

/// Report kinds, each with a schema file of the same name.
pub const KINDS: &[&str] = &[
    "check",
    "catalog-list",
    "catalog-build",
    "catalog-verify",
    "cohomology",
    "annihilate",
    "lambda",
    "derived",
    "enumerate-mtype",
];

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    kind: &'a str,
    format_version: u32,
    #[serde(flatten)]
    body: &'a T,
}

/// Wraps a report body with its kind.
pub fn to_json<T: Serialize>(kind: &str, body: &T) -> serde_json::Value {
    debug_assert!(KINDS.contains(&kind), "unknown report kind {kind}");
    serde_json::to_value(Envelope { kind, format_version: FORMAT_VERSION, body }).expect("reports serialize")
}

/// Pretty-printed [`to_json`].
pub fn to_json_string<T: Serialize>(kind: &str, body: &T) -> String {
    serde_json::to_string_pretty(&to_json(kind, body)).expect("reports serialize")
}

/// Which identities `check` requires.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Requirement {
    /// Skew-symmetry and Jacobi.
    Lie,
    /// Jacobi only.
    Leibniz,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutput {
    pub algebra: String,
    pub rank: usize,
    pub require: Requirement,
    pub classification: Classification,
    pub skew_pass: bool,
    pub jacobi_pass: bool,
    pub pass: bool,
    pub failures: Vec<Failure>,
}

impl CheckOutput {
    pub fn new(a: &PseudoAlgebra, require: Requirement) -> CheckOutput {
        let report: CheckReport = a.check_all();
        let pass = match require {
            Requirement::Lie => report.passed(),
            Requirement::Leibniz => report.jacobi_pass,
        };
        let failures = report
            .failures
            .into_iter()
            .filter(|f| require == Requirement::Lie || f.kind == crate::algebra::FailureKind::Jacobi)
            .collect();
        CheckOutput {
            algebra: a.name().to_string(),
            rank: a.rank(),
            require,
            classification: a.classify(),
            skew_pass: report.skew_pass,
            jacobi_pass: report.jacobi_pass,
            pass,
            failures,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamInfo {
    pub name: String,
    /// `rational`, `nonzero`, `tensor`, `poly` or `choice`.
    #[serde(rename = "type")]
    pub ty: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub options: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInfo {
    pub id: String,
    pub rank: usize,
    pub title: String,
    pub source: String,
    pub params: Vec<ParamInfo>,
    pub corrected: bool,
    pub refuted: bool,
}

impl FamilyInfo {
    pub fn new(f: &Family) -> FamilyInfo {
        FamilyInfo {
            id: f.id.into(),
            rank: f.rank,
            title: f.title.into(),
            source: f.source.into(),
            params: f
                .params
                .iter()
                .map(|p| {
                    let (ty, options) = match p.kind {
                        Kind::Rational => ("rational", vec![]),
                        Kind::NonZero => ("nonzero", vec![]),
                        Kind::Tensor => ("tensor", vec![]),
                        Kind::Poly => ("poly", vec![]),
                        Kind::Choice(o) => ("choice", o.iter().map(|s| s.to_string()).collect()),
                    };
                    ParamInfo { name: p.name.into(), ty: ty.into(), options }
                })
                .collect(),
            corrected: !crate::catalog::corrections_for(f.id).is_empty(),
            refuted: crate::catalog::refutation(f.id).is_some(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogList {
    pub families: Vec<FamilyInfo>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogBuild {
    pub family: String,
    pub mode: Mode,
    pub params: Params,
    pub classification: Classification,
    pub corrections: Vec<Correction>,
    /// The instance in `.pa` format.
    pub algebra: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedOutput {
    pub algebra: String,
    pub max_steps: usize,
    pub steps: Vec<DerivedStep>,
    /// Number of brackets until the series vanishes, if it did.
    pub length: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MtypeOutput {
    pub m_max: u32,
    pub degree_bound: u32,
    pub rows: Vec<MtypeRow>,
}
