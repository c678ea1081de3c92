//! Constructors for the classified families of pseudoalgebras.
//!
//! Every family is described by a data table ([`families`]): its parameters
//! and their domains, the constraints they must satisfy, and its structure
//! constants written as exact expressions (see [`expr`]) transcribed as
//! printed in the classification.  A separate machine-readable corrections
//! file (`data/corrections.json`) overrides individual slots whose printed
//! form fails the verifier; every override carries its reason.
//!
//! [`build`] uses the corrected tables, [`build_literal`] the printed ones.
//! Either returns [`CatalogError::PaperFormulaFails`] when the result does
//! not satisfy the Jacobi identity or has the wrong symmetry type.

pub mod expr;
mod families;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{CheckReport, Classification, PseudoAlgebra};
use crate::rat::Rat;
use crate::tensor::Tensor2;
use expr::{Constraint, ExprError, Value};

pub use families::FAMILIES;

/// Domain of a family parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Any rational.
    Rational,
    /// A nonzero rational.
    NonZero,
    /// One of a fixed list of named options.
    Choice(&'static [&'static str]),
    /// A nonzero element of H⊗H, written as an expression such as `s|1 - 1|s`.
    Tensor,
    /// A nonzero polynomial `A(s)`, written as the tensor `A(s)⊗1`.
    Poly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: Kind,
}

/// How the structure constants are laid out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// Arbitrary entries `γ_ij^k`, given as `(i, j, k, expression)`; no
    /// skew completion is applied.
    Explicit(&'static [(usize, usize, usize, &'static str)]),
    /// The shared frame of ranks three and four: `[e0,e0] = α e0`,
    /// `[e0,ei] = βi ei`, `[e1,e1] = α'_m e2`, `[e1,e2] = η e2`,
    /// `[e1,e3] = η11 e1 + η12 e2`, `[e2,e3] = η21 e1 + η22 e2`, all completed
    /// skew-symmetrically.  Slots not listed are zero.
    Frame(&'static [(&'static str, &'static str)]),
}

/// The symmetry type the classification asserts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expect {
    Lie,
    LeibnizNotLie,
    /// Lie exactly when the given constraint holds, Leibniz-not-Lie otherwise.
    LieWhen(&'static str),
}

/// One family of the catalog.
#[derive(Debug, Clone, Copy)]
pub struct Family {
    /// Stable identifier, e.g. `thm27-12` or `b7`.
    pub id: &'static str,
    pub rank: usize,
    pub title: &'static str,
    /// Where the family is listed in the classification.
    pub source: &'static str,
    pub params: &'static [ParamSpec],
    /// Conditions on the parameters, `lhs == rhs` / `lhs != rhs`, optionally
    /// guarded by `choice = option ->`.
    pub constraints: &'static [&'static str],
    /// Sampling regimes: each is a comma-separated list of pins `name = expr`
    /// applied, in order, after a random draw.
    pub regimes: &'static [&'static str],
    pub shape: Shape,
    pub expect: Expect,
    pub note: &'static str,
}

impl Family {
    pub fn param(&self, name: &str) -> Option<&ParamSpec> {
        self.params.iter().find(|p| p.name == name)
    }
}

/// A single override of a printed slot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Correction {
    pub family: String,
    /// A frame slot name, an explicit entry `i,j,k`, `constraint` or `regime`.
    pub slot: String,
    /// The printed expression (empty when the correction adds a constraint
    /// or regime).
    pub printed: String,
    pub corrected: String,
    pub reason: String,
}

/// All corrections, parsed from the embedded data file.
pub fn corrections() -> &'static [Correction] {
    static DATA: OnceLock<Vec<Correction>> = OnceLock::new();
    DATA.get_or_init(|| {
        serde_json::from_str(include_str!("../../data/corrections.json")).expect("corrections file is valid JSON")
    })
}

/// Corrections for one family.
pub fn corrections_for(id: &str) -> Vec<&'static Correction> {
    corrections().iter().filter(|c| c.family == id).collect()
}

/// The correction marking a family as refuted: no parameter values give a
/// pseudoalgebra of the asserted type (slot `status`, value `refuted`).
pub fn refutation(id: &str) -> Option<&'static Correction> {
    corrections().iter().find(|c| c.family == id && c.slot == "status" && c.corrected == "refuted")
}

/// Literal (as printed) or corrected tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Literal,
    Corrected,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Literal => "literal",
            Mode::Corrected => "corrected",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{family}: {message}")]
    ParamDomainViolation { family: String, message: String },
    #[error("{family} ({mode}): {message}")]
    PaperFormulaFails { family: String, mode: Mode, message: String, report: Option<CheckReport> },
}

/// Parameter assignment: names to textual values (`1/2`, an option name, or
/// a tensor expression), as accepted on the command line and in JSON.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Params(pub BTreeMap<String, String>);

impl Params {
    pub fn new() -> Params {
        Params::default()
    }

    pub fn with(mut self, name: &str, value: impl ToString) -> Params {
        self.0.insert(name.to_string(), value.to_string());
        self
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.0.get(name).map(String::as_str)
    }

    /// Parses `name=value` pairs.
    pub fn parse_pairs<'a>(pairs: impl IntoIterator<Item = &'a str>) -> Result<Params, String> {
        let mut p = Params::new();
        for s in pairs {
            let (k, v) = s.split_once('=').ok_or_else(|| format!("expected name=value, got `{s}`"))?;
            p.0.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(p)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(", "))
    }
}

/// A successfully built family member.
#[derive(Debug, Clone)]
pub struct Built {
    pub algebra: PseudoAlgebra,
    pub classification: Classification,
    pub report: CheckReport,
    pub mode: Mode,
    pub corrections: Vec<&'static Correction>,
}

/// All families, sorted by id.
pub fn list_families() -> Vec<&'static Family> {
    let mut v: Vec<&Family> = FAMILIES.iter().collect();
    v.sort_by_key(|f| f.id);
    v
}

pub fn family(id: &str) -> Result<&'static Family, CatalogError> {
    FAMILIES.iter().find(|f| f.id == id).ok_or_else(|| CatalogError::UnknownFamily(id.to_string()))
}

/// The slot expressions, constraints and regimes of a family in a mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolved {
    pub slots: Vec<(String, String)>,
    pub constraints: Vec<String>,
    pub regimes: Vec<String>,
}

fn entry_key(i: usize, j: usize, k: usize) -> String {
    format!("{i},{j},{k}")
}

/// Applies the corrections (in corrected mode) to the printed tables.
pub fn resolve(f: &Family, mode: Mode) -> Resolved {
    let slots = match f.shape {
        Shape::Explicit(es) => es.iter().map(|(i, j, k, e)| (entry_key(*i, *j, *k), e.to_string())).collect(),
        Shape::Frame(ss) => ss.iter().map(|(n, e)| (n.to_string(), e.to_string())).collect(),
    };
    let mut r = Resolved {
        slots,
        constraints: f
            .constraints
            .iter()
            .chain(if f.param("alpha_m").is_some() { families::ALPHA_CONSTRAINTS } else { &[] })
            .map(|c| c.to_string())
            .collect(),
        regimes: f.regimes.iter().map(|c| c.to_string()).collect(),
    };
    if mode == Mode::Literal {
        return r;
    }
    for c in corrections_for(f.id) {
        let list = match c.slot.as_str() {
            "constraint" => &mut r.constraints,
            "regime" => &mut r.regimes,
            "status" => continue,
            _ => {
                match r.slots.iter_mut().find(|(n, _)| *n == c.slot) {
                    Some(slot) => slot.1 = c.corrected.clone(),
                    None => r.slots.push((c.slot.clone(), c.corrected.clone())),
                }
                continue;
            }
        };
        if c.printed.is_empty() {
            list.push(c.corrected.clone());
        } else if let Some(x) = list.iter_mut().find(|x| **x == c.printed) {
            *x = c.corrected.clone();
        } else if c.corrected.is_empty() {
            list.retain(|x| *x != c.printed);
        }
    }
    r.constraints.retain(|c| !c.is_empty());
    r
}

/// Order of the frame slots; later slots may refer to earlier ones by name.
const FRAME_SLOTS: [&str; 9] = ["beta1", "beta2", "beta3", "alpha_m", "eta", "eta11", "eta12", "eta21", "eta22"];

fn violation(f: &Family, message: impl Into<String>) -> CatalogError {
    CatalogError::ParamDomainViolation { family: f.id.to_string(), message: message.into() }
}

fn parse_tensor(f: &Family, name: &str, v: &str) -> Result<Tensor2, CatalogError> {
    expr::eval_tensor(v, &BTreeMap::new()).map_err(|e| violation(f, format!("parameter {name}: {e}")))
}

/// Parameter environment: checked values plus chosen options.
struct Env {
    values: BTreeMap<String, Value>,
    choices: BTreeMap<String, String>,
}

fn check_params(f: &Family, params: &Params) -> Result<Env, CatalogError> {
    for k in params.0.keys() {
        if f.param(k).is_none() {
            let names: Vec<&str> = f.params.iter().map(|p| p.name).collect();
            return Err(violation(f, format!("unknown parameter `{k}` (expected: {})", names.join(", "))));
        }
    }
    let mut env = Env { values: BTreeMap::new(), choices: BTreeMap::new() };
    for p in f.params {
        let v = params.get(p.name).ok_or_else(|| violation(f, format!("missing parameter {}", p.name)))?;
        match p.kind {
            Kind::Rational | Kind::NonZero => {
                let r = Rat::from_str(v).map_err(|e| violation(f, format!("parameter {}: {}", p.name, e.0)))?;
                if p.kind == Kind::NonZero && r.is_zero() {
                    return Err(violation(f, format!("requires {} ≠ 0", p.name)));
                }
                env.values.insert(p.name.to_string(), Value::Scalar(r));
            }
            Kind::Choice(options) => {
                if !options.contains(&v) {
                    return Err(violation(f, format!("{} must be one of {}", p.name, options.join(", "))));
                }
                env.choices.insert(p.name.to_string(), v.to_string());
            }
            Kind::Tensor | Kind::Poly => {
                let t = parse_tensor(f, p.name, v)?;
                if t.is_zero() {
                    return Err(violation(f, format!("requires {} ≠ 0", p.name)));
                }
                if p.kind == Kind::Poly && t.terms().any(|((_, b), _)| b != 0) {
                    return Err(violation(f, format!("parameter {} must have the form A(s)|1", p.name)));
                }
                env.values.insert(p.name.to_string(), Value::Tensor(t));
            }
        }
    }
    Ok(env)
}

fn eval_slot(f: &Family, mode: Mode, slot: &str, src: &str, env: &Env) -> Result<Tensor2, CatalogError> {
    expr::eval_tensor(src, &env.values).map_err(|e| match e {
        ExprError::DivisionByZero => violation(f, format!("slot {slot} divides by zero at these parameters")),
        other => CatalogError::PaperFormulaFails {
            family: f.id.to_string(),
            mode,
            message: format!("slot {slot} `{src}` cannot be evaluated: {other}"),
            report: None,
        },
    })
}

fn assemble(f: &Family, mode: Mode, r: &Resolved, env: &mut Env) -> Result<PseudoAlgebra, CatalogError> {
    let mut a = PseudoAlgebra::new(f.id, f.rank);
    match f.shape {
        Shape::Explicit(_) => {
            for (key, src) in &r.slots {
                let idx: Vec<usize> = key.split(',').map(|x| x.parse().expect("entry key")).collect();
                let t = eval_slot(f, mode, key, src, env)?;
                a.add(idx[0], idx[1], idx[2], &t);
            }
        }
        Shape::Frame(_) => {
            a.set(0, 0, 0, Tensor2::alpha());
            for base in FRAME_SLOTS {
                let mut value = None;
                if let Some((_, src)) = r.slots.iter().find(|(n, _)| n == base) {
                    let src = if src == families::ALPHA_CHOICE {
                        let option = env.choices.get("alpha_m").map(String::as_str).unwrap_or("");
                        families::alpha_choice(option).expect("checked option")
                    } else {
                        src.as_str()
                    };
                    value = Some(eval_slot(f, mode, base, src, env)?);
                }
                let t = value.unwrap_or_else(|| {
                    if base.starts_with("beta") {
                        Tensor2::ck(&Rat::zero(), &Rat::zero())
                    } else {
                        Tensor2::zero()
                    }
                });
                if let Some(i) = base.strip_prefix("beta").and_then(|d| d.parse::<usize>().ok()) {
                    if i >= f.rank {
                        continue;
                    }
                    for (sym, c) in [("lambda", t.coeff(1, 0)), ("kappa", t.coeff(0, 0))] {
                        let n = format!("{sym}{i}");
                        if f.param(&n).is_none() {
                            env.values.insert(n, Value::Scalar(c));
                        }
                    }
                    a.set_skew(0, i, i, t.clone());
                } else {
                    let (i, j, k) = match base {
                        "alpha_m" => (1, 1, 2),
                        "eta" => (1, 2, 2),
                        "eta11" => (1, 3, 1),
                        "eta12" => (1, 3, 2),
                        "eta21" => (2, 3, 1),
                        _ => (2, 3, 2),
                    };
                    if j >= f.rank {
                        if !t.is_zero() {
                            panic!("{}: slot {base} outside rank {}", f.id, f.rank);
                        }
                        continue;
                    }
                    a.set_skew(i, j, k, t.clone());
                }
                env.values.insert(base.to_string(), Value::Tensor(t));
            }
        }
    }
    for c in &r.constraints {
        let holds = Constraint { text: c }.holds(&env.values, &env.choices).map_err(|e| match e {
            ExprError::DivisionByZero => violation(f, format!("constraint `{c}` divides by zero")),
            other => CatalogError::PaperFormulaFails {
                family: f.id.to_string(),
                mode,
                message: format!("constraint `{c}` cannot be evaluated: {other}"),
                report: None,
            },
        })?;
        if !holds {
            return Err(violation(f, format!("requires {}", c.replace("!=", "≠"))));
        }
    }
    Ok(a)
}

fn expected(f: &Family, env: &Env) -> Classification {
    match f.expect {
        Expect::Lie => Classification::Lie,
        Expect::LeibnizNotLie => Classification::LeibnizNotLie,
        Expect::LieWhen(c) => {
            if (Constraint { text: c }).holds(&env.values, &env.choices).unwrap_or(false) {
                Classification::Lie
            } else {
                Classification::LeibnizNotLie
            }
        }
    }
}

/// Builds a family member in the given mode.
pub fn build_mode(id: &str, params: &Params, mode: Mode) -> Result<Built, CatalogError> {
    let f = family(id)?;
    let r = resolve(f, mode);
    let mut env = check_params(f, params)?;
    let mut a = assemble(f, mode, &r, &mut env)?;
    for (k, v) in &params.0 {
        a.set_param(k.clone(), v);
    }
    let report = a.check_all();
    let classification = if !report.jacobi_pass {
        Classification::NotLeibniz
    } else if report.skew_pass {
        Classification::Lie
    } else {
        Classification::LeibnizNotLie
    };
    let want = expected(f, &env);
    if classification != want {
        let mut message = format!("expected {want}, got {classification} at {params}");
        if let Some(c) = refutation(f.id).filter(|_| mode == Mode::Corrected) {
            message.push_str(&format!(" (the family is refuted: {})", c.reason));
        }
        return Err(CatalogError::PaperFormulaFails { family: f.id.to_string(), mode, message, report: Some(report) });
    }
    let corrections = if mode == Mode::Corrected { corrections_for(f.id) } else { Vec::new() };
    Ok(Built { algebra: a, classification, report, mode, corrections })
}

/// Builds a family member from the corrected tables.
pub fn build(id: &str, params: &Params) -> Result<PseudoAlgebra, CatalogError> {
    build_mode(id, params, Mode::Corrected).map(|b| b.algebra)
}

/// Builds a family member from the tables exactly as printed.
pub fn build_literal(id: &str, params: &Params) -> Result<PseudoAlgebra, CatalogError> {
    build_mode(id, params, Mode::Literal).map(|b| b.algebra)
}

/// A random rational with numerator and denominator of absolute value ≤ 9.
fn random_rat(rng: &mut impl Rng, nonzero: bool) -> Rat {
    loop {
        let n: i64 = rng.gen_range(-9..=9);
        let d: i64 = rng.gen_range(1..=9);
        if !(nonzero && n == 0) {
            return Rat::new(n, d);
        }
    }
}

fn random_tensor(rng: &mut impl Rng, poly: bool, antisymmetric: bool) -> Tensor2 {
    loop {
        let mut t = Tensor2::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let a = rng.gen_range(0..=2);
            let b = if poly { 0 } else { rng.gen_range(0..=2) };
            t.add_scaled(&Tensor2::basis(a, b), &random_rat(rng, true));
        }
        if antisymmetric {
            t = &t - &t.swap();
        }
        if !t.is_zero() {
            return t;
        }
    }
}

fn apply_pins(f: &Family, regime: &str, p: &mut Params) -> Result<(), ()> {
    for pin in regime.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, src) = pin.split_once('=').ok_or(())?;
        let name = name.trim();
        let src = src.trim();
        let spec = f.param(name).ok_or(())?;
        if let Kind::Choice(_) = spec.kind {
            p.0.insert(name.to_string(), src.to_string());
            continue;
        }
        let mut env = BTreeMap::new();
        for (k, v) in &p.0 {
            if let Some(s) = f.param(k) {
                if matches!(s.kind, Kind::Rational | Kind::NonZero) {
                    env.insert(k.clone(), Value::Scalar(Rat::from_str(v).map_err(|_| ())?));
                }
            }
        }
        let v = expr::eval_scalar(src, &env).map_err(|_| ())?;
        p.0.insert(name.to_string(), v.to_string());
    }
    Ok(())
}

/// Draws parameters satisfying the family's constraints (in `mode`), using
/// one of its sampling regimes.  Gives up after a fixed number of attempts.
pub fn sample(f: &Family, mode: Mode, rng: &mut impl Rng) -> Option<Params> {
    let r = resolve(f, mode);
    for _ in 0..2000 {
        let mut p = Params::new();
        for spec in f.params {
            let v = match spec.kind {
                Kind::Rational => random_rat(rng, false).to_string(),
                Kind::NonZero => random_rat(rng, true).to_string(),
                Kind::Choice(options) => options[rng.gen_range(0..options.len())].to_string(),
                Kind::Tensor => {
                    let skew = rng.gen_bool(0.5);
                    random_tensor(rng, false, skew).to_string_expr()
                }
                Kind::Poly => random_tensor(rng, true, false).to_string_expr(),
            };
            p.0.insert(spec.name.to_string(), v);
        }
        if !r.regimes.is_empty() {
            let regime = &r.regimes[rng.gen_range(0..r.regimes.len())];
            if apply_pins(f, regime, &mut p).is_err() {
                continue;
            }
        }
        let Ok(mut env) = check_params(f, &p) else { continue };
        match assemble(f, mode, &r, &mut env) {
            Ok(_) => return Some(p),
            Err(CatalogError::ParamDomainViolation { .. }) => continue,
            Err(_) => return Some(p),
        }
    }
    None
}

/// Writes a tensor in the expression syntax accepted by [`expr`].
trait ToExpr {
    fn to_string_expr(&self) -> String;
}

impl ToExpr for Tensor2 {
    fn to_string_expr(&self) -> String {
        let parts: Vec<String> = self
            .terms()
            .map(|((a, b), c)| {
                let m = |d: u32| match d {
                    0 => "1".to_string(),
                    1 => "s".to_string(),
                    d => format!("s({d})"),
                };
                format!("({c})*{}|{}", m(a), m(b))
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Outcome of one random draw.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Draw {
    pub params: Params,
    pub classification: Option<Classification>,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Verification of one family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyVerification {
    pub id: String,
    pub mode: Mode,
    pub pass: bool,
    /// The corrections mark the family as refuted; `pass` then means that
    /// no draw produced a member of the asserted type.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub refuted: bool,
    pub draws: Vec<Draw>,
    pub corrections: Vec<Correction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub draws_per_family: usize,
    pub all_pass: bool,
    pub families: Vec<FamilyVerification>,
}

/// Builds `draws` random members of one family and checks each.
pub fn verify_family(f: &Family, mode: Mode, draws: usize, seed: u64) -> FamilyVerification {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fxhash(f.id));
    let corrections =
        if mode == Mode::Corrected { corrections_for(f.id).into_iter().cloned().collect() } else { Vec::new() };
    let refuted = mode == Mode::Corrected && refutation(f.id).is_some();
    let mut out = FamilyVerification {
        id: f.id.to_string(),
        mode,
        pass: true,
        refuted,
        draws: Vec::new(),
        corrections,
        error: None,
    };
    for _ in 0..draws {
        let Some(p) = sample(f, mode, &mut rng) else {
            out.pass = refuted;
            out.error = Some("no parameters satisfying the constraints were found".into());
            break;
        };
        let d = match build_mode(f.id, &p, mode) {
            Ok(b) => Draw { params: p, classification: Some(b.classification), ok: true, error: None },
            Err(e) => {
                let classification = match &e {
                    CatalogError::PaperFormulaFails { report: Some(r), .. } => Some(if !r.jacobi_pass {
                        Classification::NotLeibniz
                    } else if r.skew_pass {
                        Classification::Lie
                    } else {
                        Classification::LeibnizNotLie
                    }),
                    _ => None,
                };
                Draw { params: p, classification, ok: false, error: Some(e.to_string()) }
            }
        };
        // A refuted family passes when every draw fails to be of its type.
        out.pass &= d.ok != refuted;
        out.draws.push(d);
    }
    out
}

/// Verifies every family in `mode`, in parallel; results are sorted by id.
pub fn verify_all_mode(mode: Mode, draws: usize, seed: u64) -> VerifyReport {
    use rayon::prelude::*;
    let families: Vec<FamilyVerification> =
        list_families().par_iter().map(|f| verify_family(f, mode, draws, seed)).collect();
    VerifyReport { seed, draws_per_family: draws, all_pass: families.iter().all(|f| f.pass), families }
}

/// Verifies every corrected family at `draws` random parameter points.
pub fn verify_all(draws: usize, seed: u64) -> VerifyReport {
    verify_all_mode(Mode::Corrected, draws, seed)
}

/// Stable 64-bit FNV-1a hash, used to derive per-family seeds.
fn fxhash(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

fn kind_name(k: Kind) -> String {
    match k {
        Kind::Rational => "rational".into(),
        Kind::NonZero => "nonzero rational".into(),
        Kind::Choice(o) => format!("one of {}", o.join(", ")),
        Kind::Tensor => "nonzero H⊗H expression".into(),
        Kind::Poly => "nonzero A(s), written `A(s)|1`".into(),
    }
}

/// Markdown reference of all family ids and parameters.
pub fn reference_markdown() -> String {
    let mut s = String::from(
        "# Family reference\n\n\
         Generated by `pseudoalg catalog list --markdown`; do not edit by hand.\n\
         Family ids and parameter names are stable.  Values are rationals such as `-3/2`,\n\
         option names, or tensor expressions such as `s(2)|1 - 1|s(2)`.\n",
    );
    for f in list_families() {
        s.push_str(&format!("\n## `{}` — {}\n\nRank {}. {}.\n\n", f.id, f.title, f.rank, f.source));
        if f.params.is_empty() {
            s.push_str("No parameters.\n");
        } else {
            s.push_str("| parameter | domain |\n|---|---|\n");
            for p in f.params {
                s.push_str(&format!("| `{}` | {} |\n", p.name, kind_name(p.kind)));
            }
        }
        let r = resolve(f, Mode::Corrected);
        if !r.constraints.is_empty() {
            s.push_str("\nConstraints:\n\n");
            for c in &r.constraints {
                s.push_str(&format!("- `{c}`\n"));
            }
        }
        let cs = corrections_for(f.id);
        if !cs.is_empty() {
            s.push_str("\nCorrections applied by `build` (absent from `build_literal`):\n\n");
            for c in cs {
                s.push_str(&format!("- `{}`: {}\n", c.slot, c.reason));
            }
        }
        if !f.note.is_empty() {
            s.push_str(&format!("\n{}\n", f.note));
        }
    }
    s
}

#[cfg(test)]
mod tests;
