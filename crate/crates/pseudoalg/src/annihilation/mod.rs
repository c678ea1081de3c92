//! Annihilation Lie algebras over Laurent currents.
//!
//! For the H-differential algebra `A = k[t, t⁻¹]` with `s` acting as `d/dt`,
//! `A ⊗_H L` is a Lie algebra with
//! `[t^p ⊗ e_i, t^q ⊗ e_j] = Σ c_ab · C(p,a) · C(q,b) · t^{p+q−a−b} ⊗ e_k`
//! for `γ_ij^k = Σ c_ab s^(a)⊗s^(b)`, where `C(p,a) = p(p−1)…(p−a+1)/a!`
//! (divided powers act as `d^a/a!`).  Every bracket of two currents is a
//! finite sum, so windowed verification is exact.
//!
//! Currents are labelled as in the Schrödinger–Virasoro literature:
//! `L_n = t^{n+1}⊗e0`, `Y_{p+ρ} = t^{p+1}⊗e1`, `M_{k+2ρ} = t^{k+1}⊗e2`,
//! `N_m = t^{m+1}⊗e3`.  The parameter `ρ` only enters through this
//! labelling ([`RhoShift`]); the generic construction is `ρ`-free.

mod closed;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::PseudoAlgebra;
use crate::catalog::{self, CatalogError, Mode, Params};
use crate::rat::{falling_binomial, Rat};

pub use closed::{closed_form, closed_forms, ClosedForm};

/// Largest |index| accepted in a window.
pub const MAX_WINDOW: i64 = 12;

/// The current `t^exponent ⊗_H e_component`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Current {
    pub exponent: i64,
    pub component: usize,
}

impl Current {
    pub fn new(exponent: i64, component: usize) -> Current {
        Current { exponent, component }
    }
}

impl fmt::Display for Current {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{}⊗e{}", self.exponent, self.component)
    }
}

/// A finite linear combination of currents.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Combination(BTreeMap<Current, Rat>);

impl Combination {
    pub fn zero() -> Combination {
        Combination::default()
    }

    pub fn single(c: Current) -> Combination {
        let mut out = Combination::zero();
        out.add_term(c, Rat::one());
        out
    }

    pub fn add_term(&mut self, c: Current, v: Rat) {
        if v.is_zero() {
            return;
        }
        let e = self.0.entry(c).or_insert_with(Rat::zero);
        *e += &v;
        if e.is_zero() {
            self.0.remove(&c);
        }
    }

    pub fn add_scaled(&mut self, other: &Combination, k: &Rat) {
        for (c, v) in &other.0 {
            self.add_term(*c, v * k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, c: &Current) -> Rat {
        self.0.get(c).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Current, &Rat)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(|(c, v)| format!("({v}) {c}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `[t^p⊗e_i, t^q⊗e_j]` in the annihilation algebra of `a`.
pub fn generic_bracket(a: &PseudoAlgebra, x: Current, y: Current) -> Combination {
    let mut out = Combination::zero();
    for k in 0..a.rank() {
        for ((i, j), c) in a.get(x.component, y.component, k).terms() {
            let v = c * &falling_binomial(x.exponent, i) * falling_binomial(y.exponent, j);
            out.add_term(Current::new(x.exponent + y.exponent - i as i64 - j as i64, k), v);
        }
    }
    out
}

/// Bilinear extension of [`generic_bracket`].
pub fn bracket(a: &PseudoAlgebra, x: &Combination, y: &Combination) -> Combination {
    let mut out = Combination::zero();
    for (cx, vx) in x.terms() {
        for (cy, vy) in y.terms() {
            out.add_scaled(&generic_bracket(a, *cx, *cy), &(vx * vy));
        }
    }
    out
}

/// A current in Schrödinger–Virasoro labelling: generator `component`
/// (`L`, `Y`, `M`, `N`, then `e4`, …) with index `index`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Labeled {
    pub component: usize,
    pub index: Rat,
}

impl Labeled {
    pub fn new(component: usize, index: Rat) -> Labeled {
        Labeled { component, index }
    }
}

/// Display name of a generator.
pub fn generator_name(component: usize) -> String {
    match component {
        0 => "L".into(),
        1 => "Y".into(),
        2 => "M".into(),
        3 => "N".into(),
        k => format!("e{k}"),
    }
}

impl fmt::Display for Labeled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{{{}}}", generator_name(self.component), self.index)
    }
}

/// A linear combination of labelled currents.
pub type LabeledCombination = BTreeMap<Labeled, Rat>;

pub fn format_labeled(c: &LabeledCombination) -> String {
    let parts: Vec<String> = c.iter().filter(|(_, v)| !v.is_zero()).map(|(l, v)| format!("({v}) {l}")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Relabelling between exponents and indices: component `k` carries index
/// `exponent − 1 + weight_k·ρ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoShift {
    pub rho: Rat,
    pub weights: Vec<i64>,
}

impl RhoShift {
    /// The standard weights: `L` and `N` unshifted, `Y` in `ρ+Z`, `M` in `2ρ+Z`.
    pub fn standard(rho: Rat, rank: usize) -> RhoShift {
        let weights = (0..rank).map(|k| if k == 1 || k == 2 { k as i64 } else { 0 }).collect();
        RhoShift { rho, weights }
    }

    fn offset(&self, component: usize) -> Rat {
        &self.rho * &Rat::int(self.weights.get(component).copied().unwrap_or(0))
    }

    pub fn label(&self, c: Current) -> Labeled {
        Labeled::new(c.component, &Rat::int(c.exponent - 1) + &self.offset(c.component))
    }

    /// The current with this label, if the index lies on its lattice.
    pub fn current(&self, l: &Labeled) -> Option<Current> {
        let e = &(&l.index - &self.offset(l.component)) + &Rat::one();
        e.to_i64().filter(|_| e.is_integer()).map(|e| Current::new(e, l.component))
    }

    pub fn label_combination(&self, c: &Combination) -> LabeledCombination {
        c.terms().map(|(k, v)| (self.label(*k), v.clone())).collect()
    }
}

/// An index window `[lo, hi]` applied to every component (or to a subset,
/// e.g. [`Window::schrodinger`]).  Indices are the integer parts `n`, `p̃`,
/// `k̃`, `m` of the labels, i.e. `exponent − 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<usize>>,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Window {
        Window { lo, hi, components: None }
    }

    /// Restricts to `Y` and `M` currents: the Schrödinger subalgebra of the
    /// families with `[Y, M] = [M, M] = 0`.
    pub fn schrodinger(lo: i64, hi: i64) -> Window {
        Window { lo, hi, components: Some(vec![1, 2]) }
    }

    fn validate(&self) -> Result<(), AnnihilationError> {
        if self.lo > self.hi || self.lo.abs() > MAX_WINDOW || self.hi.abs() > MAX_WINDOW {
            return Err(AnnihilationError::BadWindow { lo: self.lo, hi: self.hi });
        }
        Ok(())
    }

    /// The basis currents of a rank-`rank` algebra inside the window.
    pub fn currents(&self, rank: usize) -> Vec<Current> {
        let comps: Vec<usize> = match &self.components {
            Some(c) => c.iter().copied().filter(|&k| k < rank).collect(),
            None => (0..rank).collect(),
        };
        comps.iter().flat_map(|&k| (self.lo..=self.hi).map(move |i| Current::new(i + 1, k))).collect()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum AnnihilationError {
    #[error("no printed closed form for `{0}`")]
    UnknownClosedForm(String),
    #[error("window [{lo}, {hi}] must satisfy lo ≤ hi and |index| ≤ {MAX_WINDOW}")]
    BadWindow { lo: i64, hi: i64 },
    #[error("{family}: the closed form is stated at {name} = {expected}, got {got}")]
    Normalization { family: String, name: String, expected: String, got: String },
    #[error("{family}: parameter {name}: {message}")]
    BadParameter { family: String, name: String, message: String },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// Failure record for one pair or triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowFailure {
    pub currents: Vec<Labeled>,
    pub residual: String,
}

/// Result of [`window_jacobi`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowReport {
    pub algebra: String,
    pub rho: Rat,
    pub window: Window,
    pub currents: usize,
    pub pairs_checked: usize,
    pub triples_checked: usize,
    pub antisymmetry_failures: usize,
    pub jacobi_failures: usize,
    /// The first failures, in index order.
    pub examples: Vec<WindowFailure>,
    pub pass: bool,
}

const MAX_EXAMPLES: usize = 20;

/// Checks antisymmetry and the Jacobi identity
/// `[x,[y,z]] = [[x,y],z] + [y,[x,z]]` for all basis currents in the window.
pub fn window_jacobi(a: &PseudoAlgebra, rho: &Rat, window: &Window) -> Result<WindowReport, AnnihilationError> {
    window.validate()?;
    let shift = RhoShift::standard(rho.clone(), a.rank());
    let basis = window.currents(a.rank());
    let basis: &[Current] = &basis;
    let label = |cs: &[Current]| cs.iter().map(|c| shift.label(*c)).collect::<Vec<_>>();
    let show = |r: &Combination| format_labeled(&shift.label_combination(r));

    let mut examples = Vec::new();
    let skew: Vec<(Vec<Current>, Combination)> = basis
        .par_iter()
        .flat_map_iter(|&x| basis.iter().map(move |&y| (x, y)))
        .filter_map(|(x, y)| {
            let mut r = generic_bracket(a, x, y);
            r.add_scaled(&generic_bracket(a, y, x), &Rat::one());
            (!r.is_zero()).then(|| (vec![x, y], r))
        })
        .collect();
    for (cs, r) in skew.iter().take(MAX_EXAMPLES) {
        examples.push(WindowFailure { currents: label(cs), residual: show(r) });
    }

    let triples: Vec<(Vec<Current>, Combination)> = basis
        .par_iter()
        .flat_map_iter(|&x| basis.iter().flat_map(move |&y| basis.iter().map(move |&z| (x, y, z))))
        .filter_map(|(x, y, z)| {
            let (cx, cy, cz) = (Combination::single(x), Combination::single(y), Combination::single(z));
            let mut r = bracket(a, &cx, &generic_bracket(a, y, z));
            r.add_scaled(&bracket(a, &generic_bracket(a, x, y), &cz), &-Rat::one());
            r.add_scaled(&bracket(a, &cy, &generic_bracket(a, x, z)), &-Rat::one());
            (!r.is_zero()).then(|| (vec![x, y, z], r))
        })
        .collect();
    for (cs, r) in triples.iter().take(MAX_EXAMPLES.saturating_sub(examples.len())) {
        examples.push(WindowFailure { currents: label(cs), residual: show(r) });
    }

    let n = basis.len();
    Ok(WindowReport {
        algebra: a.name().to_string(),
        rho: rho.clone(),
        window: window.clone(),
        currents: n,
        pairs_checked: n * n,
        triples_checked: n * n * n,
        antisymmetry_failures: skew.len(),
        jacobi_failures: triples.len(),
        examples,
        pass: skew.is_empty() && triples.is_empty(),
    })
}

/// One disagreement between the generic and the closed-form bracket.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub x: Labeled,
    pub y: Labeled,
    pub generic: String,
    pub closed_form: String,
}

/// Result of [`compare`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub family: String,
    /// Catalog family whose annihilation algebra the display is compared to.
    pub target: String,
    pub mode: Mode,
    pub params: Params,
    pub rho: Rat,
    pub window: Window,
    pub pairs_checked: usize,
    pub mismatch_count: usize,
    /// The first mismatches, in index order.
    pub mismatches: Vec<Mismatch>,
    pub pass: bool,
}

fn merged_params(cf: &ClosedForm, params: &Params) -> Result<Params, AnnihilationError> {
    let mut p = params.clone();
    for (name, value) in cf.fixed {
        match params.get(name) {
            Some(v) if v.parse::<Rat>().ok() != value.parse::<Rat>().ok() => {
                return Err(AnnihilationError::Normalization {
                    family: cf.family.into(),
                    name: (*name).into(),
                    expected: (*value).into(),
                    got: v.into(),
                })
            }
            _ => {
                p.0.insert((*name).into(), (*value).into());
            }
        }
    }
    Ok(p)
}

/// The catalog instance a closed-form display describes: `params` with the
/// display's normalization filled in (returned, including display-only
/// parameters), built from the corrected catalog.
pub fn display_instance(
    family: &str,
    mode: Mode,
    params: &Params,
) -> Result<(PseudoAlgebra, Params), AnnihilationError> {
    let cf = closed_form(family).ok_or_else(|| AnnihilationError::UnknownClosedForm(family.into()))?;
    let merged = merged_params(cf, params)?;
    // Display-only parameters (e.g. κ1 in the printed e15 display) are not
    // passed to the catalog.
    let target = cf.target(mode);
    let fam = catalog::family(target)?;
    let build_params =
        Params(merged.0.iter().filter(|(k, _)| fam.param(k).is_some()).map(|(k, v)| (k.clone(), v.clone())).collect());
    let a = catalog::build_mode(target, &build_params, Mode::Corrected)?.algebra;
    Ok((a, merged))
}

/// Evaluates the closed-form bracket of `family` (as printed in `Literal`
/// mode, as corrected otherwise) on two labelled currents.
pub fn closed_form_bracket(
    family: &str,
    mode: Mode,
    params: &Params,
    rho: &Rat,
    x: &Labeled,
    y: &Labeled,
) -> Result<LabeledCombination, AnnihilationError> {
    let cf = closed_form(family).ok_or_else(|| AnnihilationError::UnknownClosedForm(family.into()))?;
    let vals = cf.values(params)?;
    Ok(cf.eval(mode, &vals, rho, x, y))
}

/// Compares the generic construction with the closed form of `family` on
/// every pair of basis currents in the window.
pub fn compare(
    family: &str,
    mode: Mode,
    params: &Params,
    rho: &Rat,
    window: &Window,
) -> Result<CompareReport, AnnihilationError> {
    window.validate()?;
    let cf = closed_form(family).ok_or_else(|| AnnihilationError::UnknownClosedForm(family.into()))?;
    let target = cf.target(mode);
    let (a, merged) = display_instance(family, mode, params)?;
    let vals = cf.values(&merged)?;
    let shift = RhoShift::standard(rho.clone(), a.rank());
    let basis = window.currents(a.rank());
    let basis: &[Current] = &basis;

    let mismatches: Vec<Mismatch> = basis
        .par_iter()
        .flat_map_iter(|&x| basis.iter().map(move |&y| (x, y)))
        .filter_map(|(x, y)| {
            let (lx, ly) = (shift.label(x), shift.label(y));
            let generic = generic_bracket(&a, x, y);
            let printed = cf.eval(mode, &vals, rho, &lx, &ly);
            let mut as_currents = Some(Combination::zero());
            for (l, v) in &printed {
                match (shift.current(l), as_currents.as_mut()) {
                    (Some(c), Some(acc)) => acc.add_term(c, v.clone()),
                    _ if v.is_zero() => {}
                    _ => as_currents = None,
                }
            }
            (as_currents.as_ref() != Some(&generic)).then(|| Mismatch {
                x: lx,
                y: ly,
                generic: format_labeled(&shift.label_combination(&generic)),
                closed_form: format_labeled(&printed),
            })
        })
        .collect();
    let n = basis.len();
    Ok(CompareReport {
        family: family.into(),
        target: target.into(),
        mode,
        params: merged,
        rho: rho.clone(),
        window: window.clone(),
        pairs_checked: n * n,
        mismatch_count: mismatches.len(),
        pass: mismatches.is_empty(),
        mismatches: mismatches.into_iter().take(MAX_EXAMPLES).collect(),
    })
}

/// One term of an exported bracket.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableTerm {
    pub coeff: Rat,
    pub component: usize,
    pub exponent: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub x: Current,
    pub y: Current,
    pub terms: Vec<TableTerm>,
}

/// All nonzero brackets of basis currents in a window, for export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurrentTable {
    pub family: String,
    pub params: Params,
    pub rho: Rat,
    pub window: Window,
    pub brackets: Vec<TableEntry>,
}

pub fn current_table(
    a: &PseudoAlgebra,
    params: &Params,
    rho: &Rat,
    window: &Window,
) -> Result<CurrentTable, AnnihilationError> {
    window.validate()?;
    let basis = window.currents(a.rank());
    let brackets = basis
        .iter()
        .flat_map(|&x| basis.iter().map(move |&y| (x, y)))
        .filter_map(|(x, y)| {
            let r = generic_bracket(a, x, y);
            let terms: Vec<TableTerm> = r
                .terms()
                .map(|(c, v)| TableTerm { coeff: v.clone(), component: c.component, exponent: c.exponent })
                .collect();
            (!terms.is_empty()).then_some(TableEntry { x, y, terms })
        })
        .collect();
    Ok(CurrentTable {
        family: a.name().to_string(),
        params: params.clone(),
        rho: rho.clone(),
        window: window.clone(),
        brackets,
    })
}
