//! The λ-bracket presentation of a pseudoalgebra over H = k[s].
//!
//! Every `γ ⊗_H e_k` has a unique canonical form `Σ_d (s^(d)⊗1)Δ(h_d) ⊗_H e_k`
//! (see [`normal_form`]); reading the first-slot divided power `s^(d)` as
//! `λ^(d) = λ^d/d!` and `h_d` as a polynomial in `∂` gives
//! `[e_i λ e_j] = Σ λ^(d) h_d(∂) e_k`.
//!
//! Two sign conventions are supported.  [`SignConvention::Canonical`] reads
//! `λ` literally as the first slot; there `[∂a λ b] = λ[a λ b]`.
//! [`SignConvention::PaperReverse`] substitutes `λ ↦ −λ`, which is the usual
//! conformal-algebra convention `[∂a λ b] = −λ[a λ b]`,
//! `[a λ ∂b] = (λ + ∂)[a λ b]`.  The convention is stored in every
//! [`LambdaBracket`] and printed with it.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::PseudoAlgebra;
use crate::hopf::HPoly;
use crate::rat::{factorial, Rat};
use crate::tensor::{normal_form, Tensor2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignConvention {
    /// `λ` is the first tensor slot.
    #[default]
    Canonical,
    /// `λ ↦ −λ` relative to [`SignConvention::Canonical`].
    PaperReverse,
}

impl SignConvention {
    fn sign(self, degree: u32) -> Rat {
        match self {
            SignConvention::PaperReverse if degree % 2 == 1 => -Rat::one(),
            _ => Rat::one(),
        }
    }
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignConvention::Canonical => "canonical",
            SignConvention::PaperReverse => "paper-reverse",
        })
    }
}

impl std::str::FromStr for SignConvention {
    type Err = String;
    fn from_str(s: &str) -> Result<SignConvention, String> {
        match s {
            "canonical" => Ok(SignConvention::Canonical),
            "paper-reverse" => Ok(SignConvention::PaperReverse),
            _ => Err(format!("unknown sign convention `{s}` (expected canonical or paper-reverse)")),
        }
    }
}

/// `λ^(degree) · action(∂) · e_target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaTerm {
    pub degree: u32,
    pub action: HPoly,
    pub target: usize,
}

/// `[e_i λ e_j]`, ordered by `(target, degree)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<LambdaTerm>,
}

/// A pseudoalgebra in λ-bracket form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaBracket {
    pub name: String,
    pub rank: usize,
    pub convention: SignConvention,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
    pub entries: Vec<LambdaEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LambdaError {
    #[error("[e{i} λ e{j}]: index out of range for rank {rank}")]
    IndexOutOfRange { i: usize, j: usize, rank: usize },
    #[error("[e{i} λ e{j}]: {message}")]
    NotCanonical { i: usize, j: usize, message: String },
}

/// The λ-bracket of `a` in the given convention.
pub fn to_lambda_with(a: &PseudoAlgebra, convention: SignConvention) -> LambdaBracket {
    let n = a.rank();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let terms: Vec<LambdaTerm> = (0..n)
                .flat_map(|k| {
                    normal_form(a.get(i, j, k))
                        .terms()
                        .iter()
                        .map(|(d, h)| LambdaTerm { degree: *d, action: h.scale(&convention.sign(*d)), target: k })
                        .collect::<Vec<_>>()
                })
                .collect();
            if !terms.is_empty() {
                entries.push(LambdaEntry { i, j, terms });
            }
        }
    }
    LambdaBracket { name: a.name().to_string(), rank: n, convention, params: a.params().clone(), entries }
}

/// [`to_lambda_with`] in the canonical convention.
pub fn to_lambda(a: &PseudoAlgebra) -> LambdaBracket {
    to_lambda_with(a, SignConvention::Canonical)
}

impl LambdaBracket {
    /// Checks the canonical-form invariants: indices in range, entries
    /// strictly ordered by `(i, j)`, terms strictly ordered by
    /// `(target, degree)`, nonzero actions.
    pub fn validate(&self) -> Result<(), LambdaError> {
        let mut last: Option<(usize, usize)> = None;
        for e in &self.entries {
            let (i, j) = (e.i, e.j);
            if i >= self.rank || j >= self.rank || e.terms.iter().any(|t| t.target >= self.rank) {
                return Err(LambdaError::IndexOutOfRange { i, j, rank: self.rank });
            }
            let bad = |message: &str| LambdaError::NotCanonical { i, j, message: message.into() };
            if last.is_some_and(|l| l >= (i, j)) {
                return Err(bad("entries must be listed once, in index order"));
            }
            last = Some((i, j));
            if e.terms.is_empty() {
                return Err(bad("empty entry"));
            }
            for w in e.terms.windows(2) {
                if (w[0].target, w[0].degree) >= (w[1].target, w[1].degree) {
                    return Err(bad("λ-degrees must increase strictly per target"));
                }
            }
            if e.terms.iter().any(|t| t.action.is_zero()) {
                return Err(bad("zero action"));
            }
        }
        Ok(())
    }

    /// Re-expresses the bracket in another convention.
    pub fn with_convention(&self, convention: SignConvention) -> LambdaBracket {
        let mut out = self.clone();
        if convention != self.convention {
            for e in &mut out.entries {
                for t in &mut e.terms {
                    t.action = t.action.scale(&SignConvention::PaperReverse.sign(t.degree));
                }
            }
        }
        out.convention = convention;
        out
    }

    /// The terms of `[e_i λ e_j]` (empty if zero).
    pub fn entry(&self, i: usize, j: usize) -> &[LambdaTerm] {
        self.entries.iter().find(|e| e.i == i && e.j == j).map(|e| e.terms.as_slice()).unwrap_or(&[])
    }
}

/// The pseudoalgebra with the given λ-bracket (inverse of [`to_lambda_with`]).
pub fn from_lambda(l: &LambdaBracket) -> Result<PseudoAlgebra, LambdaError> {
    l.validate()?;
    let mut a = PseudoAlgebra::new(l.name.clone(), l.rank);
    for (k, v) in &l.params {
        a.set_param(k.clone(), v);
    }
    for e in &l.entries {
        for t in &e.terms {
            let h = t.action.scale(&l.convention.sign(t.degree));
            a.add(e.i, e.j, t.target, &Tensor2::basis(t.degree, 0).mul(&h.coproduct()));
        }
    }
    Ok(a)
}

/// Character set of the pretty printer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Charset {
    #[default]
    Utf8,
    Ascii,
}

fn monomial(d: u32, m: u32, cs: Charset) -> String {
    let (lam, del, mul) = match cs {
        Charset::Utf8 => ("λ", "∂", ""),
        Charset::Ascii => ("lam", "d", "*"),
    };
    let pow = |x: &str, e: u32| match e {
        0 => String::new(),
        1 => x.to_string(),
        e => format!("{x}^{e}"),
    };
    [pow(lam, d), pow(del, m)].into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join(mul)
}

/// The coefficient of `e_target` as a polynomial in `λ` and `∂`
/// (ordinary powers), highest `λ`-degree first.
fn polynomial(terms: &[&LambdaTerm], cs: Charset) -> (String, usize) {
    let mut coeffs: BTreeMap<(u32, u32), Rat> = BTreeMap::new();
    for t in terms {
        for (m, c) in t.action.terms() {
            let v = c * &Rat::from_bigints(1.into(), factorial(t.degree as u64) * factorial(m as u64));
            *coeffs.entry((t.degree, m)).or_insert_with(Rat::zero) += &v;
        }
    }
    let mut out = String::new();
    let mut count = 0;
    for ((d, m), c) in coeffs.iter().rev().filter(|(_, c)| !c.is_zero()) {
        let mono = monomial(*d, *m, cs);
        let abs = c.abs();
        let mag = match (abs.is_one(), mono.is_empty(), abs.is_integer()) {
            (true, false, _) => mono,
            (_, true, _) => abs.to_string(),
            (false, false, true) => format!("{abs}{}{mono}", if cs == Charset::Ascii { "*" } else { "" }),
            (false, false, false) => format!("({abs}){}{mono}", if cs == Charset::Ascii { "*" } else { "" }),
        };
        match (count, c.is_negative()) {
            (0, true) => out.push_str(&format!("-{mag}")),
            (0, false) => out.push_str(&mag),
            (_, true) => out.push_str(&format!(" - {mag}")),
            (_, false) => out.push_str(&format!(" + {mag}")),
        }
        count += 1;
    }
    (out, count)
}

/// One line per nonzero bracket, e.g. `[e0 _λ e0] = (2λ - ∂) e0`, preceded
/// by a line naming the convention.
pub fn format_lambda(l: &LambdaBracket, cs: Charset) -> String {
    let lam = if cs == Charset::Ascii { "lam" } else { "λ" };
    let mut out = format!("# {}: λ-brackets, convention {}\n", l.name, l.convention);
    if cs == Charset::Ascii {
        out = format!("# {}: lambda-brackets, convention {}\n", l.name, l.convention);
    }
    for e in &l.entries {
        let mut by_target: BTreeMap<usize, Vec<&LambdaTerm>> = BTreeMap::new();
        for t in &e.terms {
            by_target.entry(t.target).or_default().push(t);
        }
        let parts: Vec<String> = by_target
            .iter()
            .filter_map(|(k, ts)| {
                let (p, n) = polynomial(ts, cs);
                match n {
                    0 => None,
                    1 if p == "1" => Some(format!("e{k}")),
                    1 if p == "-1" => Some(format!("-e{k}")),
                    1 => Some(format!("{p} e{k}")),
                    _ => Some(format!("({p}) e{k}")),
                }
            })
            .collect();
        if !parts.is_empty() {
            out.push_str(&format!("[e{} _{lam} e{}] = {}\n", e.i, e.j, parts.join(" + ").replace("+ -", "- ")));
        }
    }
    out
}

impl fmt::Display for LambdaBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_lambda(self, Charset::Utf8))
    }
}

#[cfg(test)]
mod tests;
