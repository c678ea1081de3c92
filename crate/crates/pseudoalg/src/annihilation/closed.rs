//! Printed closed-form structure constants of the annihilation algebras of
//! the m-type families B–E and of e14/e15, in Schrödinger–Virasoro
//! labelling, together with their corrected versions.
//!
//! Each display lists the brackets `[X_a, Z_b]` with `X` before `Z` in the
//! order `L, Y, M, N`; the reversed brackets follow by antisymmetry and
//! unlisted ones vanish.

use std::collections::BTreeMap;

use super::{AnnihilationError, Labeled, LabeledCombination};
use crate::catalog::{Mode, Params};
use crate::rat::Rat;

/// Parameter values seen by a display; absent names read as 0.
pub struct Values(BTreeMap<&'static str, Rat>);

impl Values {
    fn get(&self, name: &str) -> Rat {
        self.0.get(name).cloned().unwrap_or_else(Rat::zero)
    }
}

type Terms = Vec<(Rat, usize, Rat)>;
type Eval = fn(&Values, &Rat, usize, &Rat, usize, &Rat) -> Terms;

/// A printed family of annihilation-algebra brackets.
pub struct ClosedForm {
    pub family: &'static str,
    /// Normalization the display is stated at; merged into the parameters.
    pub fixed: &'static [(&'static str, &'static str)],
    /// Parameters the display reads.
    pub params: &'static [&'static str],
    /// What the corrected display changes, one entry per bracket.
    pub corrections: &'static [&'static str],
    literal: Eval,
    corrected: Eval,
}

impl ClosedForm {
    /// Reads the display's parameters (absent ones as 0).
    pub fn values(&self, params: &Params) -> Result<Values, AnnihilationError> {
        let mut out = BTreeMap::new();
        for name in self.params {
            if let Some(v) = params.get(name) {
                let r = v.parse::<Rat>().map_err(|e| AnnihilationError::BadParameter {
                    family: self.family.into(),
                    name: (*name).into(),
                    message: e.to_string(),
                })?;
                out.insert(*name, r);
            }
        }
        Ok(Values(out))
    }

    /// Catalog family the display describes.
    pub fn target(&self, _mode: Mode) -> &'static str {
        self.family
    }

    pub fn eval(&self, mode: Mode, v: &Values, rho: &Rat, x: &Labeled, y: &Labeled) -> LabeledCombination {
        let f = match mode {
            Mode::Literal => self.literal,
            Mode::Corrected => self.corrected,
        };
        let (terms, sign) = if x.component <= y.component {
            (f(v, rho, x.component, &x.index, y.component, &y.index), Rat::one())
        } else {
            (f(v, rho, y.component, &y.index, x.component, &x.index), -Rat::one())
        };
        let mut out = LabeledCombination::new();
        for (c, k, i) in terms {
            let e = out.entry(Labeled::new(k, i)).or_insert_with(Rat::zero);
            *e += &(&c * &sign);
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

pub fn closed_forms() -> &'static [ClosedForm] {
    CLOSED_FORMS
}

pub fn closed_form(family: &str) -> Option<&'static ClosedForm> {
    CLOSED_FORMS.iter().find(|c| c.family == family)
}

fn q(n: i64) -> Rat {
    Rat::int(n)
}

fn fr(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

const L: usize = 0;
const Y: usize = 1;
const M: usize = 2;
const N: usize = 3;

/// `[L_n, L_n'] = (n − n')L_{n+n'}`.
fn witt(n: &Rat, n2: &Rat) -> Terms {
    vec![(n - n2, L, n + n2)]
}

/// `[Y_p, Y_p'] = sign·(p − p')M_{p+p'}`.
fn yy_linear(p: &Rat, p2: &Rat, sign: i64) -> Terms {
    vec![(q(sign) * (p - p2), M, p + p2)]
}

/// `[L_n, Y_p] = (λ1(n+1) − p + ρ − 1)Y_{n+p} + κ1 Y_{n+p+1}` and
/// `[L_n, M_k] = ((2λ1−1)(n+1) − k + 2ρ − 1)M_{n+k} + 2κ1 M_{n+k+1}`.
fn conformal_weights(v: &Values, rho: &Rat, i: usize, a: &Rat, j: usize, b: &Rat, kappa: bool) -> Terms {
    let (l1, k1) = (v.get("lambda1"), if kappa { v.get("kappa1") } else { Rat::zero() });
    let n1 = a + &q(1);
    match (i, j) {
        (L, Y) => vec![(&l1 * &n1 - b + rho - q(1), Y, a + b), (k1, Y, a + b + q(1))],
        (L, M) => vec![((&l1 * &q(2) - q(1)) * &n1 - b + rho * &q(2) - q(1), M, a + b), (&k1 * &q(2), M, a + b + q(1))],
        _ => vec![],
    }
}

fn b_literal(v: &Values, rho: &Rat, i: usize, a: &Rat, j: usize, b: &Rat) -> Terms {
    match (i, j) {
        (L, L) => witt(a, b),
        (Y, Y) => yy_linear(a, b, 1),
        _ => conformal_weights(v, rho, i, a, j, b, true),
    }
}

fn b_corrected(v: &Values, rho: &Rat, i: usize, a: &Rat, j: usize, b: &Rat) -> Terms {
    match (i, j) {
        (Y, Y) => yy_linear(a, b, -1),
        _ => b_literal(v, rho, i, a, j, b),
    }
}

fn c_display(v: &Values, rho: &Rat, i: usize, a: &Rat, j: usize, b: &Rat) -> Terms {
    let k1 = v.get("kappa1");
    match (i, j) {
        (L, L) => witt(a, b),
        // ((n−1)/2 − p + ρ)Y_{n+p} + κ1 Y_{n+p+1}
        (L, Y) => vec![((a - &q(1)) * fr(1, 2) - b + rho, Y, a + b), (k1, Y, a + b + q(1))],
        // (2ρ − 2 − n − k)M_{n+k} + 2κ1 M_{n+k+1}
        (L, M) => vec![(rho * &q(2) - q(2) - a - b, M, a + b), (&k1 * &q(2), M, a + b + q(1))],
        // (p−p')[κ1 M_{p+p'} − ½(p+p'−2ρ+1)M_{p+p'−1}]
        (Y, Y) => {
            let d = a - b;
            vec![(&d * &k1, M, a + b), (-(&d * &fr(1, 2)) * (a + b - rho * &q(2) + q(1)), M, a + b - q(1))]
        }
        _ => vec![],
    }
}

fn d_display(v: &Values, rho: &Rat, i: usize, a: &Rat, j: usize, b: &Rat) -> Terms {
    let k1 = v.get("kappa1");
    match (i, j) {
        (L, L) => witt(a, b),
        // (ρ − 1 − p)Y_{n+p} + κ1 Y_{n+p+1}
        (L, Y) => vec![(rho - &q(1) - b, Y, a + b), (k1, Y, a + b + q(1))],
        // (2ρ − 4 − 3n − k)M_{n+k} + 2κ1 M_{n+k+1}
        (L, M) => vec![(rho * &q(2) - q(4) - a * &q(3) - b, M, a + b), (&k1 * &q(2), M, a + b + q(1))],
        // (p−p')κ1/2 (p+p'+1−2ρ)M_{p+p'−1}
        //   − (p−p')[½(p+1−ρ)(p'+1−ρ)M_{p+p'−2} + κ1²/2 M_{p+p'}]
        (Y, Y) => {
            let d = a - b;
            vec![
                (&d * &k1 * fr(1, 2) * (a + b + q(1) - rho * &q(2)), M, a + b - q(1)),
                (-(&d * &fr(1, 2)) * (a + &q(1) - rho) * (b + &q(1) - rho), M, a + b - q(2)),
                (-(&d * &k1 * &k1 * fr(1, 2)), M, a + b),
            ]
        }
        _ => vec![],
    }
}

fn e_weights(v: &Values, rho: &Rat, i: usize, a: &Rat, j: usize, b: &Rat) -> Terms {
    let k1 = v.get("kappa1");
    match (i, j) {
        (L, L) => witt(a, b),
        // ((2n−1)/3 − p + ρ)Y_{n+p} + κ1 Y_{n+p+1}
        (L, Y) => vec![((a * &q(2) - q(1)) * fr(1, 3) - b + rho, Y, a + b), (k1, Y, a + b + q(1))],
        // (2ρ − (5n+8)/3 − k)M_{n+k} + 2κ1 M_{n+k+1}
        (L, M) => vec![(rho * &q(2) - (a * &q(5) + q(8)) * fr(1, 3) - b, M, a + b), (&k1 * &q(2), M, a + b + q(1))],
        _ => vec![],
    }
}

fn e_literal(v: &Values, rho: &Rat, i: usize, a: &Rat, j: usize, b: &Rat) -> Terms {
    let k1 = v.get("kappa1");
    match (i, j) {
        // (p'−p)[¾κ1² M_{p+p'} − 3/2 κ1(p+p'−2ρ+1)M_{p+p'−1}]
        //   + (p'−p)/2 [2p²+3pp'+2p'²+(1−7ρ)(p+p')+11ρ²−2ρ+1] M_{p+p'−2}
        (Y, Y) => {
            let d = b - a;
            let s = a + b;
            let quad = a * a * q(2) + a * b * q(3) + b * b * q(2) + (q(1) - rho * &q(7)) * &s + rho * rho * q(11)
                - rho * &q(2)
                + q(1);
            vec![
                (&d * &k1 * &k1 * fr(3, 4), M, s.clone()),
                (-(&d * &k1 * fr(3, 2)) * (&s - &(rho * &q(2)) + q(1)), M, &s - &q(1)),
                (&d * &fr(1, 2) * quad, M, &s - &q(2)),
            ]
        }
        _ => e_weights(v, rho, i, a, j, b),
    }
}

fn e_corrected(v: &Values, rho: &Rat, i: usize, a: &Rat, j: usize, b: &Rat) -> Terms {
    let k1 = v.get("kappa1");
    match (i, j) {
        // (p'−p)[¾κ1² M_{p+p'} − ¾κ1(p+p'−2ρ+1)M_{p+p'−1}
        //   + 1/12 (2p²+5pp'+2p'²+(3−9ρ)(p+p')+(1−3ρ)²) M_{p+p'−2}]
        (Y, Y) => {
            let d = b - a;
            let s = a + b;
            let t = q(1) - rho * &q(3);
            let quad = a * a * q(2) + a * b * q(5) + b * b * q(2) + (q(3) - rho * &q(9)) * &s + &t * &t;
            vec![
                (&d * &k1 * &k1 * fr(3, 4), M, s.clone()),
                (-(&d * &k1 * fr(3, 4)) * (&s - &(rho * &q(2)) + q(1)), M, &s - &q(1)),
                (&d * &fr(1, 12) * quad, M, &s - &q(2)),
            ]
        }
        _ => e_weights(v, rho, i, a, j, b),
    }
}

fn e14_literal(v: &Values, rho: &Rat, i: usize, a: &Rat, j: usize, b: &Rat) -> Terms {
    let a00 = v.get("a00");
    match (i, j) {
        (L, L) => witt(a, b),
        (Y, Y) => yy_linear(a, b, 1),
        // −m M_{n+m}
        (L, N) => vec![(-b.clone(), M, a + b)],
        // a00 Y_{p+m+1}, 2a00 M_{k+m+1}
        (Y, N) => vec![(a00, Y, a + b + q(1))],
        (M, N) => vec![(&a00 * &q(2), M, a + b + q(1))],
        _ => conformal_weights(v, rho, i, a, j, b, false),
    }
}

fn e14_corrected(v: &Values, rho: &Rat, i: usize, a: &Rat, j: usize, b: &Rat) -> Terms {
    match (i, j) {
        (Y, Y) => yy_linear(a, b, -1),
        (L, N) => vec![(-(b + &q(1)), N, a + b)],
        (L, Y) | (L, M) => conformal_weights(v, rho, i, a, j, b, true),
        _ => e14_literal(v, rho, i, a, j, b),
    }
}

fn e15_literal(v: &Values, rho: &Rat, i: usize, a: &Rat, j: usize, b: &Rat) -> Terms {
    let (a00, k1) = (v.get("a00"), v.get("kappa1"));
    match (i, j) {
        (L, L) => witt(a, b),
        // (ρ − 1 − p)Y_{n+p}
        (L, Y) => vec![(rho - &q(1) - b, Y, a + b)],
        // (2ρ − 2 − n − k)M_{n+k}
        (L, M) => vec![(rho * &q(2) - q(2) - a - b, M, a + b)],
        // (ρ − m − 1)N_{n+m}
        (L, N) => vec![(rho - b - q(1), N, a + b)],
        (Y, Y) => yy_linear(a, b, 1),
        // a00κ1 Y_{p+m+1+ρ} + (p+2m+3−ρ)M_{p+m+ρ}
        (Y, N) => vec![(&a00 * &k1, Y, a + b + q(1) + rho), (a + &(b * &q(2)) + q(3) - rho, M, a + b + rho)],
        (M, N) => vec![(&a00 * &q(2), M, a + b + q(1))],
        _ => vec![],
    }
}

fn e15_corrected(v: &Values, rho: &Rat, i: usize, a: &Rat, j: usize, b: &Rat) -> Terms {
    let (a00, b00) = (v.get("a00"), v.get("b00"));
    match (i, j) {
        (L, L) => witt(a, b),
        // (n − p + ρ)Y_{n+p}, (n − k + 2ρ)M_{n+k}, −(m+1)N_{n+m}
        (L, Y) => vec![(a - b + rho.clone(), Y, a + b)],
        (L, M) => vec![(a - b + rho * &q(2), M, a + b)],
        (L, N) => vec![(-(b + &q(1)), N, a + b)],
        (Y, Y) => yy_linear(a, b, -1),
        // a00 Y_{p+m+1} + b00 M_{p+m+1+ρ}
        (Y, N) => vec![(a00, Y, a + b + q(1)), (b00, M, a + b + q(1) + rho)],
        (M, N) => vec![(&v.get("a00") * &q(2), M, a + b + q(1))],
        _ => vec![],
    }
}

static CLOSED_FORMS: &[ClosedForm] = &[
    ClosedForm {
        family: "mtype-B",
        fixed: &[("w01", "1"), ("a", "0")],
        params: &["lambda1", "kappa1"],
        corrections: &["[Y_p, Y_p'] = (p' − p)M_{p+p'}: the printed sign holds at w01 = −1"],
        literal: b_literal,
        corrected: b_corrected,
    },
    ClosedForm {
        family: "mtype-C",
        fixed: &[("w02", "1")],
        params: &["kappa1"],
        corrections: &[],
        literal: c_display,
        corrected: c_display,
    },
    ClosedForm {
        family: "mtype-D",
        fixed: &[("w12", "1")],
        params: &["kappa1"],
        corrections: &[],
        literal: d_display,
        corrected: d_display,
    },
    ClosedForm {
        family: "mtype-E",
        fixed: &[("w03", "1")],
        params: &["kappa1"],
        corrections: &[
            "[Y_p, Y_p']: the M_{p+p'−1} coefficient is −¾κ1(p'−p)(p+p'−2ρ+1)",
            "[Y_p, Y_p']: the M_{p+p'−2} coefficient is (p'−p)/12·(2p²+5pp'+2p'²+(3−9ρ)(p+p')+(1−3ρ)²)",
        ],
        literal: e_literal,
        corrected: e_corrected,
    },
    ClosedForm {
        family: "e14",
        fixed: &[("w01", "1")],
        params: &["lambda1", "kappa1", "a00"],
        corrections: &[
            "[Y_p, Y_p'] = (p' − p)M_{p+p'}",
            "[L_n, N_m] = −(m+1)N_{n+m}",
            "[L_n, Y_p] and [L_n, M_k] gain the κ1 terms of the m-type display",
        ],
        literal: e14_literal,
        corrected: e14_corrected,
    },
    ClosedForm {
        family: "e15",
        fixed: &[("w01", "1")],
        params: &["a00", "b00", "kappa1"],
        corrections: &[
            "the printed display is the algebra of e16 as printed (β1 = β3 = −1⊗s, η12 = s⊗1 + 2⊗s); \
             the corrected display is derived for e15 (β1 = β2 = s⊗1 − 1⊗s)",
            "[L_n, Y_p] = (n − p + ρ)Y_{n+p}, [L_n, M_k] = (n − k + 2ρ)M_{n+k}, [L_n, N_m] = −(m+1)N_{n+m}",
            "[Y_p, Y_p'] = (p' − p)M_{p+p'}",
            "[Y_p, N_m] = a00 Y_{p+m+1} + b00 M_{p+m+1+ρ}",
        ],
        literal: e15_literal,
        corrected: e15_corrected,
    },
];
