//! Identity templates: each identity is written as `Σ terms = 0` where every
//! term is a signed composition `(XΔ⊗1)Y` or `(1⊗XΔ)Y`, optionally with the
//! inner argument or the result transposed by (12).
//!
//! Symbol names used by the templates:
//!
//! | name      | meaning                                          |
//! |-----------|--------------------------------------------------|
//! | `alpha`   | `s⊗1 − 1⊗s`                                      |
//! | `alpha'`  | the rank-two extension cocycle of `[e0, e0]`     |
//! | `eta1`    | `[e0, e1]` coefficient in the rank-two setting   |
//! | `eta2`    | `[e1, e0]` coefficient in the rank-two setting   |
//! | `alpha_m` | `[e1, e1]` coefficient (on `e2`)                 |
//! | `beta1..3`| `[e0, e_i]` coefficients                         |
//! | `eta`     | `[e1, e2]` coefficient (on `e2`)                 |
//! | `eta_ij`  | `[e_i, e3]` coefficient on `e_j` (i, j ∈ {1, 2}) |

use std::collections::HashMap;

use crate::tensor::{comp_left, comp_right, Tensor2, Tensor3};

/// Which composition a term uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    /// `(XΔ ⊗ 1) Y`
    Left,
    /// `(1 ⊗ XΔ) Y`
    Right,
}

/// One signed term of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub sign: i64,
    pub op: Op,
    pub x: &'static str,
    pub y: &'static str,
    /// Apply (12) to `Y` before composing.
    pub swap_inner: bool,
    /// Apply (12) to the resulting H⊗3 element.
    pub swap_outer: bool,
}

/// A named identity `Σ terms = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub id: &'static str,
    /// Human-readable statement (left side = right side).
    pub statement: &'static str,
    pub terms: Vec<Term>,
}

impl Term {
    /// Evaluates the term with the given symbol values (missing ⇒ zero).
    pub fn eval(&self, x: &Tensor2, y: &Tensor2) -> Tensor3 {
        let y = if self.swap_inner { y.swap() } else { y.clone() };
        let r = match self.op {
            Op::Left => comp_left(x, &y),
            Op::Right => comp_right(x, &y),
        };
        let r = if self.swap_outer { r.swap12() } else { r };
        r.scale(&crate::rat::Rat::int(self.sign))
    }
}

impl Identity {
    /// Symbols appearing in the identity.
    pub fn symbols(&self) -> Vec<&'static str> {
        let mut v: Vec<&'static str> = self.terms.iter().flat_map(|t| [t.x, t.y]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Residual `Σ terms` for fully known symbol values.
    pub fn residual(&self, values: &HashMap<&str, Tensor2>) -> Tensor3 {
        let zero = Tensor2::zero();
        let mut out = Tensor3::zero();
        for t in &self.terms {
            let x = values.get(t.x).unwrap_or(&zero);
            let y = values.get(t.y).unwrap_or(&zero);
            if x.is_zero() || y.is_zero() {
                continue;
            }
            out.add_scaled(&t.eval(x, y), &crate::rat::Rat::one());
        }
        out
    }
}

const fn t(sign: i64, op: Op, x: &'static str, y: &'static str, swap_inner: bool, swap_outer: bool) -> Term {
    Term { sign, op, x, y, swap_inner, swap_outer }
}

use Op::{Left as L, Right as R};

/// All identity templates, in a fixed order.
pub fn all() -> Vec<Identity> {
    vec![
        Identity {
            id: "aa1",
            statement: "(αΔ⊗1)α' + (α'Δ⊗1)η2 = (1⊗αΔ)α' − (12)(1⊗αΔ)α' + (1⊗α'Δ)η1 − (12)(1⊗α'Δ)η1",
            terms: vec![
                t(1, L, "alpha", "alpha'", false, false),
                t(1, L, "alpha'", "eta2", false, false),
                t(-1, R, "alpha", "alpha'", false, false),
                t(1, R, "alpha", "alpha'", false, true),
                t(-1, R, "alpha'", "eta1", false, false),
                t(1, R, "alpha'", "eta1", false, true),
            ],
        },
        Identity {
            id: "aa2",
            statement: "(αΔ⊗1)η1 = (1⊗η1Δ)η1 − (12)(1⊗η1Δ)η1",
            terms: vec![
                t(1, L, "alpha", "eta1", false, false),
                t(-1, R, "eta1", "eta1", false, false),
                t(1, R, "eta1", "eta1", false, true),
            ],
        },
        Identity {
            id: "aa3",
            statement: "(η2Δ⊗1)η2 = (1⊗αΔ)η2 − (12)(1⊗η2Δ)η1",
            terms: vec![
                t(1, L, "eta2", "eta2", false, false),
                t(-1, R, "alpha", "eta2", false, false),
                t(1, R, "eta2", "eta1", false, true),
            ],
        },
        Identity {
            id: "aa4",
            statement: "(η1Δ⊗1)η2 = (1⊗η2Δ)η1 − (12)(1⊗αΔ)η2",
            terms: vec![
                t(1, L, "eta1", "eta2", false, false),
                t(-1, R, "eta2", "eta1", false, false),
                t(1, R, "alpha", "eta2", false, true),
            ],
        },
        Identity {
            id: "abc1",
            statement: "(α'Δ⊗1)η2 = (1⊗α'Δ)η1 − (12)(1⊗α'Δ)η1",
            terms: vec![
                t(1, L, "alpha'", "eta2", false, false),
                t(-1, R, "alpha'", "eta1", false, false),
                t(1, R, "alpha'", "eta1", false, true),
            ],
        },
        Identity {
            id: "L8",
            statement: "(αΔ⊗1)α' = (1⊗αΔ)α' − (12)(1⊗αΔ)α' + (1⊗α'Δ)η1 − (12)(1⊗α'Δ)η1",
            terms: vec![
                t(1, L, "alpha", "alpha'", false, false),
                t(-1, R, "alpha", "alpha'", false, false),
                t(1, R, "alpha", "alpha'", false, true),
                t(-1, R, "alpha'", "eta1", false, false),
                t(1, R, "alpha'", "eta1", false, true),
            ],
        },
        Identity {
            id: "L15",
            statement: "(αΔ⊗1)α' = (1⊗αΔ)α' − (12)(1⊗αΔ)α'",
            terms: vec![
                t(1, L, "alpha", "alpha'", false, false),
                t(-1, R, "alpha", "alpha'", false, false),
                t(1, R, "alpha", "alpha'", false, true),
            ],
        },
        Identity {
            id: "eq25a", statement: "(α'_mΔ⊗1)η21 = 0", terms: vec![t(1, L, "alpha_m", "eta21", false, false)]
        },
        Identity { id: "eq25b", statement: "(ηΔ⊗1)η21 = 0", terms: vec![t(1, L, "eta", "eta21", false, false)] },
        Identity {
            id: "eq26",
            statement: "(α'_mΔ⊗1)η22 = (1⊗η11Δ)α'_m − (12)(1⊗η11Δ)α'_m + (1⊗η12Δ)η − (12)(1⊗η12Δ)η",
            terms: vec![
                t(1, L, "alpha_m", "eta22", false, false),
                t(-1, R, "eta11", "alpha_m", false, false),
                t(1, R, "eta11", "alpha_m", false, true),
                t(-1, R, "eta12", "eta", false, false),
                t(1, R, "eta12", "eta", false, true),
            ],
        },
        Identity {
            id: "eq27",
            statement: "(ηΔ⊗1)η22 = (1⊗η21Δ)α'_m + (1⊗η22Δ)η + (12)(1⊗η11Δ)((12)η)",
            terms: vec![
                t(1, L, "eta", "eta22", false, false),
                t(-1, R, "eta21", "alpha_m", false, false),
                t(-1, R, "eta22", "eta", false, false),
                t(-1, R, "eta11", "eta", true, true),
            ],
        },
        Identity {
            id: "eq28",
            statement: "(β1Δ⊗1)η11 = (1⊗η11Δ)β1 − (12)(1⊗β3Δ)η11",
            terms: vec![
                t(1, L, "beta1", "eta11", false, false),
                t(-1, R, "eta11", "beta1", false, false),
                t(1, R, "beta3", "eta11", false, true),
            ],
        },
        Identity {
            id: "eq29",
            statement: "(β1Δ⊗1)η12 = (1⊗η12Δ)β2 − (12)(1⊗β3Δ)η12",
            terms: vec![
                t(1, L, "beta1", "eta12", false, false),
                t(-1, R, "eta12", "beta2", false, false),
                t(1, R, "beta3", "eta12", false, true),
            ],
        },
        Identity {
            id: "eq210",
            statement: "(β2Δ⊗1)η21 = (1⊗η21Δ)β1 − (12)(1⊗β3Δ)η21",
            terms: vec![
                t(1, L, "beta2", "eta21", false, false),
                t(-1, R, "eta21", "beta1", false, false),
                t(1, R, "beta3", "eta21", false, true),
            ],
        },
        Identity {
            id: "eq211",
            statement: "(β2Δ⊗1)η22 = (1⊗η22Δ)β2 − (12)(1⊗β3Δ)η22",
            terms: vec![
                t(1, L, "beta2", "eta22", false, false),
                t(-1, R, "eta22", "beta2", false, false),
                t(1, R, "beta3", "eta22", false, true),
            ],
        },
        Identity {
            id: "eq212",
            statement: "(η11Δ⊗1)η11 + (η12Δ⊗1)η21 = (12)(1⊗η11Δ)((12)η11) + (12)(1⊗η12Δ)((12)η21)",
            terms: vec![
                t(1, L, "eta11", "eta11", false, false),
                t(1, L, "eta12", "eta21", false, false),
                t(-1, R, "eta11", "eta11", true, true),
                t(-1, R, "eta12", "eta21", true, true),
            ],
        },
        Identity {
            id: "eq213",
            statement: "(η11Δ⊗1)η12 + (η12Δ⊗1)η22 = (12)(1⊗η11Δ)((12)η12) + (12)(1⊗η12Δ)((12)η22)",
            terms: vec![
                t(1, L, "eta11", "eta12", false, false),
                t(1, L, "eta12", "eta22", false, false),
                t(-1, R, "eta11", "eta12", true, true),
                t(-1, R, "eta12", "eta22", true, true),
            ],
        },
        Identity {
            id: "eq214",
            statement: "(η21Δ⊗1)η11 + (η22Δ⊗1)η21 = (12)(1⊗η21Δ)((12)η11) + (12)(1⊗η22Δ)((12)η21)",
            terms: vec![
                t(1, L, "eta21", "eta11", false, false),
                t(1, L, "eta22", "eta21", false, false),
                t(-1, R, "eta21", "eta11", true, true),
                t(-1, R, "eta22", "eta21", true, true),
            ],
        },
        Identity {
            id: "eq215",
            statement: "(η21Δ⊗1)η12 + (η22Δ⊗1)η22 = (12)(1⊗η21Δ)((12)η12) + (12)(1⊗η22Δ)((12)η22)",
            terms: vec![
                t(1, L, "eta21", "eta12", false, false),
                t(1, L, "eta22", "eta22", false, false),
                t(-1, R, "eta21", "eta12", true, true),
                t(-1, R, "eta22", "eta22", true, true),
            ],
        },
        Identity {
            id: "eq216",
            statement: "(1⊗η21Δ)((12)η) = (12)(1⊗η21Δ)((12)η)",
            terms: vec![t(1, R, "eta21", "eta", true, false), t(-1, R, "eta21", "eta", true, true)],
        },
        Identity {
            id: "eq217",
            statement: "(β1Δ⊗1)η = (1⊗ηΔ)β2 − (12)(1⊗β2Δ)η",
            terms: vec![
                t(1, L, "beta1", "eta", false, false),
                t(-1, R, "eta", "beta2", false, false),
                t(1, R, "beta2", "eta", false, true),
            ],
        },
        Identity {
            id: "eq218",
            statement: "(β1Δ⊗1)α'_m = (1⊗α'_mΔ)β2 − (12)(1⊗β1Δ)α'_m",
            terms: vec![
                t(1, L, "beta1", "alpha_m", false, false),
                t(-1, R, "alpha_m", "beta2", false, false),
                t(1, R, "beta1", "alpha_m", false, true),
            ],
        },
        Identity {
            id: "eq219",
            statement: "−(α'_mΔ⊗1)((12)η) = (1⊗α'_mΔ)η − (12)(1⊗α'_mΔ)η",
            terms: vec![
                t(-1, L, "alpha_m", "eta", true, false),
                t(-1, R, "alpha_m", "eta", false, false),
                t(1, R, "alpha_m", "eta", false, true),
            ],
        },
        Identity {
            id: "eq220",
            statement: "(1⊗ηΔ)η = (12)(1⊗ηΔ)η",
            terms: vec![t(1, R, "eta", "eta", false, false), t(-1, R, "eta", "eta", false, true)],
        },
    ]
}

/// Looks up a template by id.
pub fn get(id: &str) -> Option<Identity> {
    all().into_iter().find(|i| i.id == id)
}
