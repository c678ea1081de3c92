//! The family tables, transcribed as printed.
//!
//! Expressions use the syntax of [`super::expr`]: `ck(λ, κ)` is
//! `λ s|1 - 1|s + κ 1|1`, `s(n)` is the divided power `s^(n)`, and `alpha`
//! is `s|1 - 1|s`.  In frame families the names `lambda_i` / `kappa_i` that
//! are not parameters are bound to the coefficients of `β_i`, so formulas may
//! refer to them exactly as printed.  Deviations from the printed text live
//! in `data/corrections.json`, never here.

use super::{Expect, Family, Kind, ParamSpec, Shape};

const fn r(name: &'static str) -> ParamSpec {
    ParamSpec { name, kind: Kind::Rational }
}

const fn nz(name: &'static str) -> ParamSpec {
    ParamSpec { name, kind: Kind::NonZero }
}

const fn tensor(name: &'static str) -> ParamSpec {
    ParamSpec { name, kind: Kind::Tensor }
}

const fn poly(name: &'static str) -> ParamSpec {
    ParamSpec { name, kind: Kind::Poly }
}

/// Options for `[e1, e1] = α'_m ⊗_H e2` in the families that allow any of
/// the four normalized m-type solutions.
pub const ALPHA_OPTIONS: &[&str] = &["a1", "a2", "a2pp", "a3"];

const ALPHA_M: ParamSpec = ParamSpec { name: "alpha_m", kind: Kind::Choice(ALPHA_OPTIONS) };

/// Slot value meaning "the α'_m selected by the `alpha_m` choice, scaled by `w`".
pub const ALPHA_CHOICE: &str = "@alpha_m";

/// The four α'_m, each with the coefficient `w`.
pub fn alpha_choice(option: &str) -> Option<&'static str> {
    Some(match option {
        "a1" => "w*(1|s - s|1)",
        "a2" => "-w*(kappa1*(1|s(2) - s(2)|1) - (s|s(2) - s(2)|s) - kappa1^2/2*(1|s - s|1))",
        "a2pp" => "w*((1|s(2) - s(2)|1) - kappa1*(1|s - s|1))",
        "a3" => {
            "w*((1|s(3) - s(3)|1) + 1/2*(s|s(2) - s(2)|s) - 3*kappa1/2*(1|s(2) - s(2)|1) + 3/4*kappa1^2*(1|s - s|1))"
        }
        _ => return None,
    })
}

/// The relations between `β1` and `β2` that each α'_m requires.
pub const ALPHA_CONSTRAINTS: &[&str] = &[
    "alpha_m = a1 -> lambda2 == 2*lambda1 - 1",
    "alpha_m = a1 -> kappa2 == 2*kappa1",
    "alpha_m = a2 -> lambda1 == 0",
    "alpha_m = a2 -> lambda2 == -3",
    "alpha_m = a2 -> kappa2 == 2*kappa1",
    "alpha_m = a2pp -> lambda1 == 1/2",
    "alpha_m = a2pp -> lambda2 == -1",
    "alpha_m = a2pp -> kappa2 == 2*kappa1",
    "alpha_m = a3 -> lambda1 == 2/3",
    "alpha_m = a3 -> lambda2 == -5/3",
    "alpha_m = a3 -> kappa2 == 2*kappa1",
];

const BASE: Family = Family {
    id: "",
    rank: 4,
    title: "",
    source: "",
    params: &[],
    constraints: &[],
    regimes: &[],
    shape: Shape::Frame(&[]),
    expect: Expect::Lie,
    note: "",
};

const RANK2: Family = Family { rank: 2, ..BASE };

const RANK2_SRC: &str = "rank-two Leibniz classification";
const MAXDER_SRC: &str = "rank-two solvable classification with maximal derived series";
const MTYPE_SRC: &str = "m-type classification";
const Z_SRC: &str = "frame families with all η_ij = 0";
const A_SRC: &str = "frame families with η = α'_m = η12 = 0";
const B_SRC: &str = "frame families with η = α'_m = η21 = 0";
const C_SRC: &str = "frame families with η = α'_m = 0 and η12 η21 ≠ 0";
const D_SRC: &str = "frame families with η ≠ 0";
const E_SRC: &str = "frame families with η = 0 and α'_m ≠ 0";
const EX_SRC: &str = "worked examples of the frame";

// Shared η12 formulas of the B and E lists.
const B3_ETA: &str = "b11*((kappa1*(kappa2-kappa1) + lambda1*(kappa2-kappa1)^2)*1|1 - (kappa1 + 2*lambda1*(kappa2-kappa1))*1|s + 2*lambda1*1|s(2) - (kappa2-kappa1)*s|1 + s|s)";
const B4_ETA: &str = "b11*(kappa1*(kappa2-kappa1)*1|1 - (kappa2-kappa1)*s|1 - kappa1*1|s + s|s)";
const B5_ETA: &str = "b11*(-kappa3*s|1 + s|s)";
const B6_ETA: &str = "-(kappa1*b10 + (kappa2-kappa1)*b01)*1|1 + b10*s|1 + b01*1|s";
const B7_ETA: &str = "b10*(-kappa1*1|1 + s|1)";
const B8_ETA: &str = "b20/(2*(lambda2+2))*(kappa1*((lambda2+2)*kappa1 + (kappa2-kappa1))*1|1 - kappa1*1|s - (2*(lambda2+2)*kappa1 + (kappa2-kappa1))*s|1 + s|s + 2*(lambda2+2)*s(2)|1)";
const B9_ETA: &str = "b20*((lambda1/(2*lambda1-2)*(kappa2-kappa1)^2 + (1-2*lambda1)/(2-2*lambda1)*kappa1*(kappa2-kappa1) + 1/2*kappa1^2)*1|1 + ((2*lambda1-1)*(kappa2-kappa1)/(2-2*lambda1) - kappa1)*s|1 + ((2*lambda1-1)*kappa1 + 2*lambda1*(kappa2-kappa1))/(2-2*lambda1)*1|s - lambda1/(1-lambda1)*1|s(2) + (1-2*lambda1)/(2-2*lambda1)*s|s + s(2)|1)";
const B10_ETA: &str = "b30*(s(3)|1 - 1/2*(kappa1+kappa2)*s(2)|1 + 1/2*s(2)|s + 1/12*(kappa1^2 + 4*kappa1*kappa2 + kappa2^2)*s|1 - 1/6*(2*kappa1+kappa2)*s|s + 1/6*s|s(2) - 1/12*(kappa1*kappa2^2 + kappa1^2*kappa2)*1|1 + 1/12*(kappa1^2 + 2*kappa1*kappa2)*1|s - 1/6*kappa1*1|s(2))";
const B11_ETA: &str = "b30*((s(3)|1 - 1|s(3)) + 1/2*(s(2)|s - s|s(2)) - 1/2*(kappa1+kappa2)*s(2)|1 + 1/2*(2*kappa2-kappa1)*1|s(2) - 1/4*(kappa1^2 - 4*kappa1*kappa2 + kappa2^2)*s|1 + 1/4*(kappa1^2 + 2*kappa1*kappa2 - 2*kappa2^2)*1|s + 1/2*(kappa2-2*kappa1)*s|s + 1/12*(2*kappa1-kappa2)*(kappa1^2 - kappa1*kappa2 - 2*kappa2^2)*1|1)";
const B12_ETA: &str = "b21*((s(2)|s - s|s(2)) + (kappa1*1|s(2) - (kappa2-kappa1)*s(2)|1) + (1/2*(kappa2-kappa1)*(3*kappa1-kappa2)*s|1 + 1/2*kappa1*(3*kappa1-2*kappa2)*1|s) + (kappa2-2*kappa1)*s|s + 1/2*kappa1*(kappa2-kappa1)*(kappa2-2*kappa1)*1|1)";
const B13_ETA: &str = "b21*(s(2)|s + 3*s|s(2) - (kappa2-kappa1)*s(2)|1 - 3*(2*kappa2-kappa1)*1|s(2) - (3*kappa2-2*kappa1)*s|s + 1/2*(kappa1^2 - 4*kappa1*kappa2 + 3*kappa2^2)*s|1 + 1/2*(kappa1^2 - 6*kappa1*kappa2 + 6*kappa2^2)*1|s + 1/2*(3*kappa1^3 - 6*kappa1^2*kappa2 - 3*kappa1*kappa2^2 - 2*kappa2^3)*1|1 + 6*1|s(3))";

/// Regimes that pick an α'_m and satisfy its relations, for families whose
/// `β1`, `β2` are free.
const FREE_ALPHA_REGIMES: &[&str] = &[
    "alpha_m = a1, lambda2 = 2*lambda1 - 1, kappa2 = 2*kappa1",
    "alpha_m = a2, lambda1 = 0, lambda2 = -3, kappa2 = 2*kappa1",
    "alpha_m = a2pp, lambda1 = 1/2, lambda2 = -1, kappa2 = 2*kappa1",
    "alpha_m = a3, lambda1 = 2/3, lambda2 = -5/3, kappa2 = 2*kappa1",
];

pub static FAMILIES: &[Family] = &[
    // ---------------------------------------------------------------- rank two
    Family {
        id: "thm27-1",
        title: "direct sum of two Virasoro algebras",
        source: RANK2_SRC,
        shape: Shape::Explicit(&[(0, 0, 0, "alpha"), (1, 1, 1, "alpha")]),
        note: "Printed with both summands called e0; the second is e1 here.",
        ..RANK2
    },
    Family { id: "thm27-2", title: "abelian", source: RANK2_SRC, shape: Shape::Explicit(&[]), ..RANK2 },
    Family {
        id: "thm27-3",
        title: "[e0,e0] = α' e1",
        source: RANK2_SRC,
        params: &[tensor("A")],
        shape: Shape::Explicit(&[(0, 0, 1, "A")]),
        expect: Expect::LieWhen("A == -swap(A)"),
        note: "The list of vanishing brackets repeats [e0,e0]; it is read as [e1,e1] = 0.",
        ..RANK2
    },
    Family {
        id: "thm27-4",
        title: "skew A(s) action",
        source: RANK2_SRC,
        params: &[poly("A")],
        shape: Shape::Explicit(&[(0, 1, 1, "A"), (1, 0, 1, "-swap(A)")]),
        ..RANK2
    },
    Family {
        id: "thm27-5",
        title: "one-sided A(s) action",
        source: RANK2_SRC,
        params: &[poly("A")],
        shape: Shape::Explicit(&[(0, 1, 1, "A")]),
        expect: Expect::LeibnizNotLie,
        ..RANK2
    },
    Family {
        id: "thm27-6",
        title: "Virasoro plus abelian",
        source: RANK2_SRC,
        shape: Shape::Explicit(&[(0, 0, 0, "alpha")]),
        ..RANK2
    },
    Family {
        id: "thm27-7",
        title: "Virasoro with a κ ≠ 0 module",
        source: RANK2_SRC,
        params: &[r("lambda"), nz("kappa")],
        shape: Shape::Explicit(&[(0, 0, 0, "alpha"), (0, 1, 1, "ck(lambda, kappa)"), (1, 0, 1, "-swap(ck(lambda, kappa))")]),
        ..RANK2
    },
    Family {
        id: "thm27-8",
        title: "Virasoro with a κ = 0 module, trivial cohomology",
        source: RANK2_SRC,
        params: &[r("lambda")],
        constraints: &["lambda != 0", "lambda != -1", "lambda != -2", "lambda != -5", "lambda != -7"],
        shape: Shape::Explicit(&[(0, 0, 0, "alpha"), (0, 1, 1, "ck(lambda, 0)"), (1, 0, 1, "-swap(ck(lambda, 0))")]),
        ..RANK2
    },
    Family {
        id: "thm27-9",
        title: "λ = 0 extension",
        source: RANK2_SRC,
        params: &[r("x10")],
        shape: Shape::Explicit(&[
            (0, 0, 0, "alpha"),
            (0, 0, 1, "x10*alpha"),
            (0, 1, 1, "ck(0, 0)"),
            (1, 0, 1, "-swap(ck(0, 0))"),
        ]),
        ..RANK2
    },
    Family {
        id: "thm27-10",
        title: "λ = -1 extension",
        source: RANK2_SRC,
        params: &[r("x12"), r("x20")],
        shape: Shape::Explicit(&[
            (0, 0, 0, "alpha"),
            (0, 0, 1, "x12*(s|s(2) - s(2)|s) + x20*(s(2)|1 - 1|s(2))"),
            (0, 1, 1, "ck(-1, 0)"),
            (1, 0, 1, "-swap(ck(-1, 0))"),
        ]),
        ..RANK2
    },
    Family {
        id: "thm27-11",
        title: "λ = -2 extension",
        source: RANK2_SRC,
        params: &[r("x13"), r("x30")],
        shape: Shape::Explicit(&[
            (0, 0, 0, "alpha"),
            (0, 0, 1, "(x13*(s|s(3) - s(3)|s) + x30*(s(3)|1 - 1|s(3)))*alpha"),
            (0, 1, 1, "ck(-2, 0)"),
            (1, 0, 1, "-swap(ck(-2, 0))"),
        ]),
        ..RANK2
    },
    Family {
        id: "thm27-12",
        title: "λ = -5 extension",
        source: RANK2_SRC,
        params: &[r("x34")],
        shape: Shape::Explicit(&[
            (0, 0, 0, "alpha"),
            (0, 0, 1, "x34*(s(3)|s(4) - s(4)|s(3))"),
            (0, 1, 1, "ck(-5, 0)"),
            (1, 0, 1, "-swap(ck(-5, 0))"),
        ]),
        ..RANK2
    },
    Family {
        id: "thm27-13",
        title: "λ = -7 extension",
        source: RANK2_SRC,
        params: &[r("x36")],
        shape: Shape::Explicit(&[
            (0, 0, 0, "alpha"),
            (0, 0, 1, "x36*((s(3)|s(6) - s(6)|s(3)) - 3*(s(4)|s(5) - s(5)|s(4)))"),
            (0, 1, 1, "ck(-7, 0)"),
            (1, 0, 1, "-swap(ck(-7, 0))"),
        ]),
        note: "The printed formula has one unbalanced parenthesis; the only balanced reading is used.",
        ..RANK2
    },
    Family {
        id: "thm27-14",
        title: "one-sided module",
        source: RANK2_SRC,
        params: &[r("lambda"), r("kappa")],
        // κ ≠ 0, or λ ∉ {1, -1, -2, -3}.
        constraints: &["kappa^2 + ((lambda-1)*(lambda+1)*(lambda+2)*(lambda+3))^2 != 0"],
        shape: Shape::Explicit(&[(0, 0, 0, "alpha"), (0, 1, 1, "ck(lambda, kappa)")]),
        expect: Expect::LeibnizNotLie,
        ..RANK2
    },
    Family {
        id: "thm27-15",
        title: "one-sided λ = 1 extension",
        source: RANK2_SRC,
        params: &[r("x00")],
        shape: Shape::Explicit(&[(0, 0, 0, "alpha"), (0, 0, 1, "x00*1|1"), (0, 1, 1, "ck(1, 0)")]),
        expect: Expect::LeibnizNotLie,
        ..RANK2
    },
    Family {
        id: "thm27-16",
        title: "one-sided λ = -1 extension",
        source: RANK2_SRC,
        params: &[r("x30")],
        shape: Shape::Explicit(&[(0, 0, 0, "alpha"), (0, 0, 1, "x30*s(3)|1"), (0, 1, 1, "ck(-1, 0)")]),
        expect: Expect::LeibnizNotLie,
        ..RANK2
    },
    Family {
        id: "thm27-17",
        title: "one-sided λ = -2 extension",
        source: RANK2_SRC,
        params: &[r("x22")],
        shape: Shape::Explicit(&[
            (0, 0, 0, "alpha"),
            (0, 0, 1, "x22*(s(2)|s(2) + 3/2*s(3)|s)"),
            (0, 1, 1, "ck(-2, 0)"),
        ]),
        expect: Expect::LeibnizNotLie,
        ..RANK2
    },
    Family {
        id: "thm27-18",
        title: "one-sided λ = -3 extension",
        source: RANK2_SRC,
        params: &[r("x23")],
        shape: Shape::Explicit(&[
            (0, 0, 0, "alpha"),
            (0, 0, 1, "x23*(s(2)|s(3) + 4*s(3)|s(2) + 2*s(4)|s)"),
            (0, 1, 1, "ck(-3, 0)"),
        ]),
        expect: Expect::LeibnizNotLie,
        ..RANK2
    },
    Family {
        id: "lemma22-i",
        title: "[e1,e1] = α' e2",
        source: MAXDER_SRC,
        params: &[tensor("A")],
        shape: Shape::Explicit(&[(0, 0, 1, "A")]),
        expect: Expect::LieWhen("A == -swap(A)"),
        note: "Basis e1, e2 of the source is e0, e1 here.",
        ..RANK2
    },
    Family {
        id: "lemma22-ii",
        title: "skew A(s) action",
        source: MAXDER_SRC,
        params: &[poly("A")],
        shape: Shape::Explicit(&[(0, 1, 1, "A"), (1, 0, 1, "-swap(A)")]),
        note: "Basis e1, e2 of the source is e0, e1 here.",
        ..RANK2
    },
    Family {
        id: "lemma22-iii",
        title: "one-sided A(s) action",
        source: MAXDER_SRC,
        params: &[poly("A")],
        shape: Shape::Explicit(&[(0, 1, 1, "A")]),
        expect: Expect::LeibnizNotLie,
        note: "Basis e1, e2 of the source is e0, e1 here.",
        ..RANK2
    },
    // ---------------------------------------------------------------- m-type
    Family {
        id: "mtype-A",
        rank: 3,
        title: "0-type",
        source: MTYPE_SRC,
        params: &[r("lambda1"), r("lambda2"), r("kappa1"), r("kappa2"), r("a")],
        constraints: &["a*lambda1 == 0", "a*kappa1 == 0"],
        regimes: &["a = 0", "lambda1 = 0, kappa1 = 0"],
        shape: Shape::Frame(&[("beta1", "ck(lambda1, kappa1)"), ("beta2", "ck(lambda2, kappa2)"), ("eta", "a*1|1")]),
        ..BASE
    },
    Family {
        id: "mtype-B",
        rank: 3,
        title: "1-type",
        source: MTYPE_SRC,
        params: &[r("lambda1"), r("kappa1"), nz("w01"), r("a")],
        constraints: &["a*lambda1 == 0", "a*kappa1 == 0"],
        regimes: &["a = 0", "lambda1 = 0, kappa1 = 0"],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(2*lambda1 - 1, 2*kappa1)"),
            ("alpha_m", "w01*(1|s - s|1)"),
            ("eta", "a*1|1"),
        ]),
        ..BASE
    },
    Family {
        id: "mtype-C",
        rank: 3,
        title: "2-type with w12 = 0",
        source: MTYPE_SRC,
        params: &[nz("w02"), r("kappa1")],
        shape: Shape::Frame(&[
            ("beta1", "ck(1/2, kappa1)"),
            ("beta2", "ck(-1, 2*kappa1)"),
            ("alpha_m", "w02*((1|s(2) - s(2)|1) - kappa1*(1|s - s|1))"),
        ]),
        ..BASE
    },
    Family {
        id: "mtype-D",
        rank: 3,
        title: "2-type with w12 ≠ 0",
        source: MTYPE_SRC,
        params: &[nz("w12"), r("kappa1")],
        shape: Shape::Frame(&[
            ("beta1", "ck(0, kappa1)"),
            ("beta2", "ck(-3, 2*kappa1)"),
            ("alpha_m", "-w12*(kappa1*(1|s(2) - s(2)|1) - (s|s(2) - s(2)|s) - kappa1^2/2*(1|s - s|1))"),
        ]),
        ..BASE
    },
    Family {
        id: "mtype-E",
        rank: 3,
        title: "3-type",
        source: MTYPE_SRC,
        params: &[nz("w03"), r("kappa1")],
        shape: Shape::Frame(&[
            ("beta1", "ck(2/3, kappa1)"),
            ("beta2", "ck(-5/3, 2*kappa1)"),
            (
                "alpha_m",
                "w03*((1|s(3) - s(3)|1) + 1/2*(s|s(2) - s(2)|s) - 3*kappa1/2*(1|s(2) - s(2)|1) + 3/4*kappa1^2*(1|s - s|1))",
            ),
        ]),
        ..BASE
    },
    // ---------------------------------------------------------------- Z
    Family {
        id: "z1",
        title: "α'_m = 0",
        source: Z_SRC,
        params: &[r("a"), r("lambda1"), r("lambda2"), r("lambda3"), r("kappa1"), r("kappa2"), r("kappa3")],
        constraints: &["a*lambda1 == 0", "a*kappa1 == 0"],
        regimes: &["a = 0", "lambda1 = 0, kappa1 = 0"],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda2, kappa2)"),
            ("beta3", "ck(lambda3, kappa3)"),
            ("eta", "a*1|1"),
        ]),
        ..BASE
    },
    Family {
        id: "z2",
        title: "α'_1",
        source: Z_SRC,
        params: &[nz("w01"), r("a"), r("lambda1"), r("lambda3"), r("kappa1"), r("kappa3")],
        constraints: &["a*lambda1 == 0", "a*kappa1 == 0"],
        regimes: &["a = 0", "lambda1 = 0, kappa1 = 0"],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(2*lambda1 - 1, 2*kappa1)"),
            ("beta3", "ck(lambda3, kappa3)"),
            ("alpha_m", "w01*(1|s - s|1)"),
            ("eta", "a*1|1"),
        ]),
        ..BASE
    },
    Family {
        id: "z3",
        title: "α'_2",
        source: Z_SRC,
        params: &[nz("w12"), r("lambda3"), r("kappa1"), r("kappa3")],
        shape: Shape::Frame(&[
            ("beta1", "ck(0, kappa1)"),
            ("beta2", "ck(-3, 2*kappa1)"),
            ("beta3", "ck(lambda3, kappa3)"),
            ("alpha_m", "-w12*(kappa1*(1|s(2) - s(2)|1) - (s|s(2) - s(2)|s) - kappa1^2/2*(1|s - s|1))"),
        ]),
        ..BASE
    },
    Family {
        id: "z4",
        title: "α''_2",
        source: Z_SRC,
        params: &[nz("w02"), r("lambda3"), r("kappa1"), r("kappa3")],
        shape: Shape::Frame(&[
            ("beta1", "ck(1/2, kappa1)"),
            ("beta2", "ck(-1, 2*kappa1)"),
            ("beta3", "ck(lambda3, kappa3)"),
            ("alpha_m", "w02*((1|s(2) - s(2)|1) - kappa1*(1|s - s|1))"),
        ]),
        ..BASE
    },
    Family {
        id: "z5",
        title: "α'_3",
        source: Z_SRC,
        params: &[nz("w03"), r("kappa1"), r("kappa3")],
        shape: Shape::Frame(&[
            ("beta1", "ck(2/3, kappa1)"),
            ("beta2", "ck(-5/3, 2*kappa1)"),
            ("beta3", "ck(2/3, kappa3)"),
            (
                "alpha_m",
                "w03*((1|s(3) - s(3)|1) + 1/2*(s|s(2) - s(2)|s) - 3*kappa1/2*(1|s(2) - s(2)|1) + 3/4*kappa1^2*(1|s - s|1))",
            ),
        ]),
        ..BASE
    },
    // ---------------------------------------------------------------- A
    Family {
        id: "a1",
        title: "η21 of degree (0,1)",
        source: A_SRC,
        params: &[nz("c01"), r("lambda1"), r("kappa1"), r("kappa3")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda1 + 1, kappa1 - kappa3)"),
            ("beta3", "ck(0, kappa3)"),
            ("eta21", "c01*(-kappa3*1|1 + 1|s)"),
        ]),
        ..BASE
    },
    Family {
        id: "a2",
        title: "constant η21",
        source: A_SRC,
        params: &[nz("c00"), r("lambda1"), r("lambda2"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda2, kappa2)"),
            ("beta3", "ck(lambda1 - lambda2, kappa1 - kappa2)"),
            ("eta21", "c00*1|1"),
        ]),
        ..BASE
    },
    Family {
        id: "a3",
        title: "η21 of degree (1,1), general λ1",
        source: A_SRC,
        params: &[nz("c11"), r("lambda1"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda1 + 2, kappa2)"),
            ("beta3", "ck(0, kappa1 - kappa2)"),
            (
                "eta21",
                "c11*((kappa2*(kappa1-kappa2) + (lambda1+2)*(kappa1-kappa2)^2)*1|1 - (kappa2 + 2*(lambda1+2)*(kappa1-kappa3))*1|s + 2*(lambda1+2)*1|s(2) - (kappa1-kappa2)*s|1 + s|s)",
            ),
        ]),
        ..BASE
    },
    Family {
        id: "a4",
        title: "η21 of degree (1,1), λ2 = -2",
        source: A_SRC,
        params: &[nz("c11"), r("lambda1"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(-2, kappa2)"),
            ("beta3", "ck(0, kappa1 - kappa2)"),
            ("eta21", "c11*(kappa2*(kappa1-kappa2)*1|1 - (kappa1-kappa2)*s|1 - kappa2*1|s + s|s)"),
        ]),
        ..BASE
    },
    Family {
        id: "a5",
        title: "η21 = c11(s⊗s - κ s⊗1)",
        source: A_SRC,
        params: &[nz("c11"), r("lambda1"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda1 + 2, kappa2)"),
            ("beta3", "ck(0, kappa1 - kappa2)"),
            ("eta21", "c11*(-(kappa1-kappa2)*s|1 + s|s)"),
        ]),
        ..BASE
    },
    Family {
        id: "a6",
        title: "η21 linear, two coefficients",
        source: A_SRC,
        params: &[nz("c10"), r("c01"), r("lambda1"), r("lambda2"), r("kappa1"), r("kappa2")],
        constraints: &["lambda2*c10 + (lambda1 - lambda2 + 1)*c01 == 0"],
        regimes: &["c01 = -lambda2*c10/(lambda1 - lambda2 + 1)", "lambda2 = 0, lambda1 = -1"],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda2, kappa2)"),
            ("beta3", "ck(lambda1 - lambda2 + 1, kappa1 - kappa2)"),
            ("eta21", "-(kappa2*c10 + (kappa1-kappa2)*c01)*1|1 + c10*s|1 + c01*1|s"),
        ]),
        note: "The printed parameter list names c11; the formula uses c10, c01 and λ2.",
        ..BASE
    },
    Family {
        id: "a7",
        title: "η21 = c10(s⊗1 - κ2)",
        source: A_SRC,
        params: &[nz("c10"), r("lambda1"), r("lambda2"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda2, kappa2)"),
            ("beta3", "ck(lambda1 + 1, kappa1 - kappa2)"),
            ("eta21", "c10*(-kappa2*1|1 + s|1)"),
        ]),
        ..BASE
    },
    Family {
        id: "a8",
        title: "η21 of degree (2,0), λ2 = 0",
        source: A_SRC,
        params: &[nz("c20"), r("lambda1"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(0, kappa2)"),
            ("beta3", "ck(lambda1 + 2, kappa1 - kappa2)"),
            (
                "eta21",
                "c20/(2*(lambda1+2))*(kappa2*((lambda1+2)*kappa2 + (kappa1-kappa2))*1|1 - kappa2*1|s - (2*(lambda1+2)*kappa2 + (kappa1-kappa2))*s|1 + s|s + 2*(lambda1+2)*s(2)|1)",
            ),
        ]),
        ..BASE
    },
    Family {
        id: "a9",
        title: "η21 of degree (2,0), λ1 = -1",
        source: A_SRC,
        params: &[nz("b20"), r("lambda2"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(-1, kappa1)"),
            ("beta2", "ck(lambda2, kappa2)"),
            ("beta3", "ck(1 - lambda2, kappa1 - kappa2)"),
            (
                "eta21",
                "b20*((lambda2/(2*lambda2-2)*(kappa1-kappa2)^2 + (1-2*lambda2)/(2-2*lambda2)*kappa2*(kappa1-kappa2) + 1/2*kappa2^2)*1|1 + ((2*lambda2-1)*(kappa1-kappa2)/(2-2*lambda2) - kappa2)*s|1 + ((2*lambda2-1)*kappa2 + 2*lambda2*(kappa1-kappa2))/(2-2*lambda2)*1|s - lambda2/(1-lambda2)*1|s(2) + (1-2*lambda2)/(2-2*lambda2)*s|s + s(2)|1)",
            ),
        ]),
        note: "The coefficient is printed b20 in the formula and c20 in the parameter list; b20 is used.",
        ..BASE
    },
    Family {
        id: "a10",
        title: "η21 of degree (3,0), λ1 = 1",
        source: A_SRC,
        params: &[nz("c30"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(1, kappa1)"),
            ("beta2", "ck(0, kappa2)"),
            ("beta3", "ck(2, kappa1 - kappa2)"),
            (
                "eta21",
                "c30*(s(3)|1 - 1/2*(kappa1+kappa2)*s(2)|1 + 1/2*s(2)|s + 1/12*(kappa1^2 + 4*kappa1*kappa2 + kappa2^2)*s|1 - 1/6*(2*kappa2+kappa1)*s|s + 1/6*s|s(2) - 1/12*(kappa1*kappa2^2 + kappa1^2*kappa2)*1|1 + 1/12*(kappa2^2 + 2*kappa1*kappa2)*1|s - 1/6*kappa2*1|s(2))",
            ),
        ]),
        note: "The printed formula has a misplaced parenthesis after the first term; it is read as one sum.",
        ..BASE
    },
    Family {
        id: "a11",
        title: "η21 of degree 3, λ1 = 2/3",
        source: A_SRC,
        params: &[nz("c30"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(2/3, kappa1)"),
            ("beta2", "ck(-5/3, kappa2)"),
            ("beta3", "ck(2/3, kappa2 - kappa1)"),
            (
                "eta21",
                "c30*((s(3)|1 - 1|s(3)) + 1/2*(s(2)|s - s|s(2)) - 1/2*(kappa1+kappa2)*s(2)|1 + 1/2*(2*kappa1-kappa2)*1|s(2) - 1/4*(kappa1^2 - 4*kappa1*kappa2 + kappa2^2)*s|1 + 1/4*(kappa2^2 + 2*kappa1*kappa2 - 2*kappa1^2)*1|s + 1/2*(kappa1-2*kappa2)*s|s + 1/12*(2*kappa2-kappa1)*(kappa2^2 - kappa1*kappa2 - 2*kappa1^2)*1|1)",
            ),
        ]),
        ..BASE
    },
    Family {
        id: "a12",
        title: "η21 of degree (2,1), λ2 = 0",
        source: A_SRC,
        params: &[nz("c21"), r("lambda1"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(0, kappa2)"),
            ("beta3", "ck(lambda1 + 3, kappa1 - kappa2)"),
            (
                "eta21",
                "c21*((s(2)|s - s|s(2)) + (kappa2*1|s(2) - (kappa1-kappa2)*s(2)|1) + (1/2*(kappa1-kappa2)*(3*kappa2-kappa1)*s|1 + 1/2*kappa2*(3*kappa1-2*kappa1)*1|s) + (kappa1-2*kappa2)*s|s + 1/2*kappa2*(kappa1-kappa2)*(kappa1-2*kappa2)*1|1)",
            ),
        ]),
        ..BASE
    },
    Family {
        id: "a13",
        title: "η21 of degree (2,1), λ1 = -1",
        source: A_SRC,
        params: &[nz("c21"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(-1, kappa1)"),
            ("beta2", "ck(2, kappa2)"),
            ("beta3", "ck(0, kappa1 - kappa2)"),
            (
                "eta21",
                "c21*(s(2)|s + 3*s|s(2) - (kappa1-kappa2)*s(2)|1 - 3*(2*kappa1-kappa2)*1|s(2) - (3*kappa1-2*kappa2)*s|s + 1/2*(kappa2^2 - 4*kappa1*kappa2 + 3*kappa1^2)*s|1 + 1/2*(kappa2^2 - 6*kappa1*kappa2 + 6*kappa1^2)*1|s + 1/2*(3*kappa2^3 - 6*kappa2^2*kappa1 - 3*kappa2*kappa1^2 - 2*kappa1^3)*1|1 + 6*1|s(3))",
            ),
        ]),
        ..BASE
    },
    Family {
        id: "a14",
        title: "η11 = η22 constant",
        source: A_SRC,
        params: &[nz("a00"), nz("c00"), r("lambda1"), r("kappa1")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda1, kappa1)"),
            ("beta3", "ck(0, 0)"),
            ("eta11", "a00*1|1"),
            ("eta21", "c00*1|1"),
            ("eta22", "a00*1|1"),
        ]),
        ..BASE
    },
    Family {
        id: "a15",
        title: "η11 ≠ η22 constant",
        source: A_SRC,
        params: &[r("a00"), r("d00"), nz("c00"), r("lambda1"), r("kappa1")],
        constraints: &["a00 != d00"],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda1, kappa1)"),
            ("beta3", "ck(0, 0)"),
            ("eta11", "a00*1|1"),
            ("eta21", "c00*1|1"),
            ("eta22", "d00*1|1"),
        ]),
        ..BASE
    },
    Family {
        id: "a16",
        title: "η11 ≠ η22 with linear η21",
        source: A_SRC,
        params: &[r("a00"), r("d00"), nz("c10"), r("kappa1")],
        constraints: &["a00 != d00"],
        shape: Shape::Frame(&[
            ("beta1", "ck(-1, kappa1)"),
            ("beta2", "ck(0, kappa1)"),
            ("beta3", "ck(0, 0)"),
            ("eta11", "a00*1|1"),
            ("eta21", "c10*(-kappa1*1|1 + s|1 + d00/(d00-a00)*1|s)"),
            ("eta22", "d00*1|1"),
        ]),
        ..BASE
    },
    // ---------------------------------------------------------------- B
    Family {
        id: "b1",
        title: "η12 of degree (0,1)",
        source: B_SRC,
        params: &[nz("b01"), r("lambda1"), r("kappa1"), r("kappa3")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda1 - 1, kappa1 + kappa3)"),
            ("beta3", "ck(0, kappa3)"),
            ("eta12", "b01*(-kappa3*1|1 + 1|s)"),
        ]),
        ..BASE
    },
    Family {
        id: "b2",
        title: "constant η12",
        source: B_SRC,
        params: &[nz("b00"), r("lambda1"), r("lambda2"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda2, kappa2)"),
            ("beta3", "ck(lambda2 - lambda1, kappa2 - kappa1)"),
            ("eta12", "b00*1|1"),
        ]),
        ..BASE
    },
    Family {
        id: "b3",
        title: "η12 of degree (1,1), general λ1",
        source: B_SRC,
        params: &[nz("b11"), r("lambda1"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda1 - 2, kappa2)"),
            ("beta3", "ck(0, kappa2 - kappa1)"),
            ("eta12", B3_ETA),
        ]),
        ..BASE
    },
    Family {
        id: "b4",
        title: "η12 of degree (1,1), λ1 = 0",
        source: B_SRC,
        params: &[nz("b11"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(0, kappa1)"),
            ("beta2", "ck(-2, kappa2)"),
            ("beta3", "ck(0, kappa2 - kappa1)"),
            ("eta12", B4_ETA),
        ]),
        ..BASE
    },
    Family {
        id: "b5",
        title: "η12 = b11(s⊗s - κ3 s⊗1)",
        source: B_SRC,
        params: &[nz("b11"), r("lambda1"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda1 - 2, kappa2)"),
            ("beta3", "ck(0, kappa2 - kappa1)"),
            ("eta12", B5_ETA),
        ]),
        ..BASE
    },
    Family {
        id: "b6",
        title: "η12 linear, two coefficients",
        source: B_SRC,
        params: &[nz("b10"), r("b01"), r("lambda1"), r("lambda2"), r("kappa1"), r("kappa2")],
        constraints: &["lambda1*b10 + (lambda2 - lambda1 + 1)*b01 == 0"],
        regimes: &["b01 = -lambda1*b10/(lambda2 - lambda1 + 1)", "lambda1 = 0, lambda2 = -1"],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda2, kappa2)"),
            ("beta3", "ck(lambda2 - lambda1 + 1, kappa2 - kappa1)"),
            ("eta12", B6_ETA),
        ]),
        note: "The printed parameter list names b11; the formula uses b10, b01 and λ2.",
        ..BASE
    },
    Family {
        id: "b7",
        title: "η12 = b10(s⊗1 - κ1)",
        source: B_SRC,
        params: &[nz("b10"), r("lambda2"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(0, kappa1)"),
            ("beta2", "ck(lambda2, kappa2)"),
            ("beta3", "ck(lambda2 + 1, kappa2 - kappa1)"),
            ("eta12", B7_ETA),
        ]),
        ..BASE
    },
    Family {
        id: "b8",
        title: "η12 of degree (2,0), λ1 = 0",
        source: B_SRC,
        params: &[nz("b20"), r("lambda2"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(0, kappa1)"),
            ("beta2", "ck(lambda2, kappa2)"),
            ("beta3", "ck(lambda2 + 2, kappa2 - kappa1)"),
            ("eta12", B8_ETA),
        ]),
        ..BASE
    },
    Family {
        id: "b9",
        title: "η12 of degree (2,0), λ2 = -1",
        source: B_SRC,
        params: &[nz("b20"), r("lambda1"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(-1, kappa2)"),
            ("beta3", "ck(1 - lambda1, kappa2 - kappa1)"),
            ("eta12", B9_ETA),
        ]),
        ..BASE
    },
    Family {
        id: "b10",
        title: "η12 of degree (3,0), λ2 = 1",
        source: B_SRC,
        params: &[nz("b30"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(0, kappa1)"),
            ("beta2", "ck(1, kappa2)"),
            ("beta3", "ck(2, kappa2 - kappa1)"),
            ("eta12", B10_ETA),
        ]),
        note: "The printed formula has a misplaced parenthesis after the first term; it is read as one sum.",
        ..BASE
    },
    Family {
        id: "b11",
        title: "η12 of degree 3, λ1 = 2/3",
        source: B_SRC,
        params: &[nz("b30"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(2/3, kappa1)"),
            ("beta2", "ck(-5/3, kappa2)"),
            ("beta3", "ck(2/3, kappa2 - kappa1)"),
            ("eta12", B11_ETA),
        ]),
        ..BASE
    },
    Family {
        id: "b12",
        title: "η12 of degree (2,1), λ1 = 0",
        source: B_SRC,
        params: &[nz("b21"), r("lambda2"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(0, kappa1)"),
            ("beta2", "ck(lambda2, kappa2)"),
            ("beta3", "ck(lambda2 + 3, kappa2 - kappa1)"),
            ("eta12", B12_ETA),
        ]),
        ..BASE
    },
    Family {
        id: "b13",
        title: "η12 of degree (2,1), λ2 = -1",
        source: B_SRC,
        params: &[nz("b21"), r("kappa1"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "2*lambda1*s|1 - 1|s + kappa1*1|1"),
            ("beta2", "ck(-1, kappa2)"),
            ("beta3", "ck(0, kappa2 - kappa1)"),
            ("eta12", B13_ETA),
        ]),
        note: "The printed β1 refers to λ1, which is not among the listed parameters.",
        ..BASE
    },
    Family {
        id: "b14",
        title: "η11 = η22 constant",
        source: B_SRC,
        params: &[nz("a00"), nz("b00"), r("lambda1"), r("kappa1")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda1, kappa1)"),
            ("beta3", "ck(0, 0)"),
            ("eta11", "a00*1|1"),
            ("eta12", "b00*1|1"),
            ("eta22", "a00*1|1"),
        ]),
        ..BASE
    },
    Family {
        id: "b15",
        title: "η11 ≠ η22 constant",
        source: B_SRC,
        params: &[r("a00"), r("d00"), r("b00"), r("lambda1"), r("kappa1")],
        constraints: &["a00 != d00"],
        shape: Shape::Frame(&[
            ("beta1", "lambda1*1|1 - 1|s + kappa1*1|1"),
            ("beta2", "lambda1*1|1 - 1|s + kappa1*1|1"),
            ("beta3", "ck(0, 0)"),
            ("eta11", "a00*1|1"),
            ("eta12", "b00*1|1"),
            ("eta22", "d00*1|1"),
        ]),
        ..BASE
    },
    Family {
        id: "b16",
        title: "η11 ≠ η22 with linear η12",
        source: B_SRC,
        params: &[r("a00"), r("d00"), r("b10"), r("kappa1")],
        constraints: &["a00 != d00"],
        shape: Shape::Frame(&[
            ("beta1", "-1|s + kappa1*1|1"),
            ("beta2", "ck(-1, kappa1)"),
            ("beta3", "ck(0, 0)"),
            ("eta11", "a00*1|1"),
            ("eta12", "b10*(-kappa1*1|1 + s|1 + d00/(d00-a00)*1|s)"),
            ("eta22", "d00*1|1"),
        ]),
        note: "β1 is printed with the factor 1 of 1⊗s missing.",
        ..BASE
    },
    // ---------------------------------------------------------------- C
    Family {
        id: "c1",
        title: "η11 = 0, constant η",
        source: C_SRC,
        params: &[nz("b00"), nz("c00"), r("d00"), r("lambda1"), r("kappa1")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda1, kappa1)"),
            ("beta3", "ck(0, 0)"),
            ("eta12", "b00*1|1"),
            ("eta21", "c00*1|1"),
            ("eta22", "d00*1|1"),
        ]),
        ..BASE
    },
    Family {
        id: "c2",
        title: "η22 = 0, constant η",
        source: C_SRC,
        params: &[r("a00"), nz("b00"), nz("c00"), r("lambda1"), r("kappa1")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda1, kappa1)"),
            ("beta3", "ck(0, 0)"),
            ("eta11", "a00*1|1"),
            ("eta12", "b00*1|1"),
            ("eta21", "c00*1|1"),
        ]),
        ..BASE
    },
    Family {
        id: "c3",
        title: "η12, η21 of degree (0,1)",
        source: C_SRC,
        params: &[nz("b01"), nz("c01"), r("lambda1"), r("kappa1")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda1, kappa1)"),
            ("beta3", "ck(1, 0)"),
            ("eta12", "b01*1|s"),
            ("eta21", "c01*1|s"),
        ]),
        ..BASE
    },
    Family {
        id: "c4",
        title: "all η_ij constant and nonzero",
        source: C_SRC,
        params: &[nz("a00"), nz("b00"), nz("c00"), nz("d00"), r("lambda1"), r("kappa1")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda1, kappa1)"),
            ("beta3", "ck(0, 0)"),
            ("eta11", "a00*1|1"),
            ("eta12", "b00*1|1"),
            ("eta21", "c00*1|1"),
            ("eta22", "d00*1|1"),
        ]),
        ..BASE
    },
    Family {
        id: "c5",
        title: "proportional η_ij, degree 1",
        source: C_SRC,
        params: &[nz("a10"), nz("b10"), r("lambda1"), r("kappa1")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda1, kappa1)"),
            ("beta3", "ck(1, 0)"),
            ("eta11", "a10*(-kappa1*1|1 + s|1 - lambda1*1|s)"),
            ("eta12", "b10/a10*eta11"),
            ("eta21", "-a10/b10*eta11"),
            ("eta22", "-eta11"),
        ]),
        ..BASE
    },
    Family {
        id: "c6",
        title: "proportional η_ij, degree 2, λ1 = 0",
        source: C_SRC,
        params: &[nz("a20"), nz("b20"), r("kappa1")],
        shape: Shape::Frame(&[
            ("beta1", "ck(0, kappa1)"),
            ("beta2", "ck(0, kappa1)"),
            ("beta3", "ck(2, 0)"),
            ("eta11", "a20/4*(2*kappa1^2*1|1 - kappa1*1|s - 4*kappa1*s|1 + s|s + 4*s(2)|1)"),
            ("eta12", "b20/a20*eta11"),
            ("eta21", "-a20/b20*eta11"),
            ("eta22", "-eta11"),
        ]),
        ..BASE
    },
    Family {
        id: "c7",
        title: "proportional η_ij, degree 2, λ1 = -1",
        source: C_SRC,
        params: &[nz("a20"), nz("b20"), r("kappa1")],
        shape: Shape::Frame(&[
            ("beta1", "ck(-1, kappa1)"),
            ("beta2", "ck(-1, kappa1)"),
            ("beta3", "ck(2, 0)"),
            ("eta11", "a20*(kappa1^2/2*1|1 - kappa1*s|1 - 3/4*kappa1*1|s + 3/4*s|s + 1/2*1|s(2) + s(2)|1)"),
            ("eta12", "b20/a20*eta11"),
            ("eta21", "-a20/b20*eta11"),
            ("eta22", "-eta11"),
        ]),
        ..BASE
    },
    Family {
        id: "c8",
        title: "proportional η_ij, degree 3",
        source: C_SRC,
        params: &[nz("a21"), nz("b21"), r("kappa1")],
        shape: Shape::Frame(&[
            ("beta1", "ck(0, kappa1)"),
            ("beta2", "ck(0, kappa1)"),
            ("beta3", "ck(3, 0)"),
            ("eta11", "a21*((s(2)|s - s|s(2)) + kappa1*1|s(2) + 1/2*kappa1^2*s|1 - kappa1*s|s)"),
            ("eta12", "b21/a21*eta11"),
            ("eta21", "-a21/b21*eta11"),
            ("eta22", "-eta11"),
        ]),
        ..BASE
    },
    // ---------------------------------------------------------------- D
    Family {
        id: "d1",
        title: "η ≠ 0, η12 and η22 constant",
        source: D_SRC,
        params: &[nz("a"), nz("b00"), nz("d00")],
        shape: Shape::Frame(&[
            ("beta1", "ck(0, 0)"),
            ("beta2", "ck(0, 0)"),
            ("beta3", "ck(0, 0)"),
            ("eta", "a*1|1"),
            ("eta12", "b00*1|1"),
            ("eta22", "d00*1|1"),
        ]),
        ..BASE
    },
    Family {
        id: "d2",
        title: "η ≠ 0, constant η12, optional α'_1",
        source: D_SRC,
        params: &[nz("a"), nz("b00"), r("w01"), r("lambda2"), r("kappa2")],
        constraints: &["lambda2*w01 == 0", "kappa2*w01 == 0"],
        regimes: &["w01 = 0", "lambda2 = 0, kappa2 = 0"],
        shape: Shape::Frame(&[
            ("beta1", "ck(0, 0)"),
            ("beta2", "ck(lambda2, kappa2)"),
            ("beta3", "ck(lambda2, kappa2)"),
            ("alpha_m", "w01*(1|s - s|1)"),
            ("eta", "a*1|1"),
            ("eta12", "b00*1|1"),
        ]),
        ..BASE
    },
    Family {
        id: "d3",
        title: "η ≠ 0, constant η22",
        source: D_SRC,
        params: &[nz("a"), nz("d00"), r("lambda2"), r("kappa2")],
        shape: Shape::Frame(&[
            ("beta1", "ck(0, 0)"),
            ("beta2", "ck(lambda2, kappa2)"),
            ("beta3", "ck(0, 0)"),
            ("eta", "a*1|1"),
            ("eta22", "d00*1|1"),
        ]),
        ..BASE
    },
    // ---------------------------------------------------------------- E
    Family {
        id: "e1",
        title: "α'_m with η12 of degree (0,1)",
        source: E_SRC,
        params: &[ALPHA_M, nz("w"), nz("b01"), r("lambda1"), r("kappa1"), r("kappa3")],
        regimes: &["alpha_m = a1, lambda1 = 2, kappa3 = kappa1"],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda1 + 1, kappa1 + kappa3)"),
            ("beta3", "ck(0, kappa3)"),
            ("alpha_m", ALPHA_CHOICE),
            ("eta12", "b01*(-kappa3*1|1 + 1|s)"),
        ]),
        ..BASE
    },
    Family {
        id: "e2",
        title: "α'_m with constant η12",
        source: E_SRC,
        params: &[ALPHA_M, nz("w"), nz("b00"), r("lambda1"), r("lambda2"), r("kappa1"), r("kappa2")],
        regimes: FREE_ALPHA_REGIMES,
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda2, kappa2)"),
            ("beta3", "ck(lambda2 - lambda1, kappa2 - kappa1)"),
            ("alpha_m", ALPHA_CHOICE),
            ("eta12", "b00*1|1"),
        ]),
        ..BASE
    },
    Family {
        id: "e3",
        title: "α'_m with η12 of degree (1,1)",
        source: E_SRC,
        params: &[ALPHA_M, nz("w"), nz("b11"), r("lambda1"), r("kappa1"), r("kappa2")],
        regimes: &["alpha_m = a1, lambda1 = -1, kappa2 = 2*kappa1"],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda1 - 2, kappa2)"),
            ("beta3", "ck(0, kappa2 - kappa1)"),
            ("alpha_m", ALPHA_CHOICE),
            ("eta12", B3_ETA),
        ]),
        ..BASE
    },
    Family {
        id: "e4",
        title: "α'_m with η12 of degree (1,1), λ1 = 0",
        source: E_SRC,
        params: &[ALPHA_M, nz("w"), nz("b11"), r("kappa1"), r("kappa2")],
        regimes: &["kappa2 = 2*kappa1"],
        shape: Shape::Frame(&[
            ("beta1", "ck(0, kappa1)"),
            ("beta2", "ck(-2, kappa2)"),
            ("beta3", "ck(0, kappa2 - kappa1)"),
            ("alpha_m", ALPHA_CHOICE),
            ("eta12", B4_ETA),
        ]),
        ..BASE
    },
    Family {
        id: "e5",
        title: "α'_m with η12 = b11(s⊗s - κ3 s⊗1)",
        source: E_SRC,
        params: &[ALPHA_M, nz("w"), nz("b11"), r("lambda1"), r("kappa1"), r("kappa2")],
        regimes: &["alpha_m = a1, lambda1 = -1, kappa2 = 2*kappa1"],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda1 - 2, kappa2)"),
            ("beta3", "ck(0, kappa2 - kappa1)"),
            ("alpha_m", ALPHA_CHOICE),
            ("eta12", B5_ETA),
        ]),
        ..BASE
    },
    Family {
        id: "e6",
        title: "α'_m with linear η12",
        source: E_SRC,
        params: &[ALPHA_M, nz("w"), nz("b10"), r("b01"), r("lambda1"), r("lambda2"), r("kappa1"), r("kappa2")],
        constraints: &["lambda1*b10 + (lambda2 - lambda1 + 1)*b01 == 0"],
        regimes: &[
            "alpha_m = a1, lambda2 = 2*lambda1 - 1, kappa2 = 2*kappa1, b01 = -lambda1*b10/(lambda2 - lambda1 + 1)",
            "alpha_m = a2, lambda1 = 0, lambda2 = -3, kappa2 = 2*kappa1, b01 = 0",
            "alpha_m = a2pp, lambda1 = 1/2, lambda2 = -1, kappa2 = 2*kappa1, b01 = -lambda1*b10/(lambda2 - lambda1 + 1)",
            "alpha_m = a3, lambda1 = 2/3, lambda2 = -5/3, kappa2 = 2*kappa1, b01 = -lambda1*b10/(lambda2 - lambda1 + 1)",
        ],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(lambda2, kappa2)"),
            ("beta3", "ck(lambda2 - lambda1 + 1, kappa2 - kappa1)"),
            ("alpha_m", ALPHA_CHOICE),
            ("eta12", B6_ETA),
        ]),
        note: "The printed parameter list names b11; the formula uses b10, b01 and λ2.",
        ..BASE
    },
    Family {
        id: "e7",
        title: "α'_m with η12 = b10(s⊗1 - κ1)",
        source: E_SRC,
        params: &[ALPHA_M, nz("w"), nz("b10"), r("lambda2"), r("kappa1"), r("kappa2")],
        regimes: &["alpha_m = a1, lambda2 = -1, kappa2 = 2*kappa1", "alpha_m = a2, lambda2 = -3, kappa2 = 2*kappa1"],
        shape: Shape::Frame(&[
            ("beta1", "ck(0, kappa1)"),
            ("beta2", "ck(lambda2, kappa2)"),
            ("beta3", "ck(lambda2 + 1, kappa2 - kappa1)"),
            ("alpha_m", ALPHA_CHOICE),
            ("eta12", B7_ETA),
        ]),
        ..BASE
    },
    Family {
        id: "e8",
        title: "α'_m with η12 of degree (2,0), λ1 = 0",
        source: E_SRC,
        params: &[ALPHA_M, nz("w"), nz("b20"), r("lambda2"), r("kappa1"), r("kappa2")],
        regimes: &["alpha_m = a1, lambda2 = -1, kappa2 = 2*kappa1", "alpha_m = a2, lambda2 = -3, kappa2 = 2*kappa1"],
        shape: Shape::Frame(&[
            ("beta1", "ck(0, kappa1)"),
            ("beta2", "ck(lambda2, kappa2)"),
            ("beta3", "ck(lambda2 + 2, kappa2 - kappa1)"),
            ("alpha_m", ALPHA_CHOICE),
            ("eta12", B8_ETA),
        ]),
        note: "The vanishing list repeats η12; it is read as η21 = 0.",
        ..BASE
    },
    Family {
        id: "e9",
        title: "α'_m with η12 of degree (2,0), λ2 = -1",
        source: E_SRC,
        params: &[ALPHA_M, nz("w"), nz("b20"), r("lambda1"), r("kappa1"), r("kappa2")],
        regimes: &["alpha_m = a1, lambda1 = 0, kappa2 = 2*kappa1", "alpha_m = a2pp, lambda1 = 1/2, kappa2 = 2*kappa1"],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(-1, kappa2)"),
            ("beta3", "ck(1 - lambda1, kappa2 - kappa1)"),
            ("alpha_m", ALPHA_CHOICE),
            ("eta12", B9_ETA),
        ]),
        note: "The vanishing list repeats η12; it is read as η21 = 0.",
        ..BASE
    },
    Family {
        id: "e10",
        title: "α'_m with η12 of degree (3,0)",
        source: E_SRC,
        params: &[ALPHA_M, nz("w"), nz("b30"), r("kappa1"), r("kappa2")],
        regimes: &["kappa2 = 2*kappa1"],
        shape: Shape::Frame(&[
            ("beta1", "ck(0, kappa1)"),
            ("beta2", "ck(1, kappa2)"),
            ("beta3", "ck(2, kappa2 - kappa1)"),
            ("alpha_m", ALPHA_CHOICE),
            ("eta12", B10_ETA),
        ]),
        note: "The vanishing list repeats η12; it is read as η21 = 0.",
        ..BASE
    },
    Family {
        id: "e11",
        title: "α'_m with η12 of degree 3, λ1 = 2/3",
        source: E_SRC,
        params: &[ALPHA_M, nz("w"), nz("b30"), r("kappa1"), r("kappa2")],
        regimes: &["alpha_m = a3, kappa2 = 2*kappa1"],
        shape: Shape::Frame(&[
            ("beta1", "ck(2/3, kappa1)"),
            ("beta2", "ck(-5/3, kappa2)"),
            ("beta3", "ck(2/3, kappa2 - kappa1)"),
            ("alpha_m", ALPHA_CHOICE),
            ("eta12", B11_ETA),
        ]),
        note: "The vanishing list repeats η12; it is read as η21 = 0.",
        ..BASE
    },
    Family {
        id: "e12",
        title: "α'_m with η12 of degree (2,1), λ1 = 0",
        source: E_SRC,
        params: &[ALPHA_M, nz("w"), nz("b21"), r("lambda2"), r("kappa1"), r("kappa2")],
        regimes: &["alpha_m = a1, lambda2 = -1, kappa2 = 2*kappa1", "alpha_m = a2, lambda2 = -3, kappa2 = 2*kappa1"],
        shape: Shape::Frame(&[
            ("beta1", "ck(0, kappa1)"),
            ("beta2", "ck(lambda2, kappa2)"),
            ("beta3", "ck(lambda2 + 3, kappa2 - kappa1)"),
            ("alpha_m", ALPHA_CHOICE),
            ("eta12", B12_ETA),
        ]),
        note: "The vanishing list repeats η12; it is read as η21 = 0.",
        ..BASE
    },
    Family {
        id: "e13",
        title: "α'_m with η12 of degree (2,1), λ2 = -1",
        source: E_SRC,
        params: &[ALPHA_M, nz("w"), nz("b21"), r("kappa1"), r("kappa2")],
        regimes: &["alpha_m = a1, kappa2 = 2*kappa1"],
        shape: Shape::Frame(&[
            ("beta1", "2*lambda1*s|1 - 1|s + kappa1*1|1"),
            ("beta2", "ck(-1, kappa2)"),
            ("beta3", "ck(0, kappa2 - kappa1)"),
            ("alpha_m", ALPHA_CHOICE),
            ("eta12", B13_ETA),
        ]),
        note: "The vanishing list repeats η12; it is read as η21 = 0. The printed β1 refers to λ1, which is not among the listed parameters.",
        ..BASE
    },
    Family {
        id: "e14",
        title: "α'_1 with η22 = 2η11",
        source: E_SRC,
        params: &[nz("a00"), nz("w01"), r("lambda1"), r("kappa1")],
        shape: Shape::Frame(&[
            ("beta1", "ck(lambda1, kappa1)"),
            ("beta2", "ck(2*lambda1 - 1, 2*kappa1)"),
            ("beta3", "ck(0, 0)"),
            ("alpha_m", "c01*(1|s - s|1)"),
            ("eta11", "a00*1|1"),
            ("eta22", "2*a00*1|1"),
        ]),
        ..BASE
    },
    Family {
        id: "e15",
        title: "α'_1 with η22 = 2η11 and constant η12",
        source: E_SRC,
        params: &[nz("a00"), nz("b00"), nz("w01")],
        shape: Shape::Frame(&[
            ("beta1", "ck(1, 0)"),
            ("beta2", "ck(1, 0)"),
            ("beta3", "ck(0, 0)"),
            ("alpha_m", "c01*(1|s - s|1)"),
            ("eta11", "a00*1|1"),
            ("eta12", "b00*1|1"),
            ("eta22", "2*a00*1|1"),
        ]),
        ..BASE
    },
    Family {
        id: "e16",
        title: "α'_1 with η22 = 2η11 and linear η12",
        source: E_SRC,
        params: &[nz("a00"), nz("b10"), nz("w01")],
        shape: Shape::Frame(&[
            ("beta1", "ck(0, 0)"),
            ("beta2", "ck(-1, 0)"),
            ("beta3", "ck(0, 0)"),
            ("alpha_m", "c01*(1|s - s|1)"),
            ("eta11", "a00*1|1"),
            ("eta12", "b10*(s|1 + 2*1|s)"),
            ("eta22", "2*a00*1|1"),
        ]),
        ..BASE
    },
    // ---------------------------------------------------------------- named examples
    Family {
        id: "tsv",
        rank: 3,
        title: "twisted Schrödinger–Virasoro TSV(c)",
        source: EX_SRC,
        params: &[r("c")],
        shape: Shape::Frame(&[
            ("beta1", "1/2*s|1 - 1|s - c*1|1"),
            ("beta2", "-s|1 - 1|s - 2*c*1|1"),
            ("alpha_m", "2*((s(2)|1 - 1|s(2)) + c*(s|1 - 1|s))"),
        ]),
        note: "A 2-type algebra: mtype-C with w02 = -2, κ1 = -c.",
        ..BASE
    },
    Family {
        id: "t-ab",
        rank: 3,
        title: "T(a, b)",
        source: EX_SRC,
        params: &[r("a"), r("b")],
        shape: Shape::Frame(&[
            ("beta1", "ck(a - 1, b)"),
            ("beta2", "ck(2*a - 3, 2*b)"),
            ("alpha_m", "-1|s + s|1"),
        ]),
        note: "A 1-type algebra with λ1 = a-1, κ1 = b and c01 = -1, i.e. α'_1 = s⊗1 - 1⊗s.",
        ..BASE
    },
    Family {
        id: "dsv",
        rank: 3,
        title: "DSV = T(0, 0)",
        source: EX_SRC,
        shape: Shape::Frame(&[("beta1", "ck(-1, 0)"), ("beta2", "ck(-3, 0)"), ("alpha_m", "s|1 - 1|s")]),
        ..BASE
    },
    Family {
        id: "sv-conformal",
        rank: 3,
        title: "Schrödinger–Virasoro conformal algebra SV",
        source: EX_SRC,
        shape: Shape::Frame(&[("beta1", "1/2*s|1 - 1|s"), ("beta2", "-1|s"), ("alpha_m", "s|1 - 1|s")]),
        note: "Basis e0 = -L, e1 = -Y, e2 = M.  Equal to mtype-B at λ1 = 1/2, κ1 = 0, a = 0, w01 = -1; \
               at w01 = 1 the two differ by e2 ↦ -e2.",
        ..BASE
    },
    Family {
        id: "sv-extended",
        title: "extended Schrödinger–Virasoro conformal algebra",
        source: EX_SRC,
        shape: Shape::Frame(&[
            ("beta1", "1/2*s|1 - 1|s"),
            ("beta2", "-1|s"),
            ("beta3", "-1|s"),
            ("alpha_m", "s|1 - 1|s"),
            ("eta11", "1|1"),
            ("eta22", "2*1|1"),
        ]),
        note: "Basis e0 = -L, e1 = -Y, e2 = M, e3 = N.  Equal to e14 at w01 = -1, λ1 = 1/2, κ1 = 0, a00 = 1.",
        ..BASE
    },
];
