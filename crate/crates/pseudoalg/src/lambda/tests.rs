use super::*;
use crate::algebra::virasoro;
use crate::catalog::{self, Mode, FAMILIES};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn s(n: u32) -> HPoly {
    HPoly::basis(n)
}

#[test]
fn virasoro_lambda_bracket() {
    let l = to_lambda(&virasoro());
    assert_eq!(
        l.entry(0, 0),
        &[
            LambdaTerm { degree: 0, action: s(1).scale(&Rat::int(-1)), target: 0 },
            LambdaTerm { degree: 1, action: HPoly::constant(Rat::int(2)), target: 0 },
        ]
    );
    let text = format_lambda(&l, Charset::Utf8);
    assert!(text.contains("[e0 _λ e0] = (2λ - ∂) e0"), "{text}");
    assert!(text.contains("convention canonical"));
    assert!(format_lambda(&l, Charset::Ascii).contains("[e0 _lam e0] = (2*lam - d) e0"));
    let rev = to_lambda_with(&virasoro(), SignConvention::PaperReverse);
    assert!(rev.to_string().contains("[e0 _λ e0] = (-2λ - ∂) e0"), "{rev}");
    assert!(rev.to_string().contains("convention paper-reverse"));
    assert_eq!(from_lambda(&l).unwrap(), virasoro());
    assert_eq!(from_lambda(&rev).unwrap(), virasoro());
}

#[test]
fn canonical_input_is_a_single_term() {
    let mut a = PseudoAlgebra::new("x", 2);
    a.set(1, 1, 1, Tensor2::basis(2, 0));
    let l = to_lambda(&a);
    assert_eq!(l.entries.len(), 1);
    assert_eq!(l.entry(1, 1), &[LambdaTerm { degree: 2, action: HPoly::one(), target: 1 }]);
    assert_eq!(format_lambda(&l, Charset::Utf8).lines().nth(1), Some("[e1 _λ e1] = (1/2)λ^2 e1"));
}

#[test]
fn zero_bracket_is_empty() {
    let a = PseudoAlgebra::new("abelian", 3);
    let l = to_lambda(&a);
    assert!(l.entries.is_empty());
    assert_eq!(from_lambda(&l).unwrap(), a);
}

#[test]
fn degree_zero_action_s_is_rewritten() {
    let l = LambdaBracket {
        name: "x".into(),
        rank: 1,
        convention: SignConvention::Canonical,
        params: BTreeMap::new(),
        entries: vec![LambdaEntry { i: 0, j: 0, terms: vec![LambdaTerm { degree: 0, action: s(1), target: 0 }] }],
    };
    let a = from_lambda(&l).unwrap();
    assert_eq!(*a.get(0, 0, 0), &Tensor2::basis(1, 0) + &Tensor2::basis(0, 1));
    assert_eq!(to_lambda(&a), l);
}

#[test]
fn non_canonical_input_is_rejected() {
    let t = |d| LambdaTerm { degree: d, action: HPoly::one(), target: 0 };
    let mut l = to_lambda(&virasoro());
    l.entries[0].terms = vec![t(1), t(0)];
    assert!(matches!(from_lambda(&l), Err(LambdaError::NotCanonical { .. })));
    l.entries[0].terms = vec![LambdaTerm { degree: 0, action: HPoly::one(), target: 3 }];
    assert!(matches!(from_lambda(&l), Err(LambdaError::IndexOutOfRange { .. })));
}

/// One instance of every buildable family (corrected tables).
fn catalog_instances() -> Vec<PseudoAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    FAMILIES
        .iter()
        .filter_map(|f| {
            let p = catalog::sample(f, Mode::Corrected, &mut rng)?;
            catalog::build_mode(f.id, &p, Mode::Corrected).ok().map(|b| b.algebra)
        })
        .collect()
}

#[test]
fn round_trip_on_the_catalog() {
    let all = catalog_instances();
    assert!(all.len() > 80, "{}", all.len());
    for a in &all {
        for c in [SignConvention::Canonical, SignConvention::PaperReverse] {
            let l = to_lambda_with(a, c);
            assert_eq!(l.convention, c);
            assert_eq!(&from_lambda(&l).unwrap(), a, "{}", a.name());
            assert_eq!(l.with_convention(SignConvention::Canonical), to_lambda(a));
        }
    }
}

/// `γ ↦ (x⊗y)·γ` on every bracket with first index `i` (resp. second `j`).
fn multiply_slot(a: &PseudoAlgebra, i: usize, first: bool) -> PseudoAlgebra {
    let mut out = a.clone();
    let f = if first { Tensor2::basis(1, 0) } else { Tensor2::basis(0, 1) };
    for ((p, q, k), t) in a.components() {
        if (first && p == i) || (!first && q == i) {
            out.set(p, q, k, f.mul(t));
        }
    }
    out
}

/// `λ^a ∂^b`-coefficients (ordinary powers) of `[e_i λ e_j]` towards `e_k`.
fn ordinary(l: &LambdaBracket, i: usize, j: usize, k: usize) -> BTreeMap<(u32, u32), Rat> {
    let mut out = BTreeMap::new();
    for t in l.entry(i, j).iter().filter(|t| t.target == k) {
        for (m, c) in t.action.terms() {
            let v = c * &Rat::from_bigints(1.into(), factorial(t.degree as u64) * factorial(m as u64));
            *out.entry((t.degree, m)).or_insert_with(Rat::zero) += &v;
        }
    }
    out.retain(|_, c: &mut Rat| !c.is_zero());
    out
}

fn times(p: &BTreeMap<(u32, u32), Rat>, lam: i64, del: i64) -> BTreeMap<(u32, u32), Rat> {
    let mut out: BTreeMap<(u32, u32), Rat> = BTreeMap::new();
    for ((a, b), c) in p {
        *out.entry((a + 1, *b)).or_insert_with(Rat::zero) += &(c * &Rat::int(lam));
        *out.entry((*a, b + 1)).or_insert_with(Rat::zero) += &(c * &Rat::int(del));
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[test]
fn sesquilinearity() {
    // paper-reverse: [∂a λ b] = −λ[a λ b], [a λ ∂b] = (λ + ∂)[a λ b];
    // canonical: λ ↦ −λ in both.
    for a in catalog_instances().iter().step_by(3) {
        for (conv, sign) in [(SignConvention::PaperReverse, 1), (SignConvention::Canonical, -1)] {
            let l = to_lambda_with(a, conv);
            for i in 0..a.rank() {
                let left = to_lambda_with(&multiply_slot(a, i, true), conv);
                let right = to_lambda_with(&multiply_slot(a, i, false), conv);
                for x in 0..a.rank() {
                    for k in 0..a.rank() {
                        assert_eq!(ordinary(&left, i, x, k), times(&ordinary(&l, i, x, k), -sign, 0), "{}", a.name());
                        assert_eq!(ordinary(&right, x, i, k), times(&ordinary(&l, x, i, k), sign, 1), "{}", a.name());
                    }
                }
            }
        }
    }
}

fn canonical_bracket() -> impl Strategy<Value = LambdaBracket> {
    let term = (0u32..5, prop::collection::vec(-4i64..5, 1..4), 0usize..3);
    prop::collection::vec(((0usize..3, 0usize..3), prop::collection::vec(term, 1..5)), 0..6).prop_map(|raw| {
        let mut map: BTreeMap<(usize, usize), BTreeMap<(usize, u32), HPoly>> = BTreeMap::new();
        for ((i, j), terms) in raw {
            for (d, coeffs, k) in terms {
                let h = HPoly::from_terms(coeffs.iter().enumerate().map(|(n, c)| (n as u32, Rat::int(*c))));
                let e = map.entry((i, j)).or_default().entry((k, d)).or_default();
                *e = &*e + &h;
            }
        }
        let entries = map
            .into_iter()
            .filter_map(|((i, j), ts)| {
                let terms: Vec<LambdaTerm> = ts
                    .into_iter()
                    .filter(|(_, h)| !h.is_zero())
                    .map(|((k, d), action)| LambdaTerm { degree: d, action, target: k })
                    .collect();
                (!terms.is_empty()).then_some(LambdaEntry { i, j, terms })
            })
            .collect();
        LambdaBracket {
            name: "random".into(),
            rank: 3,
            convention: SignConvention::Canonical,
            params: BTreeMap::new(),
            entries,
        }
    })
}

proptest! {
    #[test]
    fn to_lambda_inverts_from_lambda(l in canonical_bracket(), reverse in any::<bool>()) {
        let l = if reverse { l.with_convention(SignConvention::PaperReverse) } else { l };
        let a = from_lambda(&l).unwrap();
        prop_assert_eq!(to_lambda_with(&a, l.convention), l);
    }
}
