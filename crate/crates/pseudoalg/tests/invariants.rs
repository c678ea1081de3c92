//! Structural invariants: Hopf axioms, the canonical form of H⊗H, text
//! round trips of every catalog family, mutation detection and derived series.

use proptest::prelude::*;
use pseudoalg::catalog::{build_mode, list_families, sample, Mode, Params};
use pseudoalg::derived::{derived_length, derived_series};
use pseudoalg::io::{parse_algebra, print_algebra};
use pseudoalg::tensor::normal_form;
use pseudoalg::{Classification, HPoly, PseudoAlgebra, Rat, Tensor2, Tensor3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const HOPF_DEGREE: u32 = 8;

fn small_rat(rng: &mut impl Rng) -> Rat {
    loop {
        let r = Rat::new(rng.gen_range(-9..=9), rng.gen_range(1..=4));
        if !r.is_zero() {
            return r;
        }
    }
}

/// `(Δ ⊗ id) t` for `t ∈ H⊗H`.
fn delta_first(t: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t.terms() {
        for ((x, y), d) in HPoly::basis(a).coproduct().terms() {
            out.add_term(x, y, b, c * d);
        }
    }
    out
}

/// `(id ⊗ Δ) t` for `t ∈ H⊗H`.
fn delta_second(t: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t.terms() {
        for ((x, y), d) in HPoly::basis(b).coproduct().terms() {
            out.add_term(a, x, y, c * d);
        }
    }
    out
}

fn components(a: &PseudoAlgebra) -> Vec<((usize, usize, usize), Tensor2)> {
    a.components().map(|(k, t)| (k, t.clone())).collect()
}

/// Samples one corrected instance of every family that admits a draw.
fn catalog_instances(seed: u64) -> Vec<(String, Params, PseudoAlgebra)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for f in list_families() {
        let Some(p) = sample(f, Mode::Corrected, &mut rng) else { continue };
        if let Ok(b) = build_mode(f.id, &p, Mode::Corrected) {
            out.push((f.id.to_string(), p, b.algebra));
        }
    }
    out
}

#[test]
fn hopf_axioms_through_degree_eight() {
    for m in 0..=HOPF_DEGREE {
        let x = HPoly::basis(m);
        let dx = x.coproduct();
        // coassociativity
        assert_eq!(delta_first(&dx), delta_second(&dx), "s^({m})");
        // counit
        assert_eq!(dx.partial_counit(1), x);
        assert_eq!(dx.partial_counit(2), x);
        // antipode: m(S ⊗ id)Δ = m(id ⊗ S)Δ = ε
        let mut left = HPoly::zero();
        let mut right = HPoly::zero();
        for ((a, b), c) in dx.terms() {
            left = &left + &HPoly::basis(a).antipode().mul(&HPoly::basis(b)).scale(c);
            right = &right + &HPoly::basis(a).mul(&HPoly::basis(b).antipode()).scale(c);
        }
        assert_eq!(left, HPoly::constant(x.counit()));
        assert_eq!(right, HPoly::constant(x.counit()));
        for n in 0..=HOPF_DEGREE - m {
            let y = HPoly::basis(n);
            // Δ and ε are algebra maps, S is an (anti-)homomorphism
            assert_eq!(x.mul(&y).coproduct(), dx.mul(&y.coproduct()), "Δ(s^({m}) s^({n}))");
            assert_eq!(x.mul(&y).counit(), &x.counit() * &y.counit());
            assert_eq!(x.mul(&y).antipode(), y.antipode().mul(&x.antipode()));
            // cocommutativity
            assert_eq!(dx.swap(), dx);
        }
    }
}

fn tensor_strategy() -> impl Strategy<Value = Tensor2> {
    prop::collection::vec((0u32..7, 0u32..7, -20i64..=20, 1i64..=5), 0..10)
        .prop_map(|v| Tensor2::from_terms(v.into_iter().map(|(a, b, n, d)| (a, b, Rat::new(n, d)))))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn normal_form_reconstructs(t in tensor_strategy()) {
        let nf = normal_form(&t);
        prop_assert_eq!(nf.reconstruct(), t.clone());
        prop_assert_eq!(nf.is_empty(), t.is_zero());
        // the form is unique: it is unchanged under re-normalization
        prop_assert_eq!(normal_form(&nf.reconstruct()), nf);
    }

    #[test]
    fn normal_form_is_linear(t in tensor_strategy(), u in tensor_strategy(), n in -5i64..=5) {
        let c = Rat::int(n);
        let mut sum = t.clone();
        sum.add_scaled(&u, &c);
        let mut want = normal_form(&t).reconstruct();
        want.add_scaled(&normal_form(&u).reconstruct(), &c);
        prop_assert_eq!(normal_form(&sum).reconstruct(), want);
    }
}

#[test]
fn every_catalog_family_survives_a_text_round_trip() {
    let instances = catalog_instances(7);
    assert!(instances.len() >= list_families().len() - 8, "too few families sampled");
    for (id, p, a) in &instances {
        let text = print_algebra(a);
        let back = parse_algebra(&text).unwrap_or_else(|e| panic!("{id} {p:?}: {e}\n{text}"));
        assert_eq!(back.rank(), a.rank(), "{id}");
        assert_eq!(components(&back), components(a), "{id} {p:?}");
        assert_eq!(print_algebra(&back), text, "{id}");
    }
}

#[test]
fn single_coefficient_mutations_are_detected() {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let lie: Vec<PseudoAlgebra> = catalog_instances(11)
        .into_iter()
        .map(|(_, _, a)| a)
        .filter(|a| a.classify() == Classification::Lie && !a.is_abelian())
        .collect();
    assert!(lie.len() > 10);
    let mut caught_by_jacobi = 0;
    for trial in 0..50 {
        let a = &lie[rng.gen_range(0..lie.len())];
        let comps = components(a);
        let ((i, j, k), t) = &comps[rng.gen_range(0..comps.len())];
        let mut mutated = t.clone();
        if rng.gen_bool(0.5) {
            // perturb an existing coefficient
            let terms: Vec<(u32, u32)> = t.terms().map(|(k, _)| k).collect();
            let (x, y) = terms[rng.gen_range(0..terms.len())];
            mutated.add_term(x, y, small_rat(&mut rng));
        } else {
            // introduce a new monomial
            mutated.add_term(rng.gen_range(0..5), rng.gen_range(0..5), small_rat(&mut rng));
        }
        if &mutated == t {
            continue;
        }
        let mut b = a.clone();
        b.set(*i, *j, *k, mutated);
        let skew = b.check_skew();
        let jac = b.check_jacobi();
        assert!(
            !(skew.passed() && jac.passed()),
            "trial {trial}: mutation of {} at ({i},{j},{k}) undetected",
            a.name()
        );
        assert_ne!(b.classify(), Classification::Lie);
        if !jac.passed() {
            caught_by_jacobi += 1;
        }
    }
    assert!(caught_by_jacobi > 0, "no mutation broke the Jacobi identity");
}

#[test]
fn maximal_derived_families_are_solvable_of_length_at_most_two() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for id in ["lemma22-i", "lemma22-ii", "lemma22-iii"] {
        let f = pseudoalg::catalog::family(id).unwrap();
        for _ in 0..10 {
            let p = sample(f, Mode::Corrected, &mut rng).expect("sampleable");
            let a = build_mode(id, &p, Mode::Corrected).unwrap().algebra;
            let len = derived_length(&a, 5).unwrap_or_else(|| panic!("{id} {p:?} not solvable"));
            assert!(len <= 2, "{id} {p:?}: length {len}");
        }
    }
}

#[test]
fn virasoro_is_not_solvable() {
    let a = pseudoalg::algebra::virasoro();
    let s = derived_series(&a, 5);
    assert_eq!(s.len(), 6);
    assert!(s.iter().all(|d| !d.is_zero && d.rank == 1));
    assert_eq!(derived_length(&a, 5), None);
}
