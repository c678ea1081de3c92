//! Dimension tables of the second cohomology over the full parameter grid.

use pseudoalg::solver::{cohomology, Variant};
use pseudoalg::{Rat, Tensor2};
use rayon::prelude::*;

fn lambda_grid() -> Vec<Rat> {
    let mut g: Vec<Rat> = (-10..=4).map(Rat::int).collect();
    g.extend([Rat::new(1, 2), Rat::new(2, 3), Rat::new(-5, 3)]);
    g
}

fn expected(variant: Variant, lambda: &Rat, kappa: &Rat) -> usize {
    if !kappa.is_zero() || !lambda.is_integer() {
        return 0;
    }
    let l = lambda.to_i64().unwrap();
    match (variant, l) {
        (Variant::Lie, 0) | (Variant::Lie, -5) | (Variant::Lie, -7) => 1,
        (Variant::Lie, -1) | (Variant::Lie, -2) => 2,
        // 1⊗1 and s⊗1: at λ = 1 the basis change e0 ↦ e0 + e1 acts by (λ − 1) s⊗1 = 0.
        (Variant::Leibniz, 1) => 2,
        (Variant::Leibniz, -1) | (Variant::Leibniz, -2) | (Variant::Leibniz, -3) => 1,
        _ => 0,
    }
}

#[test]
fn dimension_tables_are_stable_in_the_degree_bound() {
    let mut jobs = Vec::new();
    for v in [Variant::Lie, Variant::Leibniz, Variant::Trivial] {
        for l in lambda_grid() {
            for k in 0..=2 {
                for bound in [10, 12, 14] {
                    jobs.push((v, l.clone(), Rat::int(k), bound));
                }
            }
        }
    }
    let bad: Vec<String> = jobs
        .par_iter()
        .filter_map(|(v, l, k, bound)| {
            let r = cohomology(*v, l, k, *bound);
            let want = expected(*v, l, k);
            (r.h2_dim != want).then(|| format!("{v} λ={l} κ={k} bound={bound}: got {} want {want}", r.h2_dim))
        })
        .collect();
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}

#[test]
fn printed_representatives() {
    let r = cohomology(Variant::Lie, &Rat::int(-7), &Rat::zero(), 12);
    assert_eq!(r.basis, vec![&Tensor2::antisym(3, 6) - &Tensor2::antisym(4, 5).scale(&Rat::int(3))]);
    let r = cohomology(Variant::Leibniz, &Rat::int(-3), &Rat::zero(), 12);
    let want = Tensor2::from_terms([(2, 3, Rat::int(1)), (3, 2, Rat::int(4)), (4, 1, Rat::int(2))]);
    assert_eq!(r.basis, vec![want]);
}

#[test]
fn extra_leibniz_class_at_lambda_one() {
    let r = cohomology(Variant::Leibniz, &Rat::one(), &Rat::zero(), 10);
    assert_eq!(r.basis, vec![Tensor2::basis(0, 0), Tensor2::basis(1, 0)]);
    // independent check: the extension built from s⊗1 satisfies the Leibniz identity
    let mut a = pseudoalg::PseudoAlgebra::new("ext", 2);
    a.set(0, 0, 0, Tensor2::alpha());
    a.set(0, 0, 1, Tensor2::basis(1, 0));
    a.set(0, 1, 1, Tensor2::ck(&Rat::one(), &Rat::zero()));
    assert!(a.check_jacobi().passed());
}
