//! Second cohomology of rank-two extensions of the Virasoro pseudoalgebra by
//! a CK module `β = λ s⊗1 − 1⊗s + κ 1⊗1`.
//!
//! The cocycle `α'` (the `e1`-component of `[e0, e0]`) ranges over tensors
//! with both slot degrees ≤ `degree_bound`; the coboundaries are the images
//! of the basis changes `e0 ↦ e0 + A(s) e1` that stay inside that box.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::templates;
use super::{residual_as_linear_map, LinearSystem, Symmetry, UnknownTensor};
use crate::hopf::HPoly;
use crate::linalg::{normalize_integer, to_sparse, Echelon};
use crate::rat::Rat;
use crate::tensor::Tensor2;

/// Which extension problem is solved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Lie extensions: `[e1, e0] = −(12)β`, `α'` antisymmetric.
    Lie,
    /// Leibniz extensions with `[e1, e0] = 0`.
    Leibniz,
    /// Trivial module: `β = 0` on both sides.
    Trivial,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::Lie => "lie",
            Variant::Leibniz => "leibniz",
            Variant::Trivial => "trivial",
        }
    }

    /// Identity template governing the cocycle.
    pub fn template(&self) -> &'static str {
        match self {
            Variant::Lie => "aa1",
            Variant::Leibniz => "L8",
            Variant::Trivial => "L15",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> Result<Variant, String> {
        match s {
            "lie" => Ok(Variant::Lie),
            "leibniz" => Ok(Variant::Leibniz),
            "trivial" => Ok(Variant::Trivial),
            other => Err(format!("unknown variant `{other}` (expected lie, leibniz or trivial)")),
        }
    }
}

/// Solution space, coboundaries and representatives of H².
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub variant: Variant,
    pub lambda: Rat,
    pub kappa: Rat,
    pub degree_bound: u32,
    pub solution_dim: usize,
    pub coboundary_dim: usize,
    pub h2_dim: usize,
    /// Representatives modulo coboundaries, primitive integer coefficients.
    pub basis: Vec<Tensor2>,
}

/// The setting of one cohomology computation.
#[derive(Debug, Clone)]
pub struct Problem {
    pub variant: Variant,
    pub eta1: Tensor2,
    pub eta2: Tensor2,
    pub unknown: UnknownTensor,
}

impl Problem {
    pub fn new(variant: Variant, lambda: &Rat, kappa: &Rat, degree_bound: u32) -> Problem {
        let beta = Tensor2::ck(lambda, kappa);
        let (eta1, eta2, sym) = match variant {
            Variant::Lie => (beta.clone(), -&beta.swap(), Symmetry::Antisymmetric),
            Variant::Leibniz => (beta, Tensor2::zero(), Symmetry::None),
            Variant::Trivial => (Tensor2::zero(), Tensor2::zero(), Symmetry::None),
        };
        Problem { variant, eta1, eta2, unknown: UnknownTensor::new("alpha'", degree_bound, degree_bound, sym) }
    }

    /// The linear system whose kernel is the cocycle space.
    pub fn system(&self) -> LinearSystem {
        let id = templates::get(self.variant.template()).expect("built-in template");
        let known: HashMap<&str, Tensor2> =
            HashMap::from([("alpha", Tensor2::alpha()), ("eta1", self.eta1.clone()), ("eta2", self.eta2.clone())]);
        residual_as_linear_map(&id, &known, &self.unknown).expect("α' occurs linearly")
    }

    /// `(1⊗A)η1 + (A⊗1)η2 − αΔ(A)`.
    pub fn coboundary(&self, a: &HPoly) -> Tensor2 {
        let mut out = self.eta1.mul_second(a);
        out.add_scaled(&self.eta2.mul_first(a), &Rat::one());
        out.add_scaled(&Tensor2::alpha().right_delta_action(a), &Rat::int(-1));
        out
    }

    /// Coboundaries lying inside the degree box, as coordinate vectors.
    pub fn coboundary_space(&self) -> Vec<Vec<Rat>> {
        let d = self.unknown.max_a;
        let images: Vec<Tensor2> = (0..=d + 2).map(|n| self.coboundary(&HPoly::basis(n))).collect();
        // Out-of-box coordinates must cancel.
        let mut keys: Vec<(u32, u32)> = images
            .iter()
            .flat_map(|t| t.terms().map(|(k, _)| k).filter(|&(a, b)| a > d || b > d).collect::<Vec<_>>())
            .collect();
        keys.sort_unstable();
        keys.dedup();
        let mut e = Echelon::new(images.len());
        for &(a, b) in &keys {
            let row: Vec<(usize, Rat)> =
                images.iter().enumerate().map(|(n, t)| (n, t.coeff(a, b))).filter(|(_, v)| !v.is_zero()).collect();
            e.insert(&row);
        }
        e.nullspace()
            .iter()
            .filter_map(|combo| {
                let mut t = Tensor2::zero();
                for (img, c) in images.iter().zip(combo) {
                    t.add_scaled(img, c);
                }
                if t.is_zero() {
                    return None;
                }
                Some(self.unknown.coordinates(&t).expect("in-box coboundary has the unknown's symmetry"))
            })
            .collect()
    }
}

/// Computes the cocycle space, coboundaries and H² representatives.
pub fn cohomology(variant: Variant, lambda: &Rat, kappa: &Rat, degree_bound: u32) -> CohomologyReport {
    let problem = Problem::new(variant, lambda, kappa, degree_bound);
    let system = problem.system();
    let sol = system.echelon();
    let solutions = sol.nullspace();
    // Reduction eliminates the most unbalanced monomials first (largest
    // |a − b|, then largest a), so representatives concentrate near the
    // diagonal, where basis changes cannot reach.
    let n = system.ncols();
    let order = elimination_order(&system.basis);
    let permute = |v: &[Rat]| -> Vec<Rat> { order.iter().map(|&j| v[j].clone()).collect() };
    let mut quotient = Echelon::new(n);
    for b in problem.coboundary_space() {
        debug_assert!(is_solution(&system, &b), "coboundary outside the cocycle space");
        quotient.insert(&to_sparse(&permute(&b)));
    }
    let coboundary_dim = quotient.rank();
    let mut basis = Vec::new();
    for z in &solutions {
        let r = quotient.reduce(&to_sparse(&permute(z)));
        if r.is_empty() {
            continue;
        }
        quotient.insert(&r);
        let mut x = vec![Rat::zero(); n];
        for (c, v) in r {
            x[order[c]] = v;
        }
        basis.push(problem.unknown.assemble(&normalize_integer(&x)));
    }
    basis.sort_by_key(|t| t.terms().map(|(k, _)| k).next());
    CohomologyReport {
        variant,
        lambda: lambda.clone(),
        kappa: kappa.clone(),
        degree_bound,
        solution_dim: solutions.len(),
        coboundary_dim,
        h2_dim: solutions.len() - coboundary_dim,
        basis,
    }
}

/// Column permutation: position `i` of the permuted vector holds column
/// `order[i]`.  Columns are keyed by their leading monomial `(a, b)`.
fn elimination_order(basis: &[Tensor2]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..basis.len()).collect();
    let key = |j: usize| {
        let (a, b) = basis[j].terms().map(|(k, _)| k).next().expect("nonzero basis tensor");
        (std::cmp::Reverse(a.abs_diff(b)), std::cmp::Reverse(a), b)
    };
    order.sort_by_key(|&j| key(j));
    order
}

/// True when the coordinate vector `x` satisfies every row of the system.
pub fn is_solution(system: &LinearSystem, x: &[Rat]) -> bool {
    system
        .rows
        .iter()
        .zip(&system.constants)
        .all(|(r, c)| (r.iter().map(|(j, v)| v * &x[*j]).sum::<Rat>() + c).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lie_minus_seven() {
        let r = cohomology(Variant::Lie, &Rat::int(-7), &Rat::zero(), 10);
        assert_eq!(r.h2_dim, 1);
        let want = &(&Tensor2::antisym(3, 6) - &Tensor2::antisym(4, 5).scale(&Rat::int(3))).clone();
        assert_eq!(&r.basis[0], want);
    }

    #[test]
    fn leibniz_minus_three() {
        let r = cohomology(Variant::Leibniz, &Rat::int(-3), &Rat::zero(), 10);
        assert_eq!(r.h2_dim, 1);
        let want = Tensor2::from_terms([(2, 3, Rat::int(1)), (3, 2, Rat::int(4)), (4, 1, Rat::int(2))]);
        assert_eq!(r.basis[0], want);
    }

    #[test]
    fn generic_point_is_rigid() {
        assert_eq!(cohomology(Variant::Lie, &Rat::int(5), &Rat::one(), 10).h2_dim, 0);
        assert_eq!(cohomology(Variant::Trivial, &Rat::int(0), &Rat::zero(), 10).h2_dim, 0);
    }

    #[test]
    fn coboundaries_are_cocycles() {
        for v in [Variant::Lie, Variant::Leibniz, Variant::Trivial] {
            let p = Problem::new(v, &Rat::new(-2, 3), &Rat::int(2), 8);
            let sys = p.system();
            for b in p.coboundary_space() {
                assert!(is_solution(&sys, &b), "{v}");
            }
        }
    }
}
