//! The rank-three (m-type) problems: which `[e1, e1] = α'_m ⊗_H e2` are
//! compatible with given CK actions, and which `[e1, e2] = η ⊗_H e2` exist.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::templates::{self, Op, Term};
use super::{residual_as_linear_map, Symmetry, UnknownTensor};
use crate::linalg::{normalize_integer, Echelon};
use crate::rat::Rat;
use crate::tensor::{Tensor2, Tensor3};

/// One line of the m-type enumeration table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MtypeRow {
    pub m: u32,
    pub lambda1: Rat,
    pub kappa1: Rat,
    /// The `λ2` for which a solution of top degree `m` exists (if any).
    pub lambda2: Option<Rat>,
    pub solvable: bool,
    /// Basis of the solutions with top slot degree ≤ m at that `λ2`.
    pub basis: Vec<Tensor2>,
}

/// Solves `(β1Δ⊗1)α'_m = (1⊗α'_mΔ)β2 − (12)(1⊗β1Δ)α'_m` for antisymmetric
/// `α'_m` with slot degrees ≤ m, at `β1 = λ1 s⊗1 − 1⊗s + κ1`,
/// `β2 = λ2 s⊗1 − 1⊗s + 2κ1`.  Returns the solution basis.
pub fn solve_alpha(m: u32, lambda1: &Rat, kappa1: &Rat, lambda2: &Rat) -> Vec<Tensor2> {
    let id = templates::get("eq218").expect("built-in template");
    let known: HashMap<&str, Tensor2> = HashMap::from([
        ("beta1", Tensor2::ck(lambda1, kappa1)),
        ("beta2", Tensor2::ck(lambda2, &(kappa1 * &Rat::int(2)))),
    ]);
    let u = UnknownTensor::new("alpha_m", m, m, Symmetry::Antisymmetric);
    let sys = residual_as_linear_map(&id, &known, &u).expect("α'_m occurs linearly");
    sys.echelon().nullspace().iter().map(|x| u.assemble(&normalize_integer(x))).collect()
}

fn top_slot_degree(t: &Tensor2) -> Option<u32> {
    t.terms().map(|((a, b), _)| a.max(b)).max()
}

/// For each `m ∈ 1..=m_max` and `λ1` in the grid (with `κ1 = kappa1`),
/// decides whether a nonzero `α'_m` of top slot degree exactly `m` exists.
///
/// The leading coefficients force `λ2 = 2λ1 − d` where `d` is the total
/// degree of the top terms, so every `d ∈ 1..=2m−1` is tried.  Values of
/// `m` above `degree_bound` are skipped.
pub fn enumerate_mtype_with_kappa(m_max: u32, degree_bound: u32, lambda_grid: &[Rat], kappa1: &Rat) -> Vec<MtypeRow> {
    use rayon::prelude::*;
    let jobs: Vec<(u32, Rat)> =
        (1..=m_max.min(degree_bound)).flat_map(|m| lambda_grid.iter().map(move |l| (m, l.clone()))).collect();
    jobs.par_iter()
        .map(|(m, l1)| {
            for d in 1..2 * m {
                let l2 = &(l1 * &Rat::int(2)) - &Rat::int(d as i64);
                let basis = solve_alpha(*m, l1, kappa1, &l2);
                if basis.iter().any(|t| top_slot_degree(t) == Some(*m)) {
                    return MtypeRow {
                        m: *m,
                        lambda1: l1.clone(),
                        kappa1: kappa1.clone(),
                        lambda2: Some(l2),
                        solvable: true,
                        basis,
                    };
                }
            }
            MtypeRow {
                m: *m,
                lambda1: l1.clone(),
                kappa1: kappa1.clone(),
                lambda2: None,
                solvable: false,
                basis: vec![],
            }
        })
        .collect()
}

/// [`enumerate_mtype_with_kappa`] at `κ1 = 0`.
pub fn enumerate_mtype(m_max: u32, degree_bound: u32, lambda_grid: &[Rat]) -> Vec<MtypeRow> {
    enumerate_mtype_with_kappa(m_max, degree_bound, lambda_grid, &Rat::zero())
}

/// Solution space of the `η` equations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaSolution {
    pub degree_bound: u32,
    pub lambda1: Rat,
    pub kappa1: Rat,
    pub lambda2: Rat,
    pub kappa2: Rat,
    /// Dimension of the solutions of the linear identity alone.
    pub linear_dim: usize,
    pub dim: usize,
    pub basis: Vec<Tensor2>,
}

/// Solves `(β1Δ⊗1)η = (1⊗ηΔ)β2 − (12)(1⊗β2Δ)η` together with
/// `(1⊗ηΔ)η = (12)(1⊗ηΔ)η` for `η` with slot degrees ≤ `degree_bound`.
///
/// The second identity is quadratic; it is imposed on the solution space
/// `N` of the first by taking the radical of its polarization on `N`, i.e.
/// the largest subspace all of whose elements and pairwise sums satisfy it.
pub fn solve_eta_with(degree_bound: u32, lambda1: &Rat, kappa1: &Rat, lambda2: &Rat, kappa2: &Rat) -> EtaSolution {
    let id = templates::get("eq217").expect("built-in template");
    let known: HashMap<&str, Tensor2> =
        HashMap::from([("beta1", Tensor2::ck(lambda1, kappa1)), ("beta2", Tensor2::ck(lambda2, kappa2))]);
    let u = UnknownTensor::new("eta", degree_bound, degree_bound, Symmetry::None);
    let sys = residual_as_linear_map(&id, &known, &u).expect("η occurs linearly");
    let lin: Vec<Tensor2> = sys.echelon().nullspace().iter().map(|x| u.assemble(x)).collect();

    // Polarization of Q(η) = (1⊗ηΔ)η − (12)(1⊗ηΔ)η.
    let q = Term { sign: 1, op: Op::Right, x: "eta", y: "eta", swap_inner: false, swap_outer: false };
    let polar = |a: &Tensor2, b: &Tensor2| -> Tensor3 {
        let mut r = q.eval(a, b);
        r.add_scaled(&q.eval(b, a), &Rat::one());
        &r - &r.swap12()
    };
    // Conditions on t ∈ k^N: Σ_i t_i B(n_i, n_j) = 0 for every j.
    let n = lin.len();
    let mut e = Echelon::new(n);
    for j in 0..n {
        let images: Vec<Tensor3> = (0..n).map(|i| polar(&lin[i], &lin[j])).collect();
        let mut keys: Vec<(u32, u32, u32)> =
            images.iter().flat_map(|t| t.terms().map(|(k, _)| k).collect::<Vec<_>>()).collect();
        keys.sort_unstable();
        keys.dedup();
        for (a, b, c) in keys {
            let row: Vec<(usize, Rat)> =
                images.iter().enumerate().map(|(i, t)| (i, t.coeff(a, b, c))).filter(|(_, v)| !v.is_zero()).collect();
            e.insert(&row);
        }
    }
    let basis: Vec<Tensor2> = e
        .nullspace()
        .iter()
        .map(|t| {
            let mut out = Tensor2::zero();
            for (ni, c) in lin.iter().zip(t) {
                out.add_scaled(ni, c);
            }
            out
        })
        .collect();
    EtaSolution {
        degree_bound,
        lambda1: lambda1.clone(),
        kappa1: kappa1.clone(),
        lambda2: lambda2.clone(),
        kappa2: kappa2.clone(),
        linear_dim: lin.len(),
        dim: basis.len(),
        basis,
    }
}

/// [`solve_eta_with`] at the m-type relations `λ2 = 2λ1 − 1`, `κ2 = 2κ1`.
pub fn solve_eta(degree_bound: u32, lambda1: &Rat, kappa1: &Rat) -> EtaSolution {
    let l2 = &(lambda1 * &Rat::int(2)) - &Rat::one();
    let k2 = kappa1 * &Rat::int(2);
    solve_eta_with(degree_bound, lambda1, kappa1, &l2, &k2)
}

/// The λ1 grid used by the command line and the acceptance suite: every
/// value with a solvable m ≥ 2 plus a spread of generic points.
pub fn default_lambda_grid() -> Vec<Rat> {
    [
        (-2, 1),
        (-1, 1),
        (-1, 2),
        (-1, 3),
        (0, 1),
        (1, 3),
        (1, 2),
        (2, 3),
        (1, 1),
        (3, 2),
        (2, 1),
        (3, 1),
        (5, 3),
        (-5, 3),
    ]
    .iter()
    .map(|&(n, d)| Rat::new(n, d))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_rigidity() {
        let s = solve_eta(6, &Rat::zero(), &Rat::zero());
        assert_eq!(s.dim, 1);
        assert_eq!(s.basis[0], Tensor2::basis(0, 0));
        assert_eq!(solve_eta(6, &Rat::new(1, 2), &Rat::zero()).dim, 0);
        assert_eq!(solve_eta(6, &Rat::zero(), &Rat::int(3)).dim, 0);
    }

    #[test]
    fn small_enumeration() {
        let grid = [Rat::new(2, 3), Rat::new(1, 3), Rat::new(1, 2), Rat::zero()];
        let rows = enumerate_mtype(3, 12, &grid);
        let solvable: Vec<(u32, Rat)> = rows.iter().filter(|r| r.solvable).map(|r| (r.m, r.lambda1.clone())).collect();
        assert!(solvable.contains(&(3, Rat::new(2, 3))));
        assert!(!solvable.contains(&(3, Rat::new(1, 3))));
        assert!(solvable.contains(&(2, Rat::new(1, 2))));
        assert!(solvable.contains(&(2, Rat::zero())));
        assert_eq!(solvable.iter().filter(|(m, _)| *m == 1).count(), 4);
    }
}
