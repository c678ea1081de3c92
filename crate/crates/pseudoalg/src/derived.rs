//! H-submodules of a pseudoalgebra, their brackets and the derived series.
//!
//! A module element `Σ_k f_k e_k` is a vector of [`HPoly`]s.  The bracket of
//! two elements lies in `H⊗H ⊗_H A`; rewriting it canonically as
//! `Σ_d (s^(d)⊗1) ⊗_H c_d` exposes the coefficient elements `c_d`, which
//! generate the image H-submodule.  Submodules are kept in Hermite normal
//! form over the principal ideal domain `k[s]`, whose row count is the rank
//! over the fraction field `k(s)`.

use serde::{Deserialize, Serialize};

use crate::algebra::PseudoAlgebra;
use crate::hopf::HPoly;
use crate::rat::Rat;
use crate::tensor::{normal_form, Tensor2};

/// Generators of an H-submodule of `⊕ H e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmoduleBasis {
    pub rank: usize,
    pub generators: Vec<Vec<HPoly>>,
}

impl SubmoduleBasis {
    /// The whole module `⊕ H e_k`.
    pub fn full(rank: usize) -> SubmoduleBasis {
        let generators =
            (0..rank).map(|i| (0..rank).map(|k| if k == i { HPoly::one() } else { HPoly::zero() }).collect()).collect();
        SubmoduleBasis { rank, generators }
    }

    pub fn zero(rank: usize) -> SubmoduleBasis {
        SubmoduleBasis { rank, generators: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(|g| g.iter().all(HPoly::is_zero))
    }

    /// Hermite normal form: an upper-triangular generating set with monic
    /// pivots and entries above each pivot reduced modulo it.
    pub fn reduced(&self) -> SubmoduleBasis {
        let rows: Vec<Vec<Poly>> = self.generators.iter().map(|g| g.iter().map(Poly::from_hpoly).collect()).collect();
        let generators = hermite(rows, self.rank).into_iter().map(|r| r.iter().map(Poly::to_hpoly).collect()).collect();
        SubmoduleBasis { rank: self.rank, generators }
    }

    /// Rank over `k(s)`.
    pub fn module_rank(&self) -> usize {
        self.reduced().generators.len()
    }

    /// True when `v` lies in the submodule.
    pub fn contains(&self, v: &[HPoly]) -> bool {
        let hnf: Vec<Vec<Poly>> =
            self.reduced().generators.iter().map(|g| g.iter().map(Poly::from_hpoly).collect()).collect();
        let mut r: Vec<Poly> = v.iter().map(Poly::from_hpoly).collect();
        for p in &hnf {
            let c = p.iter().position(|x| !x.is_zero()).expect("nonzero row");
            let (q, rem) = r[c].divrem(&p[c]);
            if !rem.is_zero() {
                return false;
            }
            for (x, y) in r.iter_mut().zip(p) {
                *x = x.sub(&q.mul(y));
            }
        }
        r.iter().all(Poly::is_zero)
    }
}

/// Bracket of two module elements, as the canonical coefficient elements `c_d`.
pub fn bracket_elements(a: &PseudoAlgebra, x: &[HPoly], y: &[HPoly]) -> Vec<Vec<HPoly>> {
    let n = a.rank();
    let mut per_target: Vec<Tensor2> = vec![Tensor2::zero(); n];
    for (i, f) in x.iter().enumerate().filter(|(_, f)| !f.is_zero()) {
        for (j, g) in y.iter().enumerate().filter(|(_, g)| !g.is_zero()) {
            let fg = Tensor2::pure(f, g);
            for (k, slot) in per_target.iter_mut().enumerate() {
                let gamma = a.get(i, j, k);
                if !gamma.is_zero() {
                    slot.add_scaled(&fg.mul(gamma), &Rat::one());
                }
            }
        }
    }
    let mut by_degree: std::collections::BTreeMap<u32, Vec<HPoly>> = Default::default();
    for (k, t) in per_target.iter().enumerate() {
        for (d, h) in normal_form(t).terms() {
            by_degree.entry(*d).or_insert_with(|| vec![HPoly::zero(); n])[k] = h.clone();
        }
    }
    by_degree.into_values().collect()
}

/// Generators of `[X, Y]`.
pub fn bracket_submodules(a: &PseudoAlgebra, x: &SubmoduleBasis, y: &SubmoduleBasis) -> SubmoduleBasis {
    let mut generators = Vec::new();
    for u in &x.generators {
        for v in &y.generators {
            generators.extend(bracket_elements(a, u, v));
        }
    }
    SubmoduleBasis { rank: a.rank(), generators }
}

/// One step of the derived series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedStep {
    pub rank: usize,
    pub is_zero: bool,
}

/// `A^(0) = A, A^(n+1) = [A^(n), A^(n)]`, for `max_steps` brackets.
/// Stops early once a term is zero.
pub fn derived_series(a: &PseudoAlgebra, max_steps: usize) -> Vec<DerivedStep> {
    let mut cur = SubmoduleBasis::full(a.rank()).reduced();
    let mut out = vec![DerivedStep { rank: cur.generators.len(), is_zero: cur.is_zero() }];
    for _ in 0..max_steps {
        if cur.is_zero() {
            break;
        }
        cur = bracket_submodules(a, &cur, &cur).reduced();
        out.push(DerivedStep { rank: cur.generators.len(), is_zero: cur.is_zero() });
    }
    out
}

/// Number of brackets until the series vanishes, if within `max_steps`.
pub fn derived_length(a: &PseudoAlgebra, max_steps: usize) -> Option<usize> {
    let s = derived_series(a, max_steps);
    s.iter().position(|d| d.is_zero)
}

/// Polynomial in the monomial basis `Σ c_i s^i`, used for Euclidean steps.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Poly(Vec<Rat>);

impl Poly {
    fn from_hpoly(h: &HPoly) -> Poly {
        let mut p = Poly(h.to_monomial_coeffs());
        p.trim();
        p
    }

    fn to_hpoly(&self) -> HPoly {
        HPoly::from_monomial_coeffs(&self.0)
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Rat::is_zero) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> &Rat {
        self.0.last().expect("nonzero polynomial")
    }

    fn scale(&self, c: &Rat) -> Poly {
        let mut p = Poly(self.0.iter().map(|x| x * c).collect());
        p.trim();
        p
    }

    fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly(Vec::new());
        }
        let mut v = vec![Rat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += &(a * b);
            }
        }
        let mut p = Poly(v);
        p.trim();
        p
    }

    fn sub(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let z = Rat::zero();
        let mut p = Poly((0..n).map(|i| self.0.get(i).unwrap_or(&z) - o.0.get(i).unwrap_or(&z)).collect());
        p.trim();
        p
    }

    fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.clone();
        let mut q = vec![Rat::zero(); self.0.len().saturating_sub(dd).max(1)];
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.lead() / d.lead();
            q[rd - dd] = c.clone();
            let mut shifted = vec![Rat::zero(); rd - dd];
            shifted.extend(d.0.iter().map(|x| x * &c));
            r = r.sub(&Poly(shifted));
        }
        let mut q = Poly(q);
        q.trim();
        (q, r)
    }
}

fn row_sub(r: &[Poly], q: &Poly, p: &[Poly]) -> Vec<Poly> {
    r.iter().zip(p).map(|(x, y)| x.sub(&q.mul(y))).collect()
}

/// Hermite normal form over `k[s]` of the row module.
fn hermite(mut rows: Vec<Vec<Poly>>, ncols: usize) -> Vec<Vec<Poly>> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let mut out: Vec<Vec<Poly>> = Vec::new();
    for c in 0..ncols {
        // Euclid on column c among the remaining rows.
        loop {
            let mut live: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if live.len() <= 1 {
                break;
            }
            live.sort_by_key(|&i| rows[i][c].degree());
            let p = rows[live[0]].clone();
            for &i in &live[1..] {
                let (q, _) = rows[i][c].divrem(&p[c]);
                rows[i] = row_sub(&rows[i], &q, &p);
            }
        }
        if let Some(i) = (0..rows.len()).find(|&i| !rows[i][c].is_zero()) {
            let r = rows.swap_remove(i);
            let inv = r[c].lead().recip();
            let r: Vec<Poly> = r.iter().map(|x| x.scale(&inv)).collect();
            for prev in out.iter_mut() {
                let (q, _) = prev[c].divrem(&r[c]);
                if !q.is_zero() {
                    *prev = row_sub(prev, &q, &r);
                }
            }
            out.push(r);
        }
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    out
}
