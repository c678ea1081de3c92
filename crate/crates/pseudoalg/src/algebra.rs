//! Pseudoalgebras given by structure constants, with skew-symmetry and Jacobi
//! verification, classification, and change of basis.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::hopf::HPoly;
use crate::rat::Rat;
use crate::tensor::{comp_left, comp_right, Tensor2, Tensor3};

/// A free H-module `⊕ H e_i` of finite rank with bracket
/// `[e_i, e_j] = Σ_k γ_ij^k ⊗_H e_k`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoAlgebra {
    name: String,
    rank: usize,
    /// `(i, j) ↦ [γ_ij^0, …, γ_ij^{n-1}]`; absent pairs are zero brackets.
    gamma: BTreeMap<(usize, usize), Vec<Tensor2>>,
    /// Parameter record of a catalog instance (`name ↦ value`), if any.
    #[serde(default)]
    params: BTreeMap<String, String>,
}

impl PseudoAlgebra {
    /// The abelian pseudoalgebra of the given rank.
    pub fn new(name: impl Into<String>, rank: usize) -> PseudoAlgebra {
        PseudoAlgebra { name: name.into(), rank, gamma: BTreeMap::new(), params: BTreeMap::new() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn params(&self) -> &BTreeMap<String, String> {
        &self.params
    }

    pub fn set_param(&mut self, key: impl Into<String>, value: impl ToString) {
        self.params.insert(key.into(), value.to_string());
    }

    fn check_index(&self, i: usize) {
        assert!(i < self.rank, "basis index e{i} out of range for rank {}", self.rank);
    }

    /// Replaces `γ_ij^k`.
    pub fn set(&mut self, i: usize, j: usize, k: usize, t: Tensor2) {
        self.check_index(i);
        self.check_index(j);
        self.check_index(k);
        let n = self.rank;
        let v = self.gamma.entry((i, j)).or_insert_with(|| vec![Tensor2::zero(); n]);
        v[k] = t;
        if v.iter().all(Tensor2::is_zero) {
            self.gamma.remove(&(i, j));
        }
    }

    /// Adds `t` to `γ_ij^k`.
    pub fn add(&mut self, i: usize, j: usize, k: usize, t: &Tensor2) {
        let cur = self.get(i, j, k) + t;
        self.set(i, j, k, cur);
    }

    /// Sets `γ_ij^k = t` and `γ_ji^k = −(12)t`, the skew-symmetric completion.
    pub fn set_skew(&mut self, i: usize, j: usize, k: usize, t: Tensor2) {
        if i == j {
            self.set(i, i, k, t);
        } else {
            self.set(j, i, k, -&t.swap());
            self.set(i, j, k, t);
        }
    }

    /// `γ_ij^k` (zero when unset).
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Tensor2 {
        static ZERO: std::sync::OnceLock<Tensor2> = std::sync::OnceLock::new();
        self.gamma.get(&(i, j)).map(|v| &v[k]).unwrap_or_else(|| ZERO.get_or_init(Tensor2::zero))
    }

    /// The bracket `[e_i, e_j]` as its list of components, if nonzero.
    pub fn bracket(&self, i: usize, j: usize) -> Option<&[Tensor2]> {
        self.gamma.get(&(i, j)).map(|v| v.as_slice())
    }

    /// Iterates over all nonzero components `((i, j, k), γ_ij^k)` in index order.
    pub fn components(&self) -> impl Iterator<Item = ((usize, usize, usize), &Tensor2)> {
        self.gamma.iter().flat_map(|(&(i, j), v)| {
            v.iter().enumerate().filter(|(_, t)| !t.is_zero()).map(move |(k, t)| ((i, j, k), t))
        })
    }

    /// True when every bracket vanishes.
    pub fn is_abelian(&self) -> bool {
        self.gamma.is_empty()
    }

    /// Skew-symmetry residual `γ_ji^k + (12)γ_ij^k`.
    pub fn skew_residual(&self, i: usize, j: usize, k: usize) -> Tensor2 {
        self.get(j, i, k) + &self.get(i, j, k).swap()
    }

    /// Jacobi residual for `(i, j, l)` in component `m`:
    /// `Σ_k (γ_ij^kΔ⊗1)γ_kl^m − Σ_k (1⊗γ_jl^kΔ)γ_ik^m + (12)Σ_k (1⊗γ_il^kΔ)γ_jk^m`.
    pub fn jacobi_residual(&self, i: usize, j: usize, l: usize, m: usize) -> Tensor3 {
        let mut out = Tensor3::zero();
        let one = Rat::one();
        let mut swapped = Tensor3::zero();
        for k in 0..self.rank {
            let (a, b) = (self.get(i, j, k), self.get(k, l, m));
            if !a.is_zero() && !b.is_zero() {
                out.add_scaled(&comp_left(a, b), &one);
            }
            let (a, b) = (self.get(j, l, k), self.get(i, k, m));
            if !a.is_zero() && !b.is_zero() {
                out.add_scaled(&comp_right(a, b), &Rat::int(-1));
            }
            let (a, b) = (self.get(i, l, k), self.get(j, k, m));
            if !a.is_zero() && !b.is_zero() {
                swapped.add_scaled(&comp_right(a, b), &one);
            }
        }
        out.add_scaled(&swapped.swap12(), &one);
        out
    }

    /// Checks skew-symmetry of every bracket.
    pub fn check_skew(&self) -> CheckReport {
        let mut failures = Vec::new();
        for i in 0..self.rank {
            for j in i..self.rank {
                for k in 0..self.rank {
                    let r = self.skew_residual(i, j, k);
                    if !r.is_zero() {
                        failures.push(Failure {
                            kind: FailureKind::Skew,
                            indices: vec![j, i],
                            component: k,
                            residual: Residual::T2(r),
                        });
                    }
                }
            }
        }
        CheckReport { skew_pass: failures.is_empty(), jacobi_pass: true, failures }
    }

    /// Checks the Jacobi identity on every basis triple and output component.
    pub fn check_jacobi(&self) -> CheckReport {
        let n = self.rank;
        let jobs: Vec<(usize, usize, usize, usize)> = (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).flat_map(move |l| (0..n).map(move |m| (i, j, l, m)))))
            .collect();
        let failures: Vec<Failure> = jobs
            .par_iter()
            .filter_map(|&(i, j, l, m)| {
                let r = self.jacobi_residual(i, j, l, m);
                (!r.is_zero()).then(|| Failure {
                    kind: FailureKind::Jacobi,
                    indices: vec![i, j, l],
                    component: m,
                    residual: Residual::T3(r),
                })
            })
            .collect();
        CheckReport { skew_pass: true, jacobi_pass: failures.is_empty(), failures }
    }

    /// Runs both checks and merges the reports.
    pub fn check_all(&self) -> CheckReport {
        let mut s = self.check_skew();
        let j = self.check_jacobi();
        s.jacobi_pass = j.jacobi_pass;
        s.failures.extend(j.failures);
        s
    }

    /// Lie / Leibniz-not-Lie / not Leibniz.
    pub fn classify(&self) -> Classification {
        let j = self.check_jacobi();
        if !j.jacobi_pass {
            return Classification::NotLeibniz;
        }
        if self.check_skew().skew_pass {
            Classification::Lie
        } else {
            Classification::LeibnizNotLie
        }
    }

    /// Change of basis `e'_i = Σ_j M_ij e_j`, where `inverse` is the inverse
    /// matrix over H.  Brackets are recomputed by H-bilinearity:
    /// `γ'_ij^l = Σ_{a,b,k} (M_ia ⊗ M_jb) γ_ab^k Δ(N_kl)`.
    #[allow(clippy::needless_range_loop)] // matrix indices read more clearly
    pub fn change_of_basis(&self, m: &[Vec<HPoly>], inverse: &[Vec<HPoly>]) -> Result<PseudoAlgebra, BasisError> {
        let n = self.rank;
        let square = |x: &[Vec<HPoly>]| x.len() == n && x.iter().all(|r| r.len() == n);
        if !square(m) || !square(inverse) {
            return Err(BasisError::Shape(n));
        }
        for i in 0..n {
            for j in 0..n {
                let mut acc = HPoly::zero();
                for k in 0..n {
                    acc = &acc + &(&m[i][k] * &inverse[k][j]);
                }
                let want = if i == j { HPoly::one() } else { HPoly::zero() };
                if acc != want {
                    return Err(BasisError::NotInverse);
                }
            }
        }
        let mut out = PseudoAlgebra::new(self.name.clone(), n);
        out.params = self.params.clone();
        for i in 0..n {
            for j in 0..n {
                let mut comps = vec![Tensor2::zero(); n];
                for a in 0..n {
                    if m[i][a].is_zero() {
                        continue;
                    }
                    for b in 0..n {
                        if m[j][b].is_zero() {
                            continue;
                        }
                        let Some(br) = self.bracket(a, b) else { continue };
                        let coeff = Tensor2::pure(&m[i][a], &m[j][b]);
                        for (k, g) in br.iter().enumerate() {
                            if g.is_zero() {
                                continue;
                            }
                            let t = coeff.mul(g);
                            for (l, c) in comps.iter_mut().enumerate() {
                                if !inverse[k][l].is_zero() {
                                    c.add_scaled(&t.right_delta_action(&inverse[k][l]), &Rat::one());
                                }
                            }
                        }
                    }
                }
                for (l, c) in comps.into_iter().enumerate() {
                    if !c.is_zero() {
                        out.set(i, j, l, c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The elementary change of basis `e_target ↦ e_target + h · e_source`.
    pub fn add_multiple(&self, target: usize, source: usize, h: &HPoly) -> PseudoAlgebra {
        assert!(target != source && target < self.rank && source < self.rank);
        let (m, inv) = elementary(self.rank, target, source, h);
        self.change_of_basis(&m, &inv).expect("elementary matrices are invertible")
    }

    /// Rescales a basis element: `e_i ↦ c e_i` for nonzero `c`.
    pub fn scale_basis(&self, i: usize, c: &Rat) -> PseudoAlgebra {
        assert!(!c.is_zero());
        let n = self.rank;
        let diag = |v: &Rat| -> Vec<Vec<HPoly>> {
            (0..n)
                .map(|r| {
                    (0..n)
                        .map(|col| match (r == col, r == i) {
                            (true, true) => HPoly::constant(v.clone()),
                            (true, false) => HPoly::one(),
                            _ => HPoly::zero(),
                        })
                        .collect()
                })
                .collect()
        };
        self.change_of_basis(&diag(c), &diag(&c.recip())).expect("diagonal matrices are invertible")
    }
}

fn elementary(n: usize, target: usize, source: usize, h: &HPoly) -> (Vec<Vec<HPoly>>, Vec<Vec<HPoly>>) {
    let id: Vec<Vec<HPoly>> =
        (0..n).map(|r| (0..n).map(|c| if r == c { HPoly::one() } else { HPoly::zero() }).collect()).collect();
    let mut m = id.clone();
    let mut inv = id;
    m[target][source] = h.clone();
    inv[target][source] = -h;
    (m, inv)
}

impl fmt::Debug for PseudoAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PseudoAlgebra {} (rank {})", self.name, self.rank)?;
        for ((i, j, k), t) in self.components() {
            writeln!(f, "  [e{i}, e{j}] -> e{k}: {t}")?;
        }
        Ok(())
    }
}

/// Errors from [`PseudoAlgebra::change_of_basis`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BasisError {
    #[error("change-of-basis matrices must be {0}x{0}")]
    Shape(usize),
    #[error("the supplied inverse does not invert the change-of-basis matrix")]
    NotInverse,
}

/// Result of [`PseudoAlgebra::classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Lie,
    LeibnizNotLie,
    NotLeibniz,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Lie => "lie",
            Classification::LeibnizNotLie => "leibniz-not-lie",
            Classification::NotLeibniz => "not-leibniz",
        })
    }
}

/// Which identity a failure belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FailureKind {
    Skew,
    Jacobi,
}

/// A nonzero residual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "space", content = "terms")]
pub enum Residual {
    #[serde(rename = "H2")]
    T2(Tensor2),
    #[serde(rename = "H3")]
    T3(Tensor3),
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::T2(t) => write!(f, "{t}"),
            Residual::T3(t) => write!(f, "{t}"),
        }
    }
}

/// One failing identity instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub kind: FailureKind,
    /// `(i, j)` for skew failures (the pair whose bracket is wrong), `(i, j, l)` for Jacobi.
    pub indices: Vec<usize>,
    /// Output component `k` (skew) or `m` (Jacobi).
    pub component: usize,
    pub residual: Residual,
}

/// Outcome of skew / Jacobi verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub skew_pass: bool,
    pub jacobi_pass: bool,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.skew_pass && self.jacobi_pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for fl in &self.failures {
            let idx: Vec<String> = fl.indices.iter().map(|i| format!("e{i}")).collect();
            let kind = match fl.kind {
                FailureKind::Skew => "skew",
                FailureKind::Jacobi => "jacobi",
            };
            writeln!(f, "{kind} failure at ({}) component e{}: {}", idx.join(", "), fl.component, fl.residual)?;
        }
        Ok(())
    }
}

/// Free-function forms.
pub fn check_skew(a: &PseudoAlgebra) -> CheckReport {
    a.check_skew()
}

pub fn check_jacobi(a: &PseudoAlgebra) -> CheckReport {
    a.check_jacobi()
}

pub fn classify(a: &PseudoAlgebra) -> Classification {
    a.classify()
}

/// The Virasoro pseudoalgebra `[e0, e0] = α ⊗_H e0`.
pub fn virasoro() -> PseudoAlgebra {
    let mut a = PseudoAlgebra::new("virasoro", 1);
    a.set(0, 0, 0, Tensor2::alpha());
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank2(lambda: i64, x34: i64) -> PseudoAlgebra {
        let mut a = PseudoAlgebra::new("t", 2);
        a.set(0, 0, 0, Tensor2::alpha());
        a.set(0, 0, 1, Tensor2::antisym(3, 4).scale(&Rat::int(x34)));
        a.set_skew(0, 1, 1, Tensor2::ck(&Rat::int(lambda), &Rat::zero()));
        a
    }

    #[test]
    fn virasoro_is_lie() {
        let v = virasoro();
        assert!(v.check_skew().skew_pass);
        assert!(v.check_jacobi().jacobi_pass);
        assert_eq!(v.classify(), Classification::Lie);
    }

    #[test]
    fn zero_algebra_passes() {
        let z = PseudoAlgebra::new("z", 0);
        assert_eq!(z.classify(), Classification::Lie);
        assert_eq!(PseudoAlgebra::new("a", 3).classify(), Classification::Lie);
    }

    #[test]
    fn lambda_minus_five_extension() {
        assert!(rank2(-5, 1).check_jacobi().jacobi_pass);
        let bad = rank2(-4, 1).check_jacobi();
        assert!(!bad.jacobi_pass);
        assert!(bad.failures.iter().any(|f| f.indices == vec![0, 0, 0] && f.component == 1));
    }

    #[test]
    fn leibniz_not_lie() {
        let mut a = PseudoAlgebra::new("t", 2);
        a.set(0, 0, 0, Tensor2::alpha());
        a.set(0, 1, 1, Tensor2::ck(&Rat::int(2), &Rat::int(3)));
        let skew = a.check_skew();
        assert!(!skew.skew_pass);
        assert_eq!(skew.failures[0].indices, vec![1, 0]);
        assert_eq!(a.classify(), Classification::LeibnizNotLie);
    }

    #[test]
    fn change_of_basis_round_trip() {
        let a = rank2(-5, 1);
        let h = HPoly::from_terms([(0, Rat::int(2)), (2, Rat::int(-1))]);
        let b = a.add_multiple(0, 1, &h);
        assert!(b.check_all().passed());
        let back = b.add_multiple(0, 1, &-&h);
        assert_eq!(back, a);
        let c = a.scale_basis(1, &Rat::int(-1));
        assert_eq!(c.get(0, 0, 1), &Tensor2::antisym(3, 4).scale(&Rat::int(-1)));
    }
}
