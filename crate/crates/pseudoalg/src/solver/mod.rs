//! Exact linear systems generated from identity templates, their solution
//! spaces, and the computations built on them (second cohomology, m-type
//! enumeration, rigidity of `η`).

pub mod cohomology;
pub mod mtype;
pub mod templates;

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::linalg::{Echelon, SparseRow};
use crate::rat::Rat;
use crate::tensor::{Tensor2, Tensor3};

pub use cohomology::{cohomology, CohomologyReport, Variant};
pub use mtype::{default_lambda_grid, enumerate_mtype, solve_eta, EtaSolution, MtypeRow};
pub use templates::Identity;

/// Errors raised while building linear systems.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolverError {
    #[error("unknown identity template `{0}`")]
    UnknownTemplate(String),
    #[error("unknown `{unknown}` occurs quadratically in identity {identity} (term {term})")]
    NonlinearOccurrence { identity: String, unknown: String, term: usize },
    #[error("unknown `{unknown}` does not occur in identity {identity}")]
    AbsentUnknown { identity: String, unknown: String },
    #[error("antisymmetric unknowns need a square degree box (got {0}x{1})")]
    NonSquareAntisymmetric(u32, u32),
}

/// Symmetry imposed structurally on an unknown tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    None,
    /// `c_ab = −c_ba` (so also `c_aa = 0`).
    Antisymmetric,
}

/// An unknown element of H⊗H with slot degrees bounded by `max_a`, `max_b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnknownTensor {
    pub name: String,
    pub max_a: u32,
    pub max_b: u32,
    pub symmetry: Symmetry,
}

impl UnknownTensor {
    pub fn new(name: impl Into<String>, max_a: u32, max_b: u32, symmetry: Symmetry) -> UnknownTensor {
        UnknownTensor { name: name.into(), max_a, max_b, symmetry }
    }

    /// Basis tensors, one per free coefficient, ordered lexicographically by `(a, b)`.
    pub fn basis(&self) -> Result<Vec<Tensor2>, SolverError> {
        match self.symmetry {
            Symmetry::None => {
                Ok((0..=self.max_a).flat_map(|a| (0..=self.max_b).map(move |b| Tensor2::basis(a, b))).collect())
            }
            Symmetry::Antisymmetric => {
                if self.max_a != self.max_b {
                    return Err(SolverError::NonSquareAntisymmetric(self.max_a, self.max_b));
                }
                Ok((0..=self.max_a).flat_map(|a| (a + 1..=self.max_b).map(move |b| Tensor2::antisym(a, b))).collect())
            }
        }
    }

    /// Assembles the tensor with coordinates `x` in [`UnknownTensor::basis`].
    pub fn assemble(&self, x: &[Rat]) -> Tensor2 {
        let basis = self.basis().expect("validated at construction");
        let mut out = Tensor2::zero();
        for (b, c) in basis.iter().zip(x) {
            out.add_scaled(b, c);
        }
        out
    }

    /// Coordinates of `t` in the basis, or `None` if `t` is outside the box
    /// or violates the symmetry.
    pub fn coordinates(&self, t: &Tensor2) -> Option<Vec<Rat>> {
        let basis = self.basis().ok()?;
        let mut x = Vec::with_capacity(basis.len());
        for b in &basis {
            let ((a, bb), _) = b.terms().find(|(_, c)| c.is_one())?;
            x.push(t.coeff(a, bb));
        }
        (self.assemble(&x) == *t).then_some(x)
    }
}

/// An exact homogeneous-or-affine system `M x + c = 0` over the unknown's coordinates.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub unknown: UnknownTensor,
    /// Column `j` corresponds to `basis[j]`.
    pub basis: Vec<Tensor2>,
    /// Row equations (sparse over columns).
    pub rows: Vec<SparseRow>,
    /// Constant term of each row (zero for homogeneous identities).
    pub constants: Vec<Rat>,
    /// `(identity id, monomial (a, b, c))` for every row.
    pub provenance: Vec<(String, (u32, u32, u32))>,
}

impl LinearSystem {
    pub fn ncols(&self) -> usize {
        self.basis.len()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.constants.iter().all(Rat::is_zero)
    }

    /// Echelon form of the homogeneous part.
    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ncols());
        for r in &self.rows {
            e.insert(r);
        }
        e
    }

    /// Basis of the homogeneous solution space, as tensors.
    pub fn solution_basis(&self) -> Vec<Tensor2> {
        self.echelon().nullspace().iter().map(|x| self.unknown.assemble(x)).collect()
    }

    /// Stacks another system over the same unknown.
    pub fn extend(&mut self, other: LinearSystem) {
        assert_eq!(self.basis, other.basis, "systems over different unknowns");
        self.rows.extend(other.rows);
        self.constants.extend(other.constants);
        self.provenance.extend(other.provenance);
    }
}

/// Builds the linear system `identity(known ∪ {unknown}) = 0` with one row per
/// H⊗3 monomial.  Fails if the unknown occurs in both arguments of a term.
pub fn residual_as_linear_map(
    identity: &Identity,
    known: &HashMap<&str, Tensor2>,
    unknown: &UnknownTensor,
) -> Result<LinearSystem, SolverError> {
    let u = unknown.name.as_str();
    let mut occurs = false;
    for (n, term) in identity.terms.iter().enumerate() {
        match (term.x == u, term.y == u) {
            (true, true) => {
                return Err(SolverError::NonlinearOccurrence {
                    identity: identity.id.to_string(),
                    unknown: u.to_string(),
                    term: n + 1,
                })
            }
            (true, false) | (false, true) => occurs = true,
            (false, false) => {}
        }
    }
    if !occurs {
        return Err(SolverError::AbsentUnknown { identity: identity.id.to_string(), unknown: u.to_string() });
    }
    let basis = unknown.basis()?;
    let zero = Tensor2::zero();
    let lookup = |s: &str| known.get(s).unwrap_or(&zero);

    // Constant part: terms without the unknown.
    let mut constant = Tensor3::zero();
    for term in identity.terms.iter().filter(|t| t.x != u && t.y != u) {
        let (x, y) = (lookup(term.x), lookup(term.y));
        if !x.is_zero() && !y.is_zero() {
            constant.add_scaled(&term.eval(x, y), &Rat::one());
        }
    }
    // Column images.
    let columns: Vec<Tensor3> = basis
        .iter()
        .map(|b| {
            let mut img = Tensor3::zero();
            for term in identity.terms.iter().filter(|t| t.x == u || t.y == u) {
                let (x, y) = if term.x == u { (b, lookup(term.y)) } else { (lookup(term.x), b) };
                if !x.is_zero() && !y.is_zero() {
                    img.add_scaled(&term.eval(x, y), &Rat::one());
                }
            }
            img
        })
        .collect();
    Ok(assemble_rows(identity.id, unknown.clone(), basis, &columns, &constant))
}

/// Transposes column images into rows keyed by H⊗3 monomial.
pub(crate) fn assemble_rows(
    id: &str,
    unknown: UnknownTensor,
    basis: Vec<Tensor2>,
    columns: &[Tensor3],
    constant: &Tensor3,
) -> LinearSystem {
    let mut by_mono: BTreeMap<(u32, u32, u32), (SparseRow, Rat)> = BTreeMap::new();
    for (j, col) in columns.iter().enumerate() {
        for (key, v) in col.terms() {
            by_mono.entry(key).or_insert_with(|| (Vec::new(), Rat::zero())).0.push((j, v.clone()));
        }
    }
    for (key, v) in constant.terms() {
        by_mono.entry(key).or_insert_with(|| (Vec::new(), Rat::zero())).1 = v.clone();
    }
    let mut rows = Vec::with_capacity(by_mono.len());
    let mut constants = Vec::with_capacity(by_mono.len());
    let mut provenance = Vec::with_capacity(by_mono.len());
    for (key, (row, c)) in by_mono {
        rows.push(row);
        constants.push(c);
        provenance.push((id.to_string(), key));
    }
    LinearSystem { unknown, basis, rows, constants, provenance }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn known(lambda: i64, kappa: i64) -> HashMap<&'static str, Tensor2> {
        let eta1 = Tensor2::ck(&Rat::int(lambda), &Rat::int(kappa));
        let eta2 = -&eta1.swap();
        HashMap::from([("alpha", Tensor2::alpha()), ("eta1", eta1), ("eta2", eta2)])
    }

    #[test]
    fn aa1_nullspace_contains_alpha() {
        let id = templates::get("aa1").unwrap();
        let u = UnknownTensor::new("alpha'", 4, 4, Symmetry::None);
        let sys = residual_as_linear_map(&id, &known(0, 0), &u).unwrap();
        assert!(sys.is_homogeneous());
        let e = sys.echelon();
        let x = u.coordinates(&Tensor2::alpha()).unwrap();
        let sparse = crate::linalg::to_sparse(&x);
        // α lies in the solution space iff every row annihilates it
        for r in &sys.rows {
            let v: Rat = r.iter().map(|(c, a)| a * &x[*c]).sum();
            assert!(v.is_zero());
        }
        assert!(!e.nullspace().is_empty());
        assert!(!sparse.is_empty());
    }

    #[test]
    fn quadratic_occurrence_is_rejected() {
        let id = templates::get("eq212").unwrap();
        let u = UnknownTensor::new("eta11", 2, 2, Symmetry::None);
        let err = residual_as_linear_map(&id, &HashMap::new(), &u).unwrap_err();
        assert!(matches!(err, SolverError::NonlinearOccurrence { .. }));
    }

    #[test]
    fn linear_on_both_sides_is_fine() {
        let id = templates::get("aa1").unwrap();
        let u = UnknownTensor::new("alpha'", 2, 2, Symmetry::Antisymmetric);
        assert!(residual_as_linear_map(&id, &known(1, 0), &u).is_ok());
    }

    #[test]
    fn coordinates_round_trip() {
        let u = UnknownTensor::new("x", 3, 3, Symmetry::Antisymmetric);
        let t = Tensor2::antisym(0, 3).scale(&Rat::int(2));
        let x = u.coordinates(&t).unwrap();
        assert_eq!(u.assemble(&x), t);
        assert!(u.coordinates(&Tensor2::basis(1, 0)).is_none());
    }
}
