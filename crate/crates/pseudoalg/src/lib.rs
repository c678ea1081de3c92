//! Exact symbolic computation with Lie and Leibniz pseudoalgebras over the
//! Hopf algebra H = k[s] (k = Q).
//!
//! The crate is organised bottom-up:
//!
//! * [`rat`], [`hopf`] — exact scalars and the divided-power Hopf algebra H;
//! * [`tensor`] — H⊗2, H⊗3, bracket-composition operators, canonical forms;
//! * [`algebra`] — pseudoalgebras, skew/Jacobi checks, change of basis;
//! * [`derived`] — bracket submodules and the derived series;
//! * [`linalg`] — exact sparse elimination;
//! * [`solver`] — identity templates, cohomology, m-type enumeration;
//! * [`catalog`] — constructors for the classified families;
//! * [`annihilation`] — annihilation Lie algebras over Laurent currents;
//! * [`lambda`] — λ-bracket presentation;
//! * [`io`] — the `.pa` text format and JSON reports.

pub mod algebra;
pub mod annihilation;
pub mod catalog;
pub mod derived;
pub mod hopf;
pub mod io;
pub mod lambda;
pub mod linalg;
pub mod rat;
pub mod solver;
pub mod tensor;

pub use algebra::{CheckReport, Classification, PseudoAlgebra};
pub use hopf::HPoly;
pub use rat::Rat;
pub use tensor::{CanonicalPair, Tensor2, Tensor3};
