//! Exact combinatorics of higher-level Fock spaces: canonical, dual
//! canonical, quasi-canonical and monomial bases, their transition matrices
//! through parabolic Kazhdan-Lusztig polynomials, crystal operators and
//! rectification maps on column-strict tableaux, and a desk-scale explicit
//! model of degenerate cyclotomic Hecke algebras for cross-checking
//! decomposition numbers.

pub mod crystal;
pub mod error;
pub mod kl;
pub mod laurent;
pub mod matrix;
pub mod perm;
pub mod tableaux;
pub mod wedge;
pub mod weights;

pub use error::{AlgebraError, HeckeError, TableauError};
pub use laurent::LaurentPoly;
pub use matrix::{BarSemilinearMap, Lattice, PolyMatrix};
pub use tableaux::{CSTableau, Multipartition, Structure};
pub use weights::{Charge, IndexSet, RootElement};
