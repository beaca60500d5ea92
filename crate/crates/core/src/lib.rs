//! Exact-arithmetic kernel for the subring ⟨α, β, γ⟩ of the cohomology of the
//! moduli space of stable rank-2 bundles with fixed odd-degree determinant.
//!
//! The ring is presented as ℚ[α, β, γ] modulo three relations per genus. This
//! crate builds those relations two ways, computes reduced Gröbner bases,
//! expands the closed-form Chern classes and counts Betti numbers, all in
//! exact rational arithmetic.

pub mod betti;
pub mod check;
pub mod chern;
pub mod error;
pub mod groebner;
pub mod parse;
pub mod relations;
pub mod ring;
pub mod series;

pub use check::CheckReport;
pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, StandardMonomialBasis};
pub use relations::{Construction, RelationTriple};
pub use ring::{mono_cmp, Monomial, Polynomial, Rational, WeightedDegree};
pub use series::PowerSeries;
