//! Exact computation of graded character rings of finite groups.
//!
//! The character ring of a finite group carries lambda operations induced by
//! exterior powers; these define gamma operations and a descending filtration
//! whose associated graded ring this crate computes exactly, degree by
//! degree, as finite abelian groups together with their Chern-class
//! generators and multiplicative structure. Everything is integer/rational
//! arithmetic: cyclotomic character values, Hermite/Smith normal forms for
//! subgroup lattices, and finite-field linear algebra for the mod-p
//! comparison map.

pub mod chartables;
pub mod cyclo;
pub mod error;
pub mod gamma_graded;
pub mod groups;
pub mod lambda_ops;
pub mod lattices;
pub mod modp_quillen;
pub mod ring_maps;

pub use chartables::{CharacterTable, ClassFunction, FieldTag, Table};
pub use cyclo::{CycNum, Valuation};
pub use error::{Error, Result};
pub use gamma_graded::{GammaFiltration, GradedElement, Presentation, VerificationReport};
pub use groups::{FiniteGroup, Group, GroupHom};
pub use lambda_ops::VirtualCharacter;
pub use lattices::{AbelianInvariants, IntMatrix, Sublattice};
