//! Exact Lie algebras given by structure constants, with brute-force
//! subalgebra lattices and Frattini-theoretic predicates over finite fields.

pub mod classify;
pub mod error;
pub mod families;
pub mod fields;
pub mod lattice;
pub mod liecore;
pub mod linalg;

pub use error::{Error, Result};
pub use fields::{Field, FieldSpec, FiniteField, Rationals, Scalar};
pub use liecore::{AnyAlgebra, LieAlgebra, StructureTableDraft};
pub use lattice::{LatticeConfig, SubalgebraLattice};
pub use linalg::{Matrix, Subspace};
