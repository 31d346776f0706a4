//! Lie algebras by structure constants and the bracket calculus on subspaces.

mod algebra;
mod json;
mod ops;

pub use algebra::{
    default_labels, pair_count, pair_index, JacobiViolation, LieAlgebra, StructureTableDraft,
};
pub use json::{AlgebraJson, AnyAlgebra, AnyDraft, AnyValidation, BracketJson};
pub use ops::{Quotient, Restriction};
