//! Dense exact linear algebra and the canonical subspace calculus.

mod matrix;
mod subspace;

pub use matrix::{Matrix, Rref};
pub use subspace::{unit, Subspace, SubspaceJson};
