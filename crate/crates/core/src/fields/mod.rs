//! Exact fields: the rationals, prime fields GF(p) and small extensions GF(p^k).
//!
//! Algorithms are generic over [`Field`], whose elements are plain values
//! and whose arithmetic goes through the field object. [`Scalar`] is the
//! self-describing, checked form used at API and serialization boundaries.

mod finite;
mod rational;
mod scalar;
mod spec;

use std::fmt::Debug;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::Result;

pub use finite::FiniteField;
pub use rational::Rationals;
pub use scalar::{Scalar, ScalarValue};
pub use spec::{FieldKind, FieldSpec, MAX_EXTENSION_DEGREE};

/// JSON form of a field element: rationals as `"num/den"` strings, GF(p)
/// residues as integers, GF(p^k) elements as coefficient arrays `[c0, .., c(k-1)]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Int(i64),
    Text(String),
    Coeffs(Vec<u32>),
}

pub trait Field: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Ord + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn encode(&self, a: &Self::Elem) -> ScalarRepr;
    fn decode(&self, r: &ScalarRepr) -> Result<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `a + b*c`, the elimination workhorse.
    fn mul_add(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.add(a, &self.mul(b, c))
    }

    /// Rescale a nonzero row by a nonzero factor before it enters elimination.
    /// Any scaling is valid since callers only depend on the row's span.
    fn normalize_row(&self, _row: &mut [Self::Elem]) {}

    fn to_scalar(&self, a: &Self::Elem) -> Scalar {
        Scalar::from_repr(&self.spec(), &self.encode(a)).expect("field encodes its own elements")
    }
}
