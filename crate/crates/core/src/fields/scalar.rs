use std::fmt;

use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

use super::rational::format_rational;
use super::{Field, FieldKind, FieldSpec, FiniteField, Rationals, ScalarRepr};

/// A field element tagged with its field. Operations between scalars of
/// different fields are errors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: FieldSpec,
    value: ScalarValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ScalarValue {
    Rational(BigRational),
    Residue(u32),
    /// Coefficients `[c0, .., c(k-1)]` reduced modulo the field's modulus.
    Poly(Vec<u32>),
}

enum Backend {
    Q,
    F(FiniteField),
}

fn backend(spec: &FieldSpec) -> Backend {
    match spec.kind() {
        FieldKind::Rationals => Backend::Q,
        _ => Backend::F(FiniteField::new(spec).expect("finite spec")),
    }
}

impl Scalar {
    fn from_finite(f: &FiniteField, code: u32) -> Scalar {
        let value = if f.degree() == 1 {
            ScalarValue::Residue(code)
        } else {
            ScalarValue::Poly(f.coefficients(code))
        };
        Scalar {
            field: f.spec(),
            value,
        }
    }

    fn code(&self, f: &FiniteField) -> u32 {
        match &self.value {
            ScalarValue::Residue(r) => *r,
            ScalarValue::Poly(c) => f.from_coefficients(c).expect("validated scalar"),
            ScalarValue::Rational(_) => unreachable!("rational value in a finite field"),
        }
    }

    fn rational(&self) -> &BigRational {
        match &self.value {
            ScalarValue::Rational(x) => x,
            _ => unreachable!("finite value in Q"),
        }
    }

    fn unary(
        &self,
        fq: impl FnOnce(&BigRational) -> Option<BigRational>,
        ff: impl FnOnce(&FiniteField, u32) -> Option<u32>,
    ) -> Result<Scalar> {
        match backend(&self.field) {
            Backend::Q => fq(self.rational())
                .map(|v| Scalar {
                    field: self.field.clone(),
                    value: ScalarValue::Rational(v),
                })
                .ok_or(Error::DivisionByZero),
            Backend::F(f) => {
                let r = ff(&f, self.code(&f)).ok_or(Error::DivisionByZero)?;
                Ok(Scalar::from_finite(&f, r))
            }
        }
    }

    fn binary(
        &self,
        other: &Scalar,
        fq: impl FnOnce(&BigRational, &BigRational) -> BigRational,
        ff: impl FnOnce(&FiniteField, u32, u32) -> u32,
    ) -> Result<Scalar> {
        self.check_same(other)?;
        match backend(&self.field) {
            Backend::Q => Ok(Scalar {
                field: self.field.clone(),
                value: ScalarValue::Rational(fq(self.rational(), other.rational())),
            }),
            Backend::F(f) => {
                let r = ff(&f, self.code(&f), other.code(&f));
                Ok(Scalar::from_finite(&f, r))
            }
        }
    }

    fn check_same(&self, other: &Scalar) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            });
        }
        Ok(())
    }

    pub fn from_integer(field: &FieldSpec, n: i64) -> Scalar {
        match backend(field) {
            Backend::Q => Scalar {
                field: field.clone(),
                value: ScalarValue::Rational(Rationals.from_i64(n)),
            },
            Backend::F(f) => Scalar::from_finite(&f, f.from_i64(n)),
        }
    }

    pub fn zero(field: &FieldSpec) -> Scalar {
        Scalar::from_integer(field, 0)
    }

    pub fn one(field: &FieldSpec) -> Scalar {
        Scalar::from_integer(field, 1)
    }

    pub fn from_repr(field: &FieldSpec, repr: &ScalarRepr) -> Result<Scalar> {
        match backend(field) {
            Backend::Q => Ok(Scalar {
                field: field.clone(),
                value: ScalarValue::Rational(Rationals.decode(repr)?),
            }),
            Backend::F(f) => Ok(Scalar::from_finite(&f, f.decode(repr)?)),
        }
    }

    pub fn to_repr(&self) -> ScalarRepr {
        match &self.value {
            ScalarValue::Rational(x) => ScalarRepr::Text(format_rational(x)),
            ScalarValue::Residue(r) => ScalarRepr::Int(*r as i64),
            ScalarValue::Poly(c) => ScalarRepr::Coeffs(c.clone()),
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn value(&self) -> &ScalarValue {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            ScalarValue::Rational(x) => Rationals.is_zero(x),
            ScalarValue::Residue(r) => *r == 0,
            ScalarValue::Poly(c) => c.iter().all(|&x| x == 0),
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.binary(other, |a, b| a + b, |f, a, b| f.add(&a, &b))
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.binary(other, |a, b| a - b, |f, a, b| f.sub(&a, &b))
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.binary(other, |a, b| a * b, |f, a, b| f.mul(&a, &b))
    }

    pub fn neg(&self) -> Scalar {
        self.unary(|a| Some(-a), |f, a| Some(f.neg(&a)))
            .expect("negation is total")
    }

    pub fn inv(&self) -> Result<Scalar> {
        self.unary(|a| Rationals.inv(a), |f, a| f.inv(&a))
    }

    /// Equality that refuses to compare across fields.
    pub fn try_eq(&self, other: &Scalar) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.value == other.value)
    }

    /// Canonical inclusion GF(p) into GF(p^k) (or any field of characteristic p).
    pub fn embed(&self, target: &FieldSpec) -> Result<Scalar> {
        let mismatch = || Error::CharacteristicMismatch {
            from: self.field.characteristic() as u64,
            to: target.to_string(),
        };
        match (&self.value, target.kind()) {
            (ScalarValue::Residue(r), FieldKind::PrimeField | FieldKind::ExtensionField)
                if target.characteristic() == self.field.characteristic() =>
            {
                let f = FiniteField::new(target)?;
                Ok(Scalar::from_finite(&f, f.embed_residue(*r)))
            }
            _ => Err(mismatch()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            ScalarValue::Rational(x) => {
                if x.is_integer() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}", x)
                }
            }
            ScalarValue::Residue(r) => write!(f, "{r}"),
            ScalarValue::Poly(c) => {
                let terms: Vec<String> = c
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, &x)| x != 0)
                    .map(|(i, &x)| match (i, x) {
                        (0, x) => format!("{x}"),
                        (1, 1) => "t".into(),
                        (1, x) => format!("{x}t"),
                        (i, 1) => format!("t^{i}"),
                        (i, x) => format!("{x}t^{i}"),
                    })
                    .collect();
                if terms.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", terms.join("+"))
                }
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_repr().serialize(s)
    }
}
