use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{Field, FieldKind, FieldSpec, FiniteField, Rationals, ScalarRepr};

use super::algebra::{default_labels, pair_index, JacobiViolation, LieAlgebra, StructureTableDraft};

/// Algebra file format. Only nonzero brackets `[b_i, b_j]` with `i < j`
/// are listed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: FieldSpec,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub value: Vec<ScalarRepr>,
}

impl<F: Field> StructureTableDraft<F> {
    pub fn to_json(&self) -> AlgebraJson {
        let f = &self.field;
        let n = self.dim;
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = &self.table[pair_index(n, i, j)];
                if v.iter().any(|x| !f.is_zero(x)) {
                    brackets.push(BracketJson {
                        i,
                        j,
                        value: v.iter().map(|x| f.encode(x)).collect(),
                    });
                }
            }
        }
        AlgebraJson {
            field: f.spec(),
            dim: n,
            labels: Some(self.labels.clone()),
            brackets,
        }
    }

    /// Reads a table over `field`, which must match the file's field.
    pub fn from_json(field: &F, j: &AlgebraJson) -> Result<Self> {
        if field.spec() != j.field {
            return Err(Error::FieldMismatch {
                left: field.spec().to_string(),
                right: j.field.to_string(),
            });
        }
        let mut d = StructureTableDraft::zero(field.clone(), j.dim);
        if let Some(labels) = &j.labels {
            if labels.len() != j.dim {
                return Err(Error::DimensionMismatch {
                    expected: j.dim,
                    got: labels.len(),
                });
            }
            d.labels = labels.clone();
        }
        let mut seen = std::collections::BTreeSet::new();
        for b in &j.brackets {
            if !(b.i < b.j && b.j < j.dim) {
                return Err(Error::Parse(format!(
                    "bracket ({}, {}) must satisfy i < j < dim",
                    b.i, b.j
                )));
            }
            if !seen.insert((b.i, b.j)) {
                return Err(Error::Parse(format!("bracket ({}, {}) listed twice", b.i, b.j)));
            }
            let v = b
                .value
                .iter()
                .map(|x| field.decode(x))
                .collect::<Result<Vec<_>>>()?;
            d.set(b.i, b.j, v)?;
        }
        Ok(d)
    }
}

impl<F: Field> LieAlgebra<F> {
    pub fn to_json(&self) -> AlgebraJson {
        self.clone().into_draft().to_json()
    }

    pub fn from_json(field: &F, j: &AlgebraJson) -> Result<Self> {
        StructureTableDraft::from_json(field, j)?.into_algebra()
    }
}

/// An algebra whose field is only known at run time.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyAlgebra {
    Rational(LieAlgebra<Rationals>),
    Finite(LieAlgebra<FiniteField>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum AnyDraft {
    Rational(StructureTableDraft<Rationals>),
    Finite(StructureTableDraft<FiniteField>),
}

/// Outcome of validating a draft whose field is only known at run time.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyValidation {
    Valid(AnyAlgebra),
    Violation {
        triple: (usize, usize, usize),
        defect: Vec<ScalarRepr>,
    },
}

impl AnyDraft {
    pub fn from_json(j: &AlgebraJson) -> Result<AnyDraft> {
        Ok(match j.field.kind() {
            FieldKind::Rationals => AnyDraft::Rational(StructureTableDraft::from_json(&Rationals, j)?),
            _ => AnyDraft::Finite(StructureTableDraft::from_json(&FiniteField::new(&j.field)?, j)?),
        })
    }

    pub fn validate(self) -> AnyValidation {
        fn fold<F: Field>(
            d: StructureTableDraft<F>,
            wrap: impl FnOnce(LieAlgebra<F>) -> AnyAlgebra,
        ) -> AnyValidation {
            let f = d.field.clone();
            match d.validate() {
                Ok(l) => AnyValidation::Valid(wrap(l)),
                Err(JacobiViolation { triple, defect }) => AnyValidation::Violation {
                    triple,
                    defect: defect.iter().map(|x| f.encode(x)).collect(),
                },
            }
        }
        match self {
            AnyDraft::Rational(d) => fold(d, AnyAlgebra::Rational),
            AnyDraft::Finite(d) => fold(d, AnyAlgebra::Finite),
        }
    }
}

impl AnyAlgebra {
    pub fn from_json(j: &AlgebraJson) -> Result<AnyAlgebra> {
        Ok(match j.field.kind() {
            FieldKind::Rationals => AnyAlgebra::Rational(LieAlgebra::from_json(&Rationals, j)?),
            _ => AnyAlgebra::Finite(LieAlgebra::from_json(&FiniteField::new(&j.field)?, j)?),
        })
    }

    pub fn to_json(&self) -> AlgebraJson {
        match self {
            AnyAlgebra::Rational(l) => l.to_json(),
            AnyAlgebra::Finite(l) => l.to_json(),
        }
    }

    pub fn field_spec(&self) -> FieldSpec {
        match self {
            AnyAlgebra::Rational(l) => l.field().spec(),
            AnyAlgebra::Finite(l) => l.field().spec(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Rational(l) => l.dim(),
            AnyAlgebra::Finite(l) => l.dim(),
        }
    }
}

impl AlgebraJson {
    pub fn labels_or_default(&self) -> Vec<String> {
        self.labels.clone().unwrap_or_else(|| default_labels(self.dim))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn heisenberg_json_shape() {
        let h = families::heisenberg(&FiniteField::prime(3).unwrap());
        let s = serde_json::to_string(&h.to_json()).unwrap();
        assert_eq!(
            s,
            r#"{"field":{"kind":"prime","p":3},"dim":3,"labels":["x","y","z"],"brackets":[{"i":0,"j":1,"value":[0,0,1]}]}"#
        );
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let ex = families::rotation5(&Rationals);
        let s1 = serde_json::to_string_pretty(&ex.to_json()).unwrap();
        let back = AnyAlgebra::from_json(&serde_json::from_str(&s1).unwrap()).unwrap();
        let s2 = serde_json::to_string_pretty(&back.to_json()).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(back, AnyAlgebra::Rational(ex));
    }

    #[test]
    fn rejects_bad_files() {
        let bad = r#"{"field":{"kind":"prime","p":2},"dim":3,"brackets":[{"i":1,"j":0,"value":[0,0,1]}]}"#;
        assert!(AnyAlgebra::from_json(&serde_json::from_str(bad).unwrap()).is_err());
        let jac = r#"{"field":{"kind":"rationals"},"dim":3,"brackets":[
            {"i":0,"j":1,"value":["0","0","1"]},{"i":1,"j":2,"value":["1","0","0"]},
            {"i":0,"j":2,"value":["1","0","0"]}]}"#;
        let j: AlgebraJson = serde_json::from_str(jac).unwrap();
        assert_eq!(AnyAlgebra::from_json(&j).unwrap_err(), Error::Jacobi { i: 0, j: 1, k: 2 });
        match AnyDraft::from_json(&j).unwrap().validate() {
            AnyValidation::Violation { triple, defect } => {
                assert_eq!(triple, (0, 1, 2));
                assert_eq!(
                    defect,
                    vec![
                        ScalarRepr::Text("0/1".into()),
                        ScalarRepr::Text("0/1".into()),
                        ScalarRepr::Text("1/1".into())
                    ]
                );
            }
            AnyValidation::Valid(_) => panic!("expected a violation"),
        }
    }
}
