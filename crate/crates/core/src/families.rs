//! Named constructors for the algebras the library is exercised on.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fields::{Field, FieldKind, FieldSpec, FiniteField, Rationals, ScalarRepr};
use crate::liecore::{AnyAlgebra, LieAlgebra, StructureTableDraft};
use crate::linalg::Matrix;

fn labelled<F: Field>(d: StructureTableDraft<F>, labels: &[&str]) -> LieAlgebra<F> {
    d.with_labels(labels.iter().map(|s| s.to_string()).collect())
        .into_algebra()
        .expect("family tables satisfy Jacobi")
}

fn vec_of<F: Field>(f: &F, coeffs: &[i64]) -> Vec<F::Elem> {
    coeffs.iter().map(|&c| f.from_i64(c)).collect()
}

/// `[x,y] = αy + z`, `[x,z] = αz`, `[y,z] = 0`.
pub fn jordan<F: Field>(f: &F, alpha: F::Elem) -> LieAlgebra<F> {
    let mut d = StructureTableDraft::zero(f.clone(), 3);
    d.set(0, 1, vec![f.zero(), alpha.clone(), f.one()]).unwrap();
    d.set(0, 2, vec![f.zero(), f.zero(), alpha]).unwrap();
    labelled(d, &["x", "y", "z"])
}

/// `[x,y] = z`, all other brackets zero.
pub fn heisenberg<F: Field>(f: &F) -> LieAlgebra<F> {
    let mut d = StructureTableDraft::zero(f.clone(), 3);
    d.set(0, 1, vec_of(f, &[0, 0, 1])).unwrap();
    labelled(d, &["x", "y", "z"])
}

/// Basis `e, f, h` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
/// In characteristic 2 this degenerates to a nilpotent algebra.
pub fn sl2<F: Field>(f: &F) -> LieAlgebra<F> {
    let mut d = StructureTableDraft::zero(f.clone(), 3);
    d.set(2, 0, vec_of(f, &[2, 0, 0])).unwrap();
    d.set(2, 1, vec_of(f, &[0, -2, 0])).unwrap();
    d.set(0, 1, vec_of(f, &[0, 0, 1])).unwrap();
    labelled(d, &["e", "f", "h"])
}

/// The five-dimensional algebra with `[e1,e2] = e3+e4`, `[e1,e3] = -e2+e5`,
/// `[e1,e4] = e5`, `[e1,e5] = -e4`. Its derived algebra is abelian and
/// `span(e4, e5)` is its unique minimal ideal over fields where -1 is not a square.
pub fn rotation5<F: Field>(f: &F) -> LieAlgebra<F> {
    let mut d = StructureTableDraft::zero(f.clone(), 5);
    d.set(0, 1, vec_of(f, &[0, 0, 1, 1, 0])).unwrap();
    d.set(0, 2, vec_of(f, &[0, -1, 0, 0, 1])).unwrap();
    d.set(0, 3, vec_of(f, &[0, 0, 0, 0, 1])).unwrap();
    d.set(0, 4, vec_of(f, &[0, 0, 0, -1, 0])).unwrap();
    labelled(d, &["e1", "e2", "e3", "e4", "e5"])
}

pub fn abelian<F: Field>(f: &F, n: usize) -> LieAlgebra<F> {
    StructureTableDraft::zero(f.clone(), n).into_algebra().unwrap()
}

/// `[x,y] = y`.
pub fn two_dim_nonabelian<F: Field>(f: &F) -> LieAlgebra<F> {
    let mut d = StructureTableDraft::zero(f.clone(), 2);
    d.set(0, 1, vec_of(f, &[0, 1])).unwrap();
    labelled(d, &["x", "y"])
}

/// `F^m ⋊ Fx` with `ad x` acting on `F^m` as `d`. Whether the result meets
/// every condition of the semidirect classification shape depends on `d`.
pub fn split<F: Field>(f: &F, d: &Matrix<F::Elem>) -> Result<LieAlgebra<F>> {
    LieAlgebra::semidirect_by_matrix(f, d)
}

/// A parsed family name such as `jordan:alpha=1`, `sl2`, `abelian:n=3`,
/// `split:d=1,0;1,1` or a direct sum `sl2+abelian:n=1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Jordan { alpha: String },
    Heisenberg,
    Sl2,
    Rotation5,
    Abelian { n: usize },
    TwoDimNonabelian,
    Split { d: Vec<Vec<String>> },
    DirectSum(Vec<FamilySpec>),
}

fn parse_params(rest: &str) -> Vec<(String, String)> {
    rest.split(&[':', '&'][..])
        .filter(|s| !s.is_empty())
        .filter_map(|kv| kv.split_once('=').map(|(k, v)| (k.trim().to_string(), v.trim().to_string())))
        .collect()
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains('+') {
            let parts = s
                .split('+')
                .map(FamilySpec::from_str)
                .collect::<Result<Vec<_>>>()?;
            return Ok(FamilySpec::DirectSum(parts));
        }
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let params = parse_params(rest);
        let get = |k: &str| params.iter().find(|(key, _)| key == k).map(|(_, v)| v.clone());
        let missing = |k: &str| Error::Parse(format!("family {name:?} needs parameter {k}"));
        match name.to_ascii_lowercase().as_str() {
            "jordan" => Ok(FamilySpec::Jordan {
                alpha: get("alpha").ok_or_else(|| missing("alpha"))?,
            }),
            "heisenberg" => Ok(FamilySpec::Heisenberg),
            "sl2" => Ok(FamilySpec::Sl2),
            "rotation5" => Ok(FamilySpec::Rotation5),
            "abelian" => {
                let n = get("n").ok_or_else(|| missing("n"))?;
                let n = n.parse().map_err(|_| Error::Parse(format!("bad dimension {n:?}")))?;
                Ok(FamilySpec::Abelian { n })
            }
            "two-dim-nonabelian" | "nonabelian2" => Ok(FamilySpec::TwoDimNonabelian),
            "split" => {
                let d = get("d").ok_or_else(|| missing("d"))?;
                let rows: Vec<Vec<String>> = d
                    .split(';')
                    .map(|r| r.split(',').map(|x| x.trim().to_string()).collect())
                    .collect();
                if rows.iter().any(|r| r.len() != rows.len()) {
                    return Err(Error::Parse(format!("matrix {d:?} is not square")));
                }
                Ok(FamilySpec::Split { d: rows })
            }
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Jordan { alpha } => write!(f, "jordan:alpha={alpha}"),
            FamilySpec::Heisenberg => write!(f, "heisenberg"),
            FamilySpec::Sl2 => write!(f, "sl2"),
            FamilySpec::Rotation5 => write!(f, "rotation5"),
            FamilySpec::Abelian { n } => write!(f, "abelian:n={n}"),
            FamilySpec::TwoDimNonabelian => write!(f, "two-dim-nonabelian"),
            FamilySpec::Split { d } => {
                let rows: Vec<String> = d.iter().map(|r| r.join(",")).collect();
                write!(f, "split:d={}", rows.join(";"))
            }
            FamilySpec::DirectSum(parts) => {
                let p: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", p.join("+"))
            }
        }
    }
}

fn parse_elem<F: Field>(f: &F, s: &str) -> Result<F::Elem> {
    if let Ok(n) = s.parse::<i64>() {
        return Ok(f.from_i64(n));
    }
    let repr = serde_json::from_str::<ScalarRepr>(s).unwrap_or_else(|_| ScalarRepr::Text(s.to_string()));
    f.decode(&repr)
}

impl FamilySpec {
    pub fn build<F: Field>(&self, f: &F) -> Result<LieAlgebra<F>> {
        Ok(match self {
            FamilySpec::Jordan { alpha } => jordan(f, parse_elem(f, alpha)?),
            FamilySpec::Heisenberg => heisenberg(f),
            FamilySpec::Sl2 => sl2(f),
            FamilySpec::Rotation5 => rotation5(f),
            FamilySpec::Abelian { n } => abelian(f, *n),
            FamilySpec::TwoDimNonabelian => two_dim_nonabelian(f),
            FamilySpec::Split { d } => {
                let m = d.len();
                let data = d
                    .iter()
                    .flatten()
                    .map(|x| parse_elem(f, x))
                    .collect::<Result<Vec<_>>>()?;
                split(f, &Matrix::new(m, m, data))?
            }
            FamilySpec::DirectSum(parts) => {
                let mut it = parts.iter();
                let first = it
                    .next()
                    .ok_or_else(|| Error::Parse("empty direct sum".into()))?
                    .build(f)?;
                it.try_fold(first, |acc, p| acc.direct_sum(&p.build(f)?))?
            }
        })
    }

    pub fn instantiate(&self, field: &FieldSpec) -> Result<AnyAlgebra> {
        Ok(match field.kind() {
            FieldKind::Rationals => AnyAlgebra::Rational(self.build(&Rationals)?),
            _ => AnyAlgebra::Finite(self.build(&FiniteField::new(field)?)?),
        })
    }

    /// Remarks worth surfacing in reports for this family over `field`.
    pub fn notes(&self, field: &FieldSpec) -> Vec<String> {
        match self {
            FamilySpec::Sl2 if field.characteristic() == 2 => {
                vec!["sl2 in characteristic 2: [h,e] = [h,f] = 0, the algebra is nilpotent".into()]
            }
            FamilySpec::DirectSum(parts) => parts.iter().flat_map(|p| p.notes(field)).collect(),
            _ => Vec::new(),
        }
    }

    /// Basis indices spanning the Frattini ideal in characteristic 0, for the
    /// families where that value is known independently of computation.
    pub fn known_char0_frattini(&self) -> Option<Vec<usize>> {
        match self {
            FamilySpec::Rotation5 => Some(vec![3, 4]),
            // nilpotent: the Frattini ideal is the derived algebra
            FamilySpec::Heisenberg => Some(vec![2]),
            FamilySpec::Abelian { .. } => Some(vec![]),
            _ => None,
        }
    }
}

/// The named family whose rational table equals `l`, among those with a
/// known characteristic-0 Frattini ideal.
pub fn recognize_rational(l: &LieAlgebra<Rationals>) -> Option<FamilySpec> {
    [
        FamilySpec::Rotation5,
        FamilySpec::Heisenberg,
        FamilySpec::Abelian { n: l.dim() },
    ]
    .into_iter()
    .find(|fam| fam.build(&Rationals).is_ok_and(|m| m.dim() == l.dim() && m.table() == l.table()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jordan_tables() {
        let f = FiniteField::prime(3).unwrap();
        assert_eq!(jordan(&f, 0).table(), heisenberg(&f).table());
        let l = jordan(&f, 1);
        assert_eq!(l.basis_bracket(0, 1), vec![0, 1, 1]);
        assert_eq!(l.basis_bracket(0, 2), vec![0, 0, 1]);
        assert_eq!(l.basis_bracket(1, 2), vec![0, 0, 0]);
        assert_eq!(l.labels(), &["x", "y", "z"]);
    }

    #[test]
    fn sl2_over_gf5() {
        let f = FiniteField::prime(5).unwrap();
        let s = sl2(&f);
        // [h,e] = 2e, [h,f] = -2f = 3f, [e,f] = h
        assert_eq!(s.basis_bracket(2, 0), vec![2, 0, 0]);
        assert_eq!(s.basis_bracket(2, 1), vec![0, 3, 0]);
        assert_eq!(s.basis_bracket(0, 1), vec![0, 0, 1]);
        let _ = sl2(&Rationals);
    }

    #[test]
    fn rotation5_table() {
        let l = rotation5(&Rationals);
        assert_eq!(l.bracket(&l.unit(0), &l.unit(4)), vec_of(&Rationals, &[0, 0, 0, -1, 0]));
        let d = l.derived_algebra();
        assert_eq!(d, l.span_units(&[1, 2, 3, 4]));
        assert!(l.is_abelian_sub(&d));
    }

    #[test]
    fn every_family_validates_on_every_small_field() {
        let specs = [
            "jordan:alpha=1",
            "jordan:alpha=0",
            "heisenberg",
            "sl2",
            "rotation5",
            "abelian:n=3",
            "two-dim-nonabelian",
            "split:d=1,0;1,1",
            "sl2+abelian:n=1",
        ];
        for s in specs {
            let fam: FamilySpec = s.parse().unwrap();
            assert_eq!(fam.to_string(), s);
            for field in ["q", "gf2", "gf3", "gf4", "gf5", "gf7", "gf9"] {
                fam.instantiate(&field.parse().unwrap())
                    .unwrap_or_else(|e| panic!("{s} over {field}: {e}"));
            }
        }
        assert!("nonsense".parse::<FamilySpec>().is_err());
        assert!("jordan".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn split_zero_matrix_is_abelian() {
        let f = FiniteField::prime(3).unwrap();
        let l = split(&f, &Matrix::zeros(&f, 2, 2)).unwrap();
        assert_eq!(l.dim(), 3);
        assert!(l.is_abelian());
    }

    #[test]
    fn rational_alpha() {
        let fam: FamilySpec = "jordan:alpha=1/2".parse().unwrap();
        let l = fam.build(&Rationals).unwrap();
        assert_eq!(l.basis_bracket(0, 2)[2], num_rational::BigRational::new(1.into(), 2.into()));
    }
}
