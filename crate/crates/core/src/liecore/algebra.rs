use crate::error::{Error, Result};
use crate::fields::Field;
use crate::linalg::{Matrix, Subspace};

/// Position of the pair `(i, j)`, `i < j`, in the upper-triangle ordering
/// `(0,1), (0,2), .., (0,n-1), (1,2), ..`.
#[inline]
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

/// A bilinear antisymmetric bracket on `F^n`, not yet checked for Jacobi.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureTableDraft<F: Field> {
    pub field: F,
    pub dim: usize,
    /// `[b_i, b_j]` for `i < j`, indexed by [`pair_index`].
    pub table: Vec<Vec<F::Elem>>,
    pub labels: Vec<String>,
}

/// Failure of the Jacobi identity on basis vectors `b_i, b_j, b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation<E> {
    pub triple: (usize, usize, usize),
    pub defect: Vec<E>,
}

/// A finite-dimensional Lie algebra given by structure constants.
///
/// Only brackets `[b_i, b_j]` with `i < j` are stored; antisymmetry is
/// structural. Values of this type have passed the Jacobi check.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<F: Field> {
    field: F,
    dim: usize,
    table: Vec<Vec<F::Elem>>,
    labels: Vec<String>,
}

impl<F: Field> StructureTableDraft<F> {
    pub fn zero(field: F, dim: usize) -> Self {
        let table = vec![vec![field.zero(); dim]; pair_count(dim)];
        StructureTableDraft {
            field,
            dim,
            table,
            labels: default_labels(dim),
        }
    }

    /// Sets `[b_i, b_j] = value`, storing `-value` at `(j, i)` when `i > j`.
    pub fn set(&mut self, i: usize, j: usize, value: Vec<F::Elem>) -> Result<()> {
        if value.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: value.len(),
            });
        }
        if i == j || i >= self.dim || j >= self.dim {
            return Err(Error::Parse(format!("bad bracket index ({i}, {j})")));
        }
        let (a, b, v) = if i < j {
            (i, j, value)
        } else {
            (j, i, value.iter().map(|x| self.field.neg(x)).collect())
        };
        self.table[pair_index(self.dim, a, b)] = v;
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    fn basis_bracket(&self, i: usize, j: usize) -> Vec<F::Elem> {
        basis_bracket(&self.field, self.dim, &self.table, i, j)
    }

    fn ad_basis(&self, i: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (m, c) in v.iter().enumerate() {
            if f.is_zero(c) || m == i {
                continue;
            }
            let b = self.basis_bracket(i, m);
            for (o, x) in out.iter_mut().zip(&b) {
                *o = f.mul_add(o, c, x);
            }
        }
        out
    }

    /// Jacobi defect `[b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]]`.
    pub fn jacobi_defect(&self, i: usize, j: usize, k: usize) -> Vec<F::Elem> {
        let f = &self.field;
        let t1 = self.ad_basis(i, &self.basis_bracket(j, k));
        let t2 = self.ad_basis(j, &self.basis_bracket(k, i));
        let t3 = self.ad_basis(k, &self.basis_bracket(i, j));
        t1.iter()
            .zip(&t2)
            .zip(&t3)
            .map(|((a, b), c)| f.add(&f.add(a, b), c))
            .collect()
    }

    pub fn first_jacobi_violation(&self) -> Option<JacobiViolation<F::Elem>> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let d = self.jacobi_defect(i, j, k);
                    if d.iter().any(|x| !self.field.is_zero(x)) {
                        return Some(JacobiViolation {
                            triple: (i, j, k),
                            defect: d,
                        });
                    }
                }
            }
        }
        None
    }

    pub fn validate(self) -> std::result::Result<LieAlgebra<F>, JacobiViolation<F::Elem>> {
        match self.first_jacobi_violation() {
            Some(v) => Err(v),
            None => Ok(LieAlgebra {
                field: self.field,
                dim: self.dim,
                table: self.table,
                labels: self.labels,
            }),
        }
    }

    /// [`validate`](Self::validate) with the violation folded into [`Error::Jacobi`].
    pub fn into_algebra(self) -> Result<LieAlgebra<F>> {
        self.validate().map_err(|v| Error::Jacobi {
            i: v.triple.0,
            j: v.triple.1,
            k: v.triple.2,
        })
    }
}

fn basis_bracket<F: Field>(f: &F, n: usize, table: &[Vec<F::Elem>], i: usize, j: usize) -> Vec<F::Elem> {
    use std::cmp::Ordering::*;
    match i.cmp(&j) {
        Less => table[pair_index(n, i, j)].clone(),
        Equal => vec![f.zero(); n],
        Greater => table[pair_index(n, j, i)].iter().map(|x| f.neg(x)).collect(),
    }
}

impl<F: Field> LieAlgebra<F> {
    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<F::Elem>] {
        &self.table
    }

    pub fn into_draft(self) -> StructureTableDraft<F> {
        StructureTableDraft {
            field: self.field,
            dim: self.dim,
            table: self.table,
            labels: self.labels,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    /// `[b_i, b_j]` for any `i, j`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<F::Elem> {
        basis_bracket(&self.field, self.dim, &self.table, i, j)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().flatten().all(|x| self.field.is_zero(x))
    }

    /// Bilinear extension of the table.
    pub fn bracket(&self, u: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let n = self.dim;
        debug_assert!(u.len() == n && v.len() == n);
        let mut out = vec![f.zero(); n];
        for i in 0..n {
            for j in i + 1..n {
                let c = f.sub(&f.mul(&u[i], &v[j]), &f.mul(&u[j], &v[i]));
                if f.is_zero(&c) {
                    continue;
                }
                for (o, x) in out.iter_mut().zip(&self.table[pair_index(n, i, j)]) {
                    *o = f.mul_add(o, &c, x);
                }
            }
        }
        out
    }

    pub fn try_bracket(&self, u: &[F::Elem], v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        for w in [u, v] {
            if w.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: w.len(),
                });
            }
        }
        Ok(self.bracket(u, v))
    }

    /// Matrix of `ad u = [u, -]`, columns are images of basis vectors.
    pub fn ad(&self, u: &[F::Elem]) -> Matrix<F::Elem> {
        let cols: Vec<Vec<F::Elem>> = (0..self.dim)
            .map(|j| self.bracket(u, &crate::linalg::unit(&self.field, self.dim, j)))
            .collect();
        Matrix::from_columns(self.dim, &cols)
    }

    pub fn whole(&self) -> Subspace<F::Elem> {
        Subspace::whole(&self.field, self.dim)
    }

    pub fn zero_subspace(&self) -> Subspace<F::Elem> {
        Subspace::zero(self.dim)
    }

    pub fn span(&self, vectors: Vec<Vec<F::Elem>>) -> Result<Subspace<F::Elem>> {
        Subspace::span(&self.field, self.dim, vectors)
    }

    pub fn unit(&self, i: usize) -> Vec<F::Elem> {
        crate::linalg::unit(&self.field, self.dim, i)
    }

    /// Span of basis vectors by index.
    pub fn span_units(&self, idx: &[usize]) -> Subspace<F::Elem> {
        self.span(idx.iter().map(|&i| self.unit(i)).collect())
            .expect("unit vectors have the ambient width")
    }
}
