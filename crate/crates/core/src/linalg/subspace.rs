use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{Field, ScalarRepr};

use super::matrix::reduce_rows;
use super::Matrix;

/// A subspace of `F^n` held as its reduced row-echelon basis.
///
/// The basis is canonical, so structural equality and hashing coincide with
/// equality of subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace<E> {
    ambient: usize,
    rows: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

/// `{"ambient": n, "basis": [[...], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub ambient: usize,
    pub basis: Vec<Vec<ScalarRepr>>,
}

impl<E: Clone + Eq + Hash + Ord> Subspace<E> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn whole<F: Field<Elem = E>>(f: &F, ambient: usize) -> Self {
        let rows = (0..ambient).map(|i| unit(f, ambient, i)).collect();
        Subspace {
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<F: Field<Elem = E>>(f: &F, ambient: usize, vectors: Vec<Vec<E>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                got: v.len(),
            });
        }
        let (rows, pivots) = reduce_rows(f, vectors, ambient);
        Ok(Subspace {
            ambient,
            rows,
            pivots,
        })
    }

    /// Builds a subspace from rows already in reduced row-echelon form.
    pub(crate) fn from_rref_unchecked(ambient: usize, rows: Vec<Vec<E>>, pivots: Vec<usize>) -> Self {
        Subspace {
            ambient,
            rows,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; their unit vectors span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    pub fn as_matrix(&self) -> Matrix<E> {
        Matrix::from_rows(self.ambient, self.rows.clone()).expect("rows have ambient width")
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        Ok(())
    }

    /// Normal form of `v` modulo this subspace; zero exactly when `v` is a member.
    /// Linear in `v`.
    pub fn reduce<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&r[p]) {
                continue;
            }
            let factor = f.neg(&r[p]);
            for (x, b) in r.iter_mut().zip(row) {
                *x = f.mul_add(x, &factor, b);
            }
        }
        r
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&r[p]) {
                continue;
            }
            let factor = f.neg(&r[p]);
            for (x, b) in r.iter_mut().zip(row).skip(p) {
                *x = f.mul_add(x, &factor, b);
            }
        }
        r.iter().all(|x| f.is_zero(x))
    }

    /// Coordinates of a member `v` with respect to the canonical basis.
    pub fn coordinates<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Option<Vec<E>> {
        self.contains(f, v)
            .then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The member with the given coordinates.
    pub fn combine<F: Field<Elem = E>>(&self, f: &F, coords: &[E]) -> Vec<E> {
        let mut v = vec![f.zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.rows) {
            if f.is_zero(c) {
                continue;
            }
            for (x, b) in v.iter_mut().zip(row) {
                *x = f.mul_add(x, c, b);
            }
        }
        v
    }

    pub fn is_subspace_of<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> bool {
        self.ambient == other.ambient
            && self.dim() <= other.dim()
            && self.rows.iter().all(|r| other.contains(f, r))
    }

    pub fn sum<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Result<Self> {
        self.check(other)?;
        if other.rows.is_empty() || self.is_whole() {
            return Ok(self.clone());
        }
        if self.rows.is_empty() || other.is_whole() {
            return Ok(other.clone());
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Subspace::span(f, self.ambient, rows)
    }

    /// Zassenhaus intersection: reduce `[[u, u], [v, 0]]`; rows whose left half
    /// vanishes carry a basis of `U ∩ V` in their right half.
    pub fn intersect<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_whole() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_whole() {
            return Ok(other.clone());
        }
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for u in &self.rows {
            let mut r = u.clone();
            r.extend(u.iter().cloned());
            rows.push(r);
        }
        for v in &other.rows {
            let mut r = v.clone();
            r.extend(std::iter::repeat_n(f.zero(), n));
            rows.push(r);
        }
        let (red, pivots) = reduce_rows(f, rows, 2 * n);
        let gens: Vec<Vec<E>> = red
            .into_iter()
            .zip(pivots)
            .filter(|(_, p)| *p >= n)
            .map(|(r, _)| r[n..].to_vec())
            .collect();
        Subspace::span(f, n, gens)
    }

    /// Image of this subspace under a linear map given as an `n x n` matrix acting on columns.
    pub fn image<F: Field<Elem = E>>(&self, f: &F, m: &Matrix<E>) -> Result<Self> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: m.cols(),
            });
        }
        let gens = self.rows.iter().map(|r| m.mul_vec(f, r)).collect();
        Subspace::span(f, m.rows(), gens)
    }

    /// Largest subspace `K` of `self` with `A K ⊆ K` for every action `A`.
    ///
    /// Iterates `K <- {x in K : A x in K for all A}`; each round either keeps
    /// `K` or strictly lowers its dimension.
    pub fn invariant_core<F: Field<Elem = E>>(&self, f: &F, actions: &[Matrix<E>]) -> Result<Self> {
        for a in actions {
            if a.rows() != self.ambient || a.cols() != self.ambient {
                return Err(Error::DimensionMismatch {
                    expected: self.ambient,
                    got: a.cols(),
                });
            }
        }
        let mut k = self.clone();
        loop {
            if k.is_zero() {
                return Ok(k);
            }
            // x = sum c_i k_i stays iff sum c_i reduce(A k_i) = 0 for every A
            let mut system: Vec<Vec<E>> = vec![Vec::new(); k.dim()];
            for a in actions {
                for (i, row) in k.rows.iter().enumerate() {
                    system[i].extend(k.reduce(f, &a.mul_vec(f, row)));
                }
            }
            let width = system[0].len();
            if system[0].is_empty() || system.iter().flatten().all(|x| f.is_zero(x)) {
                return Ok(k);
            }
            let coeffs = Matrix::from_rows(width, system)?.transpose().kernel(f);
            if coeffs.dim() == k.dim() {
                return Ok(k);
            }
            let gens = coeffs.rows.iter().map(|c| k.combine(f, c)).collect();
            k = Subspace::span(f, self.ambient, gens)?;
        }
    }

    pub fn map_elems<T: Clone + Eq + Hash + Ord>(&self, g: impl Fn(&E) -> T) -> Subspace<T> {
        Subspace {
            ambient: self.ambient,
            rows: self.rows.iter().map(|r| r.iter().map(&g).collect()).collect(),
            pivots: self.pivots.clone(),
        }
    }

    pub fn to_json<F: Field<Elem = E>>(&self, f: &F) -> SubspaceJson {
        SubspaceJson {
            ambient: self.ambient,
            basis: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| f.encode(x)).collect())
                .collect(),
        }
    }

    pub fn from_json<F: Field<Elem = E>>(f: &F, j: &SubspaceJson) -> Result<Self> {
        let rows = j
            .basis
            .iter()
            .map(|r| r.iter().map(|x| f.decode(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(f, j.ambient, rows)
    }
}

pub fn unit<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}
