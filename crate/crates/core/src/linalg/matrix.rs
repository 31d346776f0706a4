use crate::error::{Error, Result};
use crate::fields::Field;

use super::Subspace;

/// Dense row-major matrix. The field is supplied to each operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn new(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(rows * cols, data.len());
        Matrix { rows, cols, data }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    /// The matrix whose j-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<E>]) -> Self {
        let cols = columns.len();
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for c in columns {
                data.push(c[i].clone());
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![f.zero(); rows * cols])
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        let mut m = Matrix::zeros(f, n, n);
        for i in 0..n {
            m.set(i, i, f.one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.mul_add(&acc, a, b))
            })
            .collect()
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Matrix<E>) -> Result<Matrix<E>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = f.zero();
                for k in 0..self.cols {
                    acc = f.mul_add(&acc, self.get(i, k), other.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn map<T: Clone>(&self, g: impl Fn(&E) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(g).collect(),
        }
    }

    /// Reduced row-echelon form with zero rows dropped.
    pub fn rref<F: Field<Elem = E>>(&self, f: &F) -> Rref<E> {
        let (rows, pivots) = reduce_rows(f, self.row_vecs(), self.cols);
        Rref {
            matrix: Matrix::from_rows(self.cols, rows).expect("consistent widths"),
            pivots,
        }
    }

    pub fn rank<F: Field<Elem = E>>(&self, f: &F) -> usize {
        self.rref(f).rank()
    }

    /// Solution space of `M x = 0`.
    pub fn kernel<F: Field<Elem = E>>(&self, f: &F) -> Subspace<E>
    where
        E: Eq + std::hash::Hash + Ord,
    {
        let r = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !r.pivots.contains(c)).collect();
        let gens: Vec<Vec<E>> = free
            .iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.cols];
                v[fc] = f.one();
                for (i, &pc) in r.pivots.iter().enumerate() {
                    v[pc] = f.neg(r.matrix.get(i, fc));
                }
                v
            })
            .collect();
        Subspace::span(f, self.cols, gens).expect("kernel vectors have the ambient width")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<E> {
    pub matrix: Matrix<E>,
    pub pivots: Vec<usize>,
}

impl<E> Rref<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Gauss-Jordan elimination to canonical reduced row-echelon form.
/// Returns the nonzero rows and their pivot columns.
pub(crate) fn reduce_rows<F: Field>(
    f: &F,
    mut rows: Vec<Vec<F::Elem>>,
    ncols: usize,
) -> (Vec<Vec<F::Elem>>, Vec<usize>) {
    rows.retain(|r| r.iter().any(|x| !f.is_zero(x)));
    for r in rows.iter_mut() {
        f.normalize_row(r);
    }
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(sel) = (rank..rows.len()).find(|&i| !f.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(rank, sel);
        let inv = f.inv(&rows[rank][col]).expect("pivot is nonzero");
        for x in rows[rank].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let (head, tail) = rows.split_at_mut(rank);
        let (pivot_row, tail) = tail.split_first_mut().unwrap();
        for other in head.iter_mut().chain(tail.iter_mut()) {
            if f.is_zero(&other[col]) {
                continue;
            }
            let factor = f.neg(&other[col]);
            for (x, p) in other.iter_mut().zip(pivot_row.iter()).skip(col) {
                *x = f.mul_add(x, &factor, p);
            }
        }
        for other in tail.iter_mut() {
            f.normalize_row(other);
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}
