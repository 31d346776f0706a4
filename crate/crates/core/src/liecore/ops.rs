use crate::error::{Error, Result};
use crate::fields::{Field, FiniteField, Rationals};
use crate::linalg::{Matrix, Subspace};

use super::algebra::{pair_index, LieAlgebra, StructureTableDraft};

type Space<F> = Subspace<<F as Field>::Elem>;

/// A subalgebra presented as an algebra in its own right.
#[derive(Clone, Debug)]
pub struct Restriction<F: Field> {
    pub algebra: LieAlgebra<F>,
    /// The subalgebra inside the ambient algebra; its canonical basis is the
    /// basis of `algebra`.
    pub embedding: Space<F>,
}

impl<F: Field> Restriction<F> {
    /// Ambient vector for coordinates in the restricted algebra.
    pub fn lift(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        self.embedding.combine(self.algebra.field(), coords)
    }

    pub fn lift_subspace(&self, u: &Space<F>) -> Space<F> {
        let gens = u.basis().iter().map(|r| self.lift(r)).collect();
        Subspace::span(self.algebra.field(), self.embedding.ambient(), gens)
            .expect("lifted vectors have the ambient width")
    }

    /// Restricted coordinates of an ambient subspace contained in the subalgebra.
    pub fn pull_subspace(&self, u: &Space<F>) -> Option<Space<F>> {
        let f = self.algebra.field();
        let gens = u
            .basis()
            .iter()
            .map(|r| self.embedding.coordinates(f, r))
            .collect::<Option<Vec<_>>>()?;
        Some(Subspace::span(f, self.embedding.dim(), gens).expect("coordinate width"))
    }
}

/// `L / I` on the coordinates that are not pivots of `I`.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    pub algebra: LieAlgebra<F>,
    pub ideal: Space<F>,
    /// Ambient coordinates whose unit vectors map to the quotient basis.
    pub complement: Vec<usize>,
}

impl<F: Field> Quotient<F> {
    pub fn project(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let r = self.ideal.reduce(self.algebra.field(), v);
        self.complement.iter().map(|&c| r[c].clone()).collect()
    }

    pub fn project_subspace(&self, u: &Space<F>) -> Space<F> {
        let gens = u.basis().iter().map(|r| self.project(r)).collect();
        Subspace::span(self.algebra.field(), self.complement.len(), gens).expect("quotient width")
    }
}

impl<F: Field> LieAlgebra<F> {
    /// `span{[u, v] : u in U, v in V}`.
    pub fn bracket_spaces(&self, u: &Space<F>, v: &Space<F>) -> Result<Space<F>> {
        for s in [u, v] {
            if s.ambient() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    got: s.ambient(),
                });
            }
        }
        let mut gens = Vec::with_capacity(u.dim() * v.dim());
        for a in u.basis() {
            for b in v.basis() {
                let c = self.bracket(a, b);
                if c.iter().any(|x| !self.field().is_zero(x)) {
                    gens.push(c);
                }
            }
        }
        self.span(gens)
    }

    fn bs(&self, u: &Space<F>, v: &Space<F>) -> Space<F> {
        self.bracket_spaces(u, v).expect("subspaces of this algebra")
    }

    /// Derived series of the subalgebra `s`, from `s` down to its stable term.
    pub fn derived_series_of(&self, s: &Space<F>) -> Vec<Space<F>> {
        let mut series = vec![s.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.bs(last, last);
            if next.dim() == last.dim() {
                return series;
            }
            series.push(next);
        }
    }

    /// Lower central series `s ⊇ [s,s] ⊇ [s,[s,s]] ⊇ ..` to its stable term.
    pub fn lower_central_series_of(&self, s: &Space<F>) -> Vec<Space<F>> {
        let mut series = vec![s.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.bs(s, last);
            if next.dim() == last.dim() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn derived_series(&self) -> Vec<Space<F>> {
        self.derived_series_of(&self.whole())
    }

    pub fn lower_central_series(&self) -> Vec<Space<F>> {
        self.lower_central_series_of(&self.whole())
    }

    pub fn is_solvable_sub(&self, s: &Space<F>) -> bool {
        self.derived_series_of(s).last().unwrap().is_zero()
    }

    pub fn is_nilpotent_sub(&self, s: &Space<F>) -> bool {
        self.lower_central_series_of(s).last().unwrap().is_zero()
    }

    pub fn is_abelian_sub(&self, s: &Space<F>) -> bool {
        let f = self.field();
        let b = s.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| self.bracket(&b[i], &b[j]).iter().all(|x| f.is_zero(x))))
    }

    pub fn is_solvable(&self) -> bool {
        self.is_solvable_sub(&self.whole())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_nilpotent_sub(&self.whole())
    }

    /// Nilpotency class (length of the lower central series to 0), if nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let lcs = self.lower_central_series();
        lcs.last().unwrap().is_zero().then(|| lcs.len() - 1)
    }

    pub fn derived_algebra(&self) -> Space<F> {
        let w = self.whole();
        self.bs(&w, &w)
    }

    pub fn is_subalgebra(&self, u: &Space<F>) -> bool {
        let f = self.field();
        let b = u.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| u.contains(f, &self.bracket(&b[i], &b[j]))))
    }

    /// `[within, u] ⊆ u`: `u` is an ideal of the subalgebra `within`.
    pub fn is_ideal_in(&self, within: &Space<F>, u: &Space<F>) -> bool {
        let f = self.field();
        within
            .basis()
            .iter()
            .all(|a| u.basis().iter().all(|b| u.contains(f, &self.bracket(a, b))))
    }

    pub fn is_ideal(&self, u: &Space<F>) -> bool {
        let f = self.field();
        (0..self.dim()).all(|i| u.basis().iter().all(|b| u.contains(f, &self.bracket(&self.unit(i), b))))
    }

    /// Smallest subalgebra containing `u`: iterate `U <- U + [U, U]`.
    pub fn subalgebra_closure(&self, u: &Space<F>) -> Space<F> {
        let f = self.field();
        let mut cur = u.clone();
        loop {
            let next = cur.sum(f, &self.bs(&cur, &cur)).expect("same ambient");
            if next.dim() == cur.dim() {
                return cur;
            }
            cur = next;
        }
    }

    /// Ideal generated by `u`.
    pub fn ideal_closure(&self, u: &Space<F>) -> Space<F> {
        let f = self.field();
        let w = self.whole();
        let mut cur = u.clone();
        loop {
            let next = cur.sum(f, &self.bs(&w, &cur)).expect("same ambient");
            if next.dim() == cur.dim() {
                return cur;
            }
            cur = next;
        }
    }

    pub fn subalgebra_restrict(&self, s: &Space<F>) -> Result<Restriction<F>> {
        if s.ambient() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: s.ambient(),
            });
        }
        if !self.is_subalgebra(s) {
            return Err(Error::NotSubalgebra);
        }
        let f = self.field();
        let d = s.dim();
        let mut draft = StructureTableDraft::zero(f.clone(), d);
        let b = s.basis();
        for i in 0..d {
            for j in i + 1..d {
                let c = s.coordinates(f, &self.bracket(&b[i], &b[j])).expect("closed under bracket");
                draft.table[pair_index(d, i, j)] = c;
            }
        }
        draft.labels = s
            .pivots()
            .iter()
            .map(|&p| self.labels()[p].clone())
            .collect();
        Ok(Restriction {
            algebra: draft.into_algebra()?,
            embedding: s.clone(),
        })
    }

    pub fn quotient(&self, ideal: &Space<F>) -> Result<Quotient<F>> {
        if ideal.ambient() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: ideal.ambient(),
            });
        }
        if !self.is_ideal(ideal) {
            return Err(Error::NotIdeal);
        }
        let f = self.field();
        let complement = ideal.non_pivots();
        let m = complement.len();
        let mut draft = StructureTableDraft::zero(f.clone(), m);
        let mut q = Quotient {
            algebra: draft.clone().into_algebra()?,
            ideal: ideal.clone(),
            complement: complement.clone(),
        };
        for a in 0..m {
            for b in a + 1..m {
                let v = self.basis_bracket(complement[a], complement[b]);
                draft.table[pair_index(m, a, b)] = q.project(&v);
            }
        }
        draft.labels = complement.iter().map(|&c| self.labels()[c].clone()).collect();
        q.algebra = draft.into_algebra()?;
        Ok(q)
    }

    pub fn centralizer(&self, u: &Space<F>) -> Space<F> {
        // x with [x, u_k] = 0 for each basis vector u_k of U
        let n = self.dim();
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        let cols: Vec<Vec<Vec<F::Elem>>> = u
            .basis()
            .iter()
            .map(|b| (0..n).map(|j| self.bracket(&self.unit(j), b)).collect())
            .collect();
        for images in &cols {
            for r in 0..n {
                rows.push(images.iter().map(|img| img[r].clone()).collect());
            }
        }
        if rows.is_empty() {
            return self.whole();
        }
        Matrix::from_rows(n, rows).expect("width n").kernel(self.field())
    }

    pub fn center(&self) -> Space<F> {
        self.centralizer(&self.whole())
    }

    /// `{x : [x, U] ⊆ U}`.
    pub fn normalizer(&self, u: &Space<F>) -> Space<F> {
        let n = self.dim();
        let f = self.field();
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        for b in u.basis() {
            let images: Vec<Vec<F::Elem>> =
                (0..n).map(|j| u.reduce(f, &self.bracket(&self.unit(j), b))).collect();
            for r in 0..n {
                rows.push(images.iter().map(|img| img[r].clone()).collect());
            }
        }
        if rows.is_empty() {
            return self.whole();
        }
        Matrix::from_rows(n, rows).expect("width n").kernel(f)
    }

    /// Algebra direct sum; the basis of `self` comes first.
    pub fn direct_sum(&self, other: &LieAlgebra<F>) -> Result<LieAlgebra<F>> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch {
                left: self.field().spec().to_string(),
                right: other.field().spec().to_string(),
            });
        }
        let f = self.field();
        let (n1, n2) = (self.dim(), other.dim());
        let n = n1 + n2;
        let mut draft = StructureTableDraft::zero(f.clone(), n);
        for i in 0..n1 {
            for j in i + 1..n1 {
                let mut v = self.basis_bracket(i, j);
                v.extend(std::iter::repeat_n(f.zero(), n2));
                draft.table[pair_index(n, i, j)] = v;
            }
        }
        for i in 0..n2 {
            for j in i + 1..n2 {
                let mut v = vec![f.zero(); n1];
                v.extend(other.basis_bracket(i, j));
                draft.table[pair_index(n, n1 + i, n1 + j)] = v;
            }
        }
        let mut labels = self.labels().to_vec();
        labels.extend(other.labels().iter().cloned());
        if labels.iter().collect::<std::collections::BTreeSet<_>>().len() < n {
            labels = super::algebra::default_labels(n);
        }
        draft.labels = labels;
        draft.into_algebra()
    }

    /// `F^m ⋊ Fx`: basis `x, w_1, .., w_m` with `w` abelian and `[x, w_j] = sum_i d[i][j] w_i`.
    pub fn semidirect_by_matrix(field: &F, d: &Matrix<F::Elem>) -> Result<LieAlgebra<F>> {
        if d.rows() != d.cols() {
            return Err(Error::DimensionMismatch {
                expected: d.rows(),
                got: d.cols(),
            });
        }
        let m = d.rows();
        let n = m + 1;
        let mut draft = StructureTableDraft::zero(field.clone(), n);
        for j in 0..m {
            let mut v = vec![field.zero()];
            v.extend(d.column(j));
            draft.table[pair_index(n, 0, j + 1)] = v;
        }
        draft.labels = std::iter::once("x".to_string())
            .chain((1..=m).map(|i| format!("w{i}")))
            .collect();
        draft.into_algebra()
    }

    /// Image of `u` under the linear map `p`, checked to be an algebra homomorphism
    /// on basis brackets: `p[b_i, b_j] = [p b_i, p b_j]` in `target`.
    pub fn is_homomorphism(&self, target: &LieAlgebra<F>, p: &Matrix<F::Elem>) -> bool {
        let f = self.field();
        if p.cols() != self.dim() || p.rows() != target.dim() {
            return false;
        }
        let images: Vec<Vec<F::Elem>> = (0..self.dim()).map(|j| p.column(j)).collect();
        (0..self.dim()).all(|i| {
            (i + 1..self.dim()).all(|j| {
                let lhs = p.mul_vec(f, &self.basis_bracket(i, j));
                lhs == target.bracket(&images[i], &images[j])
            })
        })
    }
}

impl LieAlgebra<Rationals> {
    /// Entrywise reduction of an integer structure table modulo `p`.
    pub fn reduce_mod_p(&self, p: u32) -> Result<LieAlgebra<FiniteField>> {
        let gf = FiniteField::prime(p)?;
        let n = self.dim();
        let mut draft = StructureTableDraft::zero(gf.clone(), n);
        for i in 0..n {
            for j in i + 1..n {
                let v = &self.table()[pair_index(n, i, j)];
                let mut out = Vec::with_capacity(n);
                for (coord, x) in v.iter().enumerate() {
                    if !x.is_integer() {
                        return Err(Error::NonIntegerEntry { i, j, coord });
                    }
                    let r = x.numer() % num_bigint::BigInt::from(p);
                    let r: i64 = r.try_into().expect("residue fits");
                    out.push(gf.from_i64(r));
                }
                draft.table[pair_index(n, i, j)] = out;
            }
        }
        draft.labels = self.labels().to_vec();
        draft.into_algebra()
    }
}

impl LieAlgebra<FiniteField> {
    /// `L ⊗ GF(p^k)` for `L` over GF(p).
    pub fn extend_scalars(&self, target: &FiniteField) -> Result<LieAlgebra<FiniteField>> {
        let src = self.field();
        if src.degree() != 1 || src.characteristic() != target.characteristic() {
            return Err(Error::CharacteristicMismatch {
                from: src.characteristic() as u64,
                to: target.spec().to_string(),
            });
        }
        let table = self
            .table()
            .iter()
            .map(|v| v.iter().map(|&x| target.embed_residue(x)).collect())
            .collect();
        StructureTableDraft {
            field: target.clone(),
            dim: self.dim(),
            table,
            labels: self.labels().to_vec(),
        }
        .into_algebra()
    }

    /// `U ⊗ GF(p^k)`. A canonical basis over GF(p) stays canonical after embedding.
    pub fn extend_subspace(&self, u: &Subspace<u32>, target: &FiniteField) -> Subspace<u32> {
        u.map_elems(|&x| target.embed_residue(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use num_rational::BigRational;

    fn gf(p: u32) -> FiniteField {
        FiniteField::prime(p).unwrap()
    }

    #[test]
    fn heisenberg_bracket() {
        let h = families::heisenberg(&gf(2));
        assert_eq!(h.bracket(&h.unit(0), &h.unit(1)), h.unit(2));
    }

    #[test]
    fn derived_algebra_of_jordan_family() {
        let f = gf(3);
        for alpha in 1..3 {
            let l = families::jordan(&f, alpha);
            assert_eq!(l.derived_algebra(), l.span_units(&[1, 2]));
        }
        let l = families::jordan(&f, 1);
        let z = l.zero_subspace();
        assert!(l.bracket_spaces(&l.whole(), &z).unwrap().is_zero());
    }

    #[test]
    fn series_of_jordan_alpha_one() {
        let f = gf(3);
        let l = families::jordan(&f, 1);
        let lcs = l.lower_central_series();
        assert_eq!(lcs.iter().map(|s| s.dim()).collect::<Vec<_>>(), vec![3, 2]);
        assert!(!l.is_nilpotent());
        let ds = l.derived_series();
        assert_eq!(ds.iter().map(|s| s.dim()).collect::<Vec<_>>(), vec![3, 2, 0]);
        assert!(l.is_solvable());

        let h = families::heisenberg(&f);
        assert_eq!(h.nilpotency_class(), Some(2));
        let a = families::abelian(&f, 3);
        assert!(a.is_solvable() && a.is_nilpotent() && a.is_abelian());
    }

    #[test]
    fn closure_in_sl2() {
        let f = gf(5);
        let s = families::sl2(&f);
        // basis order e, f, h
        let e = s.span_units(&[0]);
        assert_eq!(s.subalgebra_closure(&e), e);
        assert!(s.is_subalgebra(&e));
        let ef = s.span_units(&[0, 1]);
        assert_eq!(s.subalgebra_closure(&ef), s.whole());
        assert!(!s.is_subalgebra(&ef));
    }

    #[test]
    fn restriction_examples() {
        let f = gf(3);
        let l = families::jordan(&f, 1);
        let r = l.subalgebra_restrict(&l.whole()).unwrap();
        assert_eq!(r.algebra.table(), l.table());
        let yz = l.span_units(&[1, 2]);
        let r = l.subalgebra_restrict(&yz).unwrap();
        assert_eq!(r.algebra.dim(), 2);
        assert!(r.algebra.is_abelian());
        let r0 = l.subalgebra_restrict(&l.zero_subspace()).unwrap();
        assert_eq!(r0.algebra.dim(), 0);
        let xy = l.span_units(&[0, 1]);
        assert_eq!(l.subalgebra_restrict(&xy).unwrap_err(), Error::NotSubalgebra);
    }

    #[test]
    fn restriction_preserves_brackets() {
        let f = gf(5);
        let s = families::sl2(&f);
        let b = s.span(vec![vec![1, 0, 0], vec![0, 0, 1]]).unwrap();
        let r = s.subalgebra_restrict(&b).unwrap();
        for u in [[1u32, 2], [3, 4], [0, 1]] {
            for v in [[2u32, 0], [1, 1]] {
                let inner = r.lift(&r.algebra.bracket(&u, &v));
                assert_eq!(inner, s.bracket(&r.lift(&u), &r.lift(&v)));
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let f = gf(2);
        let h = families::heisenberg(&f);
        let q = h.quotient(&h.center()).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        assert!(q.algebra.is_abelian());
        assert_eq!(h.quotient(&h.whole()).unwrap().algebra.dim(), 0);
        let q0 = h.quotient(&h.zero_subspace()).unwrap();
        assert_eq!(q0.algebra.table(), h.table());
        assert_eq!(h.quotient(&h.span_units(&[0])).unwrap_err(), Error::NotIdeal);
    }

    #[test]
    fn center_centralizer_normalizer() {
        let f = gf(3);
        let h = families::heisenberg(&f);
        assert_eq!(h.center(), h.span_units(&[2]));
        let a = families::abelian(&f, 2);
        assert_eq!(a.center(), a.whole());
        let l = families::jordan(&f, 1);
        let i = l.derived_algebra();
        assert_eq!(l.normalizer(&i), l.whole());
        assert_eq!(l.centralizer(&i), i);
    }

    #[test]
    fn direct_sums_and_semidirect() {
        let f = gf(3);
        for alpha in 0..3u32 {
            let d = Matrix::new(2, 2, vec![alpha, 0, 1, alpha]);
            let l = LieAlgebra::semidirect_by_matrix(&f, &d).unwrap();
            assert_eq!(l.table(), families::jordan(&f, alpha).table());
        }
        let a = families::abelian(&f, 2);
        let z = families::abelian(&f, 0);
        assert_eq!(a.direct_sum(&z).unwrap().table(), a.table());
        let g = gf(5);
        let s = families::sl2(&g).direct_sum(&families::abelian(&g, 1)).unwrap();
        assert_eq!(s.dim(), 4);
        assert_eq!(s.center(), s.span_units(&[3]));
        assert!(families::sl2(&g).direct_sum(&families::abelian(&f, 1)).is_err());
    }

    #[test]
    fn mod_p_reduction() {
        let ex = families::rotation5(&Rationals);
        let m3 = ex.reduce_mod_p(3).unwrap();
        assert_eq!(m3.dim(), 5);
        assert_eq!(m3.derived_algebra().dim(), 4);
        let ab = families::abelian(&Rationals, 3).reduce_mod_p(7).unwrap();
        assert!(ab.is_abelian());
        let mut d = StructureTableDraft::zero(Rationals, 2);
        d.set(0, 1, vec![BigRational::new(1.into(), 2.into()), BigRational::from_integer(0.into())])
            .unwrap();
        let half = d.into_algebra().unwrap();
        assert!(matches!(half.reduce_mod_p(3), Err(Error::NonIntegerEntry { .. })));
    }

    #[test]
    fn scalar_extension() {
        let h = families::heisenberg(&gf(2));
        let gf4 = FiniteField::extension(2, 2).unwrap();
        let h4 = h.extend_scalars(&gf4).unwrap();
        assert_eq!(h4.table(), families::heisenberg(&gf4).table());
        assert!(h.extend_subspace(&h.zero_subspace(), &gf4).is_zero());
        let c = h.center();
        assert_eq!(h.extend_subspace(&c, &gf4).dim(), c.dim());
        let gf9 = FiniteField::extension(3, 2).unwrap();
        assert!(h.extend_scalars(&gf9).is_err());
    }

    #[test]
    fn jacobi_violation_reported() {
        let q = Rationals;
        let one = || BigRational::from_integer(1.into());
        let zero = || BigRational::from_integer(0.into());
        let mut d = StructureTableDraft::zero(q, 3);
        d.set(0, 1, vec![zero(), zero(), one()]).unwrap();
        d.set(1, 2, vec![one(), zero(), zero()]).unwrap();
        d.set(0, 2, vec![one(), zero(), zero()]).unwrap();
        let v = d.validate().unwrap_err();
        assert_eq!(v.triple, (0, 1, 2));
        assert!(v.defect.iter().any(|x| *x != zero()));
    }
}
