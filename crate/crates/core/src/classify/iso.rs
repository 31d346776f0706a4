use crate::error::{Error, Result};
use crate::fields::{Field, FiniteField};
use crate::liecore::{pair_index, LieAlgebra};
use crate::linalg::{Matrix, Subspace};

/// Default cap on `|GL(n, q)|` for the brute-force isomorphism search.
pub const DEFAULT_MAX_GL_ORDER: f64 = 1e7;

/// `|GL(n, q)| = prod_{i<n} (q^n - q^i)`.
pub fn gl_order(n: usize, q: u64) -> f64 {
    let q = q as f64;
    (0..n).map(|i| q.powi(n as i32) - q.powi(i as i32)).product()
}

/// Isomorphism-invariant numbers used to reject pairs before searching.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Invariants {
    pub derived: Vec<usize>,
    pub central: Vec<usize>,
    pub center: usize,
}

impl Invariants {
    pub fn of<F: Field>(l: &LieAlgebra<F>) -> Self {
        Invariants {
            derived: l.derived_series().iter().map(Subspace::dim).collect(),
            central: l.lower_central_series().iter().map(Subspace::dim).collect(),
            center: l.center().dim(),
        }
    }
}

fn characteristic_subspaces(l: &LieAlgebra<FiniteField>) -> Vec<Subspace<u32>> {
    let mut v = l.derived_series();
    v.extend(l.lower_central_series());
    v.push(l.center());
    v
}

/// Membership in each characteristic subspace and the rank of the adjoint.
type Profile = (Vec<bool>, usize);

/// For each vector: membership in each characteristic subspace and the rank of its adjoint.
fn profile(l: &LieAlgebra<FiniteField>, chars: &[Subspace<u32>], v: &[u32]) -> Profile {
    let f = l.field();
    (chars.iter().map(|c| c.contains(f, v)).collect(), l.ad(v).rank(f))
}

fn all_vectors(q: u64, n: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = q.pow(n as u32);
    (1..total).map(move |mut c| {
        let mut v = vec![0u32; n];
        for x in v.iter_mut() {
            *x = (c % q) as u32;
            c /= q;
        }
        v
    })
}

/// Looks for a bracket-preserving linear bijection `a -> b`. On success the
/// returned matrix has the image of the `i`th basis vector of `a` as column `i`.
pub fn is_isomorphic(
    a: &LieAlgebra<FiniteField>,
    b: &LieAlgebra<FiniteField>,
    max_gl_order: f64,
) -> Result<Option<Matrix<u32>>> {
    let f = a.field();
    if f != b.field() {
        return Err(Error::FieldMismatch {
            left: f.spec().to_string(),
            right: b.field().spec().to_string(),
        });
    }
    let n = a.dim();
    if n != b.dim() {
        return Ok(None);
    }
    let order = gl_order(n, f.order());
    if order > max_gl_order {
        return Err(Error::CostCap {
            what: "isomorphism search over GL(n, q)",
            estimate: order,
            cap: max_gl_order,
        });
    }
    if Invariants::of(a) != Invariants::of(b) {
        return Ok(None);
    }
    let chars_a = characteristic_subspaces(a);
    let chars_b = characteristic_subspaces(b);
    let target: Vec<(Vec<u32>, Profile)> = all_vectors(f.order(), n)
        .map(|v| {
            let p = profile(b, &chars_b, &v);
            (v, p)
        })
        .collect();
    let candidates: Vec<Vec<Vec<u32>>> = (0..n)
        .map(|i| {
            let want = profile(a, &chars_a, &a.unit(i));
            target
                .iter()
                .filter(|(_, p)| *p == want)
                .map(|(v, _)| v.clone())
                .collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    // pair (i, j) can be checked once every basis index it touches is assigned
    let mut checks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            let c = &a.table()[pair_index(n, i, j)];
            let last = (0..n).rev().find(|&k| !f.is_zero(&c[k])).unwrap_or(0).max(j);
            checks[last].push((i, j));
        }
    }
    let mut images: Vec<Vec<u32>> = Vec::with_capacity(n);
    let found = assign(a, b, &candidates, &checks, &mut images, &Subspace::zero(n));
    Ok(found.then(|| Matrix::from_columns(n, &images)))
}

fn assign(
    a: &LieAlgebra<FiniteField>,
    b: &LieAlgebra<FiniteField>,
    candidates: &[Vec<Vec<u32>>],
    checks: &[Vec<(usize, usize)>],
    images: &mut Vec<Vec<u32>>,
    span: &Subspace<u32>,
) -> bool {
    let f = a.field();
    let m = images.len();
    if m == candidates.len() {
        return true;
    }
    for v in &candidates[m] {
        if span.contains(f, v) {
            continue;
        }
        images.push(v.clone());
        let ok = checks[m].iter().all(|&(i, j)| {
            let c = a.basis_bracket(i, j);
            let mut lhs = vec![0u32; a.dim()];
            for (k, ck) in c.iter().enumerate() {
                if *ck != 0 {
                    for (x, y) in lhs.iter_mut().zip(&images[k]) {
                        *x = f.mul_add(x, ck, y);
                    }
                }
            }
            lhs == b.bracket(&images[i], &images[j])
        });
        if ok {
            let mut gens = span.basis().to_vec();
            gens.push(v.clone());
            let next = Subspace::span(f, a.dim(), gens).expect("ambient width");
            if assign(a, b, candidates, checks, images, &next) {
                return true;
            }
        }
        images.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(3, 2), 168.0);
        assert_eq!(gl_order(4, 2), 20160.0);
        assert_eq!(gl_order(5, 3), 475_566_474_240.0);
    }

    #[test]
    fn heisenberg_and_jordan() {
        let f = FiniteField::prime(2).unwrap();
        let h = families::heisenberg(&f);
        let l0 = families::jordan(&f, 0);
        let l1 = families::jordan(&f, 1);
        let p = is_isomorphic(&l0, &h, DEFAULT_MAX_GL_ORDER).unwrap().unwrap();
        assert!(l0.is_homomorphism(&h, &p));
        assert_eq!(p.rank(&f), 3);
        assert!(is_isomorphic(&l0, &l1, DEFAULT_MAX_GL_ORDER).unwrap().is_none());
    }

    #[test]
    fn nonzero_parameters_are_isomorphic() {
        let f = FiniteField::prime(3).unwrap();
        let a = families::jordan(&f, 1);
        let b = families::jordan(&f, 2);
        let p = is_isomorphic(&a, &b, DEFAULT_MAX_GL_ORDER).unwrap().unwrap();
        assert!(a.is_homomorphism(&b, &p));
        let back = is_isomorphic(&b, &a, DEFAULT_MAX_GL_ORDER).unwrap().unwrap();
        assert!(b.is_homomorphism(&a, &back));
    }

    #[test]
    fn large_groups_are_refused() {
        let f = FiniteField::prime(3).unwrap();
        let l = families::rotation5(&f);
        let err = is_isomorphic(&l, &l, DEFAULT_MAX_GL_ORDER).unwrap_err();
        assert!(err.is_cost_cap());
    }
}
