use proptest::prelude::*;

use lie_frattini_core::classify::is_isomorphic;
use lie_frattini_core::families;
use lie_frattini_core::lattice::{LatticeConfig, SubalgebraLattice};
use lie_frattini_core::{Field, FiniteField, LieAlgebra, Matrix, StructureTableDraft, Subspace};

fn gf(q: u64) -> FiniteField {
    FiniteField::of_order(q).unwrap()
}

fn vectors(q: u32, n: usize, max: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..q, n), 0..=max)
}

fn span(f: &FiniteField, n: usize, v: Vec<Vec<u32>>) -> Subspace<u32> {
    Subspace::span(f, n, v).unwrap()
}

/// Jacobi-valid tables of dimension 3 over GF(3), plus some named algebras.
fn algebra() -> impl Strategy<Value = LieAlgebra<FiniteField>> {
    let random = prop::collection::vec(prop::collection::vec(0u32..3, 3), 3).prop_filter_map(
        "jacobi",
        |table| {
            let mut d = StructureTableDraft::zero(gf(3), 3);
            d.table = table;
            d.validate().ok()
        },
    );
    let named = prop_oneof![
        (0u32..3).prop_map(|a| families::jordan(&gf(3), a)),
        Just(families::heisenberg(&gf(3))),
        Just(families::sl2(&gf(3))),
        Just(families::two_dim_nonabelian(&gf(3))),
    ];
    prop_oneof![random, named]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn span_is_canonical(v in vectors(3, 4, 4), scale in 1u32..3) {
        let f = gf(3);
        let a = span(&f, 4, v.clone());
        let mut shuffled: Vec<Vec<u32>> = v.iter().rev().map(|r| r.iter().map(|x| f.mul(x, &scale)).collect()).collect();
        shuffled.extend(a.basis().iter().cloned());
        prop_assert_eq!(&a, &span(&f, 4, shuffled));
        prop_assert_eq!(&a, &span(&f, 4, a.basis().to_vec()));
    }

    #[test]
    fn sum_and_intersection_dimensions(a in vectors(3, 4, 3), b in vectors(3, 4, 3)) {
        let f = gf(3);
        let (a, b) = (span(&f, 4, a), span(&f, 4, b));
        let s = a.sum(&f, &b).unwrap();
        let i = a.intersect(&f, &b).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert!(i.is_subspace_of(&f, &a) && i.is_subspace_of(&f, &b));
        prop_assert!(a.is_subspace_of(&f, &s) && b.is_subspace_of(&f, &s));
    }

    #[test]
    fn modular_law(a in vectors(2, 5, 3), b in vectors(2, 5, 3), d in vectors(2, 5, 3)) {
        let f = gf(2);
        let a = span(&f, 5, a);
        let b = span(&f, 5, b);
        let c = a.sum(&f, &span(&f, 5, d)).unwrap();
        let left = a.sum(&f, &b.intersect(&f, &c).unwrap()).unwrap();
        let right = a.sum(&f, &b).unwrap().intersect(&f, &c).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn bracket_is_antisymmetric_and_bilinear(
        l in algebra(),
        u in prop::collection::vec(0u32..3, 3),
        v in prop::collection::vec(0u32..3, 3),
        w in prop::collection::vec(0u32..3, 3),
        c in 0u32..3,
    ) {
        let f = l.field().clone();
        let n = l.dim();
        let (u, v, w) = (&u[..n], &v[..n], &w[..n]);
        let neg: Vec<u32> = l.bracket(v, u).iter().map(|x| f.neg(x)).collect();
        prop_assert_eq!(l.bracket(u, v), neg);
        let combo: Vec<u32> = u.iter().zip(w).map(|(x, y)| f.mul_add(y, &c, x)).collect();
        let lhs = l.bracket(&combo, v);
        let rhs: Vec<u32> = l
            .bracket(u, v)
            .iter()
            .zip(l.bracket(w, v))
            .map(|(x, y)| f.mul_add(&y, &c, x))
            .collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn isomorphism_is_reflexive_and_symmetric(a in algebra(), b in algebra()) {
        let cap = 1e7;
        let id = is_isomorphic(&a, &a, cap).unwrap();
        prop_assert!(id.is_some());
        let ab = is_isomorphic(&a, &b, cap).unwrap();
        let ba = is_isomorphic(&b, &a, cap).unwrap();
        prop_assert_eq!(ab.is_some(), ba.is_some());
        if let Some(p) = ab {
            prop_assert!(a.is_homomorphism(&b, &p));
            prop_assert_eq!(p.rank(a.field()), a.dim());
        }
    }

    #[test]
    fn radical_chain(l in algebra()) {
        let lat = SubalgebraLattice::build(&l, LatticeConfig::default()).unwrap();
        let f = l.field();
        let asoc = lat.abelian_socle();
        let nil = lat.nilradical().unwrap();
        let rad = lat.radical().unwrap();
        prop_assert!(asoc.is_subspace_of(f, &nil));
        prop_assert!(nil.is_subspace_of(f, &rad));
        prop_assert!(l.is_ideal(&nil) && l.is_nilpotent_sub(&nil));
        prop_assert!(l.is_ideal(&rad) && l.is_solvable_sub(&rad));
    }

    #[test]
    fn frattini_is_an_ideal_inside_every_maximal_subalgebra(l in algebra()) {
        let lat = SubalgebraLattice::build(&l, LatticeConfig::default()).unwrap();
        let f = l.field();
        for id in 0..lat.len() {
            let s = lat.node(id);
            let phi = lat.frattini_ideal(id);
            prop_assert!(phi.is_subspace_of(f, s));
            let ad: Vec<Matrix<u32>> = s.basis().iter().map(|b| l.ad(b)).collect();
            for m in &ad {
                prop_assert!(phi.image(f, m).unwrap().is_subspace_of(f, &phi));
            }
            for &m in lat.maximal_subalgebras(id) {
                prop_assert!(phi.is_subspace_of(f, lat.node(m)));
            }
        }
    }
}
