//! Shared fixtures for the criterion benches.

use lie_frattini_core::families;
use lie_frattini_core::{FiniteField, LieAlgebra, Rationals};

pub fn gf(q: u64) -> FiniteField {
    FiniteField::of_order(q).expect("prime power")
}

/// Algebras small enough to lattice in milliseconds, labelled for bench ids.
pub fn lattice_cases() -> Vec<(String, LieAlgebra<FiniteField>)> {
    let rotation = families::rotation5(&Rationals);
    vec![
        ("jordan-gf3".into(), families::jordan(&gf(3), 1)),
        ("heisenberg-gf5".into(), families::heisenberg(&gf(5))),
        ("sl2-gf5".into(), families::sl2(&gf(5))),
        ("rotation5-gf3".into(), rotation.reduce_mod_p(3).expect("integer table")),
        (
            "sl2+abelian-gf3".into(),
            families::sl2(&gf(3))
                .direct_sum(&families::abelian(&gf(3), 1))
                .expect("same field"),
        ),
    ]
}
