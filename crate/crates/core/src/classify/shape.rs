use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{Field, FiniteField};
use crate::lattice::SubalgebraLattice;
use crate::liecore::LieAlgebra;
use crate::linalg::Matrix;

/// The two structural shapes that solvable minimal non-elementary algebras
/// over a perfect field can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    None,
    /// `L = L² ⋊ Fx` with `L²` abelian and `0 ≠ φ(L) = Asoc L` the largest
    /// ideal properly inside `L²`.
    AbelianSplit,
    /// The three-dimensional Heisenberg algebra.
    Heisenberg,
}

impl Shape {
    pub fn is_some(self) -> bool {
        self != Shape::None
    }

    pub fn name(self) -> &'static str {
        match self {
            Shape::None => "none",
            Shape::AbelianSplit => "abelian-split",
            Shape::Heisenberg => "heisenberg",
        }
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Dimension 3, nilpotent of class 2, with a one-dimensional derived algebra equal to the center.
pub fn is_heisenberg<F: Field>(l: &LieAlgebra<F>) -> bool {
    if l.dim() != 3 || l.nilpotency_class() != Some(2) {
        return false;
    }
    let d = l.derived_algebra();
    d.dim() == 1 && d == l.center()
}

/// The abelian split shape, with the ideal condition quantified over the lattice.
pub fn is_abelian_split(lat: &SubalgebraLattice) -> bool {
    let l = lat.algebra();
    let f = l.field();
    let d = l.derived_algebra();
    if d.dim() + 1 != l.dim() || !l.is_abelian_sub(&d) {
        return false;
    }
    let phi = lat.frattini();
    if phi.is_zero() || phi == d || !phi.is_subspace_of(f, &d) {
        return false;
    }
    if lat.abelian_socle() != phi {
        return false;
    }
    // every ideal properly inside L² lies in φ(L)
    lat.ideals().into_iter().map(|i| lat.node(i)).all(|k| {
        *k == d || !k.is_subspace_of(f, &d) || k.is_subspace_of(f, &phi)
    })
}

/// Which shape a solvable algebra has; errors on non-solvable input.
pub fn shape_of(lat: &SubalgebraLattice) -> Result<Shape> {
    let l = lat.algebra();
    if !l.is_solvable() {
        return Err(Error::NotSolvable);
    }
    Ok(if is_heisenberg(l) {
        Shape::Heisenberg
    } else if is_abelian_split(lat) {
        Shape::AbelianSplit
    } else {
        Shape::None
    })
}

/// Recognizes the three-dimensional algebras `[x,y] = αy + z`, `[x,z] = αz`.
///
/// Rescaling `x` moves any `α ≠ 0` to `1`, so the answer is the canonical
/// parameter: `Some(0)` for the Heisenberg member, `Some(1)` for the others.
pub fn jordan_parameter(l: &LieAlgebra<FiniteField>) -> Option<u32> {
    if l.dim() != 3 {
        return None;
    }
    if is_heisenberg(l) {
        return Some(0);
    }
    let f = l.field();
    let d = l.derived_algebra();
    if d.dim() != 2 || !l.is_abelian_sub(&d) {
        return None;
    }
    let x = l.unit(*d.non_pivots().first()?);
    // ad x restricted to L², in the canonical basis of L²
    let cols: Vec<Vec<u32>> = d
        .basis()
        .iter()
        .map(|b| d.coordinates(f, &l.bracket(&x, b)).expect("L² is an ideal"))
        .collect();
    let a = Matrix::from_columns(2, &cols);
    // a single 2x2 Jordan block with a nonzero eigenvalue
    let is_block = f.elements().any(|alpha| {
        if alpha == 0 {
            return false;
        }
        let shifted = Matrix::from_columns(
            2,
            &(0..2)
                .map(|j| {
                    (0..2)
                        .map(|i| {
                            let diag = if i == j { alpha } else { 0 };
                            f.sub(a.get(i, j), &diag)
                        })
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>(),
        );
        let sq = shifted.mul(f, &shifted).expect("square");
        shifted.rank(f) == 1 && sq.rank(f) == 0
    });
    is_block.then_some(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::lattice::LatticeConfig;

    fn lat(l: &LieAlgebra<FiniteField>) -> SubalgebraLattice {
        SubalgebraLattice::build(l, LatticeConfig::default()).unwrap()
    }

    #[test]
    fn shapes_of_small_algebras() {
        let f3 = FiniteField::prime(3).unwrap();
        assert_eq!(shape_of(&lat(&families::heisenberg(&f3))).unwrap(), Shape::Heisenberg);
        assert_eq!(shape_of(&lat(&families::jordan(&f3, 1))).unwrap(), Shape::AbelianSplit);
        assert_eq!(
            shape_of(&lat(&families::two_dim_nonabelian(&f3))).unwrap(),
            Shape::None
        );
        let f5 = FiniteField::prime(5).unwrap();
        assert_eq!(shape_of(&lat(&families::sl2(&f5))).unwrap_err(), Error::NotSolvable);
    }

    #[test]
    fn jordan_parameters() {
        for q in [2u64, 3, 4, 5] {
            let f = FiniteField::of_order(q).unwrap();
            for alpha in f.elements() {
                let expect = if alpha == 0 { 0 } else { 1 };
                assert_eq!(jordan_parameter(&families::jordan(&f, alpha)), Some(expect));
            }
            assert_eq!(jordan_parameter(&families::abelian(&f, 3)), None);
        }
        let f3 = FiniteField::prime(3).unwrap();
        let diag = Matrix::identity(&f3, 2);
        assert_eq!(jordan_parameter(&families::split(&f3, &diag).unwrap()), None);
    }
}
