use crate::fields::Field;
use crate::lattice::{NodeId, SubalgebraLattice};
use crate::liecore::LieAlgebra;

use super::supersolvable::is_supersolvable;
use super::verdict::{FiniteVerdict, Verdict, Witness};

fn nonzero_frattini(lat: &SubalgebraLattice, id: NodeId) -> Witness<crate::Subspace<u32>> {
    Witness::NonzeroFrattini {
        subalgebra: lat.node(id).clone(),
        frattini: lat.frattini_ideal(id),
    }
}

/// `φ(S) = 0` for every subalgebra `S`.
pub fn is_elementary(lat: &SubalgebraLattice) -> FiniteVerdict {
    let phis = lat.frattini_ideals();
    match phis.iter().position(|p| !p.is_zero()) {
        Some(id) => Verdict::False {
            witness: nonzero_frattini(lat, id),
        },
        None => Verdict::True,
    }
}

/// Not elementary, while every proper subalgebra is.
pub fn is_minimal_non_elementary(lat: &SubalgebraLattice) -> FiniteVerdict {
    let top = lat.top();
    // a proper subalgebra is elementary iff every node below it has φ = 0
    if let Some(id) = (0..top).find(|&id| !lat.frattini_ideal(id).is_zero()) {
        return Verdict::False {
            witness: nonzero_frattini(lat, id),
        };
    }
    if lat.frattini_ideal(top).is_zero() {
        return Verdict::False {
            witness: Witness::Elementary {
                algebra: lat.node(top).clone(),
            },
        };
    }
    Verdict::True
}

/// Boolean form of [`is_minimal_non_elementary`] that stops at the first
/// deciding node and computes no witness.
pub fn minimal_non_elementary(lat: &SubalgebraLattice) -> bool {
    let top = lat.top();
    !lat.frattini_ideal(top).is_zero() && (0..top).all(|id| lat.frattini_ideal(id).is_zero())
}

/// `φ(S) ⊆ φ(L)` for every subalgebra `S`.
pub fn is_e_algebra(lat: &SubalgebraLattice) -> FiniteVerdict {
    let f = lat.field();
    let top = lat.top();
    let whole = lat.frattini_ideal(top);
    for id in 0..top {
        let phi = lat.frattini_ideal(id);
        if !phi.is_subspace_of(f, &whole) {
            return Verdict::False {
                witness: Witness::FrattiniEscapes {
                    subalgebra: lat.node(id).clone(),
                    frattini: phi,
                    ambient_frattini: whole,
                },
            };
        }
    }
    Verdict::True
}

/// Every nilpotent subalgebra is abelian.
pub fn is_a_algebra(lat: &SubalgebraLattice) -> FiniteVerdict {
    let l = lat.algebra();
    match lat
        .nodes()
        .iter()
        .find(|s| !l.is_abelian_sub(s) && l.is_nilpotent_sub(s))
    {
        Some(s) => Verdict::False {
            witness: Witness::NonabelianNilpotent { subalgebra: s.clone() },
        },
        None => Verdict::True,
    }
}

pub fn solvable_verdict<F: Field>(l: &LieAlgebra<F>) -> Verdict<crate::Subspace<F::Elem>> {
    let last = l.derived_series().pop().expect("series starts at L");
    if last.is_zero() {
        Verdict::True
    } else {
        Verdict::False {
            witness: Witness::DerivedStalls { term: last },
        }
    }
}

pub fn nilpotent_verdict<F: Field>(l: &LieAlgebra<F>) -> Verdict<crate::Subspace<F::Elem>> {
    let last = l.lower_central_series().pop().expect("series starts at L");
    if last.is_zero() {
        Verdict::True
    } else {
        Verdict::False {
            witness: Witness::CentralStalls { term: last },
        }
    }
}

/// First factor of dimension at least 2 in a chief series read off the
/// ideal lattice. All chief series share their factor dimensions, so one
/// exists exactly when the algebra is not supersolvable.
pub fn wide_chief_factor(lat: &SubalgebraLattice) -> Option<(NodeId, NodeId)> {
    let ideals = lat.ideals();
    let mut cur = lat.bottom();
    while cur != lat.top() {
        let next = ideals
            .iter()
            .copied()
            .filter(|&j| j != cur && lat.contains(j, cur))
            .min_by_key(|&j| (lat.node(j).dim(), j))?;
        if lat.node(next).dim() >= lat.node(cur).dim() + 2 {
            return Some((cur, next));
        }
        cur = next;
    }
    None
}

pub fn supersolvable_verdict(lat: &SubalgebraLattice) -> FiniteVerdict {
    if is_supersolvable(lat.algebra()) {
        return Verdict::True;
    }
    match wide_chief_factor(lat) {
        Some((lo, hi)) => Verdict::False {
            witness: Witness::ChiefFactor {
                lower: lat.node(lo).clone(),
                upper: lat.node(hi).clone(),
            },
        },
        None => Verdict::not_computed("supersolvability search and chief series disagree"),
    }
}
