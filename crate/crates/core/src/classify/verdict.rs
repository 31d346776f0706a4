use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fields::{Field, FiniteField};
use crate::lattice::{LatticeConfig, SubalgebraLattice};
use crate::liecore::LieAlgebra;
use crate::linalg::{Subspace, SubspaceJson};

/// Concrete evidence behind a false verdict. `S` is the subspace type:
/// [`Subspace`] in memory, [`SubspaceJson`] in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness<S> {
    /// A subalgebra whose Frattini ideal is nonzero.
    NonzeroFrattini { subalgebra: S, frattini: S },
    /// The algebra itself is elementary.
    Elementary { algebra: S },
    /// A subalgebra whose Frattini ideal is not inside the algebra's.
    FrattiniEscapes { subalgebra: S, frattini: S, ambient_frattini: S },
    NonabelianNilpotent { subalgebra: S },
    /// Adjacent ideals whose factor has dimension at least 2.
    ChiefFactor { lower: S, upper: S },
    /// Nonzero term at which the derived series stops descending.
    DerivedStalls { term: S },
    /// Nonzero term at which the lower central series stops descending.
    CentralStalls { term: S },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Verdict<S> {
    True,
    False { witness: Witness<S> },
    NotComputed { reason: String },
}

impl<S> Verdict<S> {
    pub fn from_bool(b: bool, witness: impl FnOnce() -> Witness<S>) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False { witness: witness() }
        }
    }

    pub fn not_computed(reason: impl Into<String>) -> Self {
        Verdict::NotComputed { reason: reason.into() }
    }

    pub fn is_true(&self) -> bool {
        matches!(self, Verdict::True)
    }

    pub fn is_false(&self) -> bool {
        matches!(self, Verdict::False { .. })
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False { .. } => Some(false),
            Verdict::NotComputed { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness<S>> {
        match self {
            Verdict::False { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn map<T>(&self, g: impl Fn(&S) -> T) -> Verdict<T> {
        match self {
            Verdict::True => Verdict::True,
            Verdict::False { witness } => Verdict::False { witness: witness.map(g) },
            Verdict::NotComputed { reason } => Verdict::NotComputed { reason: reason.clone() },
        }
    }
}

impl<S> Witness<S> {
    pub fn map<T>(&self, g: impl Fn(&S) -> T) -> Witness<T> {
        match self {
            Witness::NonzeroFrattini { subalgebra, frattini } => Witness::NonzeroFrattini {
                subalgebra: g(subalgebra),
                frattini: g(frattini),
            },
            Witness::Elementary { algebra } => Witness::Elementary { algebra: g(algebra) },
            Witness::FrattiniEscapes {
                subalgebra,
                frattini,
                ambient_frattini,
            } => Witness::FrattiniEscapes {
                subalgebra: g(subalgebra),
                frattini: g(frattini),
                ambient_frattini: g(ambient_frattini),
            },
            Witness::NonabelianNilpotent { subalgebra } => Witness::NonabelianNilpotent {
                subalgebra: g(subalgebra),
            },
            Witness::ChiefFactor { lower, upper } => Witness::ChiefFactor {
                lower: g(lower),
                upper: g(upper),
            },
            Witness::DerivedStalls { term } => Witness::DerivedStalls { term: g(term) },
            Witness::CentralStalls { term } => Witness::CentralStalls { term: g(term) },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Witness::NonzeroFrattini { .. } => "nonzero-frattini",
            Witness::Elementary { .. } => "elementary",
            Witness::FrattiniEscapes { .. } => "frattini-escapes",
            Witness::NonabelianNilpotent { .. } => "nonabelian-nilpotent",
            Witness::ChiefFactor { .. } => "chief-factor",
            Witness::DerivedStalls { .. } => "derived-stalls",
            Witness::CentralStalls { .. } => "central-stalls",
        }
    }
}

pub type FiniteVerdict = Verdict<Subspace<u32>>;

pub fn verdict_json<F: Field>(f: &F, v: &Verdict<Subspace<F::Elem>>) -> Verdict<SubspaceJson> {
    v.map(|s| s.to_json(f))
}

/// Frattini ideal of a subalgebra, recomputed from a fresh lattice of the
/// subalgebra in its own coordinates and lifted back.
pub fn frattini_from_scratch(
    l: &LieAlgebra<FiniteField>,
    s: &Subspace<u32>,
    config: LatticeConfig,
) -> Result<Subspace<u32>> {
    let r = l.subalgebra_restrict(s)?;
    let lat = SubalgebraLattice::build(&r.algebra, config)?;
    Ok(r.lift_subspace(&lat.frattini()))
}

impl Witness<Subspace<u32>> {
    /// Re-checks the witness against `l` without reusing any cached lattice.
    pub fn verify(&self, l: &LieAlgebra<FiniteField>, config: LatticeConfig) -> Result<bool> {
        let f = l.field();
        Ok(match self {
            Witness::NonzeroFrattini { subalgebra, frattini } => {
                l.is_subalgebra(subalgebra)
                    && !frattini.is_zero()
                    && frattini_from_scratch(l, subalgebra, config)? == *frattini
            }
            Witness::Elementary { algebra } => {
                if !algebra.is_whole() {
                    return Ok(false);
                }
                let lat = SubalgebraLattice::build(l, config)?;
                for s in lat.nodes() {
                    if !frattini_from_scratch(l, s, config)?.is_zero() {
                        return Ok(false);
                    }
                }
                true
            }
            Witness::FrattiniEscapes {
                subalgebra,
                frattini,
                ambient_frattini,
            } => {
                let whole = frattini_from_scratch(l, &l.whole(), config)?;
                l.is_subalgebra(subalgebra)
                    && whole == *ambient_frattini
                    && frattini_from_scratch(l, subalgebra, config)? == *frattini
                    && !frattini.is_subspace_of(f, &whole)
            }
            Witness::NonabelianNilpotent { subalgebra } => {
                l.is_subalgebra(subalgebra)
                    && l.is_nilpotent_sub(subalgebra)
                    && !l.is_abelian_sub(subalgebra)
            }
            Witness::ChiefFactor { lower, upper } => {
                if !(l.is_ideal(lower)
                    && l.is_ideal(upper)
                    && lower.is_subspace_of(f, upper)
                    && upper.dim() >= lower.dim() + 2)
                {
                    return Ok(false);
                }
                // no ideal strictly between: the quotient of `upper` by `lower`
                // has no nonzero proper L-invariant subspace
                let lat = SubalgebraLattice::build(l, config)?;
                !lat.ideals().into_iter().map(|i| lat.node(i)).any(|k| {
                    k != lower && k != upper && lower.is_subspace_of(f, k) && k.is_subspace_of(f, upper)
                })
            }
            Witness::DerivedStalls { term } => {
                !term.is_zero() && l.bracket_spaces(term, term)? == *term
            }
            Witness::CentralStalls { term } => !term.is_zero() && l.bracket_spaces(&l.whole(), term)? == *term,
        })
    }
}
