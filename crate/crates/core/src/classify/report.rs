use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::families::{self, FamilySpec};
use crate::fields::{Field, FieldSpec, FiniteField, Rationals};
use crate::lattice::{LatticeConfig, LatticeSummary, SubalgebraLattice};
use crate::liecore::{AnyAlgebra, LieAlgebra};
use crate::linalg::{Subspace, SubspaceJson};

use super::predicates::{
    is_a_algebra, is_e_algebra, is_elementary, is_minimal_non_elementary, nilpotent_verdict,
    solvable_verdict, supersolvable_verdict,
};
use super::shape::{jordan_parameter, shape_of, Shape};
use super::verdict::{verdict_json, Verdict};
use super::SCHEMA;

/// A value that may be unavailable, with the reason.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Outcome<T> {
    Computed { value: T },
    NotComputed { reason: String },
}

impl<T> Outcome<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Outcome::Computed { value } => Some(value),
            Outcome::NotComputed { .. } => None,
        }
    }

    fn missing(reason: &str) -> Self {
        Outcome::NotComputed {
            reason: reason.to_string(),
        }
    }
}

impl<T> From<T> for Outcome<T> {
    fn from(value: T) -> Self {
        Outcome::Computed { value }
    }
}

type JVerdict = Verdict<SubspaceJson>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PredicateReport {
    pub elementary: JVerdict,
    pub minimal_non_elementary: JVerdict,
    pub e_algebra: JVerdict,
    pub a_algebra: JVerdict,
    pub solvable: JVerdict,
    pub nilpotent: JVerdict,
    pub supersolvable: JVerdict,
    pub shape: Outcome<Shape>,
    /// Canonical parameter of the Jordan family, `null` when not a member.
    pub jordan_alpha: Outcome<Option<u32>>,
}

/// Predicates of an algebra over a finite field, read off its lattice.
pub fn predicates(lat: &SubalgebraLattice) -> Result<PredicateReport> {
    let l = lat.algebra();
    let f = l.field();
    let shape = if l.is_solvable() {
        shape_of(lat)?.into()
    } else {
        Outcome::missing("not solvable")
    };
    Ok(PredicateReport {
        elementary: verdict_json(f, &is_elementary(lat)),
        minimal_non_elementary: verdict_json(f, &is_minimal_non_elementary(lat)),
        e_algebra: verdict_json(f, &is_e_algebra(lat)),
        a_algebra: verdict_json(f, &is_a_algebra(lat)),
        solvable: verdict_json(f, &solvable_verdict(l)),
        nilpotent: verdict_json(f, &nilpotent_verdict(l)),
        supersolvable: verdict_json(f, &supersolvable_verdict(lat)),
        shape,
        jordan_alpha: jordan_parameter(l).into(),
    })
}

const NEEDS_FINITE: &str = "requires a finite field; see the companion reports";

fn rational_predicates(l: &LieAlgebra<Rationals>) -> PredicateReport {
    let missing = || Verdict::not_computed(NEEDS_FINITE);
    PredicateReport {
        elementary: missing(),
        minimal_non_elementary: missing(),
        e_algebra: missing(),
        a_algebra: missing(),
        solvable: verdict_json(&Rationals, &solvable_verdict(l)),
        nilpotent: verdict_json(&Rationals, &nilpotent_verdict(l)),
        supersolvable: missing(),
        shape: Outcome::missing(NEEDS_FINITE),
        jordan_alpha: Outcome::missing(NEEDS_FINITE),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub derived: Vec<SubspaceJson>,
    pub lower_central: Vec<SubspaceJson>,
    pub derived_algebra: SubspaceJson,
    pub center: SubspaceJson,
    pub nilpotency_class: Option<usize>,
}

fn series<F: Field>(l: &LieAlgebra<F>) -> SeriesReport {
    let f = l.field();
    let js = |v: Vec<Subspace<F::Elem>>| v.iter().map(|s| s.to_json(f)).collect();
    SeriesReport {
        derived: js(l.derived_series()),
        lower_central: js(l.lower_central_series()),
        derived_algebra: l.derived_algebra().to_json(f),
        center: l.center().to_json(f),
        nilpotency_class: l.nilpotency_class(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureReport {
    pub lattice: LatticeSummary,
    pub ideals: usize,
    pub minimal_ideals: Vec<SubspaceJson>,
    pub abelian_socle: SubspaceJson,
    pub nilradical: SubspaceJson,
    pub radical: SubspaceJson,
    pub frattini_subalgebra: SubspaceJson,
    pub frattini: SubspaceJson,
}

/// Analysis of the same table reduced modulo a prime.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Companion {
    pub prime: u32,
    pub report: Outcome<Box<AnalysisReport>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Char0Status {
    /// Known for this algebra independently of any computation here.
    Asserted,
    Unknown,
}

/// What can be said about the Frattini ideal of a rational algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Char0Frattini {
    pub status: Char0Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<SubspaceJson>,
    pub companion_primes: Vec<u32>,
    /// Whether every companion's Frattini ideal matches the asserted value, or
    /// each other when none is asserted. `null` without companions.
    pub companions_agree: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: String,
    pub field: FieldSpec,
    pub dim: usize,
    pub labels: Vec<String>,
    pub series: SeriesReport,
    pub structure: Outcome<StructureReport>,
    pub predicates: PredicateReport,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub companions: Vec<Companion>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub char0_frattini: Option<Char0Frattini>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnalyzeConfig {
    pub lattice: LatticeConfig,
    /// Primes to reduce a rational algebra by.
    pub companion_primes: Vec<u32>,
}

pub fn structure(lat: &SubalgebraLattice) -> Result<StructureReport> {
    let f = lat.field();
    Ok(StructureReport {
        lattice: lat.summary(),
        ideals: lat.ideals().len(),
        minimal_ideals: lat
            .minimal_ideals()
            .into_iter()
            .map(|i| lat.node(i).to_json(f))
            .collect(),
        abelian_socle: lat.abelian_socle().to_json(f),
        nilradical: lat.nilradical()?.to_json(f),
        radical: lat.radical()?.to_json(f),
        frattini_subalgebra: lat.frattini_subalgebra(lat.top()).to_json(f),
        frattini: lat.frattini().to_json(f),
    })
}

pub fn analyze_finite(l: &LieAlgebra<FiniteField>, config: &AnalyzeConfig) -> Result<AnalysisReport> {
    let lat = SubalgebraLattice::build(l, config.lattice)?;
    Ok(AnalysisReport {
        schema: SCHEMA.to_string(),
        field: l.field().spec(),
        dim: l.dim(),
        labels: l.labels().to_vec(),
        series: series(l),
        structure: structure(&lat)?.into(),
        predicates: predicates(&lat)?,
        companions: Vec::new(),
        char0_frattini: None,
    })
}

/// Symmetric integer lifts of a basis over GF(p), for comparing across primes.
fn lifted_basis(s: &Subspace<u32>, p: u32) -> Vec<Vec<i64>> {
    s.basis()
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| if x > p / 2 { x as i64 - p as i64 } else { x as i64 })
                .collect()
        })
        .collect()
}

pub fn analyze_rational(l: &LieAlgebra<Rationals>, config: &AnalyzeConfig) -> Result<AnalysisReport> {
    let known = families::recognize_rational(l).and_then(|fam: FamilySpec| fam.known_char0_frattini());
    let mut companions = Vec::new();
    // (prime, companion Frattini ideal, reduction of the known value)
    let mut phis: Vec<(u32, Subspace<u32>, Option<Subspace<u32>>)> = Vec::new();
    for &p in &config.companion_primes {
        let report = match l.reduce_mod_p(p).and_then(|r| Ok((analyze_finite(&r, config)?, r))) {
            Ok((report, reduced)) => {
                if let Some(s) = report.structure.value() {
                    let phi = Subspace::from_json(reduced.field(), &s.frattini)?;
                    phis.push((p, phi, known.as_ref().map(|idx| reduced.span_units(idx))));
                }
                Outcome::Computed { value: Box::new(report) }
            }
            Err(e) => Outcome::NotComputed { reason: e.to_string() },
        };
        companions.push(Companion { prime: p, report });
    }
    let companions_agree = match phis.first() {
        None => None,
        Some((p0, first, _)) if known.is_none() => {
            let base = lifted_basis(first, *p0);
            Some(phis.iter().all(|(p, phi, _)| lifted_basis(phi, *p) == base))
        }
        Some(_) => Some(phis.iter().all(|(_, phi, expected)| Some(phi) == expected.as_ref())),
    };
    let char0 = Char0Frattini {
        status: if known.is_some() {
            Char0Status::Asserted
        } else {
            Char0Status::Unknown
        },
        value: known.map(|idx| l.span_units(&idx).to_json(&Rationals)),
        companion_primes: config.companion_primes.clone(),
        companions_agree,
    };
    Ok(AnalysisReport {
        schema: SCHEMA.to_string(),
        field: FieldSpec::rationals(),
        dim: l.dim(),
        labels: l.labels().to_vec(),
        series: series(l),
        structure: Outcome::missing(NEEDS_FINITE),
        predicates: rational_predicates(l),
        companions,
        char0_frattini: Some(char0),
    })
}

pub fn analyze(l: &AnyAlgebra, config: &AnalyzeConfig) -> Result<AnalysisReport> {
    match l {
        AnyAlgebra::Rational(l) => analyze_rational(l, config),
        AnyAlgebra::Finite(l) => analyze_finite(l, config),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jordan_report() {
        let f = FiniteField::prime(3).unwrap();
        let l = families::jordan(&f, 1);
        let r = analyze_finite(&l, &AnalyzeConfig::default()).unwrap();
        assert!(r.predicates.solvable.is_true());
        assert!(r.predicates.nilpotent.is_false());
        assert_eq!(r.predicates.shape, Outcome::Computed { value: Shape::AbelianSplit });
        let s = r.structure.value().unwrap();
        assert_eq!(s.frattini, l.span_units(&[2]).to_json(&f));
    }

    #[test]
    fn rational_rotation5_with_companions() {
        let l = families::rotation5(&Rationals);
        let cfg = AnalyzeConfig {
            companion_primes: vec![3],
            ..AnalyzeConfig::default()
        };
        let r = analyze_rational(&l, &cfg).unwrap();
        let c = r.char0_frattini.unwrap();
        assert_eq!(c.status, Char0Status::Asserted);
        assert_eq!(c.companions_agree, Some(true));
        assert!(matches!(r.structure, Outcome::NotComputed { .. }));
        assert_eq!(r.companions.len(), 1);
    }
}
