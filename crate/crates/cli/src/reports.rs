//! Report types that exist only at the command line.

use serde::Serialize;

use lie_frattini_core::classify::PredicateReport;
use lie_frattini_core::fields::ScalarRepr;
use lie_frattini_core::lattice::LatticeJson;
use lie_frattini_core::linalg::SubspaceJson;
use lie_frattini_core::FieldSpec;

#[derive(Debug, Serialize)]
pub struct Violation {
    pub triple: [usize; 3],
    pub defect: Vec<ScalarRepr>,
}

#[derive(Debug, Serialize)]
pub struct ValidateReport {
    pub schema: &'static str,
    pub field: FieldSpec,
    pub dim: usize,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
}

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub schema: &'static str,
    pub field: FieldSpec,
    pub dim: usize,
    pub labels: Vec<String>,
    pub frattini: SubspaceJson,
    pub predicates: PredicateReport,
}

#[derive(Debug, Serialize)]
pub struct LatticeReport {
    pub schema: &'static str,
    #[serde(flatten)]
    pub lattice: LatticeJson,
}

#[derive(Debug, Serialize)]
pub struct IsomorphismReport {
    pub schema: &'static str,
    pub field: FieldSpec,
    pub dims: [usize; 2],
    pub isomorphic: bool,
    /// Image of each basis vector of the first algebra.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<Vec<ScalarRepr>>>,
}
