use serde::{Deserialize, Serialize};

use crate::fields::{Field, FieldSpec, ScalarRepr};

use super::SubalgebraLattice;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatticeNodeJson {
    pub id: usize,
    pub dim: usize,
    pub basis: Vec<Vec<ScalarRepr>>,
    pub ideal: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatticeSummary {
    pub field: FieldSpec,
    pub dim: usize,
    pub subspaces_examined: u64,
    pub subalgebras: usize,
    pub ideals: usize,
    pub cover_edges: usize,
    /// Subalgebra count per dimension, index = dimension.
    pub subalgebras_by_dim: Vec<usize>,
    pub ideals_by_dim: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub summary: LatticeSummary,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub nodes: Vec<LatticeNodeJson>,
    /// Hasse edges `[lower, upper]` by node id.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub covers: Vec<[usize; 2]>,
}

impl SubalgebraLattice {
    pub fn summary(&self) -> LatticeSummary {
        let mut ideals_by_dim = vec![0; self.algebra.dim() + 1];
        for (i, s) in self.nodes.iter().enumerate() {
            if self.ideal[i] {
                ideals_by_dim[s.dim()] += 1;
            }
        }
        LatticeSummary {
            field: self.field().spec(),
            dim: self.algebra.dim(),
            subspaces_examined: self.subspace_count as u64,
            subalgebras: self.len(),
            ideals: self.ideal.iter().filter(|&&b| b).count(),
            cover_edges: self.covers.iter().map(Vec::len).sum(),
            subalgebras_by_dim: self.count_by_dimension(),
            ideals_by_dim,
        }
    }

    /// Summary plus, when `full`, every node and cover edge.
    pub fn to_json(&self, full: bool) -> LatticeJson {
        let f = self.field();
        let (nodes, covers) = if full {
            let nodes = self
                .nodes
                .iter()
                .enumerate()
                .map(|(id, s)| LatticeNodeJson {
                    id,
                    dim: s.dim(),
                    basis: s.basis().iter().map(|r| r.iter().map(|x| f.encode(x)).collect()).collect(),
                    ideal: self.ideal[id],
                })
                .collect();
            let covers = self.cover_edges().into_iter().map(|(a, b)| [a, b]).collect();
            (nodes, covers)
        } else {
            (Vec::new(), Vec::new())
        };
        LatticeJson {
            summary: self.summary(),
            nodes,
            covers,
        }
    }
}
