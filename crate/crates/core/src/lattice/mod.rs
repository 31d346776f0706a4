//! Brute-force subalgebra lattices over finite fields.
//!
//! Every subspace of the algebra is enumerated by echelon shape and kept when
//! closed under the bracket. Maximal subalgebras of a node are read off the
//! cover relation, and the Frattini ideal of every node follows from those.

mod enumerate;
mod export;
mod frattini;
mod structure;

use std::collections::HashMap;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fields::FiniteField;
use crate::liecore::LieAlgebra;
use crate::linalg::Subspace;

pub use enumerate::{
    echelon_patterns, enumerate_subspaces, gaussian_binomial, subspace_count, CostEstimate,
    EchelonPattern, DEFAULT_MAX_SUBSPACES,
};
pub use export::{LatticeJson, LatticeNodeJson, LatticeSummary};

pub type NodeId = usize;

/// Posets larger than this are refused: the strict-containment relation is
/// stored densely.
pub const MAX_POSET_NODES: usize = 120_000;

/// Below this many nodes per-node work runs sequentially.
const PAR_THRESHOLD: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeConfig {
    pub max_subspaces: u64,
}

impl Default for LatticeConfig {
    fn default() -> Self {
        LatticeConfig {
            max_subspaces: DEFAULT_MAX_SUBSPACES,
        }
    }
}

/// All subspaces of `F_q^n` with their strict containment relation,
/// computed once and shared by many lattices of the same shape.
#[derive(Clone, Debug)]
pub struct SubspaceCatalog {
    field: FiniteField,
    n: usize,
    spaces: Vec<Subspace<u32>>,
    below: Vec<FixedBitSet>,
}

impl SubspaceCatalog {
    pub fn new(field: &FiniteField, n: usize, config: LatticeConfig) -> Result<Self> {
        let mut spaces: Vec<_> = enumerate_subspaces(field, n, config.max_subspaces)?.collect();
        if spaces.len() > MAX_POSET_NODES {
            return Err(poset_cap(spaces.len()));
        }
        sort_nodes(&mut spaces);
        let below = strict_containment(field, &spaces);
        Ok(SubspaceCatalog {
            field: field.clone(),
            n,
            spaces,
            below,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn spaces(&self) -> &[Subspace<u32>] {
        &self.spaces
    }

    pub fn len(&self) -> usize {
        self.spaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }
}

/// The subalgebra lattice of a Lie algebra over a finite field.
///
/// Nodes are ordered by dimension and then by canonical basis, so node 0 is
/// the zero subalgebra and the last node is the whole algebra.
#[derive(Debug)]
pub struct SubalgebraLattice {
    algebra: LieAlgebra<FiniteField>,
    subspace_count: u128,
    nodes: Vec<Subspace<u32>>,
    ideal: Vec<bool>,
    below: Vec<FixedBitSet>,
    covers: Vec<Vec<NodeId>>,
    frattini: OnceLock<Vec<Subspace<u32>>>,
    index: OnceLock<HashMap<Subspace<u32>, NodeId>>,
}

fn poset_cap(n: usize) -> Error {
    Error::CostCap {
        what: "subalgebra poset size",
        estimate: n as f64,
        cap: MAX_POSET_NODES as f64,
    }
}

fn sort_nodes(nodes: &mut [Subspace<u32>]) {
    nodes.sort_unstable_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
}

/// `below[s]` holds every `t` with `nodes[t] ⊊ nodes[s]`. Nodes must be sorted by dimension.
fn strict_containment(f: &FiniteField, nodes: &[Subspace<u32>]) -> Vec<FixedBitSet> {
    let n = nodes.len();
    let top_dim = nodes.last().map_or(0, |s| s.dim());
    let first_of_dim: Vec<usize> = (0..=top_dim + 1)
        .map(|d| nodes.partition_point(|s| s.dim() < d))
        .collect();
    let row = |s: usize| {
        let mut bits = FixedBitSet::with_capacity(n);
        let sp = &nodes[s];
        for (t, sub) in nodes[..first_of_dim[sp.dim()]].iter().enumerate() {
            // the leading coordinate of any vector of sp is a pivot of sp
            let pivots_fit = sub.pivots().iter().all(|p| sp.pivots().binary_search(p).is_ok());
            if pivots_fit && sub.basis().iter().all(|r| sp.contains(f, r)) {
                bits.insert(t);
            }
        }
        bits
    };
    if n >= PAR_THRESHOLD {
        (0..n).into_par_iter().map(row).collect()
    } else {
        (0..n).map(row).collect()
    }
}

fn lower_covers(below: &[FixedBitSet]) -> Vec<Vec<NodeId>> {
    let cover = |s: usize| {
        let mut shadowed = FixedBitSet::with_capacity(below.len());
        for t in below[s].ones() {
            shadowed.union_with(&below[t]);
        }
        below[s].difference(&shadowed).collect()
    };
    if below.len() >= PAR_THRESHOLD {
        (0..below.len()).into_par_iter().map(cover).collect()
    } else {
        (0..below.len()).map(cover).collect()
    }
}

impl SubalgebraLattice {
    pub fn build(algebra: &LieAlgebra<FiniteField>, config: LatticeConfig) -> Result<Self> {
        let f = algebra.field();
        let n = algebra.dim();
        let est = CostEstimate::new(n, f.order(), config.max_subspaces).check()?;
        let q = f.order();
        let patterns = echelon_patterns(n);
        let mut nodes: Vec<Subspace<u32>> = patterns
            .par_iter()
            .flat_map_iter(|p| p.subspaces(q, n).filter(|s| algebra.is_subalgebra(s)))
            .collect();
        if nodes.len() > MAX_POSET_NODES {
            return Err(poset_cap(nodes.len()));
        }
        sort_nodes(&mut nodes);
        let below = strict_containment(f, &nodes);
        Ok(Self::assemble(algebra.clone(), est.subspace_count, nodes, below))
    }

    /// Builds the lattice by filtering a precomputed catalog of all subspaces.
    pub fn build_in(catalog: &SubspaceCatalog, algebra: &LieAlgebra<FiniteField>) -> Result<Self> {
        if catalog.field != *algebra.field() || catalog.n != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: catalog.n,
                got: algebra.dim(),
            });
        }
        let mut node_of = vec![usize::MAX; catalog.len()];
        let mut picked = Vec::new();
        for (i, s) in catalog.spaces.iter().enumerate() {
            if algebra.is_subalgebra(s) {
                node_of[i] = picked.len();
                picked.push(i);
            }
        }
        let m = picked.len();
        let below = picked
            .iter()
            .map(|&ci| {
                let mut bits = FixedBitSet::with_capacity(m);
                for t in catalog.below[ci].ones() {
                    if node_of[t] != usize::MAX {
                        bits.insert(node_of[t]);
                    }
                }
                bits
            })
            .collect();
        let nodes = picked.iter().map(|&ci| catalog.spaces[ci].clone()).collect();
        Ok(Self::assemble(algebra.clone(), catalog.len() as u128, nodes, below))
    }

    fn assemble(
        algebra: LieAlgebra<FiniteField>,
        subspace_count: u128,
        nodes: Vec<Subspace<u32>>,
        below: Vec<FixedBitSet>,
    ) -> Self {
        let ideal = if nodes.len() >= PAR_THRESHOLD {
            nodes.par_iter().map(|s| algebra.is_ideal(s)).collect()
        } else {
            nodes.iter().map(|s| algebra.is_ideal(s)).collect()
        };
        let covers = lower_covers(&below);
        SubalgebraLattice {
            algebra,
            subspace_count,
            nodes,
            ideal,
            below,
            covers,
            frattini: OnceLock::new(),
            index: OnceLock::new(),
        }
    }

    pub fn algebra(&self) -> &LieAlgebra<FiniteField> {
        &self.algebra
    }

    pub fn field(&self) -> &FiniteField {
        self.algebra.field()
    }

    /// Number of subspaces of the ambient space that were examined.
    pub fn subspace_count(&self) -> u128 {
        self.subspace_count
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Subspace<u32>] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &Subspace<u32> {
        &self.nodes[id]
    }

    pub fn bottom(&self) -> NodeId {
        0
    }

    pub fn top(&self) -> NodeId {
        self.nodes.len() - 1
    }

    pub fn is_ideal(&self, id: NodeId) -> bool {
        self.ideal[id]
    }

    /// Nodes strictly contained in `id`.
    pub fn strictly_below(&self, id: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.below[id].ones()
    }

    pub fn contains(&self, outer: NodeId, inner: NodeId) -> bool {
        outer == inner || self.below[outer].contains(inner)
    }

    /// `id` together with everything below it: the subalgebra lattice of that node.
    pub fn down_set(&self, id: NodeId) -> Vec<NodeId> {
        let mut v: Vec<NodeId> = self.below[id].ones().collect();
        v.push(id);
        v
    }

    /// Lower covers of a node in the inclusion order.
    pub fn covers(&self, id: NodeId) -> &[NodeId] {
        &self.covers[id]
    }

    /// Hasse edges `(lower, upper)`.
    pub fn cover_edges(&self) -> Vec<(NodeId, NodeId)> {
        self.covers
            .iter()
            .enumerate()
            .flat_map(|(u, ls)| ls.iter().map(move |&l| (l, u)))
            .collect()
    }

    /// Maximal proper subalgebras of a node.
    pub fn maximal_subalgebras(&self, id: NodeId) -> &[NodeId] {
        &self.covers[id]
    }

    pub fn find(&self, s: &Subspace<u32>) -> Option<NodeId> {
        self.index
            .get_or_init(|| self.nodes.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect())
            .get(s)
            .copied()
    }

    pub fn count_by_dimension(&self) -> Vec<usize> {
        let mut c = vec![0; self.algebra.dim() + 1];
        for s in &self.nodes {
            c[s.dim()] += 1;
        }
        c
    }

    fn par<T: Send>(&self, g: impl Fn(NodeId) -> T + Sync + Send) -> Vec<T> {
        if self.nodes.len() >= PAR_THRESHOLD {
            (0..self.nodes.len()).into_par_iter().map(g).collect()
        } else {
            (0..self.nodes.len()).map(g).collect()
        }
    }

    fn is_nilpotent_node(&self, id: NodeId) -> bool {
        self.algebra.is_nilpotent_sub(&self.nodes[id])
    }

    fn is_abelian_node(&self, id: NodeId) -> bool {
        self.algebra.is_abelian_sub(&self.nodes[id])
    }

    fn zero(&self) -> Subspace<u32> {
        Subspace::zero(self.algebra.dim())
    }

    fn span_sum<'a>(&self, it: impl Iterator<Item = &'a Subspace<u32>>) -> Subspace<u32> {
        let f = self.field();
        it.fold(self.zero(), |acc, s| acc.sum(f, s).expect("same ambient"))
    }
}

impl<'a> IntoIterator for &'a SubalgebraLattice {
    type Item = &'a Subspace<u32>;
    type IntoIter = std::slice::Iter<'a, Subspace<u32>>;

    fn into_iter(self) -> Self::IntoIter {
        self.nodes.iter()
    }
}
