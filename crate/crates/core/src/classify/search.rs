use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{Field, FieldSpec, FiniteField};
use crate::lattice::{LatticeConfig, SubalgebraLattice, SubspaceCatalog};
use crate::liecore::{pair_count, pair_index, AlgebraJson, LieAlgebra, StructureTableDraft};
use crate::linalg::SubspaceJson;

use super::iso::{is_isomorphic, Invariants, DEFAULT_MAX_GL_ORDER};
use super::predicates::{is_e_algebra, minimal_non_elementary};
use super::shape::{jordan_parameter, shape_of, Shape};
use super::SCHEMA;

pub const DEFAULT_MAX_TABLES: u64 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchConfig {
    pub max_tables: u64,
    pub max_gl_order: f64,
    pub lattice: LatticeConfig,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_tables: DEFAULT_MAX_TABLES,
            max_gl_order: DEFAULT_MAX_GL_ORDER,
            lattice: LatticeConfig::default(),
        }
    }
}

/// Number of antisymmetric tables in dimension `n` over `GF(q)`, saturating.
pub fn table_count(n: usize, q: u64) -> u128 {
    let digits = (n * pair_count(n)) as u32;
    (q as u128).checked_pow(digits).unwrap_or(u128::MAX)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeCounts {
    pub heisenberg: u64,
    pub abelian_split: u64,
    pub none: u64,
}

/// A solvable table on which minimal non-elementarity and the shape check disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub table_index: u64,
    pub minimal_non_elementary: bool,
    pub shape: Shape,
}

/// One isomorphism class of minimal non-elementary algebras.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Representative {
    /// Least table index in the class; table order is lexicographic in the
    /// structure constants, first bracket first.
    pub table_index: u64,
    pub class_size: u64,
    pub solvable: bool,
    pub shape: Option<Shape>,
    /// Canonical parameter when the algebra is a member of the Jordan family.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jordan_alpha: Option<u32>,
    pub frattini: SubspaceJson,
    pub algebra: AlgebraJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub schema: String,
    pub field: FieldSpec,
    pub dim: usize,
    pub tables_scanned: u64,
    pub jacobi_valid: u64,
    pub solvable: u64,
    pub nilpotent: u64,
    /// Raw tables, before grouping up to isomorphism.
    pub minimal_non_elementary: u64,
    pub minimal_non_elementary_solvable: u64,
    /// Shapes among the solvable tables.
    pub shapes: ShapeCounts,
    pub discrepancies: Vec<Discrepancy>,
    /// Minimal non-elementary tables where "L² nilpotent" and "solvable" differ.
    pub derived_nilpotent_exceptions: Vec<u64>,
    /// Minimal non-elementary tables that are not E-algebras.
    pub e_algebra_exceptions: Vec<u64>,
    /// Nilpotent tables whose Frattini subalgebra differs from `L²`.
    pub nilpotent_frattini_exceptions: Vec<u64>,
    pub representatives: Vec<Representative>,
}

impl SearchReport {
    /// Solvable minimal non-elementary tables are exactly those with a shape.
    pub fn equivalence_holds(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Addition and multiplication tables of a small field, indexed by element codes.
struct Arith {
    q: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

impl Arith {
    fn new(f: &FiniteField) -> Self {
        let q = f.order() as usize;
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q as u32 {
            for b in 0..q as u32 {
                add[a as usize * q + b as usize] = f.add(&a, &b);
                mul[a as usize * q + b as usize] = f.mul(&a, &b);
            }
        }
        let neg = (0..q as u32).map(|a| f.neg(&a)).collect();
        Arith { q, add, mul, neg }
    }

    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.q + b as usize]
    }
}

/// Jacobi identity on a flat digit table: `digits[pair * n + coord]`.
struct JacobiFilter {
    n: usize,
    arith: Arith,
    triples: Vec<[usize; 3]>,
}

impl JacobiFilter {
    fn new(f: &FiniteField, n: usize) -> Self {
        let mut triples = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    triples.push([i, j, k]);
                }
            }
        }
        JacobiFilter {
            n,
            arith: Arith::new(f),
            triples,
        }
    }

    /// Adds `coef * [e_l, e_m]` into `acc`.
    #[inline]
    fn add_bracket(&self, digits: &[u32], acc: &mut [u32], coef: u32, l: usize, m: usize) {
        if l == m || coef == 0 {
            return;
        }
        let n = self.n;
        let (lo, hi, c) = if l < m {
            (l, m, coef)
        } else {
            (m, l, self.arith.neg[coef as usize])
        };
        let base = pair_index(n, lo, hi) * n;
        for (t, a) in acc.iter_mut().enumerate() {
            *a = self.arith.add(*a, self.arith.mul(c, digits[base + t]));
        }
    }

    fn holds(&self, digits: &[u32]) -> bool {
        let n = self.n;
        let mut acc = [0u32; 16];
        let acc = &mut acc[..n];
        for &[i, j, k] in &self.triples {
            acc.iter_mut().for_each(|a| *a = 0);
            let ij = pair_index(n, i, j) * n;
            let jk = pair_index(n, j, k) * n;
            let ik = pair_index(n, i, k) * n;
            for l in 0..n {
                self.add_bracket(digits, acc, digits[ij + l], l, k);
                self.add_bracket(digits, acc, digits[jk + l], l, i);
                self.add_bracket(digits, acc, self.arith.neg[digits[ik + l] as usize], l, j);
            }
            if acc.iter().any(|&a| a != 0) {
                return false;
            }
        }
        true
    }
}

struct Found {
    index: u64,
    algebra: LieAlgebra<FiniteField>,
    solvable: bool,
    shape: Option<Shape>,
    frattini: crate::Subspace<u32>,
}

#[derive(Default)]
struct Partial {
    scanned: u64,
    valid: u64,
    solvable: u64,
    nilpotent: u64,
    mne: u64,
    mne_solvable: u64,
    heisenberg: u64,
    abelian_split: u64,
    no_shape: u64,
    discrepancies: Vec<Discrepancy>,
    derived_nilpotent: Vec<u64>,
    e_algebra: Vec<u64>,
    nilpotent_frattini: Vec<u64>,
    found: Vec<Found>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.scanned += other.scanned;
        self.valid += other.valid;
        self.solvable += other.solvable;
        self.nilpotent += other.nilpotent;
        self.mne += other.mne;
        self.mne_solvable += other.mne_solvable;
        self.heisenberg += other.heisenberg;
        self.abelian_split += other.abelian_split;
        self.no_shape += other.no_shape;
        self.discrepancies.extend(other.discrepancies);
        self.derived_nilpotent.extend(other.derived_nilpotent);
        self.e_algebra.extend(other.e_algebra);
        self.nilpotent_frattini.extend(other.nilpotent_frattini);
        self.found.extend(other.found);
        self
    }
}

fn examine(
    catalog: &SubspaceCatalog,
    index: u64,
    digits: &[u32],
    out: &mut Partial,
) -> Result<()> {
    let f = catalog.field();
    let n = catalog.ambient();
    let mut draft = StructureTableDraft::zero(f.clone(), n);
    for (p, v) in draft.table.iter_mut().enumerate() {
        v.copy_from_slice(&digits[p * n..(p + 1) * n]);
    }
    let l = draft.into_algebra()?;
    out.valid += 1;
    let lat = SubalgebraLattice::build_in(catalog, &l)?;
    let solvable = l.is_solvable();
    let nilpotent = solvable && l.is_nilpotent();
    let mne = minimal_non_elementary(&lat);
    let derived = l.derived_algebra();
    let mut shape = None;
    if solvable {
        out.solvable += 1;
        let s = shape_of(&lat)?;
        match s {
            Shape::Heisenberg => out.heisenberg += 1,
            Shape::AbelianSplit => out.abelian_split += 1,
            Shape::None => out.no_shape += 1,
        }
        if s.is_some() != mne {
            out.discrepancies.push(Discrepancy {
                table_index: index,
                minimal_non_elementary: mne,
                shape: s,
            });
        }
        shape = Some(s);
    }
    if nilpotent {
        out.nilpotent += 1;
        if lat.frattini_subalgebra(lat.top()) != derived {
            out.nilpotent_frattini.push(index);
        }
    }
    if mne {
        out.mne += 1;
        if solvable {
            out.mne_solvable += 1;
        }
        if l.is_nilpotent_sub(&derived) != solvable {
            out.derived_nilpotent.push(index);
        }
        if !is_e_algebra(&lat).is_true() {
            out.e_algebra.push(index);
        }
        out.found.push(Found {
            index,
            frattini: lat.frattini(),
            algebra: l,
            solvable,
            shape,
        });
    }
    Ok(())
}

/// Scans the tables whose first bracket vector is `head`, in increasing index order.
fn scan_partition(
    catalog: &SubspaceCatalog,
    filter: &JacobiFilter,
    head: u64,
    digit_count: usize,
) -> Result<Partial> {
    let n = catalog.ambient();
    let q = filter.arith.q as u64;
    let tail_len = digit_count - n.min(digit_count);
    let tail_total = q.pow(tail_len as u32);
    let mut digits = vec![0u32; digit_count];
    let mut h = head;
    for d in (0..digit_count - tail_len).rev() {
        digits[d] = (h % q) as u32;
        h /= q;
    }
    let mut out = Partial::default();
    let qd = q as u32;
    for rest in 0..tail_total {
        let index = head * tail_total + rest;
        out.scanned += 1;
        if filter.holds(&digits) {
            examine(catalog, index, &digits, &mut out)?;
        }
        // odometer over the tail, least significant digit last
        for d in (digit_count - tail_len..digit_count).rev() {
            digits[d] += 1;
            if digits[d] < qd {
                break;
            }
            digits[d] = 0;
        }
    }
    Ok(out)
}

/// Scans every antisymmetric structure table of dimension `n` over `field`.
pub fn exhaustive_search(n: usize, field: &FiniteField, config: SearchConfig) -> Result<SearchReport> {
    let q = field.order();
    let total = table_count(n, q);
    if total > config.max_tables as u128 {
        return Err(Error::CostCap {
            what: "structure table search",
            estimate: total as f64,
            cap: config.max_tables as f64,
        });
    }
    let catalog = SubspaceCatalog::new(field, n, config.lattice)?;
    let filter = JacobiFilter::new(field, n.max(1));
    let digit_count = n * pair_count(n);
    let heads = if digit_count == 0 { 1 } else { q.pow(n as u32) };
    let parts = (0..heads)
        .into_par_iter()
        .map(|h| scan_partition(&catalog, &filter, h, digit_count))
        .collect::<Result<Vec<_>>>()?;
    let merged = parts.into_iter().fold(Partial::default(), Partial::merge);
    let representatives = group_up_to_isomorphism(merged.found, config.max_gl_order)?;
    Ok(SearchReport {
        schema: SCHEMA.to_string(),
        field: field.spec(),
        dim: n,
        tables_scanned: merged.scanned,
        jacobi_valid: merged.valid,
        solvable: merged.solvable,
        nilpotent: merged.nilpotent,
        minimal_non_elementary: merged.mne,
        minimal_non_elementary_solvable: merged.mne_solvable,
        shapes: ShapeCounts {
            heisenberg: merged.heisenberg,
            abelian_split: merged.abelian_split,
            none: merged.no_shape,
        },
        discrepancies: merged.discrepancies,
        derived_nilpotent_exceptions: merged.derived_nilpotent,
        e_algebra_exceptions: merged.e_algebra,
        nilpotent_frattini_exceptions: merged.nilpotent_frattini,
        representatives,
    })
}

/// Groups found algebras into isomorphism classes, in table order, so the
/// first member of each class is its least table.
fn group_up_to_isomorphism(found: Vec<Found>, max_gl_order: f64) -> Result<Vec<Representative>> {
    let mut reps: Vec<(Invariants, Found, u64)> = Vec::new();
    for cand in found {
        let inv = Invariants::of(&cand.algebra);
        let mut matched = false;
        for (rinv, rep, size) in reps.iter_mut() {
            if *rinv == inv && is_isomorphic(&rep.algebra, &cand.algebra, max_gl_order)?.is_some() {
                *size += 1;
                matched = true;
                break;
            }
        }
        if !matched {
            reps.push((inv, cand, 1));
        }
    }
    Ok(reps
        .into_iter()
        .map(|(_, r, size)| {
            let f = r.algebra.field().clone();
            Representative {
                table_index: r.index,
                class_size: size,
                solvable: r.solvable,
                shape: r.shape,
                jordan_alpha: jordan_parameter(&r.algebra),
                frattini: r.frattini.to_json(&f),
                algebra: r.algebra.to_json(),
            }
        })
        .collect())
}
