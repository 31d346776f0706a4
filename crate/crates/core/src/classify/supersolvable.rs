use std::collections::HashSet;

use crate::fields::FiniteField;
use crate::liecore::LieAlgebra;
use crate::linalg::Subspace;

/// Vectors supported on `coords`, one per line through the origin: the
/// first nonzero coefficient is 1.
pub(crate) fn projective_points(f: &FiniteField, n: usize, coords: &[usize]) -> Vec<Vec<u32>> {
    let q = f.order() as u32;
    let m = coords.len();
    let mut out = Vec::new();
    for lead in 0..m {
        let free = m - lead - 1;
        let total = (q as u64).pow(free as u32);
        for mut c in 0..total {
            let mut v = vec![0u32; n];
            v[coords[lead]] = 1;
            for &pos in coords[lead + 1..].iter().rev() {
                v[pos] = (c % q as u64) as u32;
                c /= q as u64;
            }
            out.push(v);
        }
    }
    out
}

/// A full flag of ideals exists.
///
/// Backtracks over the chain: from an ideal `I`, try every line of `L/I`
/// that is an ideal of `L/I`. Dead ends are remembered by their ideal, so
/// each ideal of `L` is expanded at most once.
pub fn is_supersolvable(l: &LieAlgebra<FiniteField>) -> bool {
    let mut dead = HashSet::new();
    extend_flag(l, &l.zero_subspace(), &mut dead)
}

fn extend_flag(l: &LieAlgebra<FiniteField>, ideal: &Subspace<u32>, dead: &mut HashSet<Subspace<u32>>) -> bool {
    if ideal.is_whole() {
        return true;
    }
    if dead.contains(ideal) {
        return false;
    }
    let f = l.field();
    let n = l.dim();
    let units: Vec<Vec<u32>> = (0..n).map(|i| l.unit(i)).collect();
    for v in projective_points(f, n, &ideal.non_pivots()) {
        let mut gens = ideal.basis().to_vec();
        gens.push(v.clone());
        let next = Subspace::span(f, n, gens).expect("ambient width");
        if units.iter().all(|e| next.contains(f, &l.bracket(e, &v))) && extend_flag(l, &next, dead) {
            return true;
        }
    }
    dead.insert(ideal.clone());
    false
}
