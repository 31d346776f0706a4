use crate::error::{Error, Result};
use crate::fields::FiniteField;
use crate::linalg::Subspace;

/// Default cap on the number of subspaces a lattice computation may visit.
pub const DEFAULT_MAX_SUBSPACES: u64 = 2_000_000;

/// Gaussian binomial `[n choose k]_q`, saturating at `u128::MAX`.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        let top = q.checked_pow(n - i).map(|x| x - 1);
        let bottom = q.checked_pow(i + 1).map(|x| x - 1);
        match (top.and_then(|t| num.checked_mul(t)), bottom.and_then(|b| den.checked_mul(b))) {
            (Some(a), Some(b)) => {
                num = a;
                den = b;
            }
            _ => return u128::MAX,
        }
    }
    num / den
}

/// Number of subspaces of `F_q^n`.
pub fn subspace_count(n: u32, q: u64) -> u128 {
    (0..=n).fold(0u128, |acc, k| acc.saturating_add(gaussian_binomial(n, k, q)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CostEstimate {
    pub subspace_count: u128,
    pub cap: u64,
    pub admissible: bool,
}

impl CostEstimate {
    pub fn new(n: usize, q: u64, cap: u64) -> Self {
        let subspace_count = subspace_count(n as u32, q);
        CostEstimate {
            subspace_count,
            cap,
            admissible: subspace_count <= cap as u128,
        }
    }

    pub fn check(self) -> Result<Self> {
        if self.admissible {
            Ok(self)
        } else {
            Err(Error::CostCap {
                what: "subspace enumeration",
                estimate: self.subspace_count as f64,
                cap: self.cap as f64,
            })
        }
    }
}

/// One reduced row-echelon shape: the pivot columns and the positions of the
/// free entries `(row, column)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EchelonPattern {
    pub pivots: Vec<usize>,
    pub free: Vec<(usize, usize)>,
}

impl EchelonPattern {
    fn new(n: usize, pivots: Vec<usize>) -> Self {
        let mut free = Vec::new();
        for (r, &p) in pivots.iter().enumerate() {
            for c in p + 1..n {
                if !pivots.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        EchelonPattern { pivots, free }
    }

    /// Number of subspaces with this shape.
    pub fn size(&self, q: u64) -> u128 {
        (q as u128).pow(self.free.len() as u32)
    }

    /// All subspaces with this shape, in counter order over the free entries.
    pub fn subspaces(&self, q: u64, n: usize) -> impl Iterator<Item = Subspace<u32>> + 'static {
        let total = self.size(q) as u64;
        let pivots = self.pivots.clone();
        let free = self.free.clone();
        let mut base = vec![vec![0u32; n]; pivots.len()];
        for (r, &p) in pivots.iter().enumerate() {
            base[r][p] = 1;
        }
        (0..total).map(move |mut counter| {
            let mut rows = base.clone();
            for &(r, c) in free.iter().rev() {
                rows[r][c] = (counter % q) as u32;
                counter /= q;
            }
            Subspace::from_rref_unchecked(n, rows, pivots.clone())
        })
    }
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let d = combo.len();
    for i in (0..d).rev() {
        if combo[i] < n - d + i {
            combo[i] += 1;
            for j in i + 1..d {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Every reduced row-echelon shape in `F^n`, by dimension then pivot set.
pub fn echelon_patterns(n: usize) -> Vec<EchelonPattern> {
    let mut out = Vec::new();
    for d in 0..=n {
        let mut combo: Vec<usize> = (0..d).collect();
        loop {
            out.push(EchelonPattern::new(n, combo.clone()));
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    out
}

/// Stream of every subspace of `F_q^n`, each exactly once.
pub fn enumerate_subspaces(
    f: &FiniteField,
    n: usize,
    max_subspaces: u64,
) -> Result<impl Iterator<Item = Subspace<u32>>> {
    CostEstimate::new(n, f.order(), max_subspaces).check()?;
    let q = f.order();
    Ok(echelon_patterns(n)
        .into_iter()
        .flat_map(move |p| p.subspaces(q, n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts_small_cases() {
        let gf2 = FiniteField::prime(2).unwrap();
        let all: Vec<_> = enumerate_subspaces(&gf2, 2, 100).unwrap().collect();
        assert_eq!(all.len(), 5);
        for q in [2u64, 3, 5] {
            let f = FiniteField::of_order(q).unwrap();
            assert_eq!(enumerate_subspaces(&f, 1, 100).unwrap().count(), 2);
        }
        assert_eq!(subspace_count(5, 2), 374);
    }

    #[test]
    fn enumerated_subspaces_are_distinct_and_canonical() {
        let f = FiniteField::prime(3).unwrap();
        let all: Vec<_> = enumerate_subspaces(&f, 3, 1000).unwrap().collect();
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        for s in &all {
            let again = Subspace::span(&f, 3, s.basis().to_vec()).unwrap();
            assert_eq!(&again, s);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let f = FiniteField::prime(2).unwrap();
        let err = enumerate_subspaces(&f, 5, 100).err().unwrap();
        assert!(err.is_cost_cap());
    }

    #[test]
    fn patterns_cover_all_pivot_sets() {
        let p = echelon_patterns(4);
        assert_eq!(p.len(), 16);
        assert_eq!(p[0].pivots, Vec::<usize>::new());
        assert_eq!(p.last().unwrap().pivots, vec![0, 1, 2, 3]);
    }
}
