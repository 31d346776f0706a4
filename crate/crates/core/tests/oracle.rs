//! Point-set oracle over small prime fields.
//!
//! Subspaces are bitmasks over all `p^n` vectors, grown by closure from
//! single points. Nothing here uses echelon forms or the library's field code.

use lie_frattini_core::families;
use lie_frattini_core::lattice::{LatticeConfig, SubalgebraLattice};
use lie_frattini_core::{FiniteField, LieAlgebra, StructureTableDraft};

type Set = u128;

struct Oracle {
    p: u32,
    n: usize,
    /// `[b_i, b_j]` for all `i, j`, antisymmetry filled in.
    brackets: Vec<Vec<Vec<u32>>>,
}

impl Oracle {
    fn from_table(p: u32, n: usize, upper: &[Vec<u32>]) -> Self {
        let mut brackets = vec![vec![vec![0; n]; n]; n];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                brackets[i][j] = upper[k].clone();
                brackets[j][i] = upper[k].iter().map(|&c| (p - c) % p).collect();
                k += 1;
            }
        }
        Oracle { p, n, brackets }
    }

    fn of(l: &LieAlgebra<FiniteField>) -> Self {
        Oracle::from_table(l.field().characteristic(), l.dim(), l.table())
    }

    fn size(&self) -> usize {
        self.p.pow(self.n as u32) as usize
    }

    fn vec(&self, mut code: usize) -> Vec<u32> {
        (0..self.n)
            .map(|_| {
                let c = (code % self.p as usize) as u32;
                code /= self.p as usize;
                c
            })
            .collect()
    }

    fn code(&self, v: &[u32]) -> usize {
        v.iter().rev().fold(0, |acc, &c| acc * self.p as usize + c as usize)
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (u, v) = (self.vec(a), self.vec(b));
        self.code(&u.iter().zip(&v).map(|(x, y)| (x + y) % self.p).collect::<Vec<_>>())
    }

    fn bracket(&self, a: usize, b: usize) -> usize {
        let (u, v) = (self.vec(a), self.vec(b));
        let mut out = vec![0u32; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                let c = u[i] * v[j] % self.p;
                for (o, &x) in out.iter_mut().zip(&self.brackets[i][j]) {
                    *o = (*o + c * x) % self.p;
                }
            }
        }
        self.code(&out)
    }

    fn points(&self, s: Set) -> Vec<usize> {
        (0..self.size()).filter(|&i| s >> i & 1 == 1).collect()
    }

    /// Smallest additively closed set containing `s` and 0.
    fn close(&self, s: Set) -> Set {
        let mut s = s | 1;
        loop {
            let pts = self.points(s);
            let mut t = s;
            for &a in &pts {
                for &b in &pts {
                    t |= 1 << self.add(a, b);
                }
            }
            if t == s {
                return s;
            }
            s = t;
        }
    }

    fn subspaces(&self) -> Vec<Set> {
        assert!(self.size() <= 128);
        let mut seen = std::collections::BTreeSet::from([1 as Set]);
        let mut frontier = vec![1 as Set];
        while let Some(s) = frontier.pop() {
            for v in 0..self.size() {
                if s >> v & 1 == 0 {
                    let t = self.close(s | 1 << v);
                    if seen.insert(t) {
                        frontier.push(t);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    fn bracket_within(&self, a: Set, b: Set, target: Set) -> bool {
        let pb = self.points(b);
        self.points(a)
            .iter()
            .all(|&x| pb.iter().all(|&y| target >> self.bracket(x, y) & 1 == 1))
    }

    fn subalgebras(&self) -> Vec<Set> {
        self.subspaces()
            .into_iter()
            .filter(|&s| self.bracket_within(s, s, s))
            .collect()
    }

    /// Largest ideal of `s` contained in the intersection of its maximal subalgebras.
    fn frattini(&self, subs: &[Set], s: Set) -> Set {
        let below: Vec<Set> = subs.iter().copied().filter(|&t| t & s == t && t != s).collect();
        let maximal: Vec<Set> = below
            .iter()
            .copied()
            .filter(|&m| !below.iter().any(|&t| t != m && t & m == m))
            .collect();
        let phi = maximal.iter().fold(s, |acc, &m| acc & m);
        below
            .iter()
            .copied()
            .chain([s])
            .filter(|&i| i & phi == i && self.bracket_within(s, i, i))
            .max_by_key(|i| i.count_ones())
            .unwrap()
    }

    fn set_of(&self, basis: &[Vec<u32>]) -> Set {
        basis.iter().fold(1, |acc, v| self.close(acc | 1 << self.code(v)))
    }
}

fn compare_with_lattice(l: &LieAlgebra<FiniteField>) {
    let o = Oracle::of(l);
    let subs = o.subalgebras();
    let lat = SubalgebraLattice::build(l, LatticeConfig::default()).unwrap();
    assert_eq!(lat.len(), subs.len(), "subalgebra count");
    for id in 0..lat.len() {
        let s = o.set_of(lat.node(id).basis());
        assert!(subs.contains(&s));
        let phi = o.set_of(lat.frattini_ideal(id).basis());
        assert_eq!(phi, o.frattini(&subs, s), "frattini of node {id}");
    }
}

#[test]
fn all_three_dimensional_binary_tables() {
    let f = FiniteField::prime(2).unwrap();
    let mut valid = 0;
    let mut minimal = 0;
    for code in 0u32..512 {
        let mut d = StructureTableDraft::zero(f.clone(), 3);
        for k in 0..3 {
            d.table[k] = (0..3).map(|b| code >> (3 * k + b) & 1).collect();
        }
        if let Ok(l) = d.validate() {
            valid += 1;
            compare_with_lattice(&l);
            minimal += Oracle::of(&l).is_minimal_non_elementary() as usize;
        }
    }
    assert_eq!((valid, minimal), (120, 28));
}

#[test]
fn named_families() {
    for p in [2, 3] {
        let f = FiniteField::prime(p).unwrap();
        for alpha in 0..p {
            compare_with_lattice(&families::jordan(&f, alpha));
        }
        compare_with_lattice(&families::heisenberg(&f));
        compare_with_lattice(&families::two_dim_nonabelian(&f));
        compare_with_lattice(&families::abelian(&f, 3));
    }
    let f2 = FiniteField::prime(2).unwrap();
    compare_with_lattice(&families::heisenberg(&f2).direct_sum(&families::abelian(&f2, 1)).unwrap());
    compare_with_lattice(&families::rotation5(&f2));
    compare_with_lattice(&families::sl2(&FiniteField::prime(3).unwrap()));
}

/// Restricts to a basis by solving for coordinates over every combination.
fn restricted_table(o: &Oracle, basis: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let m = basis.len();
    let combos: Vec<(Vec<u32>, usize)> = (0..o.p.pow(m as u32) as usize)
        .map(|mut c| {
            let coeffs: Vec<u32> = (0..m)
                .map(|_| {
                    let x = (c % o.p as usize) as u32;
                    c /= o.p as usize;
                    x
                })
                .collect();
            let mut v = vec![0u32; o.n];
            for (k, &a) in coeffs.iter().enumerate() {
                for (x, y) in v.iter_mut().zip(&basis[k]) {
                    *x = (*x + a * y) % o.p;
                }
            }
            (coeffs, o.code(&v))
        })
        .collect();
    let mut table = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let b = o.bracket(o.code(&basis[i]), o.code(&basis[j]));
            let (coeffs, _) = combos.iter().find(|(_, v)| *v == b).expect("closed under bracket");
            table.push(coeffs.clone());
        }
    }
    table
}

#[test]
fn rotation_algebra_mod_five_has_a_non_elementary_subalgebra() {
    let f = FiniteField::prime(5).unwrap();
    let l = families::rotation5(&f);
    let big = Oracle::of(&l);
    let basis = vec![vec![1, 0, 0, 0, 0], vec![0, 1, 2, 0, 0], vec![0, 0, 0, 1, 2]];
    let small = Oracle::from_table(5, 3, &restricted_table(&big, &basis));
    let subs = small.subalgebras();
    let top = *subs.iter().max_by_key(|s| s.count_ones()).unwrap();
    assert_eq!(top.count_ones(), 125);
    let phi = small.frattini(&subs, top);
    assert_eq!(phi, small.set_of(&[vec![0, 0, 1]]));
}

impl Oracle {
    fn is_minimal_non_elementary(&self) -> bool {
        let subs = self.subalgebras();
        let top = (1u128 << self.size()) - 1;
        subs.iter()
            .all(|&s| (self.frattini(&subs, s) == 1) != (s == top))
    }

    fn satisfies_jacobi(&self) -> bool {
        let units: Vec<usize> = (0..self.n).map(|i| (self.p as usize).pow(i as u32)).collect();
        units.iter().all(|&a| {
            units.iter().all(|&b| {
                units.iter().all(|&c| {
                    let x = self.bracket(a, self.bracket(b, c));
                    let y = self.bracket(b, self.bracket(c, a));
                    let z = self.bracket(c, self.bracket(a, b));
                    self.add(self.add(x, y), z) == 0
                })
            })
        })
    }
}

/// Every table over GF(2) in dimension 4; slow, run with `--ignored`.
#[test]
#[ignore]
fn four_dimensional_binary_tables_have_no_minimal_non_elementary_member() {
    let mut valid = 0;
    let mut minimal = 0;
    for code in 0u32..1 << 24 {
        let table: Vec<Vec<u32>> = (0..6)
            .map(|k| (0..4).map(|b| code >> (4 * k + b) & 1).collect())
            .collect();
        let o = Oracle::from_table(2, 4, &table);
        if o.satisfies_jacobi() {
            valid += 1;
            if o.is_minimal_non_elementary() {
                minimal += 1;
            }
        }
    }
    assert_eq!((valid, minimal), (34336, 0));
}
