use crate::linalg::{Matrix, Subspace};

use super::{NodeId, SubalgebraLattice};

impl SubalgebraLattice {
    /// Intersection of the maximal subalgebras of a node; zero for the zero node.
    pub fn frattini_subalgebra(&self, id: NodeId) -> Subspace<u32> {
        let f = self.field();
        let mut covers = self.covers[id].iter();
        let Some(&first) = covers.next() else {
            return self.zero();
        };
        let mut acc = self.nodes[first].clone();
        for &c in covers {
            if acc.is_zero() {
                break;
            }
            let m = &self.nodes[c];
            if !acc.is_subspace_of(f, m) {
                acc = acc.intersect(f, m).expect("same ambient");
            }
        }
        acc
    }

    /// Largest ideal of the node contained in its Frattini subalgebra.
    pub fn frattini_ideal(&self, id: NodeId) -> Subspace<u32> {
        if let Some(all) = self.frattini.get() {
            return all[id].clone();
        }
        self.compute_frattini_ideal(id)
    }

    fn compute_frattini_ideal(&self, id: NodeId) -> Subspace<u32> {
        let sub = self.frattini_subalgebra(id);
        if sub.is_zero() {
            return sub;
        }
        let actions: Vec<Matrix<u32>> = self.nodes[id].basis().iter().map(|b| self.algebra.ad(b)).collect();
        sub.invariant_core(self.field(), &actions).expect("same ambient")
    }

    /// Frattini ideals of every node, computed once.
    pub fn frattini_ideals(&self) -> &[Subspace<u32>] {
        self.frattini.get_or_init(|| self.par(|id| self.compute_frattini_ideal(id)))
    }

    /// Frattini ideal of the whole algebra.
    pub fn frattini(&self) -> Subspace<u32> {
        self.frattini_ideal(self.top())
    }
}

#[cfg(test)]
mod tests {
    use crate::families;
    use crate::fields::FiniteField;
    use crate::lattice::{LatticeConfig, SubalgebraLattice};

    fn lat(l: &crate::LieAlgebra<FiniteField>) -> SubalgebraLattice {
        SubalgebraLattice::build(l, LatticeConfig::default()).unwrap()
    }

    #[test]
    fn heisenberg_over_gf2() {
        let f = FiniteField::prime(2).unwrap();
        let h = families::heisenberg(&f);
        let lat = lat(&h);
        let top = lat.top();
        let maxes = lat.maximal_subalgebras(top);
        assert_eq!(maxes.len(), 3);
        let z = h.span_units(&[2]);
        for &m in maxes {
            assert_eq!(lat.node(m).dim(), 2);
            assert!(z.is_subspace_of(&f, lat.node(m)));
        }
        assert_eq!(lat.frattini(), z);
        assert_eq!(lat.frattini(), h.derived_algebra());
    }

    #[test]
    fn small_conventions() {
        let f = FiniteField::prime(2).unwrap();
        let ab = families::abelian(&f, 2);
        let lat2 = lat(&ab);
        assert_eq!(lat2.len(), 5);
        assert!(lat2.frattini().is_zero());
        assert_eq!(lat2.maximal_subalgebras(lat2.top()).len(), 3);
        let line = lat2.nodes().iter().position(|s| s.dim() == 1).unwrap();
        assert_eq!(lat2.maximal_subalgebras(line), &[0]);
        assert!(lat2.frattini_ideal(line).is_zero());
        assert!(lat2.frattini_ideal(0).is_zero());

        let zero = families::abelian(&f, 0);
        let lat0 = lat(&zero);
        assert_eq!(lat0.len(), 1);
        assert!(lat0.frattini().is_zero());
    }

    #[test]
    fn jordan_alpha_one_over_gf3() {
        let f = FiniteField::prime(3).unwrap();
        let l = families::jordan(&f, 1);
        let lat = lat(&l);
        assert_eq!(lat.frattini(), l.span_units(&[2]));
        let all = lat.frattini_ideals();
        assert_eq!(all[lat.top()], l.span_units(&[2]));
    }
}
