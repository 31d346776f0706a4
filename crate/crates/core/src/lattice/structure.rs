use crate::error::{Error, Result};
use crate::linalg::Subspace;

use super::{NodeId, SubalgebraLattice};

impl SubalgebraLattice {
    pub fn ideals(&self) -> Vec<NodeId> {
        (0..self.len()).filter(|&i| self.ideal[i]).collect()
    }

    /// Nonzero ideals with no nonzero ideal strictly below.
    pub fn minimal_ideals(&self) -> Vec<NodeId> {
        (1..self.len())
            .filter(|&i| self.ideal[i] && self.below[i].ones().all(|t| t == 0 || !self.ideal[t]))
            .collect()
    }

    /// Sum of the abelian minimal ideals.
    pub fn abelian_socle(&self) -> Subspace<u32> {
        let mins = self.minimal_ideals();
        self.span_sum(
            mins.iter()
                .filter(|&&i| self.is_abelian_node(i))
                .map(|&i| &self.nodes[i]),
        )
    }

    /// Largest nilpotent ideal.
    pub fn nilradical(&self) -> Result<Subspace<u32>> {
        let ideals = self.ideals();
        let sum = self.span_sum(
            ideals
                .iter()
                .filter(|&&i| self.is_nilpotent_node(i))
                .map(|&i| &self.nodes[i]),
        );
        if !self.algebra.is_nilpotent_sub(&sum) {
            return Err(Error::Internal("sum of nilpotent ideals is not nilpotent".into()));
        }
        Ok(sum)
    }

    /// Largest solvable ideal.
    pub fn radical(&self) -> Result<Subspace<u32>> {
        let ideals = self.ideals();
        let sum = self.span_sum(
            ideals
                .iter()
                .filter(|&&i| self.algebra.is_solvable_sub(&self.nodes[i]))
                .map(|&i| &self.nodes[i]),
        );
        if !self.algebra.is_solvable_sub(&sum) {
            return Err(Error::Internal("sum of solvable ideals is not solvable".into()));
        }
        Ok(sum)
    }
}

#[cfg(test)]
mod tests {
    use crate::families;
    use crate::fields::FiniteField;
    use crate::lattice::{LatticeConfig, SubalgebraLattice};

    #[test]
    fn rotation5_mod3_socle() {
        let f = FiniteField::prime(3).unwrap();
        let l = families::rotation5(&f);
        let lat = SubalgebraLattice::build(&l, LatticeConfig::default()).unwrap();
        let mins = lat.minimal_ideals();
        assert_eq!(mins.len(), 1);
        let e45 = l.span_units(&[3, 4]);
        assert_eq!(lat.node(mins[0]), &e45);
        assert_eq!(lat.abelian_socle(), e45);
        assert_eq!(lat.frattini(), e45);
    }

    #[test]
    fn sl2_over_gf5_is_simple() {
        let f = FiniteField::prime(5).unwrap();
        let l = families::sl2(&f);
        let lat = SubalgebraLattice::build(&l, LatticeConfig::default()).unwrap();
        assert_eq!(lat.ideals(), vec![0, lat.top()]);
        assert!(lat.abelian_socle().is_zero());
        assert!(lat.radical().unwrap().is_zero());
        assert!(lat.nilradical().unwrap().is_zero());
    }

    #[test]
    fn radicals_of_jordan() {
        let f = FiniteField::prime(3).unwrap();
        let l = families::jordan(&f, 1);
        let lat = SubalgebraLattice::build(&l, LatticeConfig::default()).unwrap();
        assert_eq!(lat.nilradical().unwrap(), l.span_units(&[1, 2]));
        assert_eq!(lat.radical().unwrap(), l.whole());
        assert_eq!(lat.abelian_socle(), l.span_units(&[2]));
    }

    #[test]
    fn abelian_minimal_ideals_are_lines() {
        let f = FiniteField::prime(2).unwrap();
        let l = families::abelian(&f, 3);
        let lat = SubalgebraLattice::build(&l, LatticeConfig::default()).unwrap();
        assert_eq!(lat.len(), 16);
        assert_eq!(lat.minimal_ideals().len(), 7);
        assert_eq!(lat.abelian_socle(), l.whole());
    }
}
