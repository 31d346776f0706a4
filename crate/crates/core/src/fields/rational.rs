use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::{Field, FieldSpec, ScalarRepr};

/// The field of rational numbers with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.trim().parse::<BigInt>().ok()?, BigInt::one()),
    };
    (!d.is_zero()).then(|| BigRational::new(n, d))
}

pub(crate) fn format_rational(a: &BigRational) -> String {
    format!("{}/{}", a.numer(), a.denom())
}

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::rationals()
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn encode(&self, a: &BigRational) -> ScalarRepr {
        ScalarRepr::Text(format_rational(a))
    }

    fn decode(&self, r: &ScalarRepr) -> Result<BigRational> {
        match r {
            ScalarRepr::Int(n) => Ok(self.from_i64(*n)),
            ScalarRepr::Text(s) => parse_rational(s).ok_or_else(|| Error::BadScalar {
                value: s.clone(),
                field: "Q".into(),
            }),
            ScalarRepr::Coeffs(c) => Err(Error::BadScalar {
                value: format!("{c:?}"),
                field: "Q".into(),
            }),
        }
    }

    /// Clears denominators and divides out the content, leaving a primitive
    /// integer row. Keeps entry sizes down during elimination.
    fn normalize_row(&self, row: &mut [BigRational]) {
        let lcm = row
            .iter()
            .filter(|x| !x.is_zero())
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let gcd = row
            .iter()
            .filter(|x| !x.is_zero())
            .map(|x| (x.numer() * (&lcm / x.denom())).abs())
            .fold(BigInt::zero(), |acc, n| acc.gcd(&n));
        if gcd.is_zero() {
            return;
        }
        let scale = BigRational::new(lcm, gcd);
        for x in row.iter_mut() {
            *x = &*x * &scale;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn half_plus_third() {
        assert_eq!(Rationals.add(&q(1, 2), &q(1, 3)), q(5, 6));
    }

    #[test]
    fn lowest_terms_with_positive_denominator() {
        let x = Rationals.decode(&ScalarRepr::Text("4/-6".into())).unwrap();
        assert_eq!(format_rational(&x), "-2/3");
        assert_eq!(Rationals.encode(&q(3, 1)), ScalarRepr::Text("3/1".into()));
        assert!(Rationals.decode(&ScalarRepr::Text("1/0".into())).is_err());
    }

    #[test]
    fn normalize_row_is_primitive_integer() {
        let mut row = vec![q(1, 2), q(0, 1), q(-3, 4)];
        Rationals.normalize_row(&mut row);
        assert_eq!(row, vec![q(2, 1), q(0, 1), q(-3, 1)]);
    }
}
