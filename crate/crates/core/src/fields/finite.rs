use crate::error::{Error, Result};

use super::spec::poly_rem;
use super::{Field, FieldKind, FieldSpec, ScalarRepr};

/// GF(p) or GF(p^k) with elements coded as integers in `[0, q)`.
///
/// An extension element `c0 + c1 t + ... + c(k-1) t^(k-1)` has code
/// `c0 + c1 p + ... + c(k-1) p^(k-1)`, so codes `0..p` are the prime subfield.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteField {
    spec: FieldSpec,
    p: u32,
    k: u32,
    q: u64,
}

impl FiniteField {
    pub fn new(spec: &FieldSpec) -> Result<Self> {
        if spec.kind() == FieldKind::Rationals {
            return Err(Error::InfiniteField(spec.to_string()));
        }
        Ok(FiniteField {
            spec: spec.clone(),
            p: spec.characteristic(),
            k: spec.degree(),
            q: spec.order().unwrap(),
        })
    }

    pub fn prime(p: u32) -> Result<Self> {
        FiniteField::new(&FieldSpec::prime(p)?)
    }

    /// GF(p^k) with the default modulus.
    pub fn extension(p: u32, k: u32) -> Result<Self> {
        FiniteField::new(&FieldSpec::extension(p, k, None)?)
    }

    /// GF(q) for a prime power q, prime field when q is prime.
    pub fn of_order(q: u64) -> Result<Self> {
        FiniteField::new(&format!("gf{q}").parse()?)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> + Clone {
        0..self.q as u32
    }

    fn digits(&self, mut a: u32) -> [u64; 4] {
        let mut d = [0u64; 4];
        for slot in d.iter_mut().take(self.k as usize) {
            *slot = (a % self.p) as u64;
            a /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u64]) -> u32 {
        d.iter()
            .take(self.k as usize)
            .rev()
            .fold(0u64, |acc, &c| acc * self.p as u64 + c) as u32
    }

    pub fn coefficients(&self, a: u32) -> Vec<u32> {
        self.digits(a)[..self.k as usize].iter().map(|&c| c as u32).collect()
    }

    pub fn from_coefficients(&self, c: &[u32]) -> Result<u32> {
        if c.len() != self.k as usize || c.iter().any(|&x| x >= self.p) {
            return Err(self.bad(format!("{c:?}")));
        }
        let d: Vec<u64> = c.iter().map(|&x| x as u64).collect();
        Ok(self.undigits(&d))
    }

    /// Image of a prime-subfield residue `r` of GF(p) in this field.
    pub fn embed_residue(&self, r: u32) -> u32 {
        debug_assert!(r < self.p);
        r
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn bad(&self, value: String) -> Error {
        Error::BadScalar {
            value,
            field: self.spec.to_string(),
        }
    }
}

impl Field for FiniteField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        self.spec.clone()
    }

    #[inline]
    fn zero(&self) -> u32 {
        0
    }

    #[inline]
    fn one(&self) -> u32 {
        1
    }

    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        if self.k == 1 {
            ((*a as u64 + *b as u64) % self.p as u64) as u32
        } else {
            let (x, y) = (self.digits(*a), self.digits(*b));
            let mut s = [0u64; 4];
            for i in 0..self.k as usize {
                s[i] = (x[i] + y[i]) % self.p as u64;
            }
            self.undigits(&s)
        }
    }

    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if self.k == 1 {
            if *a == 0 {
                0
            } else {
                self.p - a
            }
        } else {
            let x = self.digits(*a);
            let mut s = [0u64; 4];
            for i in 0..self.k as usize {
                s[i] = (self.p as u64 - x[i]) % self.p as u64;
            }
            self.undigits(&s)
        }
    }

    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        if self.k == 1 {
            ((*a as u64 * *b as u64) % self.p as u64) as u32
        } else {
            let (x, y) = (self.digits(*a), self.digits(*b));
            let k = self.k as usize;
            let p = self.p as u64;
            let mut prod = vec![0u64; 2 * k - 1];
            for i in 0..k {
                for j in 0..k {
                    prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
                }
            }
            let r = poly_rem(&prod, self.spec.modulus(), p);
            self.undigits(&r)
        }
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        Some(self.pow(*a, self.q - 2))
    }

    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    fn encode(&self, a: &u32) -> ScalarRepr {
        if self.k == 1 {
            ScalarRepr::Int(*a as i64)
        } else {
            ScalarRepr::Coeffs(self.coefficients(*a))
        }
    }

    fn decode(&self, r: &ScalarRepr) -> Result<u32> {
        match (r, self.k) {
            (ScalarRepr::Int(n), 1) if *n >= 0 && (*n as u64) < self.p as u64 => Ok(*n as u32),
            (ScalarRepr::Coeffs(c), k) if k > 1 => self.from_coefficients(c),
            _ => Err(self.bad(format!("{r:?}"))),
        }
    }
}
