use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_EXTENSION_DEGREE: u32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldKind {
    Rationals,
    PrimeField,
    ExtensionField,
}

/// A validated description of one of the supported exact fields.
///
/// Every value of this type has passed validation: `p` is prime and an
/// extension modulus is monic and irreducible. Deserialization validates too.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFieldSpec", into = "RawFieldSpec")]
pub struct FieldSpec {
    kind: FieldKind,
    p: u32,
    k: u32,
    // c0..c(k), leading coefficient 1 included
    modulus: Vec<u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum RawFieldSpec {
    Rationals,
    Prime { p: u32 },
    Extension {
        p: u32,
        k: u32,
        /// Omitted on input means the default modulus.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        modulus: Option<Vec<u32>>,
    },
}

impl TryFrom<RawFieldSpec> for FieldSpec {
    type Error = Error;

    fn try_from(raw: RawFieldSpec) -> Result<Self> {
        match raw {
            RawFieldSpec::Rationals => Ok(FieldSpec::rationals()),
            RawFieldSpec::Prime { p } => FieldSpec::prime(p),
            RawFieldSpec::Extension { p, k, modulus } => FieldSpec::extension(p, k, modulus),
        }
    }
}

impl From<FieldSpec> for RawFieldSpec {
    fn from(spec: FieldSpec) -> Self {
        match spec.kind {
            FieldKind::Rationals => RawFieldSpec::Rationals,
            FieldKind::PrimeField => RawFieldSpec::Prime { p: spec.p },
            FieldKind::ExtensionField => RawFieldSpec::Extension {
                p: spec.p,
                k: spec.k,
                modulus: Some(spec.modulus),
            },
        }
    }
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec {
            kind: FieldKind::Rationals,
            p: 0,
            k: 1,
            modulus: Vec::new(),
        }
    }

    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(FieldSpec {
            kind: FieldKind::PrimeField,
            p,
            k: 1,
            modulus: Vec::new(),
        })
    }

    /// GF(p^k). Without an explicit modulus the least monic irreducible
    /// polynomial is chosen, ordering candidates `t^k + c(k-1) t^(k-1) + ... + c0`
    /// by the integer `c0 + c1 p + ... + c(k-1) p^(k-1)`.
    pub fn extension(p: u32, k: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if k < 2 {
            return Err(Error::InvalidField(format!(
                "extension degree must be at least 2, got {k}"
            )));
        }
        if k > MAX_EXTENSION_DEGREE {
            return Err(Error::InvalidField(format!(
                "extension degree {k} exceeds the supported maximum {MAX_EXTENSION_DEGREE}"
            )));
        }
        if (p as u64).pow(k) > u32::MAX as u64 {
            return Err(Error::InvalidField(format!("GF({p}^{k}) is too large")));
        }
        let modulus = match modulus {
            Some(m) => {
                let ok = m.len() == k as usize + 1
                    && m[k as usize] == 1
                    && m.iter().all(|&c| c < p)
                    && is_irreducible(&m, p);
                if !ok {
                    return Err(Error::ReducibleModulus { p, k, modulus: m });
                }
                m
            }
            None => default_modulus(p, k),
        };
        Ok(FieldSpec {
            kind: FieldKind::ExtensionField,
            p,
            k,
            modulus,
        })
    }

    /// Validating constructor taking the parameters loosely, as a CLI or
    /// config loader would supply them.
    pub fn make(
        kind: FieldKind,
        p: Option<u32>,
        k: Option<u32>,
        modulus: Option<Vec<u32>>,
    ) -> Result<Self> {
        match kind {
            FieldKind::Rationals => {
                if p.is_some() || k.is_some() || modulus.is_some() {
                    return Err(Error::InvalidField(
                        "rationals take no parameters".into(),
                    ));
                }
                Ok(FieldSpec::rationals())
            }
            FieldKind::PrimeField => {
                let p = p.ok_or_else(|| Error::InvalidField("missing p".into()))?;
                if k.is_some_and(|k| k != 1) || modulus.is_some() {
                    return Err(Error::InvalidField(
                        "a prime field takes only p".into(),
                    ));
                }
                FieldSpec::prime(p)
            }
            FieldKind::ExtensionField => {
                let p = p.ok_or_else(|| Error::InvalidField("missing p".into()))?;
                let k = k.ok_or_else(|| Error::InvalidField("missing k".into()))?;
                FieldSpec::extension(p, k, modulus)
            }
        }
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    /// Characteristic; 0 for the rationals.
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_finite(&self) -> bool {
        self.kind != FieldKind::Rationals
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| (self.p as u64).pow(self.k))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::PrimeField => write!(f, "GF({})", self.p),
            FieldKind::ExtensionField => write!(f, "GF({}^{})", self.p, self.k),
        }
    }
}

/// Accepts `q`, `Q`, `rationals`, `gf7`, `GF(7)`, `gf9`, `gf(3^2)`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        if matches!(t.as_str(), "q" | "qq" | "rationals" | "rational") {
            return Ok(FieldSpec::rationals());
        }
        let body = t
            .strip_prefix("gf")
            .ok_or_else(|| Error::Parse(format!("unknown field {s:?}")))?;
        let body = body.trim_start_matches('(').trim_end_matches(')');
        let bad = || Error::Parse(format!("unknown field {s:?}"));
        let (p, k) = if let Some((base, exp)) = body.split_once('^') {
            let p: u32 = base.trim().parse().map_err(|_| bad())?;
            let k: u32 = exp.trim().parse().map_err(|_| bad())?;
            (p, k)
        } else {
            let q: u64 = body.trim().parse().map_err(|_| bad())?;
            prime_power(q).ok_or(Error::NotPrime(q))?
        };
        if k == 1 {
            FieldSpec::prime(p)
        } else {
            FieldSpec::extension(p, k, None)
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1 && p <= u32::MAX as u64).then_some((p as u32, k))
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p), coefficients low to high.
pub(crate) fn poly_rem(a: &[u64], m: &[u32], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.iter().map(|c| c % p).collect();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let off = r.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                r[off + i] = (r[off + i] + (p - lead) * c as u64) % p;
            }
        }
    }
    r
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    let k = m.len() - 1;
    let p64 = p as u64;
    // monic divisors of degree d; degree <= k/2 suffices
    for d in 1..=k / 2 {
        let count = p64.pow(d as u32);
        for code in 0..count {
            let mut div: Vec<u32> = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                div.push((c % p64) as u32);
                c /= p64;
            }
            div.push(1);
            let a: Vec<u64> = m.iter().map(|&x| x as u64).collect();
            if poly_rem(&a, &div, p64).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

fn default_modulus(p: u32, k: u32) -> Vec<u32> {
    let p64 = p as u64;
    (0..p64.pow(k))
        .map(|code| {
            let mut m = Vec::with_capacity(k as usize + 1);
            let mut c = code;
            for _ in 0..k {
                m.push((c % p64) as u32);
                c /= p64;
            }
            m.push(1);
            m
        })
        .find(|m| is_irreducible(m, p))
        .expect("an irreducible polynomial of every degree exists")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_is_smallest_prime_field() {
        let f = FieldSpec::make(FieldKind::PrimeField, Some(2), None, None).unwrap();
        assert_eq!(f.order(), Some(2));
        assert_eq!(f.to_string(), "GF(2)");
    }

    #[test]
    fn gf4_default_modulus_is_t2_t_1() {
        // Exhaustive: the four monic quadratics over GF(2) are t^2, t^2+1,
        // t^2+t, t^2+t+1; only the last has no root.
        let roots = |m: [u32; 3]| (0..2u32).any(|x| (m[0] + m[1] * x + m[2] * x * x).is_multiple_of(2));
        let irreducible: Vec<_> = [[0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]]
            .into_iter()
            .filter(|&m| !roots(m))
            .collect();
        assert_eq!(irreducible, vec![[1, 1, 1]]);
        let f = FieldSpec::make(FieldKind::ExtensionField, Some(2), Some(2), None).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FieldSpec::prime(4), Err(Error::NotPrime(4)));
        assert!(matches!(
            FieldSpec::extension(2, 2, Some(vec![1, 0, 1])),
            Err(Error::ReducibleModulus { .. })
        ));
        assert!(matches!(
            FieldSpec::extension(3, 1, None),
            Err(Error::InvalidField(_))
        ));
        assert!(FieldSpec::make(FieldKind::PrimeField, None, None, None).is_err());
    }

    #[test]
    fn default_moduli_are_irreducible_and_least() {
        assert_eq!(FieldSpec::extension(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FieldSpec::extension(2, 3, None).unwrap().modulus(), &[1, 1, 0, 1]);
        // t^4 + t + 1 is the least quartic over GF(2) with no root and no
        // factor t^2+t+1.
        assert_eq!(
            FieldSpec::extension(2, 4, None).unwrap().modulus(),
            &[1, 1, 0, 0, 1]
        );
    }

    #[test]
    fn parses_field_names() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::rationals());
        assert_eq!("gf3".parse::<FieldSpec>().unwrap(), FieldSpec::prime(3).unwrap());
        assert_eq!("GF(7)".parse::<FieldSpec>().unwrap(), FieldSpec::prime(7).unwrap());
        let gf9 = "gf9".parse::<FieldSpec>().unwrap();
        assert_eq!(gf9, FieldSpec::extension(3, 2, None).unwrap());
        assert_eq!("gf(3^2)".parse::<FieldSpec>().unwrap(), gf9);
        assert!("gf6".parse::<FieldSpec>().is_err());
        assert!("reals".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn json_validates_on_load() {
        let f: FieldSpec = serde_json::from_str(r#"{"kind":"prime","p":5}"#).unwrap();
        assert_eq!(f, FieldSpec::prime(5).unwrap());
        assert!(serde_json::from_str::<FieldSpec>(r#"{"kind":"prime","p":6}"#).is_err());
        let e = FieldSpec::extension(2, 2, None).unwrap();
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(s, r#"{"kind":"extension","p":2,"k":2,"modulus":[1,1,1]}"#);
        assert_eq!(serde_json::from_str::<FieldSpec>(&s).unwrap(), e);
    }
}
