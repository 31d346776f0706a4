use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {modulus:?} is not a monic irreducible polynomial of degree {k} over GF({p})")]
    ReducibleModulus { p: u32, k: u32, modulus: Vec<u32> },
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("operation mixes scalars of {left} and {right}")]
    FieldMismatch { left: String, right: String },
    #[error("inverse of zero")]
    DivisionByZero,
    #[error("cannot embed GF({from}) scalars into {to}")]
    CharacteristicMismatch { from: u64, to: String },
    #[error("scalar encoding {value} is not valid for {field}")]
    BadScalar { value: String, field: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    Jacobi { i: usize, j: usize, k: usize },
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("structure constant at [{i},{j}] coordinate {coord} is not an integer")]
    NonIntegerEntry { i: usize, j: usize, coord: usize },
    #[error("operation needs a finite field, got {0}")]
    InfiniteField(String),
    #[error("algebra is not solvable")]
    NotSolvable,
    #[error("{what}: estimated {estimate} exceeds the cap of {cap}")]
    CostCap { what: &'static str, estimate: f64, cap: f64 },
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn is_cost_cap(&self) -> bool {
        matches!(self, Error::CostCap { .. })
    }
}
