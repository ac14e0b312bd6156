//! Error types shared across the crate.

use thiserror::Error;

/// Ring axiom names reported by construction-time validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingLaw {
    Associativity,
    LeftDistributivity,
    RightDistributivity,
    UnitLaw,
}

impl std::fmt::Display for RingLaw {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RingLaw::Associativity => "associativity",
            RingLaw::LeftDistributivity => "left distributivity",
            RingLaw::RightDistributivity => "right distributivity",
            RingLaw::UnitLaw => "unit law",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum RingError {
    #[error("malformed ring spec: {0}")]
    MalformedSpec(String),
    #[error("{law} fails on witness triple ({:?})", .witness)]
    AxiomViolation { law: RingLaw, witness: (u32, u32, u32) },
    #[error("unknown constructor: {0}")]
    UnknownConstructor(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus polynomial is reducible")]
    ReducibleModulus,
    #[error("subset is not a two-sided ideal")]
    NotAnIdeal,
    #[error("ring order {order} exceeds lattice bound {bound}")]
    LatticeBoundExceeded { order: usize, bound: usize },
    #[error("ring order {order} exceeds isomorphism search bound {bound}")]
    SearchBoundExceeded { order: usize, bound: usize },
    #[error("element {0} is not a unit")]
    NotAUnit(u32),
    #[error("ring is not commutative")]
    NotCommutative,
    #[error("subring is not a radical complement")]
    NotAComplement,
    #[error("characteristic {0} is not a prime power")]
    NotPrimePowerCharacteristic(u64),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("unknown theorem id: {0}")]
    UnknownTheoremId(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, RingError>;
