use thiserror::Error;

/// Errors surfaced by the library. Violations of internal mathematical
/// invariants (which indicate a bug, not bad input) panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("conductor mismatch: {0} vs {1} (lift to a common conductor first)")]
    ConductorMismatch(u64, u64),
    #[error("valuation not unique: conductor {m} is not a power of {p}")]
    ValuationNotUnique { m: u64, p: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("group order {order} exceeds the cap of {cap} (pass force to override)")]
    OrderCap { order: u64, cap: u64 },
    #[error("images do not extend to a homomorphism: product {a}*{b} violated")]
    NotAHomomorphism { a: String, b: String },
    #[error("given images do not generate the source group")]
    NotGenerating,
    #[error("element {0} not found in group")]
    NoSuchElement(String),
    #[error("unsupported group construction for {0}")]
    UnsupportedConstruction(String),
    #[error("rational mode restricted to abelian groups")]
    RationalNonAbelian,
    #[error("class function is not a virtual character: coefficient of row {row} is {value}")]
    NotVirtualCharacter { row: usize, value: String },
    #[error("operands belong to different character tables")]
    TableMismatch,
    #[error("index {0} out of range")]
    OutOfRange(usize),
    #[error("determinant requires an actual character (nonnegative coordinates)")]
    NotActualCharacter,
    #[error("ambient rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("inclusion fails: generator {0} of the smaller lattice is not a member")]
    NotIncluded(String),
    #[error("degree {degree} exceeds computed maximum {max}")]
    DegreeOverflow { degree: usize, max: usize },
    #[error("max degree {0} exceeds the supported bound of {1}")]
    DegreeTooLarge(usize, usize),
    #[error("saturation did not stabilize within {0} passes")]
    SaturationCap(usize),
    #[error("relation `{relation}` is not homogeneous")]
    RelationNotHomogeneous { relation: String },
    #[error("unknown generator `{name}` in relation")]
    UnknownGenerator { name: String },
    #[error("group of order {0} is not a {1}-group")]
    NotPGroup(u64, u64),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
