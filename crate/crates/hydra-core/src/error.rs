//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

use num_bigint::BigUint;

/// Everything that can go wrong across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A value that must be prime is not.
    NotPrime(u64),
    /// A prime was offered twice to the same hydra.
    DuplicatePrime(u64),
    /// Materializing would need more snakes than the budget allows.
    BudgetExceeded { required: BigUint, max_snakes: u64 },
    /// A distance or gap argument is odd, zero, or outside the valid range.
    InvalidDistance(u64),
    /// A subscript selection matched no snake.
    EmptySelection,
    /// A recursive-index string could not be parsed.
    BadIndex(String),
    /// The operation needs a materialized snake table.
    NotMaterialized,
    /// Twin formulas and density reports need their base primes present.
    MissingBase,
    /// Q must be a subset of P; carries the offending prime.
    NotSubset(u64),
    /// A bound factor p − j would be zero or negative.
    NonpositiveFactor { prime: u64, j: u32 },
    /// An oracle request lies beyond the sieve ceiling.
    OracleLimit(u64),
    /// A generic argument violated its documented range.
    InvalidArgument(&'static str),
    /// A constructed hydra failed to contain its guaranteed witness.
    /// Signals an implementation bug, never expected to surface.
    LemmaViolation(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(x) => write!(f, "NotPrime: {x} is not a prime"),
            Error::DuplicatePrime(p) => write!(f, "DuplicatePrime: {p} is already in the hydra"),
            Error::BudgetExceeded { required, max_snakes } => write!(
                f,
                "BudgetExceeded: {required} snakes needed, budget allows {max_snakes}"
            ),
            Error::InvalidDistance(d) => write!(f, "InvalidDistance: {d}"),
            Error::EmptySelection => write!(f, "EmptySelection: no snake matches"),
            Error::BadIndex(s) => write!(f, "BadIndex: cannot parse recursive index {s:?}"),
            Error::NotMaterialized => write!(f, "NotMaterialized: snake table not available"),
            Error::MissingBase => write!(f, "MissingBase: required base primes are absent"),
            Error::NotSubset(p) => write!(f, "NotSubset: {p} is not in P"),
            Error::NonpositiveFactor { prime, j } => {
                write!(f, "NonpositiveFactor: p = {prime} with j = {j} gives p - j <= 0")
            }
            Error::OracleLimit(n) => write!(f, "OracleLimit: {n} exceeds the sieve ceiling"),
            Error::InvalidArgument(what) => write!(f, "InvalidArgument: {what}"),
            Error::LemmaViolation(what) => write!(f, "LemmaViolation: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
