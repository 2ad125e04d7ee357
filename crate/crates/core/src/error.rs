//! Error type shared across the library.

use std::fmt;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input text (a part set, a partition, a rational generating function)
    /// failed to parse. The payload says what and where.
    Parse(String),
    /// The Buchberger loop hit its pair budget before the basis closed.
    BudgetExceeded { budget: usize },
    /// Power-series division needs a unit constant term (+1 or -1) in the
    /// divisor so the quotient stays integral.
    NonUnitConstantTerm,
    /// A binomial degenerated to a single monomial during basis computation.
    /// The ideals built here are prime toric ideals and never contain a
    /// monomial, so this is an internal-consistency failure.
    IdealContainsMonomial,
    /// A structural precondition failed: signature mismatch, degenerate
    /// family instance, inhomogeneous binomial, infinite part set where a
    /// finite one is required, and the like.
    InvariantViolation(String),
    /// Quasipolynomial evaluation produced a non-integer value.
    NonIntegralValue(String),
    /// Quasipolynomial evaluated below the index from which it is valid.
    BelowThreshold { n: u64, valid_from: u64 },
    /// Combining pairs whose partitions share a part value.
    NotDisjoint(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::BudgetExceeded { budget } => {
                write!(f, "pair budget of {budget} exhausted before completion")
            }
            Error::NonUnitConstantTerm => {
                write!(
                    f,
                    "series division requires a divisor with constant term +1 or -1"
                )
            }
            Error::IdealContainsMonomial => {
                write!(
                    f,
                    "internal consistency failure: ideal would contain a monomial"
                )
            }
            Error::InvariantViolation(msg) => write!(f, "invariant violation: {msg}"),
            Error::NonIntegralValue(msg) => write!(f, "non-integral value: {msg}"),
            Error::BelowThreshold { n, valid_from } => {
                write!(
                    f,
                    "quasipolynomial is valid from n = {valid_from}, got n = {n}"
                )
            }
            Error::NotDisjoint(msg) => write!(f, "partitions share parts: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
