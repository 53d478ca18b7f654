//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Reducing a rational whose denominator is divisible by p.
    #[error("denominator {den} is not a unit modulo {p}^{m}")]
    NonUnitDenominator { p: u64, m: u32, den: String },

    /// Inverting a residue divisible by p.
    #[error("{value} is not a unit modulo {p}^{m}")]
    NonUnit { p: u64, m: u32, value: String },

    /// Combining residues that live in different rings.
    #[error("precision mismatch: mod {p_lhs}^{m_lhs} vs mod {p_rhs}^{m_rhs}")]
    PrecisionMismatch {
        p_lhs: u64,
        m_lhs: u32,
        p_rhs: u64,
        m_rhs: u32,
    },

    /// Multinomial parts do not sum to the top index.
    #[error("multinomial parts sum to {sum}, expected {n}")]
    PartsMismatch { n: u64, sum: u64 },

    /// p divides the denominator of the requested Bernoulli number.
    #[error("p = {p} divides the denominator of B_{n}")]
    IrregularModulus { n: u64, p: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    /// A chain sum whose value has p in its denominator cannot be reduced.
    #[error("sum is not p-integral: p = {p} divides the denominator (shifted value {value}, shift {shift})")]
    NotPIntegral { p: u64, shift: u32, value: String },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("exact enumeration cap exceeded: {0}")]
    ExactCapExceeded(String),

    #[error("unsupported depth {0} (reduction implemented for depths 2 and 3)")]
    UnsupportedDepth(usize),

    /// A series with trailing index (1, +1) has no value.
    #[error("divergent term: trailing exponent 1 with positive sign")]
    DivergentTerm,

    #[error("malformed index: {0}")]
    InvalidIndex(String),

    #[error("invalid scan config: {0}")]
    ConfigInvalid(String),

    #[error("failed to persist records: {0}")]
    PersistenceFailure(String),
}
